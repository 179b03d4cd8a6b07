#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "biloc/bilocale.hpp"
#include "biloc/bispace.hpp"
#include "biloc/lattice.hpp"

namespace biloc {

/// A finite poset on points 0..n-1 with i < j only when i < j as integers.
struct Poset {
  std::size_t n = 0;
  std::vector<PointSet> below;  // strictly below
};

/// Every naturally labelled poset on n points (isomorphic copies included).
std::vector<Poset> enumerate_posets(std::size_t n);

/// Down-sets ordered by inclusion, listed by (size, mask); labels are `0`
/// and the concatenated point letters a, b, c, ...
FiniteLattice down_set_lattice(const Poset& p, std::string name);

/// Exact isomorphism test by backtracking over cover-degree classes.
bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b);
/// All automorphisms as permutation tables.
std::vector<std::vector<Element>> lattice_automorphisms(const FiniteLattice& lattice);

struct GenerationMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static GenerationMode full() { return {}; }
  static GenerationMode random(std::uint64_t seed, std::size_t count) { return {false, seed, count}; }
};

/// Down-set lattices of posets on 1..max_points points, deduplicated up to
/// isomorphism and named `C<size>` (chains), `B<size>` (Boolean) or
/// `D<points>_<k>`. Exhaustive mode accepts up to 5
/// points; random mode draws `count` posets on exactly max_points points.
std::vector<std::shared_ptr<const FiniteLattice>> generate_lattices(std::size_t max_points,
                                                                    GenerationMode mode = GenerationMode::full());

/// Every subframe, sorted by mask. Throws TooLarge above 20 elements.
std::vector<ElementSet> enumerate_subframes(const FiniteLattice& lattice);

/// Bilocales on `lattice`, the symmetric one first (named `<L>.sym`), then
/// every other subframe pair satisfying the generation axiom up to lattice
/// automorphism and part swap (named `<L>.b<k>`). Random mode keeps the
/// symmetric bilocale and a seeded sample of `count` others.
std::vector<std::shared_ptr<const Bilocale>> generate_bilocales(std::shared_ptr<const FiniteLattice> lattice,
                                                                GenerationMode mode = GenerationMode::full());

/// Every topology on n points, sorted by (size, masks).
std::vector<std::vector<PointSet>> enumerate_topologies(std::size_t n);

/// Bispaces on exactly n points with points a, b, c, ..., one per topology
/// pair up to point permutation and swapping the two topologies.
std::vector<std::shared_ptr<const Bispace>> generate_bispaces(std::size_t n);

}  // namespace biloc
