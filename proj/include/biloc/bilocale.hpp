#pragma once

#include <memory>
#include <string>

#include "biloc/lattice.hpp"
#include "biloc/sublocale.hpp"

namespace biloc {

enum class Part : int { first = 1, second = 2 };

constexpr Part other(Part p) { return p == Part::first ? Part::second : Part::first; }
constexpr int to_int(Part p) { return static_cast<int>(p); }

/// An ordered pair (i, j) with i ≠ j ∈ {1, 2}.
struct IndexPair {
  Part i;
  Part j;

  /// Throws InvalidInput unless {i, j} = {1, 2}.
  static IndexPair make(int i, int j);
  static constexpr IndexPair one_two() { return {Part::first, Part::second}; }
  static constexpr IndexPair two_one() { return {Part::second, Part::first}; }
  IndexPair swapped() const { return {j, i}; }
  std::string str() const;
  bool operator==(const IndexPair&) const = default;
};

inline constexpr IndexPair kBothPairs[] = {IndexPair::one_two(), IndexPair::two_one()};

/// Weak quantifies over complemented j-dense elements (the displayed formula);
/// strong over all j-dense elements.
enum class RmtVariant { weak, strong };

std::string to_string(RmtVariant v);

/// Contains bottom and top and is closed under binary meet and join.
bool is_subframe(const FiniteLattice& lattice, ElementSet members);
/// Least subframe containing `seed`.
ElementSet subframe_closure(const FiniteLattice& lattice, ElementSet seed);

/// A frame with two subframes satisfying the generation axiom
/// a = ⋁{a1 ∧ a2 : a1 ∈ L1, a2 ∈ L2, a1 ∧ a2 ≤ a}.
class Bilocale {
 public:
  /// Throws NotAFrame, NotASubframe (naming the part and the missing closure
  /// elements) or GenerationFails (naming the witness element).
  static Bilocale validate(std::string name, std::shared_ptr<const FiniteLattice> total, ElementSet part1,
                           ElementSet part2);
  /// (L, L, L).
  static Bilocale symmetric(std::shared_ptr<const FiniteLattice> total);
  static Bilocale symmetric(const FiniteLattice& total) {
    return symmetric(std::make_shared<const FiniteLattice>(total));
  }

  const std::string& name() const { return name_; }
  const FiniteLattice& total() const { return *total_; }
  std::shared_ptr<const FiniteLattice> total_ptr() const { return total_; }
  ElementSet part(Part p) const { return p == Part::first ? part1_ : part2_; }
  bool in_part(Element e, Part p) const { return part(p).contains(e); }

 private:
  Bilocale(std::string name, std::shared_ptr<const FiniteLattice> total, ElementSet p1, ElementSet p2)
      : name_(std::move(name)), total_(std::move(total)), part1_(p1), part2_(p2) {}

  std::string name_;
  std::shared_ptr<const FiniteLattice> total_;
  ElementSet part1_;
  ElementSet part2_;
};

/// Returns the first element violating the generation axiom, if any.
std::optional<Element> generation_witness(const FiniteLattice& lattice, ElementSet part1, ElementSet part2);

/// c• = ⋁{x ∈ L_other : x ∧ c = 0} for c ∈ L_owner. Throws NotInPart.
Element bullet(const Bilocale& b, Element c, Part owner);

/// ⋁{a ∈ L_i : S ⊆ 𝔠(a)}; cl_i(S) is the closed sublocale on it.
Element cl_generator(const Bilocale& b, const Sublocale& s, Part i);
/// ⋁{a ∈ L_i : 𝔬(a) ⊆ S}; Int_i(S) is the open sublocale on it.
Element int_generator(const Bilocale& b, const Sublocale& s, Part i);

Sublocale cl_index(const Bilocale& b, const Sublocale& s, Part i);
Sublocale int_index(const Bilocale& b, const Sublocale& s, Part i);

/// x ∈ L_owner with x• = 0, i.e. dense with respect to the other part.
bool is_index_dense_element(const Bilocale& b, Element x, Part owner);
/// Quantifier form: every a in the other part with a ∧ x = 0 is 0.
bool is_index_dense_element_by_meets(const Bilocale& b, Element x, Part owner);
/// cl_i(A) = L.
bool is_index_dense_sublocale(const Bilocale& b, const Sublocale& a, Part i);

/// The j-dense elements of L_i (optionally only those complemented in L).
ElementSet dense_part_elements(const Bilocale& b, IndexPair pair, bool complemented_only);

enum class NdMode {
  definition,  ///< Int_j(cl_i(S)) = O
  closure,     ///< cl_i(S) and S̄ are (i,j)-nowhere dense by definition
  element,     ///< (⋁{x ∈ L_i : S ⊆ 𝔠(x)})• = 0
};

bool is_ij_nowhere_dense(const Bilocale& b, const Sublocale& s, IndexPair pair,
                         NdMode mode = NdMode::definition);
enum class ClopenReading {
  closure,  ///< cl_i(S) is clopen and (i,j)-nowhere dense
  literal,  ///< S itself is clopen and (i,j)-nowhere dense
};

/// Clopen (i,j)-nowhere density. The closure reading makes the weak
/// remoteness characterizations hold; the literal one is kept for comparison.
bool is_clopen_ij_nowhere_dense(const Bilocale& b, const Sublocale& s, IndexPair pair,
                                ClopenReading reading = ClopenReading::closure);

enum class RemoteMode {
  definition,        ///< misses cl_i(N) for every (clopen) (i,j)-ND N
  characterization,  ///< S ⊆ 𝔬(a) for every (complemented) j-dense a ∈ L_i
  exhaustive,        ///< misses every (clopen) (i,j)-ND N of 𝒮(L)
};

/// (i,j)-remote, or weakly (i,j)-remote when `weak`. `space` must be 𝒮 of
/// the total part (only the definition and exhaustive modes read it).
bool is_ij_remote(const Bilocale& b, const Sublocale& s, IndexPair pair, bool weak, RemoteMode mode,
                  const SublocaleSpace& space);

/// Join of all (weakly) (i,j)-remote sublocales.
Sublocale largest_ij_remote(const Bilocale& b, IndexPair pair, bool weak, const SublocaleSpace& space);

/// {x : x ∨ a = 1 for every (complemented, if weak) j-dense a ∈ L_i}.
Sublocale rmt(const Bilocale& b, IndexPair pair, RmtVariant variant);

struct BilocaleClass {
  bool balanced = false;
  bool symmetric = false;
  bool boolean = false;
};

/// Flags per the usual definitions. On balanced input also asserts a* = a•
/// for every part element (std::logic_error otherwise).
BilocaleClass classify_bilocale(const Bilocale& b);

}  // namespace biloc
