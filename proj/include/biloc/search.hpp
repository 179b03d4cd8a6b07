#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biloc/generators.hpp"
#include "biloc/properties.hpp"
#include "biloc/text_format.hpp"

namespace biloc {

struct SearchBounds {
  std::size_t max_elems = 16;         // lattice (or frame of opens) size
  std::size_t max_points = 4;         // poset points for lattice generation
  std::size_t max_bispace_points = 4;
  std::size_t samples = 32;           // random mode: posets drawn
};

/// Structures a check of the given scope is swept over, in canonical order:
/// lattices by (size, generation order) and their bilocales in generation
/// order, or bispaces by (points, generation order). Lattice scope uses the
/// symmetric bilocale of each lattice only.
std::vector<Structure> generated_structures(const SearchBounds& bounds, Scope scope,
                                            GenerationMode mode = GenerationMode::full());

struct Counterexample {
  std::string property;
  std::string structure;   // structure id
  std::string serialized;  // text format, parseable by parse_document
  std::string witness;
};

/// First failing structure in sweep order. Random mode draws
/// `bounds.samples` posets (and a seeded sample of their bilocales) from
/// `seed`. Throws UnknownCheckId.
std::optional<Counterexample> search_counterexample(std::string_view property, const SearchBounds& bounds,
                                                    std::uint64_t seed, bool exhaustive);

/// Text form of the structure: the bispace, else the bilocale (with the
/// total lattice), plus any supplied maps.
std::string serialize(const Structure& s);

/// Runnable structures in a document: every bispace, every bilocale (with
/// the bilocalic maps leaving it) and every lattice no bilocale is built on.
std::vector<Structure> document_structures(const Document& doc);

/// Re-parses the counterexample and re-runs its check; true when the
/// failure reproduces with the same witness.
bool reproduces(const Counterexample& c);

struct SweepEntry {
  Structure structure;
  std::vector<const PropertyCheck*> checks;
};

/// Generated structures for every scope present in `checks`, each paired
/// with the checks of its scope.
std::vector<SweepEntry> sweep_plan(const std::vector<const PropertyCheck*>& checks, const SearchBounds& bounds);

/// Runs every entry, `threads` at a time, and returns the reports in entry
/// order.
std::vector<PropertyReport> run_sweep(const std::vector<SweepEntry>& plan, const SuiteLimits& limits = {},
                                      unsigned threads = 0);

}  // namespace biloc
