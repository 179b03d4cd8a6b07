#pragma once

#include <memory>
#include <string>
#include <vector>

#include "biloc/bilocale.hpp"

namespace biloc {

/// An equivalence relation on a finite lattice stored as its classes: row x
/// holds every y related to x.
struct Congruence {
  const FiniteLattice* parent = nullptr;
  std::vector<ElementSet> rows;

  bool related(Element x, Element y) const { return rows[x].contains(y); }
  bool subset_of(const Congruence& other) const;
  bool operator==(const Congruence& other) const { return rows == other.rows; }
};

/// x θ_S y iff ν_S(x) = ν_S(y).
Congruence kernel(const Sublocale& s);
/// ∇_a: x∨a = y∨a.
Congruence nabla(const FiniteLattice& lattice, Element a);
/// Δ_a: x∧a = y∧a.
Congruence delta(const FiniteLattice& lattice, Element a);
/// Equivalence compatible with binary meet and binary join.
bool is_congruence(const Congruence& c);

struct CongruenceBilocale {
  std::shared_ptr<const Bilocale> bilocale;
  std::vector<Congruence> congruences;   // by element index of the total part
  std::vector<ElementSet> sublocales;    // θ_S ↔ S, same indexing
  std::vector<Element> nabla_index;      // a ↦ index of ∇_a
  std::vector<Element> delta_index;      // a ↦ index of Δ_a
};

/// (𝔠L, ∇_L, Δ_L) with elements labelled `theta_S#k`, ordered like the
/// sublocales they are kernels of. Throws TooLarge when 𝒮(L) exceeds the
/// element cap and std::logic_error if an internal cross-check fails.
CongruenceBilocale congruence_bilocale(std::shared_ptr<const FiniteLattice> lattice);

/// Nonempty, down-closed and closed under binary joins.
bool is_ideal(const FiniteLattice& lattice, ElementSet members);
/// Least ideal containing `seed` (and 0), by closure under joins and ↓.
ElementSet generated_ideal(const FiniteLattice& lattice, ElementSet seed);
/// Every ideal of a finite lattice, ordered by the join of its members.
std::vector<ElementSet> enumerate_ideals(const FiniteLattice& lattice);

struct IdealBilocale {
  std::shared_ptr<const Bilocale> bilocale;
  std::vector<ElementSet> ideals;  // by element index; labels `down_e`
};

/// (𝔍L, (𝔍L)_1, (𝔍L)_2) where (𝔍L)_i holds the ideals generated by J ∩ L_i.
IdealBilocale ideal_bilocale(const Bilocale& b);

struct ConstructionReport {
  std::vector<std::string> lines;       // one per assertion, `ok` or `FAIL`
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Noetherian equivalence Rmt L = L ⇔ Rmt 𝔍L = 𝔍L (both pairs, both
/// variants) and Rmt 𝔠L = 𝔠L for the weak variant on both pairs. The strong
/// variant of the latter is reported in `lines` without being asserted.
ConstructionReport check_construction_theorems(const Bilocale& b);

}  // namespace biloc
