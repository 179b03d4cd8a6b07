#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "biloc/lattice.hpp"

namespace biloc {

/// A subset of a finite frame closed under meets and under x→(−). Holds a
/// non-owning pointer to its parent; the parent must outlive it.
class Sublocale {
 public:
  /// Unchecked: the caller guarantees `members` is a sublocale of `parent`.
  Sublocale(const FiniteLattice& parent, ElementSet members) : parent_(&parent), members_(members) {}

  /// Validates and throws InvalidInput with a witness on failure.
  static Sublocale checked(const FiniteLattice& parent, ElementSet members);

  const FiniteLattice& parent() const { return *parent_; }
  ElementSet members() const { return members_; }
  bool contains(Element e) const { return members_.contains(e); }
  std::size_t size() const { return members_.size(); }
  /// ⋀S, the least member.
  Element bottom() const { return parent_->meet_of(members_); }
  bool is_void() const { return members_ == ElementSet::single(parent_->top()); }
  bool is_whole() const { return members_ == parent_->all(); }
  bool subset_of(const Sublocale& other) const { return members_.subset_of(other.members_); }

  bool operator==(const Sublocale& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  const FiniteLattice* parent_;
  ElementSet members_;
};

/// Outcome of a membership check, with a human-readable witness on failure.
struct SublocaleCheck {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

SublocaleCheck is_sublocale(const FiniteLattice& lattice, ElementSet members);

Sublocale void_sublocale(const FiniteLattice& lattice);
Sublocale whole_sublocale(const FiniteLattice& lattice);

/// 𝔠(a) = ↑a.
Sublocale closed_sublocale(const FiniteLattice& lattice, Element a);
/// 𝔬(a) = {a→x : x ∈ L}.
Sublocale open_sublocale(const FiniteLattice& lattice, Element a);

/// Smallest sublocale containing `seed`: closure under meets and x→(−).
Sublocale generated_sublocale(const FiniteLattice& lattice, ElementSet seed);
/// Smallest sublocale containing a. Cross-checked against {x→a : x ∈ L}.
Sublocale b_of(const FiniteLattice& lattice, Element a);

/// ν_S(a): the least member of S above a.
Element nu(const Sublocale& s, Element a);

/// Smallest closed sublocale containing S, i.e. 𝔠(⋀S).
Sublocale closure(const Sublocale& s);
/// Largest open sublocale inside S.
Sublocale interior(const Sublocale& s);

/// 𝔅L = {x→0 : x ∈ L}, the least dense sublocale.
Sublocale booleanization(const FiniteLattice& lattice);

Sublocale join_sublocales(std::span<const Sublocale> parts);
Sublocale meet_sublocales(std::span<const Sublocale> parts);
Sublocale join_sublocales(const Sublocale& a, const Sublocale& b);
Sublocale meet_sublocales(const Sublocale& a, const Sublocale& b);

/// L∖S: the largest sublocale missing S, by brute force over 𝒮(L).
Sublocale supplement(const Sublocale& s);

bool is_nowhere_dense(const Sublocale& s);
bool is_dense_sub(const Sublocale& s);

enum class EnumerationMode { generated, brute };

/// Largest lattice the brute-force enumeration accepts.
inline constexpr std::size_t kBruteEnumerationLimit = 12;

/// All sublocales sorted by bit-mask. Generated mode closes {O} ∪ {𝔟(a)}
/// under joins; brute mode filters every subset (n <= 12, else TooLarge).
std::vector<Sublocale> enumerate_sublocales(const FiniteLattice& lattice,
                                            EnumerationMode mode = EnumerationMode::generated);

/// S = 𝔠(a) with a complemented. Also runs the open-form test (S is both
/// some 𝔠(a) and some 𝔬(b)) and throws std::logic_error if they disagree.
bool is_clopen_sublocale(const Sublocale& s);
/// The open-form half of is_clopen_sublocale on its own.
bool is_closed_and_open(const Sublocale& s);

std::optional<Element> closed_generator(const Sublocale& s);
std::optional<Element> open_generator(const Sublocale& s);

/// Principal name for display: `O`, `L`, `c(x)`, `o(x)`, `B(L)`; empty when
/// the sublocale has none of these forms.
std::string principal_name(const Sublocale& s);
/// `{a, b, 1}` followed by ` = name` when a principal name exists.
std::string describe(const Sublocale& s);

/// 𝒮(L) enumerated once, with join/meet/supplement tables over indices. The
/// quantifier sweeps in the bilocale and suite modules index into this.
class SublocaleSpace {
 public:
  /// Throws TooLarge when 𝒮(L) has more than `max_sublocales` members.
  explicit SublocaleSpace(const FiniteLattice& lattice, std::size_t max_sublocales = 4096);

  const FiniteLattice& lattice() const { return *lattice_; }
  std::size_t size() const { return members_.size(); }
  ElementSet members(std::size_t i) const { return members_[i]; }
  Sublocale at(std::size_t i) const { return Sublocale(*lattice_, members_[i]); }
  const std::vector<ElementSet>& all() const { return members_; }

  std::optional<std::size_t> find(ElementSet members) const;
  /// Throws InvalidInput when `members` is not in 𝒮(L).
  std::size_t index_of(ElementSet members) const;

  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t supplement(std::size_t a) const { return supplement_[a]; }
  std::size_t closed(Element a) const { return closed_[a]; }
  std::size_t open(Element a) const { return open_[a]; }
  std::size_t void_index() const { return void_; }
  std::size_t whole_index() const { return whole_; }
  std::size_t booleanization_index() const { return boolean_; }

 private:
  const FiniteLattice* lattice_;
  std::vector<ElementSet> members_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> join_table_;
  std::vector<std::uint32_t> meet_table_;
  std::vector<std::size_t> supplement_;
  std::vector<std::size_t> closed_;
  std::vector<std::size_t> open_;
  std::size_t void_ = 0;
  std::size_t whole_ = 0;
  std::size_t boolean_ = 0;
  bool tabulated_ = false;
};

/// {s ∧ t : s ∈ S, t ∈ T}; the sublocale join when S and T are meet-closed
/// and contain top.
ElementSet pairwise_meets(const FiniteLattice& lattice, ElementSet s, ElementSet t);

}  // namespace biloc
