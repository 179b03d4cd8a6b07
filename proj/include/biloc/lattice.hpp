#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biloc/bitset.hpp"
#include "biloc/error.hpp"

namespace biloc {

/// Default hard limit on lattice size; sublocale enumeration grows with it.
inline constexpr std::size_t kDefaultMaxElements = 24;

/// A finite bounded lattice given by its elements (in input order) and a
/// partial order. Meet/join tables are computed once at construction; when
/// the lattice is distributive the Heyting arrow table is computed too.
/// Immutable after construction.
class FiniteLattice {
 public:
  /// Builds from labels and a generating set of `lower <= upper` pairs; the
  /// reflexive-transitive closure is taken. Throws CycleInOrder, NotALattice,
  /// TooLarge or InvalidInput.
  static FiniteLattice build(std::string name, std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& order_pairs,
                             std::size_t max_elements = kDefaultMaxElements);

  /// Same as build() but with the order given on indices.
  static FiniteLattice from_relation(std::string name, std::vector<std::string> labels,
                                     const std::vector<std::pair<Element, Element>>& order_pairs,
                                     std::size_t max_elements = kDefaultMaxElements);

  /// The subposet on `members` with the induced order. Throws NotALattice if
  /// the induced order is not a lattice.
  static FiniteLattice induced(const FiniteLattice& parent, ElementSet members, std::string name);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Like find() but throws InvalidInput on an unknown label.
  Element at(std::string_view label) const;

  ElementSet all() const { return ElementSet::full(size()); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  ElementSet up_set(Element x) const { return up_[x]; }
  ElementSet down_set(Element x) const { return down_[x]; }

  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  /// Meet of a set; the empty meet is top.
  Element meet_of(ElementSet s) const;
  /// Join of a set; the empty join is bottom.
  Element join_of(ElementSet s) const;

  bool is_frame() const { return frame_; }
  /// Largest c with c ∧ a <= b. Throws NotAFrame on non-distributive input.
  Element heyting(Element a, Element b) const;
  Element pseudocomplement(Element a) const { return heyting(a, bottom_); }
  bool is_complemented(Element a) const { return join(a, pseudocomplement(a)) == top_; }
  bool is_dense(Element a) const { return pseudocomplement(a) == bottom_; }

  /// Covering pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Same labels in the same order with the same order relation.
  bool operator==(const FiniteLattice& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

  FiniteLattice renamed(std::string name) const {
    FiniteLattice copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  FiniteLattice() = default;
  static FiniteLattice from_up_sets(std::string name, std::vector<std::string> labels,
                                    std::vector<ElementSet> up);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> heyting_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool frame_ = false;
};

/// Exhaustive distributivity check a∧(b∨c) = (a∧b)∨(a∧c) over all triples,
/// which for finite lattices is the frame law.
bool check_frame(const FiniteLattice& lattice);

/// Renders a set of elements as `{x, y, z}` in ascending index order.
std::string format_set(const FiniteLattice& lattice, ElementSet s, std::string_view sep = ", ");

}  // namespace biloc
