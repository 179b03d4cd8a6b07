#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "biloc/bilocale.hpp"

namespace biloc {

/// Left adjoint h(b) = ⋀{a : b ≤ f(a)} of a table f: source → target.
/// Throws NotMeetPreserving when f does not preserve top and binary meets.
std::vector<Element> left_adjoint(const FiniteLattice& source, const FiniteLattice& target,
                                  std::span<const Element> table);

/// A meet-preserving map between finite frames whose left adjoint (its frame
/// homomorphism h) preserves finite meets and all joins.
class LocalicMap {
 public:
  /// Throws InvalidInput (bad table), NotMeetPreserving or AdjointNotFrameHom.
  static LocalicMap validate(std::string name, std::shared_ptr<const FiniteLattice> source,
                             std::shared_ptr<const FiniteLattice> target, std::vector<Element> table);
  static LocalicMap identity(std::shared_ptr<const FiniteLattice> lattice);
  /// The right adjoint of a frame homomorphism `hom`: target → source.
  static LocalicMap from_frame_hom(std::string name, std::shared_ptr<const FiniteLattice> source,
                                   std::shared_ptr<const FiniteLattice> target, std::span<const Element> hom);

  const std::string& name() const { return name_; }
  const FiniteLattice& source() const { return *source_; }
  const FiniteLattice& target() const { return *target_; }
  std::shared_ptr<const FiniteLattice> source_ptr() const { return source_; }
  std::shared_ptr<const FiniteLattice> target_ptr() const { return target_; }

  Element operator()(Element x) const { return table_[x]; }
  /// h(b), the associated frame homomorphism.
  Element adjoint(Element b) const { return adjoint_[b]; }
  const std::vector<Element>& table() const { return table_; }
  const std::vector<Element>& adjoint_table() const { return adjoint_; }

  /// Same table between equal lattices.
  bool operator==(const LocalicMap& other) const {
    return table_ == other.table_ && *source_ == *other.source_ && *target_ == *other.target_;
  }

 private:
  LocalicMap() = default;

  std::string name_;
  std::shared_ptr<const FiniteLattice> source_;
  std::shared_ptr<const FiniteLattice> target_;
  std::vector<Element> table_;
  std::vector<Element> adjoint_;
};

/// g ∘ f. Throws InvalidInput when the lattices do not line up.
LocalicMap compose(const LocalicMap& g, const LocalicMap& f);

/// Preserves bottom, binary meets and binary joins (top comes free for
/// localic maps).
bool is_lattice_homomorphism(const LocalicMap& f);

/// The localic inclusion of a sublocale S ↪ L, with S as its own frame.
LocalicMap inclusion_map(std::shared_ptr<const FiniteLattice> lattice, ElementSet sublocale, std::string name);

/// A localic map with f[L_i] ⊆ M_i and h[M_i] ⊆ L_i.
class BilocalicMap {
 public:
  /// Throws the LocalicMap errors or PartViolation (part and witness).
  static BilocalicMap validate(std::string name, std::shared_ptr<const Bilocale> source,
                               std::shared_ptr<const Bilocale> target, std::vector<Element> table);
  static BilocalicMap identity(std::shared_ptr<const Bilocale> b);

  const std::string& name() const { return base_.name(); }
  const LocalicMap& base() const { return base_; }
  const Bilocale& source() const { return *source_; }
  const Bilocale& target() const { return *target_; }
  std::shared_ptr<const Bilocale> source_ptr() const { return source_; }
  std::shared_ptr<const Bilocale> target_ptr() const { return target_; }
  Element operator()(Element x) const { return base_(x); }
  Element adjoint(Element b) const { return base_.adjoint(b); }

 private:
  BilocalicMap(LocalicMap base, std::shared_ptr<const Bilocale> source, std::shared_ptr<const Bilocale> target)
      : base_(std::move(base)), source_(std::move(source)), target_(std::move(target)) {}

  LocalicMap base_;
  std::shared_ptr<const Bilocale> source_;
  std::shared_ptr<const Bilocale> target_;
};

enum class MapKind { localic, bilocalic };

/// All frame homomorphisms from → to, via monotone maps between the posets
/// of join-irreducibles. At most `limit` tables are returned.
std::vector<std::vector<Element>> enumerate_frame_homs(const FiniteLattice& from, const FiniteLattice& to,
                                                       std::size_t limit = 100000);
std::vector<LocalicMap> enumerate_localic_maps(std::shared_ptr<const FiniteLattice> source,
                                               std::shared_ptr<const FiniteLattice> target,
                                               std::size_t limit = 100000);
std::vector<BilocalicMap> enumerate_bilocalic_maps(std::shared_ptr<const Bilocale> source,
                                                   std::shared_ptr<const Bilocale> target,
                                                   std::size_t limit = 100000);

/// Set-theoretic image f[S]; throws std::logic_error if it is not a sublocale.
Sublocale image_sublocale(const LocalicMap& f, const Sublocale& s);
/// f₋₁[T]: join of all sublocales of the source inside f⁻¹(T).
Sublocale preimage_sublocale(const LocalicMap& f, const Sublocale& t, const SublocaleSpace& source_space);

/// h(a) ∨ b = 1 ⇒ a ∨ f(b) = 1 for all a in the target and b in the source,
/// where h is the frame homomorphism of f. This is an adopted reading of
/// "weakly closed", which the source material leaves undefined.
bool is_weakly_closed(const LocalicMap& f);

/// f[Rmt L] ⊆ Rmt M for the given variant.
bool is_rem_map(const BilocalicMap& f, IndexPair pair, RmtVariant variant);

/// h sends (complemented) j-dense elements of M_i to j-dense elements of L_i.
bool adjoint_preserves_dense(const BilocalicMap& f, IndexPair pair, bool complemented_only);
/// f sends j-dense elements of L_i to j-dense elements of M_i.
bool map_preserves_dense(const BilocalicMap& f, IndexPair pair);

struct PreservationReport {
  bool weak = false;
  bool source_balanced = false;
  bool image_preserves_remote = false;    // clause (1)
  bool preimage_preserves_nd = false;     // clause (2)
  bool adjoint_preserves_dense = false;   // clause (3)
  bool map_preserves_dense = false;       // hypothesis of the preimage result
  bool preimage_preserves_remote = false; // its conclusion
  bool lattice_homomorphism = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates the three preservation clauses and asserts (3)⇔(2)⇒(1), the
/// full equivalence on balanced sources, and the preimage reflection results.
/// In the weak form (3)⇒(2) is not asserted; see prop_ijndpreserve_weak_32.
PreservationReport check_preservation(const BilocalicMap& f, IndexPair pair, bool weak,
                                      const SublocaleSpace& source_space, const SublocaleSpace& target_space);

/// Rmt as a frame of its own (induced order), named `Rmt(<name>)`.
std::shared_ptr<const FiniteLattice> rmt_lattice(const Bilocale& b, IndexPair pair, RmtVariant variant);
/// f restricted to Rmt L → Rmt M. Throws HypothesisViolated when f is not a
/// Rem-map; throws the LocalicMap errors if the restriction is not localic.
LocalicMap restrict_to_rmt(const BilocalicMap& f, IndexPair pair, RmtVariant variant);

/// Rmt misses every nowhere dense sublocale (S ⊆ 𝔬(d) for every dense d).
bool is_remote(const Sublocale& s);

enum class Law { functor, naturality, comonad, coreflection, faithful, natural_iso };

std::string to_string(Law law);

struct DiagramArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  BilocalicMap map;
};

/// A finite explicit diagram of bilocales and bilocalic maps.
struct Diagram {
  std::vector<std::shared_ptr<const Bilocale>> objects;
  std::vector<DiagramArrow> arrows;
};

struct LawReport {
  Law law = Law::functor;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Throws HypothesisViolated naming the offending object or arrow when the
/// diagram is outside the law's category.
LawReport verify_category_laws(const Diagram& diagram, Law law, IndexPair pair, RmtVariant variant);

}  // namespace biloc
