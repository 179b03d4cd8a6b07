#pragma once

#include <memory>
#include <string>
#include <vector>

#include "biloc/bilocale.hpp"

namespace biloc {

inline constexpr std::size_t kDefaultMaxPoints = 6;

enum class Family { tau1, tau2, tau };

std::string to_string(Family f);

/// A finite set with two topologies and their join τ. Open sets are kept
/// sorted by (size, mask), which is also the element order of to_bilocale().
class Bispace {
 public:
  /// With `generate`, each family is closed under unions and intersections
  /// (∅ and X added); otherwise families are checked as given and
  /// NotATopology names the family and a witness.
  static Bispace build(std::string name, std::vector<std::string> points, const std::vector<PointSet>& opens1,
                       const std::vector<PointSet>& opens2, bool generate,
                       std::size_t max_points = kDefaultMaxPoints);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  PointSet whole() const { return PointSet::full(points_.size()); }
  const std::vector<PointSet>& opens(Family f) const;
  bool is_open(PointSet s, Family f) const;

  PointSet interior(PointSet s, Family f) const;
  PointSet closure(PointSet s, Family f) const;
  /// Index of a τ-open set in opens(Family::tau); throws InvalidInput.
  Element open_index(PointSet s) const;
  /// `{a, b}` with point names.
  std::string format(PointSet s) const;
  /// Label of a τ-open in the derived frame: `0`, `1`, or the point names
  /// concatenated (joined by `+` when some name is longer than one character).
  std::string open_label(PointSet s) const;

 private:
  Bispace() = default;

  std::string name_;
  std::vector<std::string> points_;
  std::vector<PointSet> tau1_;
  std::vector<PointSet> tau2_;
  std::vector<PointSet> tau_;
};

/// Closure of `seed` ∪ {∅, X} under binary union and intersection, sorted.
std::vector<PointSet> generate_topology(std::size_t n, const std::vector<PointSet>& seed);
/// Returns a witness description when `family` is not a topology on n points.
std::optional<std::string> topology_violation(std::size_t n, const std::vector<PointSet>& family);

/// Every point x has a τ-open U ∋ x with U∖{x} τ-open.
bool is_sup_td(const Bispace& b);

/// The frame of τ-opens with parts τ1 and τ2.
std::shared_ptr<const Bilocale> to_bilocale(const Bispace& b);

/// Ã = {Int_τ((X∖A) ∪ G) : G ∈ τ} inside the frame `frame` = to_bilocale(b).
Sublocale induced_sublocale(const Bispace& b, const Bilocale& frame, PointSet a);
/// x̃ = X∖cl_τ{x} as a frame element.
Element point_element(const Bispace& b, std::size_t x);

/// Int_τj(cl_τi(A)) = ∅.
bool tau_ij_nowhere_dense(const Bispace& b, PointSet a, IndexPair pair);

enum class TauRemoteMode {
  definition,        ///< A ∩ F = ∅ for every (τi,τj)-nowhere dense F
  closure,           ///< A ∩ cl_τi(F) = ∅ for every such F
  characterization,  ///< A ⊆ U for every τj-dense U ∈ τi
};

bool tau_ij_remote(const Bispace& b, PointSet a, IndexPair pair,
                   TauRemoteMode mode = TauRemoteMode::definition);

struct ConservativityReport {
  bool skipped = false;
  std::string notice;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For every subset and both pairs: closure transfer, nowhere-density and
/// remoteness transfer, i-density transfer, point membership, the
/// closed-or-open intersection fact, the three spatial remoteness forms, and
/// U• = X∖cl_τj(U). Skipped with a notice when b is not sup-T_D.
ConservativityReport conservativity_check(const Bispace& b);

}  // namespace biloc
