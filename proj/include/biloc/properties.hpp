#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biloc/bilocale.hpp"
#include "biloc/bispace.hpp"
#include "biloc/maps.hpp"

namespace biloc {

enum class Scope { lattice, bilocale, bispace, map, diagram };

std::string to_string(Scope s);

/// Something the suite can run checks on. Every structure carries a
/// bilocale: a lattice is taken as its symmetric bilocale and a bispace as
/// its frame of opens with parts τ1, τ2.
struct Structure {
  std::string id;
  std::shared_ptr<const Bilocale> bilocale;
  std::shared_ptr<const Bispace> bispace;
  /// Extra maps supplied with the input; map-scope checks use them along
  /// with the enumerated endomaps.
  std::vector<BilocalicMap> maps;

  static Structure from_lattice(std::shared_ptr<const FiniteLattice> lattice);
  static Structure from_bilocale(std::shared_ptr<const Bilocale> bilocale);
  static Structure from_bispace(std::shared_ptr<const Bispace> bispace);
};

enum class Verdict { pass, fail, skip };

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string detail;  // witness on fail, reason on skip

  static Outcome pass() { return {}; }
  static Outcome fail(std::string witness) { return {Verdict::fail, std::move(witness)}; }
  static Outcome skip(std::string reason) { return {Verdict::skip, std::move(reason)}; }
};

/// Caps on the map and diagram sweeps per structure.
struct SuiteLimits {
  std::size_t endomaps = 64;       // bilocalic endomaps fed to map-scope checks
  std::size_t diagram_arrows = 8;  // Rem endomaps per diagram
};

class CheckContext;

struct PropertyCheck {
  std::string id;
  Scope scope = Scope::bilocale;
  bool expected_fail = false;
  std::string description;
  std::function<Outcome(CheckContext&)> evaluate;
  std::string note;  // interpretation caveat, shown in human reports
};

/// Every registered check in a fixed order.
const std::vector<PropertyCheck>& property_registry();
/// Throws UnknownCheckId.
const PropertyCheck& find_check(std::string_view id);
/// `all` or a comma-separated id list, in registry order for `all` and in
/// the given order otherwise. Throws UnknownCheckId.
std::vector<const PropertyCheck*> select_checks(std::string_view spec);

struct CheckResult {
  const PropertyCheck* check = nullptr;
  std::string structure;
  Verdict verdict = Verdict::pass;
  std::string detail;
  double seconds = 0;
};

/// `CHECK <id> <structure> PASS|FAIL|SKIP(<reason>) [witness=<w>]`.
std::string format_check_line(const CheckResult& r);

struct PropertyReport {
  std::string structure;
  std::vector<CheckResult> results;
  double seconds = 0;

  /// Some expected-pass check failed.
  bool has_unexpected_failure() const;
};

PropertyReport run_property_suite(const Structure& structure, const std::vector<const PropertyCheck*>& checks,
                                  const SuiteLimits& limits = {});
/// One check on one structure. A library Error raised by the evaluator
/// becomes a failure carrying the message.
Outcome evaluate_check(const PropertyCheck& check, const Structure& structure, const SuiteLimits& limits = {});

/// Tallies over many structures.
struct SweepSummary {
  struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::string first_failure;  // `<structure> <witness>`
  };
  std::size_t structures = 0;
  std::map<std::string, Tally> tallies;  // by check id
  std::vector<std::string> check_order;

  void add(const PropertyReport& report);
  /// Expected-pass checks that failed somewhere and expected-fail checks
  /// that never failed, one line each.
  std::vector<std::string> problems() const;
};

class CheckContext {
 public:
  CheckContext(const Structure& s, const SuiteLimits& limits);
  ~CheckContext();
  CheckContext(const CheckContext&) = delete;
  CheckContext& operator=(const CheckContext&) = delete;

  const Structure& structure() const { return *structure_; }
  const Bilocale& bilocale() const { return *structure_->bilocale; }
  std::shared_ptr<const Bilocale> bilocale_ptr() const { return structure_->bilocale; }
  const FiniteLattice& lattice() const { return bilocale().total(); }
  const SuiteLimits& limits() const { return limits_; }

  const SublocaleSpace& space();
  const SublocaleSpace& space_of(const FiniteLattice& lattice);
  const std::vector<Sublocale>& sublocales();
  const BilocaleClass& classification();
  /// Bilocalic endomaps (capped) plus the supplied maps and, on symmetric
  /// structures, the inclusion of the Booleanization.
  const std::vector<BilocalicMap>& maps();
  const std::vector<BilocalicMap>& endomaps();
  const ConservativityReport& conservativity();

  /// Cached per pair: (i,j)-nowhere density of each sublocale index.
  const std::vector<bool>& nowhere_dense(IndexPair pair);
  const std::vector<bool>& clopen_nowhere_dense(IndexPair pair);
  /// Cached per map (by address within maps()), pair and reading.
  const PreservationReport& preservation(const BilocalicMap& f, IndexPair pair, bool weak);

 private:
  struct Cache;
  const Structure* structure_;
  SuiteLimits limits_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace biloc
