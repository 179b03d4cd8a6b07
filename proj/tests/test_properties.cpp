#include <doctest.h>

#include <set>

#include "biloc/properties.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

PropertyReport run_all(std::shared_ptr<const Bilocale> b) {
  return run_property_suite(Structure::from_bilocale(std::move(b)), select_checks("all"));
}

const CheckResult& result(const PropertyReport& r, std::string_view id) {
  for (const CheckResult& c : r.results) {
    if (c.check->id == id) return c;
  }
  FAIL("missing check " << id);
  return r.results.front();
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("registry") {
  const auto& reg = property_registry();
  std::set<std::string> ids;
  for (const PropertyCheck& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.description.empty());
    CHECK(static_cast<bool>(c.evaluate));
  }
  for (const char* id : {"prop_smallest_dense_converse", "prop_ijremote_weak", "example_booleanbi_4"}) {
    CHECK(find_check(id).expected_fail);
  }
  CHECK_FALSE(find_check("prop_ijremote_strong").expected_fail);
  CHECK_FALSE(find_check("prop_pseudo_7").expected_fail);
  try {
    find_check("no_such_check");
    FAIL("expected UnknownCheckId");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCheckId);
  }
}

TEST_CASE("check selection") {
  CHECK(select_checks("all").size() == property_registry().size());
  const auto two = select_checks("prop_pseudo_7,lattice_frame");
  REQUIRE(two.size() == 2);
  CHECK(two[0]->id == "prop_pseudo_7");
  CHECK(two[1]->id == "lattice_frame");
  CHECK_THROWS_AS(select_checks("lattice_frame,bogus"), Error);
}

TEST_CASE("PT: only the failed converse fails") {
  const PropertyReport r = run_all(pt());
  CHECK(r.results.size() == property_registry().size());
  const CheckResult& conv = result(r, "prop_smallest_dense_converse");
  CHECK(conv.verdict == Verdict::fail);
  CHECK(conv.detail.find("{bc,1}") != std::string::npos);
  for (const CheckResult& c : r.results) {
    if (c.check->id != "prop_smallest_dense_converse") CHECK_MESSAGE(c.verdict != Verdict::fail, c.check->id);
  }
  CHECK_FALSE(r.has_unexpected_failure());
}

TEST_CASE("B4: every applicable check passes") {
  const PropertyReport r = run_all(b4());
  for (const CheckResult& c : r.results) CHECK_MESSAGE(c.verdict != Verdict::fail, c.check->id << " " << c.detail);
  CHECK_FALSE(r.has_unexpected_failure());
}

TEST_CASE("C3: registered discrepancies") {
  const PropertyReport r = run_all(c3());
  CHECK(result(r, "prop_ijremote_weak").verdict == Verdict::fail);
  CHECK(result(r, "prop_ijremote_strong").verdict == Verdict::pass);
  CHECK(result(r, "example_booleanbi_4").verdict == Verdict::fail);
  CHECK(result(r, "example_booleanbi_4_strong").verdict == Verdict::pass);
  for (const CheckResult& c : r.results) {
    if (c.verdict == Verdict::fail) CHECK_MESSAGE(c.check->expected_fail, c.check->id);
  }
  CHECK_FALSE(r.has_unexpected_failure());
}

TEST_CASE("bispace structures") {
  const PropertyReport r =
      run_property_suite(Structure::from_bispace(load("PT.bisp").bispaces.front()), select_checks("all"));
  CHECK(result(r, "lemma_biclo").verdict == Verdict::pass);
  CHECK(result(r, "bispace_join_topology").verdict == Verdict::pass);
  CHECK(result(r, "prop_smallest_dense_converse").verdict == Verdict::fail);
  CHECK(result(r, "lemma_biclo").structure == "PT");
}

TEST_CASE("machine lines") {
  CheckResult r;
  r.check = &find_check("prop_ijremote_weak");
  r.structure = "C3.sym";
  r.verdict = Verdict::fail;
  r.detail = "w";
  CHECK(format_check_line(r) == "CHECK prop_ijremote_weak C3.sym FAIL witness=w");
  r.verdict = Verdict::skip;
  r.detail = "too-large";
  CHECK(format_check_line(r) == "CHECK prop_ijremote_weak C3.sym SKIP(too-large)");
  r.verdict = Verdict::pass;
  r.detail.clear();
  CHECK(format_check_line(r) == "CHECK prop_ijremote_weak C3.sym PASS");
}

TEST_CASE("sweep summaries flag both kinds of surprise") {
  const auto conv = select_checks("prop_smallest_dense_converse,prop_pseudo_7");
  SweepSummary on_pt;
  on_pt.add(run_property_suite(Structure::from_bilocale(pt()), conv));
  CHECK(on_pt.problems().empty());
  CHECK(on_pt.tallies.at("prop_smallest_dense_converse").fail == 1);

  SweepSummary on_b4;
  on_b4.add(run_property_suite(Structure::from_bilocale(b4()), conv));
  REQUIRE(on_b4.problems().size() == 1);
  CHECK(on_b4.problems().front().find("prop_smallest_dense_converse") != std::string::npos);
}

TEST_CASE("evaluation is deterministic") {
  const auto a = run_all(pt());
  const auto b = run_all(pt());
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) CHECK(format_check_line(a.results[k]) == format_check_line(b.results[k]));
}

}
