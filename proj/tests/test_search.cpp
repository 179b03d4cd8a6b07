#include <doctest.h>

#include "biloc/search.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

SearchBounds small_bounds(std::size_t elems) {
  SearchBounds b;
  b.max_elems = elems;
  b.max_points = 3;
  b.max_bispace_points = 3;
  return b;
}

std::vector<std::string> lines(const std::vector<PropertyReport>& reports) {
  std::vector<std::string> out;
  for (const PropertyReport& r : reports) {
    for (const CheckResult& c : r.results) out.push_back(format_check_line(c));
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("finds C3 for the Boolean characterization") {
  const auto c = search_counterexample("example_booleanbi_4", small_bounds(16), 0, true);
  REQUIRE(c.has_value());
  CHECK(c->structure == "C3.sym");
  CHECK(reproduces(*c));
  const Document d = parse_document(c->serialized);
  REQUIRE(d.bilocales.size() == 1);
  CHECK(d.bilocales.front()->total().size() == 3);
}

TEST_CASE("finds the failed converse within PT size") {
  const auto c = search_counterexample("prop_smallest_dense_converse", small_bounds(6), 0, true);
  REQUIRE(c.has_value());
  CHECK(reproduces(*c));
  const std::vector<Structure> s = document_structures(parse_document(c->serialized));
  REQUIRE_FALSE(s.empty());
  CHECK(s.front().bilocale->total().size() <= 6);
}

TEST_CASE("theorems have no counterexample") {
  CHECK_FALSE(search_counterexample("prop_pseudo_7", small_bounds(16), 0, true).has_value());
  CHECK_FALSE(search_counterexample("lattice_heyting", small_bounds(16), 0, true).has_value());
  CHECK_FALSE(search_counterexample("lemma_biclo", small_bounds(16), 0, true).has_value());
}

TEST_CASE("random search is seeded") {
  SearchBounds b;
  b.samples = 6;
  const auto x = search_counterexample("prop_ijremote_weak", b, 11, false);
  const auto y = search_counterexample("prop_ijremote_weak", b, 11, false);
  REQUIRE(x.has_value() == y.has_value());
  if (x) {
    CHECK(x->structure == y->structure);
    CHECK(x->serialized == y->serialized);
    CHECK(x->witness == y->witness);
  }
}

TEST_CASE("unknown property") { CHECK_THROWS_AS(search_counterexample("nope", small_bounds(4), 0, true), Error); }

TEST_CASE("serialized structures round trip") {
  auto p = pt();
  Structure s = Structure::from_bilocale(p);
  s.maps.push_back(BilocalicMap::identity(p));
  const std::vector<Structure> back = document_structures(parse_document(serialize(s)));
  REQUIRE(back.size() == 1);
  CHECK(back.front().bilocale->total() == p->total());
  REQUIRE(back.front().maps.size() == 1);
  CHECK(back.front().maps.front().base().table() == s.maps.front().base().table());

  const Structure lat = Structure::from_lattice(chain3());
  const std::vector<Structure> lb = document_structures(parse_document(serialize(lat)));
  REQUIRE(lb.size() == 1);
  CHECK(lb.front().bilocale->total() == *chain3());

  const Structure sp = Structure::from_bispace(load("PT.bisp").bispaces.front());
  const std::vector<Structure> sb = document_structures(parse_document(serialize(sp)));
  REQUIRE(sb.size() == 1);
  CHECK(sb.front().bispace != nullptr);
}

TEST_CASE("sweep plan") {
  const auto checks = select_checks("lattice_frame,prop_pseudo_1,lemma_biclo");
  const auto plan = sweep_plan(checks, small_bounds(8));
  std::size_t lattice_runs = 0, bispace_runs = 0;
  for (const SweepEntry& e : plan) {
    for (const PropertyCheck* c : e.checks) {
      if (c->scope == Scope::lattice) {
        ++lattice_runs;
        CHECK(e.structure.bilocale->part(Part::first) == e.structure.bilocale->total().all());
      }
      if (c->scope == Scope::bispace) {
        ++bispace_runs;
        CHECK(e.structure.bispace != nullptr);
      }
    }
  }
  CHECK(lattice_runs == generated_structures(small_bounds(8), Scope::lattice).size());
  CHECK(bispace_runs == generated_structures(small_bounds(8), Scope::bispace).size());
}

TEST_CASE("parallel sweeps report in entry order") {
  const auto plan = sweep_plan(select_checks("prop_int_10,thm_ijnd,prop_bidense"), small_bounds(8));
  CHECK(lines(run_sweep(plan, {}, 1)) == lines(run_sweep(plan, {}, 4)));
}

}
