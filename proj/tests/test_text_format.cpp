#include <doctest.h>

#include "biloc/generators.hpp"
#include "biloc/maps.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownVerb;
}

}  // namespace

TEST_SUITE("text_format") {

TEST_CASE("fixtures parse") {
  const Document d = load("PT.biloc");
  REQUIRE(d.lattices.size() == 1);
  REQUIRE(d.bilocales.size() == 1);
  CHECK(d.find_lattice("PT") == d.lattices.front());
  CHECK(d.find_bilocale("PT") == d.bilocales.front());
  CHECK(d.find_bilocale("nope") == nullptr);
  CHECK(load("PT.bisp").bispaces.size() == 1);
  CHECK_FALSE(load("C3.biloc").empty());
}

TEST_CASE("lattice round trip") {
  for (const auto& l : generate_lattices(4)) {
    const Document d = parse_document(serialize(*l));
    REQUIRE(d.lattices.size() == 1);
    CHECK(*d.lattices.front() == *l);
    CHECK(d.lattices.front()->name() == l->name());
  }
}

TEST_CASE("bilocale round trip") {
  for (const auto& l : generate_lattices(3)) {
    for (const auto& b : generate_bilocales(l)) {
      const Document d = parse_document(serialize(*b));
      REQUIRE(d.bilocales.size() == 1);
      const Bilocale& r = *d.bilocales.front();
      CHECK(r.name() == b->name());
      CHECK(r.total() == b->total());
      CHECK(r.part(Part::first) == b->part(Part::first));
      CHECK(r.part(Part::second) == b->part(Part::second));
    }
  }
}

TEST_CASE("bispace round trip") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& x : generate_bispaces(n)) {
      const Document d = parse_document(serialize(*x));
      REQUIRE(d.bispaces.size() == 1);
      for (Family f : {Family::tau1, Family::tau2, Family::tau}) CHECK(d.bispaces.front()->opens(f) == x->opens(f));
    }
  }
}

TEST_CASE("map round trip") {
  auto p = pt();
  for (const BilocalicMap& f : enumerate_bilocalic_maps(p, p)) {
    const Document d = parse_document(serialize(f));
    REQUIRE(d.bilocalic_maps.size() == 1);
    CHECK(d.bilocalic_maps.front().base().table() == f.base().table());
  }
  auto c3 = chain3();
  const LocalicMap id = LocalicMap::identity(c3);
  const Document d = parse_document(serialize(*c3) + serialize(id));
  REQUIRE(d.localic_maps.size() == 1);
  CHECK(d.localic_maps.front().table() == id.table());
}

TEST_CASE("comments and hash labels") {
  const Document d = parse_document(
      "# leading comment\n"
      "lattice T  # trailing comment\n"
      "elements theta_S#0 theta_S#1\n"
      "order theta_S#0<=theta_S#1\n"
      "end\n");
  REQUIRE(d.lattices.size() == 1);
  CHECK(d.lattices.front()->label(1) == "theta_S#1");
}

TEST_CASE("errors") {
  CHECK(code_of("frobnicate\n") == ErrorCode::ParseError);
  CHECK(code_of("lattice X\nelements 0 1\norder 0<=1\n") == ErrorCode::ParseError);
  CHECK(code_of("lattice X\nelements 0 1\norder 0<=2\nend\n") != ErrorCode::UnknownVerb);
  CHECK(code_of("bilocale B\nuse Missing\nend\n") != ErrorCode::UnknownVerb);
  try {
    load("broken.lat");
    FAIL("expected CycleInOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CycleInOrder);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  try {
    parse_document("lattice X\nelements 0 1\nbogus\nend\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_file(fixture("missing.biloc")), Error);
}

TEST_CASE("non-topologies are rejected without generation") {
  CHECK(code_of("bispace X\npoints a b\nopen1 {}\nopen1 {a}\nopen2 {}\nopen2 {a,b}\ngenerate off\nend\n") ==
        ErrorCode::NotATopology);
}

}
