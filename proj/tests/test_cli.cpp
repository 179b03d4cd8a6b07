#include <doctest.h>

#include <sstream>

#include "biloc/cli.hpp"
#include "biloc/search.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.starts_with("@")) a = fixture(a.substr(1));
  }
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, std::string_view needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("rmt") {
  const Run r = cli({"rmt", "@PT.biloc", "--i", "1", "--j", "2", "--variant", "weak"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "{a, ab, 1} = c(a)"));
  const Run s = cli({"rmt", "@C3.biloc", "--i", "2", "--j", "1", "--variant", "strong"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "{1} = O"));
  CHECK(cli({"rmt", "@PT.bisp", "--i", "1", "--j", "2", "--variant", "weak"}).out == r.out);
  CHECK(cli({"rmt", "@PT.biloc", "--i", "1", "--j", "1", "--variant", "weak"}).code == 2);
  CHECK(cli({"rmt", "@PT.biloc", "--i", "1", "--j", "2", "--variant", "medium"}).code == 2);
}

TEST_CASE("validate") {
  const Run ok = cli({"validate", "@PT.bisp"});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "sup-TD=yes"));
  const Run bad = cli({"validate", "@broken.lat"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "CycleInOrder"));
  CHECK(cli({"validate", "@missing.biloc"}).code == 2);
}

TEST_CASE("verbs and options") {
  const Run none = cli({});
  CHECK(none.code == 2);
  const Run unknown = cli({"frob"});
  CHECK(unknown.code == 2);
  CHECK(has(unknown.err, "UnknownVerb"));
  CHECK(cli({"validate", "@PT.biloc", "--bogus"}).code == 2);
  CHECK(cli({"suite", "@B4.biloc", "--checks", "nope"}).code == 2);
}

TEST_CASE("sublocales and classify") {
  const Run s = cli({"sublocales", "@C3.biloc", "--oracle"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "sublocales of C3: 4"));
  CHECK(has(s.out, "oracle: agree (4 by brute force)"));
  const Run c = cli({"classify", "@PT.biloc", "--i", "1", "--j", "2"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "clopen (1,2)-nowhere dense: 2"));
  CHECK(has(c.out, "{bc, 1} = c(bc)"));
}

TEST_CASE("suite exit codes") {
  const Run b = cli({"suite", "@B4.biloc"});
  CHECK(b.code == 0);
  CHECK_FALSE(has(b.out, "FAIL"));
  const Run c = cli({"suite", "@C3.biloc", "--format", "machine"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "CHECK prop_ijremote_weak C3.sym FAIL"));
  CHECK(has(c.out, "CHECK prop_ijremote_strong C3.sym PASS"));
  const Run p = cli({"suite", "@PT.biloc", "--checks", "prop_smallest_dense_converse"});
  CHECK(p.code == 0);
  CHECK(has(p.out, "[expected]"));
}

TEST_CASE("generated suite") {
  const Run g = cli({"suite", "--generated", "--max-points", "2", "--bispace-points", "2", "--checks",
                     "prop_pseudo_7,prop_ijremote_strong,lemma_biclo"});
  CHECK(g.code == 0);
  CHECK(has(g.out, "prop_pseudo_7"));
  // an expected-fail check that never fails is reported
  const Run e = cli({"suite", "--generated", "--max-points", "1", "--checks", "prop_smallest_dense_converse"});
  CHECK(e.code == 1);
  CHECK(has(e.out, "PROBLEM"));
}

TEST_CASE("search") {
  const Run found = cli({"search", "--prop", "example_booleanbi_4", "--max-elems", "4", "--exhaustive"});
  CHECK(found.code == 1);
  CHECK(has(found.out, "counterexample example_booleanbi_4 C3.sym"));
  const std::string body = found.out.substr(found.out.find('\n') + 1);
  CHECK(parse_document(body).bilocales.size() == 1);

  const Run none = cli({"search", "--prop", "prop_pseudo_7", "--max-elems", "6", "--exhaustive"});
  CHECK(none.code == 0);
  CHECK(none.out == "none prop_pseudo_7\n");
  CHECK(cli({"search", "--prop", "nope", "--max-elems", "4"}).code == 2);
}

TEST_CASE("convert") {
  const Run r = cli({"convert", "@PT.bisp"});
  REQUIRE(r.code == 0);
  const Document d = parse_document(r.out);
  REQUIRE(d.bilocales.size() == 1);
  auto p = pt();
  CHECK(d.bilocales.front()->total() == p->total());
  CHECK(d.bilocales.front()->part(Part::first) == p->part(Part::first));
  CHECK(d.bilocales.front()->part(Part::second) == p->part(Part::second));
}

TEST_CASE("construct") {
  const Run c = cli({"construct", "congruence", "@C3.biloc"});
  REQUIRE(c.code == 0);
  const Document dc = parse_document(c.out);
  REQUIRE(dc.bilocales.size() == 1);
  CHECK(dc.bilocales.front()->total().size() == 4);

  const Run i = cli({"construct", "ideal", "@PT.biloc"});
  REQUIRE(i.code == 0);
  const Document di = parse_document(i.out);
  REQUIRE(di.bilocales.size() == 1);
  CHECK(di.bilocales.front()->total().size() == 6);
  CHECK(cli({"construct", "tensor", "@PT.biloc"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> suite{"suite", "@PT.biloc", "--format", "machine"};
  CHECK(cli(suite).out == cli(suite).out);
  const std::vector<std::string> search{"search", "--prop", "prop_ijremote_weak", "--max-elems", "8", "--seed", "5"};
  CHECK(cli(search).out == cli(search).out);
}

}
