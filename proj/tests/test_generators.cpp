#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "biloc/generators.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

std::vector<std::string> names(const std::vector<std::shared_ptr<const FiniteLattice>>& ls) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(l->name());
  return out;
}

std::vector<Element> identity_perm(std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

bool is_order_iso(const FiniteLattice& a, const FiniteLattice& b, const std::vector<Element>& p) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(p[x], p[y])) return false;
    }
  }
  return true;
}

ElementSet image(const std::vector<Element>& p, ElementSet s) {
  ElementSet out;
  for (Element x : s) out.insert(p[x]);
  return out;
}

ElementSet brute_subframe_filter(const FiniteLattice& l, ElementSet s) {
  if (!s.contains(l.bottom()) || !s.contains(l.top())) return {};
  for (Element a : s) {
    for (Element b : s) {
      if (!s.contains(l.meet(a, b)) || !s.contains(l.join(a, b))) return {};
    }
  }
  return s;
}

using TopologyKey = std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>;

std::vector<std::uint64_t> permuted(const std::vector<PointSet>& t, const std::vector<Element>& perm) {
  std::vector<std::uint64_t> out;
  for (PointSet u : t) {
    std::uint64_t bits = 0;
    for (auto x : u) bits |= std::uint64_t{1} << perm[x];
    out.push_back(bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// topology pairs up to point permutation and swap, by canonical minimum
std::size_t brute_bispace_count(std::size_t n) {
  const auto tops = enumerate_topologies(n);
  std::set<TopologyKey> seen;
  for (const auto& t1 : tops) {
    for (const auto& t2 : tops) {
      std::optional<TopologyKey> best;
      auto perm = identity_perm(n);
      do {
        for (const TopologyKey& k : {TopologyKey{permuted(t1, perm), permuted(t2, perm)},
                                     TopologyKey{permuted(t2, perm), permuted(t1, perm)}}) {
          if (!best || k < *best) best = k;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      seen.insert(*best);
    }
  }
  return seen.size();
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("posets") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 7);
  CHECK(enumerate_posets(4).size() == 40);
}

TEST_CASE("down-set lattices") {
  Poset antichain{2, {PointSet{}, PointSet{}}};
  const FiniteLattice b = down_set_lattice(antichain, "B4");
  CHECK(b.labels() == std::vector<std::string>{"0", "a", "b", "ab"});
  auto boolean = b4();
  CHECK(lattices_isomorphic(b, boolean->total()));
  Poset chain{2, {PointSet{}, PointSet::single(0)}};
  CHECK(lattices_isomorphic(down_set_lattice(chain, "C3"), *chain3()));
  CHECK_FALSE(lattices_isomorphic(down_set_lattice(chain, "C3"), b));
}

TEST_CASE("generated lattices") {
  CHECK(names(generate_lattices(1)) == std::vector<std::string>{"C2"});
  // bounds are cumulative; two points add the chain and the antichain
  std::vector<std::string> two = names(generate_lattices(2));
  CHECK(two.front() == "C2");
  std::sort(two.begin() + 1, two.end());
  CHECK(std::vector<std::string>(two.begin() + 1, two.end()) == std::vector<std::string>{"B4", "C3"});
  // one lattice per unlabelled poset: 1 + 2 + 5 + 16
  const auto four = generate_lattices(4);
  CHECK(four.size() == 24);
  for (std::size_t a = 0; a < four.size(); ++a) {
    CHECK(check_frame(*four[a]));
    for (std::size_t b = a + 1; b < four.size(); ++b) CHECK_FALSE(lattices_isomorphic(*four[a], *four[b]));
  }
}

TEST_CASE("random generation is seeded") {
  const auto a = generate_lattices(4, GenerationMode::random(7, 5));
  const auto b = generate_lattices(4, GenerationMode::random(7, 5));
  CHECK(names(a) == names(b));
  CHECK_FALSE(a.empty());
}

TEST_CASE("automorphisms") {
  auto boolean = b4();
  CHECK(lattice_automorphisms(boolean->total()).size() == 2);
  CHECK(lattice_automorphisms(*chain3()).size() == 1);
}

TEST_CASE("subframes match the subset filter") {
  for (const auto& l : generate_lattices(3)) {
    std::vector<ElementSet> brute;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l->size()); ++bits) {
      const ElementSet s = brute_subframe_filter(*l, ElementSet(bits));
      if (!s.empty()) brute.push_back(s);
    }
    CHECK(enumerate_subframes(*l) == brute);
  }
}

TEST_CASE("generated bilocales") {
  auto c3 = chain3();
  const auto bs = generate_bilocales(c3);
  REQUIRE_FALSE(bs.empty());
  CHECK(bs.front()->name() == "C3.sym");
  CHECK(bs.front()->part(Part::first) == c3->all());
  for (const auto& l : generate_lattices(3)) {
    for (const auto& b : generate_bilocales(l)) {
      CHECK_NOTHROW(Bilocale::validate(b->name(), b->total_ptr(), b->part(Part::first), b->part(Part::second)));
    }
  }
}

TEST_CASE("the PT bilocale is generated") {
  auto p = pt();
  const FiniteLattice& target = p->total();
  bool found = false;
  for (const auto& l : generate_lattices(3)) {
    if (l->size() != target.size() || !lattices_isomorphic(*l, target)) continue;
    for (const auto& b : generate_bilocales(l)) {
      auto perm = identity_perm(l->size());
      do {
        if (!is_order_iso(*l, target, perm)) continue;
        const ElementSet p1 = image(perm, b->part(Part::first)), p2 = image(perm, b->part(Part::second));
        found = found || (p1 == p->part(Part::first) && p2 == p->part(Part::second)) ||
                (p2 == p->part(Part::first) && p1 == p->part(Part::second));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  CHECK(found);
}

TEST_CASE("topologies and bispaces") {
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(generate_bispaces(n).size() == brute_bispace_count(n));
}

}
