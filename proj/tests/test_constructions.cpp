#include <doctest.h>

#include "biloc/constructions.hpp"
#include "biloc/generators.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

// set partitions of {0..n-1} as class labels, restricted growth order
void partitions(std::size_t n, std::vector<std::size_t>& label, std::size_t k, std::size_t blocks,
                std::vector<std::vector<std::size_t>>& out) {
  if (k == n) {
    out.push_back(label);
    return;
  }
  for (std::size_t c = 0; c <= blocks; ++c) {
    label[k] = c;
    partitions(n, label, k + 1, std::max(blocks, c + 1), out);
  }
}

std::size_t brute_congruence_count(const FiniteLattice& l) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> label(l.size());
  partitions(l.size(), label, 0, 0, all);
  std::size_t count = 0;
  for (const auto& p : all) {
    bool ok = true;
    for (Element a = 0; ok && a < l.size(); ++a) {
      for (Element b = 0; ok && b < l.size(); ++b) {
        if (p[a] != p[b]) continue;
        for (Element c = 0; ok && c < l.size(); ++c) {
          ok = p[l.meet(a, c)] == p[l.meet(b, c)] && p[l.join(a, c)] == p[l.join(b, c)];
        }
      }
    }
    count += ok;
  }
  return count;
}

std::vector<ElementSet> brute_ideals(const FiniteLattice& l) {
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << l.size()); ++bits) {
    const ElementSet s(bits);
    bool ok = true;
    for (Element a : s) {
      ok = ok && l.down_set(a).subset_of(s);
      for (Element b : s) ok = ok && s.contains(l.join(a, b));
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("nabla, delta and kernels are congruences") {
  auto p = pt();
  const FiniteLattice& l = p->total();
  for (Element a = 0; a < l.size(); ++a) {
    CHECK(is_congruence(nabla(l, a)));
    CHECK(is_congruence(delta(l, a)));
    CHECK(nabla(l, a).related(l.bottom(), a));
    CHECK(delta(l, a).related(l.top(), a));
  }
  for (const Sublocale& s : enumerate_sublocales(l)) CHECK(is_congruence(kernel(s)));
  CHECK(kernel(whole_sublocale(l)).subset_of(kernel(void_sublocale(l))));
}

TEST_CASE("congruence bilocale of C3") {
  const CongruenceBilocale cb = congruence_bilocale(chain3());
  CHECK(cb.congruences.size() == 4);
  CHECK(cb.bilocale->total().size() == 4);
  auto boolean = b4();
  CHECK(lattices_isomorphic(cb.bilocale->total(), boolean->total()));
  CHECK(congruence_bilocale(point()).bilocale->total().size() == 1);
}

TEST_CASE("congruences match brute-force partitions") {
  for (const auto& l : generate_lattices(3)) {
    if (l->size() > 8) continue;
    const CongruenceBilocale cb = congruence_bilocale(l);
    CHECK(cb.congruences.size() == brute_congruence_count(*l));
    CHECK(cb.congruences.size() == enumerate_sublocales(*l).size());
    for (const Congruence& c : cb.congruences) CHECK(is_congruence(c));
  }
}

TEST_CASE("Rmt of a congruence bilocale is everything") {
  for (const auto& l : generate_lattices(3)) {
    const CongruenceBilocale cb = congruence_bilocale(l);
    for (IndexPair p : kBothPairs) CHECK(rmt(*cb.bilocale, p, RmtVariant::weak).is_whole());
  }
}

TEST_CASE("ideals") {
  for (const auto& l : generate_lattices(3)) {
    const auto ideals = enumerate_ideals(*l);
    auto brute = brute_ideals(*l);
    CHECK(ideals.size() == brute.size());
    CHECK(ideals.size() == l->size());
    for (const ElementSet& i : ideals) {
      CHECK(is_ideal(*l, i));
      CHECK(i == l->down_set(l->join_of(i)));
    }
  }
  auto c3 = chain3();
  CHECK(generated_ideal(*c3, set_of(*c3, {"m"})) == set_of(*c3, {"0", "m"}));
  CHECK_FALSE(is_ideal(*c3, set_of(*c3, {"m"})));
}

TEST_CASE("ideal bilocales") {
  auto cc = c3();
  const IdealBilocale j3 = ideal_bilocale(*cc);
  CHECK(lattices_isomorphic(j3.bilocale->total(), cc->total()));

  auto p = pt();
  const IdealBilocale jp = ideal_bilocale(*p);
  CHECK(jp.bilocale->part(Part::first).size() == 4);
  CHECK(jp.bilocale->part(Part::second).size() == 3);

  auto one = std::make_shared<const Bilocale>(Bilocale::symmetric(point()));
  CHECK(ideal_bilocale(*one).bilocale->total().size() == 1);
}

TEST_CASE("Noetherian equivalence on the fixtures") {
  auto p = pt();
  const IdealBilocale jp = ideal_bilocale(*p);
  const IndexPair p12 = IndexPair::one_two();
  CHECK_FALSE(rmt(*p, p12, RmtVariant::weak).is_whole());
  CHECK_FALSE(rmt(*jp.bilocale, p12, RmtVariant::weak).is_whole());

  auto cc = c3();
  CHECK(rmt(*cc, p12, RmtVariant::weak).is_whole());
  CHECK(rmt(*ideal_bilocale(*cc).bilocale, p12, RmtVariant::weak).is_whole());

  for (const auto& b : {pt(), c3(), b4()}) {
    const ConstructionReport r = check_construction_theorems(*b);
    CHECK(r.ok());
    CHECK_FALSE(r.lines.empty());
  }
}

TEST_CASE("construction theorems on generated bilocales") {
  for (const auto& l : generate_lattices(3)) {
    for (const auto& b : generate_bilocales(l)) CHECK(check_construction_theorems(*b).ok());
  }
}

}
