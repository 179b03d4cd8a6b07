#include <doctest.h>

#include "biloc/generators.hpp"
#include "biloc/maps.hpp"
#include "support.hpp"

using namespace biloc;
using namespace biloc::test;

namespace {

bool brute_frame_hom(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Element>& h) {
  if (h[from.bottom()] != to.bottom() || h[from.top()] != to.top()) return false;
  for (Element a = 0; a < from.size(); ++a) {
    for (Element b = 0; b < from.size(); ++b) {
      if (h[from.meet(a, b)] != to.meet(h[a], h[b]) || h[from.join(a, b)] != to.join(h[a], h[b])) return false;
    }
  }
  return true;
}

// every table from → to, filtered by the homomorphism laws
std::size_t brute_frame_hom_count(const FiniteLattice& from, const FiniteLattice& to) {
  std::vector<Element> h(from.size(), 0);
  std::size_t count = 0;
  while (true) {
    count += brute_frame_hom(from, to, h);
    std::size_t k = 0;
    while (k < h.size() && ++h[k] == to.size()) h[k++] = 0;
    if (k == h.size()) return count;
  }
}

std::vector<std::shared_ptr<const FiniteLattice>> small_lattices() {
  auto out = generate_lattices(3);
  out.push_back(point());
  return out;
}

Diagram single(std::shared_ptr<const Bilocale> b) {
  return Diagram{{b}, {DiagramArrow{0, 0, BilocalicMap::identity(b)}}};
}

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("identity") {
  auto c3 = chain3();
  const LocalicMap id = LocalicMap::identity(c3);
  for (Element x = 0; x < c3->size(); ++x) {
    CHECK(id(x) == x);
    CHECK(id.adjoint(x) == x);
  }
}

TEST_CASE("inclusion of the Booleanization of C3") {
  auto c3 = chain3();
  const LocalicMap j = inclusion_map(c3, booleanization(*c3).members(), "j");
  CHECK(j.source().size() == 2);
  CHECK(j.adjoint(c3->at("m")) == j.source().top());
  CHECK(j.adjoint(c3->at("0")) == j.source().bottom());
  CHECK(image_sublocale(j, void_sublocale(j.source())).is_void());
}

TEST_CASE("invalid tables") {
  auto c3 = chain3();
  auto code = [&](std::vector<Element> t) {
    try {
      LocalicMap::validate("f", c3, c3, std::move(t));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::UnknownVerb;
  };
  CHECK(code({c3->at("m"), c3->at("0"), c3->at("1")}) == ErrorCode::NotMeetPreserving);
  CHECK(code({0, 0}) == ErrorCode::InvalidInput);
  // top is preserved but the adjoint misses bottom
  CHECK(code({c3->at("1"), c3->at("1"), c3->at("1")}) == ErrorCode::AdjointNotFrameHom);
}

TEST_CASE("frame homomorphism enumeration matches brute force") {
  for (const auto& a : small_lattices()) {
    for (const auto& b : small_lattices()) {
      const auto homs = enumerate_frame_homs(*a, *b);
      CHECK(homs.size() == brute_frame_hom_count(*a, *b));
      for (const auto& h : homs) CHECK(brute_frame_hom(*a, *b, h));
    }
  }
}

TEST_CASE("adjunction and preimage identities on every localic map") {
  for (const auto& a : small_lattices()) {
    const SublocaleSpace space(*a);
    for (const auto& b : small_lattices()) {
      for (const LocalicMap& f : enumerate_localic_maps(a, b)) {
        for (Element x = 0; x < a->size(); ++x) {
          for (Element y = 0; y < b->size(); ++y) REQUIRE(a->leq(f.adjoint(y), x) == b->leq(y, f(x)));
        }
        for (Element y = 0; y < b->size(); ++y) {
          REQUIRE(preimage_sublocale(f, closed_sublocale(*b, y), space) == closed_sublocale(*a, f.adjoint(y)));
          REQUIRE(preimage_sublocale(f, open_sublocale(*b, y), space) == open_sublocale(*a, f.adjoint(y)));
        }
        for (std::size_t k = 0; k < space.size(); ++k) {
          REQUIRE(is_sublocale(*b, image_sublocale(f, space.at(k)).members()).ok);
        }
      }
    }
  }
}

TEST_CASE("composition") {
  auto c3 = chain3();
  for (const LocalicMap& f : enumerate_localic_maps(c3, c3)) {
    for (const LocalicMap& g : enumerate_localic_maps(c3, c3)) {
      const LocalicMap gf = compose(g, f);
      for (Element x = 0; x < c3->size(); ++x) CHECK(gf(x) == g(f(x)));
    }
  }
}

TEST_CASE("lattice homomorphisms preserve bottom") {
  auto c3 = chain3();
  CHECK(is_lattice_homomorphism(LocalicMap::identity(c3)));
  const LocalicMap j = inclusion_map(c3, set_of(*c3, {"m", "1"}), "j");
  CHECK_FALSE(is_lattice_homomorphism(j));
}

TEST_CASE("bilocalic maps") {
  auto p = pt();
  CHECK_NOTHROW(BilocalicMap::identity(p));
  // bilocalic maps are exactly the localic maps that pass part validation
  std::size_t valid = 0;
  for (const LocalicMap& f : enumerate_localic_maps(p->total_ptr(), p->total_ptr())) {
    try {
      BilocalicMap::validate("f", p, p, f.table());
      ++valid;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PartViolation);
    }
  }
  CHECK(valid == enumerate_bilocalic_maps(p, p).size());

  auto c3 = chain3();
  auto sym = std::make_shared<const Bilocale>(Bilocale::symmetric(c3));
  const ElementSet s = booleanization(*c3).members();
  const LocalicMap j = inclusion_map(c3, s, "j");
  auto sub = std::make_shared<const Bilocale>(Bilocale::symmetric(j.source_ptr()));
  CHECK_NOTHROW(BilocalicMap::validate("j", sub, sym, j.table()));
}

TEST_CASE("weakly closed maps") {
  auto c3 = chain3();
  CHECK(is_weakly_closed(LocalicMap::identity(c3)));
  for (const LocalicMap& f : enumerate_localic_maps(point(), c3)) CHECK(is_weakly_closed(f));
}

TEST_CASE("Rem-maps") {
  auto p = pt();
  CHECK(is_rem_map(BilocalicMap::identity(p), IndexPair::one_two(), RmtVariant::weak));
  auto bb = b4();
  for (const auto& src : {pt(), c3(), b4()}) {
    for (const BilocalicMap& f : enumerate_bilocalic_maps(src, bb)) {
      for (IndexPair pr : kBothPairs) CHECK(is_rem_map(f, pr, RmtVariant::strong));
    }
  }
}

TEST_CASE("restriction to Rmt") {
  std::size_t rem = 0, rejected = 0;
  for (const auto& l : generate_lattices(3)) {
    for (const auto& b : generate_bilocales(l)) {
      for (const BilocalicMap& f : enumerate_bilocalic_maps(b, b)) {
        for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
          if (is_rem_map(f, IndexPair::one_two(), v)) {
            ++rem;
            const LocalicMap r = restrict_to_rmt(f, IndexPair::one_two(), v);
            CHECK(r.source().size() == rmt(*b, IndexPair::one_two(), v).size());
          } else {
            ++rejected;
            CHECK_THROWS_AS(restrict_to_rmt(f, IndexPair::one_two(), v), Error);
          }
        }
      }
    }
  }
  CHECK(rem > 0);
  CHECK(rejected > 0);
}

TEST_CASE("preservation report for the identity") {
  for (const auto& b : {pt(), c3(), b4()}) {
    const SublocaleSpace space(b->total());
    for (IndexPair pr : kBothPairs) {
      for (bool weak : {false, true}) {
        const PreservationReport r = check_preservation(BilocalicMap::identity(b), pr, weak, space, space);
        CHECK(r.ok());
        CHECK(r.image_preserves_remote);
        CHECK(r.preimage_preserves_nd);
        CHECK(r.adjoint_preserves_dense);
      }
    }
  }
}

TEST_CASE("preservation clauses for the Booleanization inclusion on C3") {
  auto c3l = chain3();
  auto sym = std::make_shared<const Bilocale>(Bilocale::symmetric(c3l));
  const LocalicMap j = inclusion_map(c3l, booleanization(*c3l).members(), "j");
  auto sub = std::make_shared<const Bilocale>(Bilocale::symmetric(j.source_ptr()));
  const BilocalicMap f = BilocalicMap::validate("j", sub, sym, j.table());
  const SublocaleSpace ss(f.source().total()), ts(f.target().total());
  const PreservationReport r = check_preservation(f, IndexPair::one_two(), false, ss, ts);
  CHECK(r.ok());
  // the adjoint sends the dense element m to 1, so clause (3) holds
  CHECK(r.adjoint_preserves_dense);
  CHECK(r.preimage_preserves_nd);
}

TEST_CASE("category laws on single objects") {
  for (const auto& b : {pt(), c3(), b4()}) {
    for (IndexPair pr : kBothPairs) {
      for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
        CHECK(verify_category_laws(single(b), Law::functor, pr, v).ok());
        CHECK(verify_category_laws(single(b), Law::naturality, pr, v).ok());
      }
    }
  }
  auto p = pt();
  const LawReport nat = verify_category_laws(single(p), Law::naturality, IndexPair::one_two(), RmtVariant::weak);
  CHECK(nat.ok());
  CHECK(nat.checked > 0);
}

TEST_CASE("coreflection from B4") {
  auto bb = b4();
  for (IndexPair pr : kBothPairs) {
    Diagram d{{bb}, {}};
    for (const BilocalicMap& f : enumerate_bilocalic_maps(bb, bb)) {
      if (is_rem_map(f, pr, RmtVariant::weak)) d.arrows.push_back(DiagramArrow{0, 0, f});
    }
    REQUIRE_FALSE(d.arrows.empty());
    const LawReport r = verify_category_laws(d, Law::coreflection, pr, RmtVariant::weak);
    CHECK(r.ok());
    CHECK(r.checked >= d.arrows.size());
  }
}

TEST_CASE("law hypotheses are enforced") {
  auto p = pt();
  try {
    verify_category_laws(single(p), Law::comonad, IndexPair::one_two(), RmtVariant::weak);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolated);
  }
  CHECK_THROWS_AS(verify_category_laws(single(p), Law::coreflection, IndexPair::one_two(), RmtVariant::weak), Error);
}

}
