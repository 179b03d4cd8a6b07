#include "biloc/properties.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "biloc/constructions.hpp"
#include "biloc/generators.hpp"

namespace biloc {

std::string to_string(Scope s) {
  switch (s) {
    case Scope::lattice: return "lattice";
    case Scope::bilocale: return "bilocale";
    case Scope::bispace: return "bispace";
    case Scope::map: return "map";
    case Scope::diagram: return "diagram";
  }
  return "?";
}

Structure Structure::from_lattice(std::shared_ptr<const FiniteLattice> lattice) {
  Structure s;
  s.id = lattice->name();
  s.bilocale = std::make_shared<const Bilocale>(Bilocale::symmetric(std::move(lattice)));
  return s;
}

Structure Structure::from_bilocale(std::shared_ptr<const Bilocale> bilocale) {
  Structure s;
  s.id = bilocale->name();
  s.bilocale = std::move(bilocale);
  return s;
}

Structure Structure::from_bispace(std::shared_ptr<const Bispace> bispace) {
  Structure s;
  s.id = bispace->name();
  s.bilocale = to_bilocale(*bispace);
  s.bispace = std::move(bispace);
  return s;
}

// ---------------------------------------------------------------------------
// Context caches

struct CheckContext::Cache {
  std::unique_ptr<SublocaleSpace> space;
  std::vector<std::pair<const FiniteLattice*, std::unique_ptr<SublocaleSpace>>> other_spaces;
  std::optional<std::vector<Sublocale>> subs;
  std::optional<BilocaleClass> cls;
  std::optional<std::vector<BilocalicMap>> endomaps;
  std::optional<std::vector<BilocalicMap>> maps;
  std::optional<ConservativityReport> conservativity;
  std::optional<std::vector<bool>> nd[2];
  std::optional<std::vector<bool>> clopen_nd[2];
  std::deque<std::tuple<const BilocalicMap*, int, bool, PreservationReport>> preservation;
};

CheckContext::CheckContext(const Structure& s, const SuiteLimits& limits)
    : structure_(&s), limits_(limits), cache_(std::make_unique<Cache>()) {}

CheckContext::~CheckContext() = default;

const SublocaleSpace& CheckContext::space() {
  if (!cache_->space) cache_->space = std::make_unique<SublocaleSpace>(lattice());
  return *cache_->space;
}

const SublocaleSpace& CheckContext::space_of(const FiniteLattice& lattice) {
  if (&lattice == &this->lattice()) return space();
  for (auto& [lat, sp] : cache_->other_spaces) {
    if (lat == &lattice) return *sp;
  }
  cache_->other_spaces.emplace_back(&lattice, std::make_unique<SublocaleSpace>(lattice));
  return *cache_->other_spaces.back().second;
}

const std::vector<Sublocale>& CheckContext::sublocales() {
  if (!cache_->subs) {
    std::vector<Sublocale> out;
    const SublocaleSpace& sp = space();
    for (std::size_t k = 0; k < sp.size(); ++k) out.push_back(sp.at(k));
    cache_->subs = std::move(out);
  }
  return *cache_->subs;
}

const BilocaleClass& CheckContext::classification() {
  if (!cache_->cls) cache_->cls = classify_bilocale(bilocale());
  return *cache_->cls;
}

const std::vector<BilocalicMap>& CheckContext::endomaps() {
  if (!cache_->endomaps) {
    std::vector<BilocalicMap> all = enumerate_bilocalic_maps(bilocale_ptr(), bilocale_ptr());
    if (all.size() > limits_.endomaps) all.erase(all.begin() + static_cast<std::ptrdiff_t>(limits_.endomaps), all.end());
    cache_->endomaps = std::move(all);
  }
  return *cache_->endomaps;
}

const std::vector<BilocalicMap>& CheckContext::maps() {
  if (!cache_->maps) {
    std::vector<BilocalicMap> out = endomaps();
    for (const BilocalicMap& m : structure_->maps) out.push_back(m);
    if (classification().symmetric) {
      const ElementSet boole = booleanization(lattice()).members();
      const LocalicMap incl = inclusion_map(bilocale().total_ptr(), boole, "B(" + lattice().name() + ")");
      auto src = std::make_shared<const Bilocale>(Bilocale::symmetric(incl.source_ptr()));
      out.push_back(BilocalicMap::validate(incl.name(), src, bilocale_ptr(), incl.table()));
    }
    cache_->maps = std::move(out);
  }
  return *cache_->maps;
}

const ConservativityReport& CheckContext::conservativity() {
  if (!cache_->conservativity) cache_->conservativity = conservativity_check(*structure_->bispace);
  return *cache_->conservativity;
}

const std::vector<bool>& CheckContext::nowhere_dense(IndexPair pair) {
  auto& slot = cache_->nd[to_int(pair.i) - 1];
  if (!slot) {
    std::vector<bool> v;
    for (const Sublocale& s : sublocales()) v.push_back(is_ij_nowhere_dense(bilocale(), s, pair));
    slot = std::move(v);
  }
  return *slot;
}

const std::vector<bool>& CheckContext::clopen_nowhere_dense(IndexPair pair) {
  auto& slot = cache_->clopen_nd[to_int(pair.i) - 1];
  if (!slot) {
    std::vector<bool> v;
    const auto& nd = nowhere_dense(pair);
    const auto& subs = sublocales();
    for (std::size_t k = 0; k < subs.size(); ++k) {
      v.push_back(nd[k] && is_clopen_ij_nowhere_dense(bilocale(), subs[k], pair));
    }
    slot = std::move(v);
  }
  return *slot;
}

const PreservationReport& CheckContext::preservation(const BilocalicMap& f, IndexPair pair, bool weak) {
  for (const auto& [map, i, w, report] : cache_->preservation) {
    if (map == &f && i == to_int(pair.i) && w == weak) return report;
  }
  PreservationReport r =
      check_preservation(f, pair, weak, space_of(f.source().total()), space_of(f.target().total()));
  cache_->preservation.emplace_back(&f, to_int(pair.i), weak, std::move(r));
  return std::get<3>(cache_->preservation.back());
}

namespace {

// ---------------------------------------------------------------------------
// Witness helpers

std::string set_str(const FiniteLattice& l, ElementSet s) { return format_set(l, s, ","); }
std::string sub_str(const Sublocale& s) { return set_str(s.parent(), s.members()); }

std::string compact(std::string s) {
  for (char& ch : s) {
    if (ch == ' ' || ch == '\t' || ch == '\n') ch = '_';
  }
  return s;
}

using Witness = std::optional<std::string>;

Outcome over_pairs(const std::function<Witness(IndexPair)>& probe) {
  for (IndexPair p : kBothPairs) {
    if (Witness w = probe(p)) return Outcome::fail(p.str() + ":" + *w);
  }
  return Outcome::pass();
}

// Both pairs and both readings of remoteness (plain first).
Outcome over_pairs_and_weak(const std::function<Witness(IndexPair, bool)>& probe) {
  for (bool weak : {false, true}) {
    for (IndexPair p : kBothPairs) {
      if (Witness w = probe(p, weak)) return Outcome::fail(std::string(weak ? "weak" : "plain") + p.str() + ":" + *w);
    }
  }
  return Outcome::pass();
}

Outcome over_pairs_and_variants(const std::function<Witness(IndexPair, RmtVariant)>& probe) {
  for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
    for (IndexPair p : kBothPairs) {
      if (Witness w = probe(p, v)) return Outcome::fail(to_string(v) + p.str() + ":" + *w);
    }
  }
  return Outcome::pass();
}

std::string bits_str(std::initializer_list<bool> bits) {
  std::string out;
  for (bool b : bits) out += b ? '1' : '0';
  return out;
}

bool all_equal(std::initializer_list<bool> bits) {
  return std::all_of(bits.begin(), bits.end(), [&](bool b) { return b == *bits.begin(); });
}

Sublocale supp(CheckContext& c, const Sublocale& s) {
  const SublocaleSpace& sp = c.space();
  return sp.at(sp.supplement(sp.index_of(s.members())));
}

// ---------------------------------------------------------------------------
// Lattice scope

Outcome lattice_frame(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  if (!check_frame(l) || !l.is_frame()) return Outcome::fail("not-distributive");
  return Outcome::pass();
}

Outcome lattice_heyting(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  for (Element a : l.all()) {
    for (Element b : l.all()) {
      const Element h = l.heyting(a, b);
      for (Element x : l.all()) {
        if (l.leq(l.meet(x, a), b) != l.leq(x, h)) {
          return Outcome::fail("a=" + l.label(a) + ",b=" + l.label(b) + ",c=" + l.label(x));
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome sublocale_oracle(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  if (l.size() > kBruteEnumerationLimit) return Outcome::skip("too-large");
  const auto fast = enumerate_sublocales(l, EnumerationMode::generated);
  const auto slow = enumerate_sublocales(l, EnumerationMode::brute);
  std::vector<ElementSet> a, b;
  for (const auto& s : fast) a.push_back(s.members());
  for (const auto& s : slow) b.push_back(s.members());
  if (a != b) return Outcome::fail("generated=" + std::to_string(a.size()) + ",brute=" + std::to_string(b.size()));
  for (const auto& s : slow) {
    if (!is_sublocale(l, s.members())) return Outcome::fail("brute-member:" + sub_str(s));
  }
  return Outcome::pass();
}

Outcome sublocale_closed_open(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  const SublocaleSpace& sp = c.space();
  for (Element a : l.all()) {
    const std::size_t cl = sp.closed(a), op = sp.open(a);
    if (sp.supplement(cl) != op || sp.supplement(op) != cl || sp.meet(cl, op) != sp.void_index() ||
        sp.join(cl, op) != sp.whole_index()) {
      return Outcome::fail("a=" + l.label(a));
    }
  }
  return Outcome::pass();
}

Outcome sublocale_booleanization(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  const Sublocale boole = booleanization(l);
  if (boole != b_of(l, l.bottom())) return Outcome::fail("B(L)!=b(0)");
  if (!boole.contains(l.bottom())) return Outcome::fail("B(L)-not-dense");
  for (const Sublocale& s : c.sublocales()) {
    if (s.contains(l.bottom()) && !boole.subset_of(s)) return Outcome::fail("dense-below-B(L):" + sub_str(s));
    if (is_remote(s) && !s.subset_of(boole)) return Outcome::fail("remote-outside-B(L):" + sub_str(s));
    if (is_nowhere_dense(s) != meet_sublocales(s, boole).is_void()) return Outcome::fail("nd:" + sub_str(s));
  }
  if (!is_remote(boole)) return Outcome::fail("B(L)-not-remote");
  return Outcome::pass();
}

Outcome sublocale_nu(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  for (const Sublocale& s : c.sublocales()) {
    for (Element a : l.all()) {
      const Element v = nu(s, a);
      if (!s.contains(v) || !l.leq(a, v)) return Outcome::fail(sub_str(s) + ",a=" + l.label(a));
      for (Element m : s.members()) {
        if (l.leq(a, m) && !l.leq(v, m)) return Outcome::fail(sub_str(s) + ",a=" + l.label(a));
      }
      if (s.subset_of(open_sublocale(l, a)) != (v == l.top())) {
        return Outcome::fail("o-test:" + sub_str(s) + ",a=" + l.label(a));
      }
    }
  }
  return Outcome::pass();
}

// ---------------------------------------------------------------------------
// Bilocale scope: pseudocomplement and closure/interior

Outcome prop_pseudo(CheckContext& c, int clause) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    const ElementSet li = b.part(p.i), lj = b.part(p.j);
    auto bl = [&](Element x) { return bullet(b, x, p.i); };
    auto bl_j = [&](Element x) { return bullet(b, x, p.j); };
    switch (clause) {
      case 1:
        if (bl(l.bottom()) != l.top()) return "0*=" + l.label(bl(l.bottom()));
        break;
      case 2:
        for (Element a : li) {
          if (l.meet(a, bl(a)) != l.bottom()) return "a=" + l.label(a);
        }
        break;
      case 3:
        for (Element a : lj) {
          for (Element x : li) {
            if ((l.meet(a, x) == l.bottom()) != l.leq(a, bl(x))) return "a=" + l.label(a) + ",b=" + l.label(x);
          }
        }
        break;
      case 4:
        for (Element a : li) {
          for (Element x : li) {
            if (l.leq(a, x) && !l.leq(bl(x), bl(a))) return "a=" + l.label(a) + ",b=" + l.label(x);
          }
        }
        break;
      case 5:
        for (Element a : li) {
          if (!l.leq(a, bl_j(bl(a)))) return "a=" + l.label(a);
        }
        break;
      case 6:
        for (Element a : li) {
          if (bl(a) != bl(bl_j(bl(a)))) return "a=" + l.label(a);
        }
        break;
      case 7:
        for (Element a : li) {
          for (Element x : li) {
            if (bl(l.join(a, x)) != l.meet(bl(a), bl(x))) return "a=" + l.label(a) + ",b=" + l.label(x);
          }
        }
        break;
    }
    return std::nullopt;
  });
}

Outcome prop_int(CheckContext& c, int clause) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  const auto& subs = c.sublocales();
  return over_pairs([&](IndexPair p) -> Witness {
    const Part i = p.i, j = p.j;
    const ElementSet li = b.part(i);
    auto cl = [&](const Sublocale& s, Part k) { return cl_index(b, s, k); };
    auto in = [&](const Sublocale& s, Part k) { return int_index(b, s, k); };
    auto c_ = [&](Element a) { return closed_sublocale(l, a); };
    auto o_ = [&](Element a) { return open_sublocale(l, a); };
    switch (clause) {
      case 1:
        for (const Sublocale& s : subs) {
          if (!s.subset_of(closure(s)) || !closure(s).subset_of(cl(s, i))) return "S=" + sub_str(s);
        }
        break;
      case 2:
      case 7:
        for (const Sublocale& s : subs) {
          for (const Sublocale& t : subs) {
            if (!t.subset_of(s)) continue;
            const bool ok = clause == 2 ? cl(t, i).subset_of(cl(s, i)) : in(t, i).subset_of(in(s, i));
            if (!ok) return "S=" + sub_str(s) + ",T=" + sub_str(t);
          }
        }
        break;
      case 3:
        for (const Sublocale& s : subs) {
          if (cl(cl(s, i), i) != cl(s, i)) return "S=" + sub_str(s);
        }
        break;
      case 4:
        for (Element a : li) {
          if (cl(c_(a), i) != c_(a)) return "a=" + l.label(a);
        }
        break;
      case 5:
        for (const Sublocale& s : subs) {
          std::vector<Sublocale> opens;
          for (Element a : li) {
            if (o_(a).subset_of(s)) opens.push_back(o_(a));
          }
          const Sublocale expect = opens.empty() ? void_sublocale(l) : join_sublocales(opens);
          if (in(s, i) != expect) return "S=" + sub_str(s);
        }
        break;
      case 6:
        for (const Sublocale& s : subs) {
          if (!in(s, i).subset_of(interior(s)) || !interior(s).subset_of(s)) return "S=" + sub_str(s);
        }
        break;
      case 8:
        for (const Sublocale& s : subs) {
          if (in(in(s, i), i) != in(s, i)) return "S=" + sub_str(s);
        }
        break;
      case 9:
        for (Element a : li) {
          if (in(o_(a), i) != o_(a)) return "a=" + l.label(a);
        }
        break;
      case 10:
        for (Element a : li) {
          if (c_(bullet(b, a, i)) != cl(o_(a), j)) return "a=" + l.label(a);
        }
        break;
      case 11:
        for (Element a : li) {
          if (o_(bullet(b, a, i)) != in(c_(a), j)) return "a=" + l.label(a);
        }
        break;
      case 12:
        for (Element a : li) {
          if (cl(o_(a), j) != supp(c, in(c_(a), j))) return "a=" + l.label(a);
        }
        break;
      case 13:
        for (Element a : li) {
          if (in(c_(a), j) != supp(c, cl(o_(a), j))) return "a=" + l.label(a);
        }
        break;
      case 14:
        for (Element a : l.all()) {
          if (supp(c, in(o_(a), i)) != cl(c_(a), i)) return "a=" + l.label(a);
        }
        break;
      case 15:
        for (Element a : l.all()) {
          if (supp(c, cl(c_(a), i)) != in(o_(a), i)) return "a=" + l.label(a);
        }
        break;
    }
    return std::nullopt;
  });
}

Outcome bilocale_cl_oracle(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    for (const Sublocale& s : c.sublocales()) {
      ElementSet inter = l.all();
      for (Element a : b.part(p.i)) {
        const Sublocale ca = closed_sublocale(l, a);
        if (s.subset_of(ca)) inter = inter & ca.members();
      }
      if (cl_index(b, s, p.i).members() != inter) return "S=" + sub_str(s);
    }
    return std::nullopt;
  });
}

Outcome bilocale_classify(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  const BilocaleClass& k = c.classification();
  bool balanced = true;
  for (Part p : {Part::first, Part::second}) {
    for (Element a : b.part(p)) balanced = balanced && b.in_part(l.pseudocomplement(a), other(p));
  }
  if (balanced != k.balanced) return Outcome::fail("balanced-flag");
  if (k.symmetric != (b.part(Part::first) == l.all() && b.part(Part::second) == l.all())) {
    return Outcome::fail("symmetric-flag");
  }
  bool boolean = true;
  for (Part p : {Part::first, Part::second}) {
    for (Element a : b.part(p)) {
      bool found = false;
      for (Element x : b.part(other(p))) found = found || (l.meet(a, x) == l.bottom() && l.join(a, x) == l.top());
      boolean = boolean && found;
    }
  }
  if (boolean != k.boolean) return Outcome::fail("boolean-flag");
  if (k.balanced) {
    for (Part p : {Part::first, Part::second}) {
      for (Element a : b.part(p)) {
        if (l.pseudocomplement(a) != bullet(b, a, p)) return Outcome::fail("a*!=a.:" + l.label(a));
      }
    }
  }
  return Outcome::pass();
}

Outcome prop_bullet(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    for (Element x : b.part(p.j)) {
      const bool c1 = bullet(b, x, p.j) == l.bottom();
      const bool c2 = is_index_dense_sublocale(b, open_sublocale(l, x), p.i);
      const bool c3 = is_index_dense_element_by_meets(b, x, p.j);
      if (!all_equal({c1, c2, c3})) return "x=" + l.label(x) + ",clauses=" + bits_str({c1, c2, c3});
    }
    return std::nullopt;
  });
}

Outcome lemma_ijndsubset(CheckContext& c) {
  const auto& subs = c.sublocales();
  return over_pairs([&](IndexPair p) -> Witness {
    const auto& nd = c.nowhere_dense(p);
    for (std::size_t s = 0; s < subs.size(); ++s) {
      if (!nd[s]) continue;
      for (std::size_t t = 0; t < subs.size(); ++t) {
        if (subs[t].subset_of(subs[s]) && !nd[t]) return "S=" + sub_str(subs[s]) + ",T=" + sub_str(subs[t]);
      }
    }
    return std::nullopt;
  });
}

Outcome thm_ijnd(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    for (const Sublocale& s : c.sublocales()) {
      const Sublocale cls = cl_index(b, s, p.i);
      const Element g = cl_generator(b, s, p.i);
      const bool c1 = is_ij_nowhere_dense(b, s, p, NdMode::definition);
      const bool c2 = is_index_dense_sublocale(b, supp(c, cls), p.j);
      const bool c3 = bullet(b, g, p.i) == l.bottom();
      const bool c4 = is_index_dense_element_by_meets(b, g, p.i);
      const bool c5 = is_ij_nowhere_dense(b, cls, p, NdMode::definition);
      const bool c6 = is_ij_nowhere_dense(b, closure(s), p, NdMode::definition);
      const bool m1 = is_ij_nowhere_dense(b, s, p, NdMode::closure);
      const bool m2 = is_ij_nowhere_dense(b, s, p, NdMode::element);
      if (!all_equal({c1, c2, c3, c4, c5, c6, m1, m2})) {
        return "S=" + sub_str(s) + ",clauses=" + bits_str({c1, c2, c3, c4, c5, c6});
      }
    }
    return std::nullopt;
  });
}

Outcome cor_nd_elements(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    for (Element a : b.part(p.i)) {
      const Sublocale ca = closed_sublocale(l, a);
      const bool dense = is_index_dense_element(b, a, p.i);
      if (dense != is_ij_nowhere_dense(b, ca, p)) return "a=" + l.label(a);
      if ((dense && l.is_complemented(a)) != is_clopen_ij_nowhere_dense(b, ca, p)) return "clopen:a=" + l.label(a);
    }
    return std::nullopt;
  });
}

Outcome prop_ndbilocaleclopen(CheckContext& c, ClopenReading reading) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    for (const Sublocale& s : c.sublocales()) {
      const Sublocale cls = cl_index(b, s, p.i);
      const Sublocale rest = supp(c, cls);
      const Element g = cl_generator(b, s, p.i);
      const bool k[6] = {
          is_clopen_ij_nowhere_dense(b, s, p, reading),
          is_clopen_sublocale(rest) && is_index_dense_sublocale(b, rest, p.j),
          bullet(b, g, p.i) == l.bottom() && l.is_complemented(g),
          is_index_dense_element_by_meets(b, g, p.i) && l.is_complemented(g),
          is_clopen_ij_nowhere_dense(b, cls, p, reading),
          is_clopen_ij_nowhere_dense(b, closure(s), p, reading),
      };
      if (!all_equal({k[0], k[1], k[2], k[3], k[4], k[5]})) return "S=" + sub_str(s) + ",clauses=" + bits_str({k[0], k[1], k[2], k[3], k[4], k[5]});
    }
    return std::nullopt;
  });
}

Outcome prop_smallest_dense(CheckContext& c, bool forward, bool converse) {
  const Bilocale& b = c.bilocale();
  const Sublocale boole = booleanization(c.lattice());
  return over_pairs([&](IndexPair p) -> Witness {
    const auto& nd = c.nowhere_dense(p);
    const auto& subs = c.sublocales();
    for (std::size_t k = 0; k < subs.size(); ++k) {
      const bool misses = meet_sublocales(cl_index(b, subs[k], p.i), boole).is_void();
      if (forward && misses && !nd[k]) return "S=" + sub_str(subs[k]);
      if (converse && nd[k] && !misses) return "S=" + sub_str(subs[k]);
    }
    return std::nullopt;
  });
}

Outcome require_balanced(CheckContext& c, const std::function<Outcome()>& body) {
  if (!c.classification().balanced) return Outcome::skip("not-balanced");
  return body();
}

Outcome require_symmetric(CheckContext& c, const std::function<Outcome()>& body) {
  if (!c.classification().symmetric) return Outcome::skip("not-symmetric");
  return body();
}

Outcome cor_ijndbalanced(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  return over_pairs([&](IndexPair p) -> Witness {
    const auto& nd = c.nowhere_dense(p);
    const auto& subs = c.sublocales();
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (nd[k] != is_nowhere_dense(cl_index(b, subs[k], p.i))) return "N=" + sub_str(subs[k]);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Bilocale scope: remoteness

bool remote(CheckContext& c, const Sublocale& s, IndexPair p, bool weak,
            RemoteMode mode = RemoteMode::characterization) {
  return is_ij_remote(c.bilocale(), s, p, weak, mode, c.space());
}

Outcome remote_modes_agree(CheckContext& c) {
  return over_pairs_and_weak([&](IndexPair p, bool weak) -> Witness {
    for (const Sublocale& s : c.sublocales()) {
      const bool d = remote(c, s, p, weak, RemoteMode::definition);
      const bool ch = remote(c, s, p, weak, RemoteMode::characterization);
      const bool ex = remote(c, s, p, weak, RemoteMode::exhaustive);
      if (!all_equal({d, ch, ex})) return "S=" + sub_str(s) + ",modes=" + bits_str({d, ch, ex});
    }
    return std::nullopt;
  });
}

Outcome example_exabl_1(CheckContext& c) {
  const Sublocale o = void_sublocale(c.lattice());
  return over_pairs_and_weak([&](IndexPair p, bool weak) -> Witness {
    if (!remote(c, o, p, weak, RemoteMode::exhaustive)) return std::string("O");
    return std::nullopt;
  });
}

Outcome example_exabl_2(CheckContext& c) {
  const auto& subs = c.sublocales();
  return over_pairs_and_weak([&](IndexPair p, bool weak) -> Witness {
    for (const Sublocale& s : subs) {
      if (!remote(c, s, p, weak)) continue;
      for (const Sublocale& t : subs) {
        if (t.subset_of(s) && !remote(c, t, p, weak)) return "S=" + sub_str(s) + ",T=" + sub_str(t);
      }
    }
    return std::nullopt;
  });
}

Outcome example_exabl_3a(CheckContext& c) {
  const Sublocale boole = booleanization(c.lattice());
  return over_pairs([&](IndexPair p) -> Witness {
    for (const Sublocale& s : c.sublocales()) {
      if (remote(c, s, p, false) != is_remote(s)) return "S=" + sub_str(s);
    }
    if (!remote(c, boole, p, false)) return std::string("B(L)");
    return std::nullopt;
  });
}

Outcome example_exabl_3b(CheckContext& c) {
  return over_pairs([&](IndexPair p) -> Witness {
    const auto& cnd = c.clopen_nowhere_dense(p);
    const auto& subs = c.sublocales();
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (cnd[k] && !subs[k].is_void()) return "clopen-nd=" + sub_str(subs[k]);
      if (!remote(c, subs[k], p, true, RemoteMode::exhaustive)) return "S=" + sub_str(subs[k]);
    }
    return std::nullopt;
  });
}

Outcome example_exabl_4(CheckContext& c) {
  const bool nonboolean_symmetric = c.classification().symmetric && !c.classification().boolean;
  return over_pairs([&](IndexPair p) -> Witness {
    bool separated = false;
    for (const Sublocale& s : c.sublocales()) {
      const bool plain = remote(c, s, p, false), weak = remote(c, s, p, true);
      if (plain && !weak) return "S=" + sub_str(s);
      separated = separated || (weak && !plain);
    }
    if (nonboolean_symmetric && !separated) return std::string("no-weak-only-sublocale");
    return std::nullopt;
  });
}

Outcome example_exabl_5(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  std::vector<ElementSet> expected;
  for (Element x : l.all()) expected.push_back(b_of(l, l.pseudocomplement(x)).members());
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  return over_pairs([&](IndexPair p) -> Witness {
    std::vector<ElementSet> found;
    for (const Sublocale& s : c.sublocales()) {
      if (remote(c, s, p, false, RemoteMode::exhaustive)) found.push_back(s.members());
    }
    std::sort(found.begin(), found.end());
    if (found != expected) {
      for (ElementSet m : found) {
        if (!std::binary_search(expected.begin(), expected.end(), m)) return "remote-not-b(x*)=" + set_str(l, m);
      }
      for (ElementSet m : expected) {
        if (!std::binary_search(found.begin(), found.end(), m)) return "b(x*)-not-remote=" + set_str(l, m);
      }
    }
    return std::nullopt;
  });
}

Outcome example_exabl_6(CheckContext& c) {
  return over_pairs([&](IndexPair p) -> Witness {
    for (const Sublocale& s : c.sublocales()) {
      if (is_remote(s) && !remote(c, s, p, false)) return "S=" + sub_str(s);
    }
    return std::nullopt;
  });
}

// Clauses (1)-(3) quantify over the nowhere dense sublocales directly;
// `reading` only matters for the weak form.
Outcome thm_remote_subbilocale(CheckContext& c, bool weak, ClopenReading reading = ClopenReading::closure) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  const auto& subs = c.sublocales();
  return over_pairs([&](IndexPair p) -> Witness {
    std::vector<bool> nd = c.nowhere_dense(p);
    if (weak) {
      for (std::size_t k = 0; k < subs.size(); ++k) nd[k] = nd[k] && is_clopen_ij_nowhere_dense(b, subs[k], p, reading);
    }
    const ElementSet dense = dense_part_elements(b, p, weak);
    for (const Sublocale& s : subs) {
      bool r1 = true, r2 = true, r3 = true;
      for (std::size_t k = 0; k < subs.size(); ++k) {
        if (!nd[k]) continue;
        r1 = r1 && meet_sublocales(s, subs[k]).is_void();
        r2 = r2 && meet_sublocales(s, cl_index(b, subs[k], p.i)).is_void();
        r3 = r3 && meet_sublocales(s, closure(subs[k])).is_void();
      }
      bool r4 = true, r6 = true;
      for (Element x : dense) {
        r4 = r4 && meet_sublocales(s, closed_sublocale(l, x)).is_void();
        r6 = r6 && nu(s, x) == l.top();
      }
      const bool r5 = remote(c, s, p, weak, RemoteMode::characterization);
      if (!all_equal({r1, r2, r3, r4, r5, r6})) return "S=" + sub_str(s) + ",clauses=" + bits_str({r1, r2, r3, r4, r5, r6});
    }
    return std::nullopt;
  });
}

Outcome prop_bidense(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  return over_pairs_and_weak([&](IndexPair p, bool weak) -> Witness {
    const ElementSet dense = dense_part_elements(c.bilocale(), p, weak);
    for (Element a : l.all()) {
      bool tops = true;
      for (Element x : dense) tops = tops && l.join(a, x) == l.top();
      if (remote(c, closed_sublocale(l, a), p, weak, RemoteMode::exhaustive) != tops) return "a=" + l.label(a);
    }
    return std::nullopt;
  });
}

Outcome prop_largestijremote(CheckContext& c) {
  const auto& subs = c.sublocales();
  return over_pairs_and_weak([&](IndexPair p, bool weak) -> Witness {
    const Sublocale big = largest_ij_remote(c.bilocale(), p, weak, c.space());
    if (!remote(c, big, p, weak, RemoteMode::exhaustive)) return "largest=" + sub_str(big);
    for (const Sublocale& s : subs) {
      if (!remote(c, s, p, weak)) continue;
      if (!s.subset_of(big)) return "outside-largest=" + sub_str(s);
      for (const Sublocale& t : subs) {
        if (remote(c, t, p, weak) && !remote(c, join_sublocales(s, t), p, weak)) {
          return "join:S=" + sub_str(s) + ",T=" + sub_str(t);
        }
      }
    }
    return std::nullopt;
  });
}

Outcome obs_coframe(CheckContext& c) {
  const SublocaleSpace& sp = c.space();
  const auto& subs = c.sublocales();
  return over_pairs_and_weak([&](IndexPair p, bool weak) -> Witness {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (remote(c, subs[k], p, weak)) r.push_back(k);
    }
    auto in_r = [&](std::size_t k) { return std::find(r.begin(), r.end(), k) != r.end(); };
    for (std::size_t s : r) {
      for (std::size_t t : r) {
        if (!in_r(sp.meet(s, t)) || !in_r(sp.join(s, t))) return "closure:" + sub_str(subs[s]) + "," + sub_str(subs[t]);
        for (std::size_t u : r) {
          if (sp.join(s, sp.meet(t, u)) != sp.meet(sp.join(s, t), sp.join(s, u))) {
            return "triple:" + sub_str(subs[s]) + "," + sub_str(subs[t]) + "," + sub_str(subs[u]);
          }
        }
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Bilocale scope: Rmt

Outcome prop_remclosed(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  return over_pairs_and_variants([&](IndexPair p, RmtVariant v) -> Witness {
    const Sublocale r = rmt(c.bilocale(), p, v);
    if (auto check = is_sublocale(l, r.members()); !check) return "not-sublocale:" + compact(check.witness);
    if (r != closure(r)) return "not-closed:" + sub_str(r);
    return std::nullopt;
  });
}

Outcome example_booleanbi_5(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  return over_pairs_and_variants([&](IndexPair p, RmtVariant v) -> Witness {
    const Sublocale r = rmt(c.bilocale(), p, v);
    if (!r.contains(l.top())) return std::string("1-missing");
    for (Element a : r.members()) {
      for (Element x : l.up_set(a)) {
        if (!r.contains(x)) return "a=" + l.label(a) + ",x=" + l.label(x);
      }
    }
    return std::nullopt;
  });
}

Outcome example_booleanbi_2(CheckContext& c) {
  if (!c.classification().boolean) return Outcome::skip("not-boolean");
  return over_pairs_and_variants([&](IndexPair p, RmtVariant v) -> Witness {
    const Sublocale r = rmt(c.bilocale(), p, v);
    if (!r.is_whole()) return "Rmt=" + sub_str(r);
    return std::nullopt;
  });
}

Outcome example_booleanbi_4(CheckContext& c, RmtVariant v) {
  return require_symmetric(c, [&] {
    const bool boolean = c.classification().boolean;
    return over_pairs([&](IndexPair p) -> Witness {
      const bool whole = rmt(c.bilocale(), p, v).is_whole();
      if (whole != boolean) return std::string(whole ? "Rmt=L,non-boolean" : "Rmt!=L,boolean");
      return std::nullopt;
    });
  });
}

Outcome prop_remoteremb(CheckContext& c, RmtVariant v) {
  const Bilocale& b = c.bilocale();
  bool applicable = false;
  for (IndexPair p : kBothPairs) applicable = applicable || b.part(p.i) == c.lattice().all();
  if (!applicable) return Outcome::skip("no-whole-part");
  return over_pairs([&](IndexPair p) -> Witness {
    if (b.part(p.i) != c.lattice().all()) return std::nullopt;
    const Sublocale r = rmt(b, p, v);
    if (!is_remote(r)) return "Rmt=" + sub_str(r);
    return std::nullopt;
  });
}

Outcome prop_ijremote(CheckContext& c, RmtVariant v, bool weak_remote) {
  return over_pairs([&](IndexPair p) -> Witness {
    const Sublocale r = rmt(c.bilocale(), p, v);
    if (!remote(c, r, p, weak_remote, RemoteMode::exhaustive)) return "Rmt=" + sub_str(r);
    return std::nullopt;
  });
}

Outcome prop_remequall(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  return over_pairs([&](IndexPair p) -> Witness {
    const Sublocale r = rmt(c.bilocale(), p, RmtVariant::weak);
    const bool c1 = r.is_whole();
    const bool c3 = dense_part_elements(c.bilocale(), p, true) == ElementSet::single(l.top());
    const bool c4 = r.contains(l.bottom());
    if (!all_equal({c1, c3, c4})) return "clauses(1,3,4)=" + bits_str({c1, c3, c4});
    return std::nullopt;
  });
}

Outcome prop_remequall_clause2(CheckContext& c, RmtVariant v) {
  return over_pairs([&](IndexPair p) -> Witness {
    const bool c1 = rmt(c.bilocale(), p, v).is_whole();
    const bool c2 = remote(c, whole_sublocale(c.lattice()), p, false, RemoteMode::exhaustive);
    if (c1 != c2) return "clauses(1,2)=" + bits_str({c1, c2});
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Constructions

Outcome congruence_frame(CheckContext& c) {
  const FiniteLattice& l = c.lattice();
  CongruenceBilocale cb;
  try {
    cb = congruence_bilocale(c.bilocale().total_ptr());
  } catch (const std::logic_error& e) {
    return Outcome::fail(compact(e.what()));
  }
  const FiniteLattice& cl = cb.bilocale->total();
  if (cb.congruences.size() != c.space().size()) return Outcome::fail("count");
  for (const Congruence& k : cb.congruences) {
    if (!is_congruence(k)) return Outcome::fail("not-a-congruence");
  }
  for (Element a : l.all()) {
    const Element na = cb.nabla_index[a], da = cb.delta_index[a];
    if (cl.meet(na, da) != cl.bottom() || cl.join(na, da) != cl.top()) return Outcome::fail("complement:a=" + l.label(a));
    if (!(cb.congruences[na] == nabla(l, a)) || !(cb.congruences[da] == delta(l, a))) {
      return Outcome::fail("tables:a=" + l.label(a));
    }
    for (Element x : l.all()) {
      if (cb.nabla_index[l.meet(a, x)] != cl.meet(na, cb.nabla_index[x]) ||
          cb.nabla_index[l.join(a, x)] != cl.join(na, cb.nabla_index[x])) {
        return Outcome::fail("nabla-hom:a=" + l.label(a) + ",b=" + l.label(x));
      }
    }
  }
  return Outcome::pass();
}

Outcome example_congruence_rmt(CheckContext& c) {
  const CongruenceBilocale cb = congruence_bilocale(c.bilocale().total_ptr());
  for (IndexPair p : kBothPairs) {
    const Sublocale r = rmt(*cb.bilocale, p, RmtVariant::weak);
    if (!r.is_whole()) return Outcome::fail(p.str() + ":Rmt=" + sub_str(r));
  }
  return Outcome::pass();
}

Outcome prop_noetherian(CheckContext& c) {
  const ConstructionReport r = check_construction_theorems(c.bilocale());
  if (!r.ok()) return Outcome::fail(compact(r.violations.front()));
  return Outcome::pass();
}

Outcome ideal_frame(CheckContext& c) {
  const Bilocale& b = c.bilocale();
  const FiniteLattice& l = c.lattice();
  const IdealBilocale ib = ideal_bilocale(b);
  const FiniteLattice& jl = ib.bilocale->total();
  if (jl.size() != l.size()) return Outcome::fail("size");
  std::vector<Element> to(jl.size());
  for (Element k = 0; k < jl.size(); ++k) {
    const ElementSet ideal = ib.ideals[k];
    if (!is_ideal(l, ideal)) return Outcome::fail("not-ideal:" + jl.label(k));
    to[k] = l.join_of(ideal);
    if (ideal != l.down_set(to[k])) return Outcome::fail("not-principal:" + jl.label(k));
  }
  for (Element x = 0; x < jl.size(); ++x) {
    for (Element y = 0; y < jl.size(); ++y) {
      if (jl.leq(x, y) != l.leq(to[x], to[y])) return Outcome::fail("order:" + jl.label(x) + "," + jl.label(y));
    }
  }
  for (Part p : {Part::first, Part::second}) {
    ElementSet image;
    for (Element k : ib.bilocale->part(p)) image.insert(to[k]);
    if (image != b.part(p)) return Outcome::fail("part" + std::to_string(to_int(p)));
  }
  return Outcome::pass();
}

// ---------------------------------------------------------------------------
// Map scope

std::string map_tag(const BilocalicMap& f) { return compact(f.name()); }

Outcome over_maps(CheckContext& c, const std::function<Witness(const BilocalicMap&)>& probe) {
  for (const BilocalicMap& f : c.maps()) {
    if (Witness w = probe(f)) return Outcome::fail(map_tag(f) + ":" + *w);
  }
  return Outcome::pass();
}

Outcome maps_adjunction(CheckContext& c) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    const FiniteLattice& l = f.source().total();
    const FiniteLattice& m = f.target().total();
    for (Element a : l.all()) {
      for (Element y : m.all()) {
        if (l.leq(f.adjoint(y), a) != m.leq(y, f(a))) return "a=" + l.label(a) + ",b=" + m.label(y);
      }
    }
    return std::nullopt;
  });
}

Outcome maps_image(CheckContext& c) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    const SublocaleSpace& sp = c.space_of(f.source().total());
    for (std::size_t k = 0; k < sp.size(); ++k) {
      try {
        const Sublocale img = image_sublocale(f.base(), sp.at(k));
        if (!is_sublocale(f.target().total(), img.members())) return "S=" + sub_str(sp.at(k));
      } catch (const std::logic_error&) {
        return "S=" + sub_str(sp.at(k));
      }
    }
    return std::nullopt;
  });
}

Outcome maps_preimage(CheckContext& c) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    const FiniteLattice& l = f.source().total();
    const FiniteLattice& m = f.target().total();
    const SublocaleSpace& sp = c.space_of(l);
    for (Element x : m.all()) {
      if (preimage_sublocale(f.base(), closed_sublocale(m, x), sp) != closed_sublocale(l, f.adjoint(x))) {
        return "c(" + m.label(x) + ")";
      }
      if (preimage_sublocale(f.base(), open_sublocale(m, x), sp) != open_sublocale(l, f.adjoint(x))) {
        return "o(" + m.label(x) + ")";
      }
    }
    return std::nullopt;
  });
}

const PreservationReport& preservation(CheckContext& c, const BilocalicMap& f, IndexPair p, bool weak) {
  return c.preservation(f, p, weak);
}

std::string clause_bits(IndexPair p, const PreservationReport& r) {
  return p.str() + ":clauses=" + bits_str({r.image_preserves_remote, r.preimage_preserves_nd, r.adjoint_preserves_dense});
}

Outcome prop_ijndpreserve(CheckContext& c, bool weak) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    for (IndexPair p : kBothPairs) {
      const PreservationReport& r = preservation(c, f, p, weak);
      const std::string clauses = clause_bits(p, r);
      if (r.preimage_preserves_nd && !r.adjoint_preserves_dense) return clauses;
      if (!weak && r.adjoint_preserves_dense && !r.preimage_preserves_nd) return clauses;
      if (r.preimage_preserves_nd && !r.image_preserves_remote) return clauses;
      if (r.source_balanced && r.image_preserves_remote != r.adjoint_preserves_dense) return "balanced" + clauses;
    }
    return std::nullopt;
  });
}

Outcome prop_ijndpreserve_weak_32(CheckContext& c) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    for (IndexPair p : kBothPairs) {
      const PreservationReport& r = preservation(c, f, p, true);
      if (r.adjoint_preserves_dense && !r.preimage_preserves_nd) return clause_bits(p, r);
    }
    return std::nullopt;
  });
}

Outcome prop_preimagebi(CheckContext& c, bool weak) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    for (IndexPair p : kBothPairs) {
      const PreservationReport& r = preservation(c, f, p, weak);
      const bool hypothesis = r.map_preserves_dense && (!weak || r.lattice_homomorphism);
      if (hypothesis && !r.preimage_preserves_remote) return p.str();
    }
    return std::nullopt;
  });
}

Outcome prop_restriction(CheckContext& c) {
  return over_maps(c, [&](const BilocalicMap& f) -> Witness {
    const bool weakly_closed = is_weakly_closed(f.base());
    for (IndexPair p : kBothPairs) {
      if (!weakly_closed || !adjoint_preserves_dense(f, p, false)) continue;
      for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
        if (!is_rem_map(f, p, v)) return to_string(v) + p.str() + ":not-Rem";
        restrict_to_rmt(f, p, v);
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Diagram scope

std::vector<DiagramArrow> rem_endo_arrows(CheckContext& c, IndexPair p, RmtVariant v) {
  std::vector<DiagramArrow> arrows;
  for (const BilocalicMap& f : c.endomaps()) {
    if (arrows.size() >= c.limits().diagram_arrows) break;
    if (is_rem_map(f, p, v)) arrows.push_back(DiagramArrow{0, 0, f});
  }
  return arrows;
}

Outcome law_outcome(const std::vector<std::pair<std::string, LawReport>>& reports, const std::string& skip_reason) {
  if (reports.empty()) return Outcome::skip(skip_reason);
  for (const auto& [tag, r] : reports) {
    if (!r.ok()) return Outcome::fail(tag + ":" + compact(r.failures.front()));
  }
  return Outcome::pass();
}

std::string law_tag(IndexPair p, RmtVariant v) { return to_string(v) + p.str(); }

Outcome endo_law(CheckContext& c, Law law) {
  std::vector<std::pair<std::string, LawReport>> reports;
  for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
    for (IndexPair p : kBothPairs) {
      Diagram d{{c.bilocale_ptr()}, rem_endo_arrows(c, p, v)};
      reports.emplace_back(law_tag(p, v), verify_category_laws(d, law, p, v));
    }
  }
  return law_outcome(reports, "");
}

bool rmt_remote(CheckContext& c, IndexPair p, RmtVariant v) { return is_remote(rmt(c.bilocale(), p, v)); }

Outcome thm_comonad(CheckContext& c) {
  if (!c.classification().symmetric) return Outcome::skip("not-symmetric");
  std::vector<std::pair<std::string, LawReport>> reports;
  for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
    for (IndexPair p : kBothPairs) {
      if (!rmt_remote(c, p, v)) continue;
      Diagram d{{c.bilocale_ptr()}, rem_endo_arrows(c, p, v)};
      reports.emplace_back(law_tag(p, v), verify_category_laws(d, Law::comonad, p, v));
    }
  }
  return law_outcome(reports, "Rmt-not-remote");
}

const std::vector<std::shared_ptr<const Bilocale>>& boolean_sources() {
  static const std::vector<std::shared_ptr<const Bilocale>> sources = [] {
    std::vector<std::shared_ptr<const Bilocale>> out;
    for (std::size_t n : {1, 2}) {
      Poset antichain;
      antichain.n = n;
      antichain.below.assign(n, PointSet{});
      auto lat = std::make_shared<const FiniteLattice>(down_set_lattice(antichain, n == 1 ? "C2" : "B4"));
      out.push_back(std::make_shared<const Bilocale>(Bilocale::symmetric(lat)));
    }
    return out;
  }();
  return sources;
}

Outcome prop_reflective(CheckContext& c) {
  if (!c.classification().symmetric) return Outcome::skip("not-symmetric");
  std::vector<std::pair<std::string, LawReport>> reports;
  for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
    for (IndexPair p : kBothPairs) {
      if (!rmt_remote(c, p, v)) continue;
      Diagram d;
      d.objects.push_back(c.bilocale_ptr());
      for (const auto& src : boolean_sources()) {
        d.objects.push_back(src);
        for (const BilocalicMap& f : enumerate_bilocalic_maps(src, c.bilocale_ptr())) {
          if (is_rem_map(f, p, v)) d.arrows.push_back(DiagramArrow{d.objects.size() - 1, 0, f});
        }
      }
      reports.emplace_back(law_tag(p, v), verify_category_laws(d, Law::coreflection, p, v));
    }
  }
  return law_outcome(reports, "Rmt-not-remote");
}

Outcome rb_law(CheckContext& c, Law law) {
  std::vector<std::pair<std::string, LawReport>> reports;
  const FiniteLattice& l = c.lattice();
  for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
    for (IndexPair p : kBothPairs) {
      if (!rmt_remote(c, p, v) || dense_part_elements(c.bilocale(), p, false) != ElementSet::single(l.top())) continue;
      Diagram d{{c.bilocale_ptr()}, rem_endo_arrows(c, p, v)};
      reports.emplace_back(law_tag(p, v), verify_category_laws(d, law, p, v));
    }
  }
  return law_outcome(reports, "not-RB");
}

// ---------------------------------------------------------------------------
// Bispace scope

Outcome conservativity_part(CheckContext& c, std::string_view tag) {
  if (!c.structure().bispace) return Outcome::skip("not-a-bispace");
  const ConservativityReport& r = c.conservativity();
  if (r.skipped) return Outcome::skip("not-sup-TD");
  for (const std::string& v : r.violations) {
    if (v.find(tag) != std::string::npos) return Outcome::fail(compact(v));
  }
  return Outcome::pass();
}

Outcome bispace_join_topology(CheckContext& c) {
  if (!c.structure().bispace) return Outcome::skip("not-a-bispace");
  const Bispace& x = *c.structure().bispace;
  const auto& t1 = x.opens(Family::tau1);
  const auto& t2 = x.opens(Family::tau2);
  // Oracle: unions of intersections u ∩ v with u ∈ τ1, v ∈ τ2.
  std::vector<PointSet> basis;
  for (PointSet u : t1) {
    for (PointSet v : t2) basis.push_back(u & v);
  }
  std::vector<PointSet> oracle;
  const std::size_t nb = basis.size();
  oracle.push_back(PointSet{});
  for (std::size_t k = 0; k < nb; ++k) {
    const std::size_t before = oracle.size();
    for (std::size_t q = 0; q < before; ++q) {
      const PointSet joined = oracle[q] | basis[k];
      if (std::find(oracle.begin(), oracle.end(), joined) == oracle.end()) oracle.push_back(joined);
    }
  }
  std::vector<PointSet> tau = x.opens(Family::tau);
  std::sort(oracle.begin(), oracle.end());
  std::sort(tau.begin(), tau.end());
  if (oracle != tau) return Outcome::fail("tau!=oracle");
  for (const auto* fam : {&t1, &t2}) {
    for (PointSet u : *fam) {
      if (!x.is_open(u, Family::tau)) return Outcome::fail("part-not-in-tau:" + compact(x.format(u)));
    }
  }
  return Outcome::pass();
}

// ---------------------------------------------------------------------------
// Registry

using Eval = std::function<Outcome(CheckContext&)>;

PropertyCheck make(std::string id, Scope scope, std::string description, Eval eval, bool expected_fail = false) {
  return PropertyCheck{std::move(id), scope, expected_fail, std::move(description), std::move(eval), {}};
}

std::vector<PropertyCheck> build_registry() {
  std::vector<PropertyCheck> r;
  const Scope L = Scope::lattice, B = Scope::bilocale, M = Scope::map, D = Scope::diagram, X = Scope::bispace;

  r.push_back(make("lattice_frame", L, "the total part is distributive", lattice_frame));
  r.push_back(make("lattice_heyting", L, "c∧a ≤ b iff c ≤ a→b", lattice_heyting));
  r.push_back(make("sublocale_oracle", L, "generated sublocale enumeration equals brute-force filtering",
                   sublocale_oracle));
  r.push_back(make("sublocale_closed_open", L, "c(a) and o(a) are complements in S(L)", sublocale_closed_open));
  r.push_back(make("sublocale_booleanization", L, "B(L) = b(0) is the least dense and the largest remote sublocale",
                   sublocale_booleanization));
  r.push_back(make("sublocale_nu", L, "nu_S(a) is the least member of S above a; S ⊆ o(a) iff nu_S(a) = 1",
                   sublocale_nu));
  r.push_back(make("congruence_frame", L, "congruence frame: kernels biject with sublocales, ∇ is a lattice "
                                          "embedding and Δ_a complements ∇_a",
                   congruence_frame));
  r.push_back(make("example_congruence_rmt", L, "Rmt C(L) = C(L) for the weak variant, both pairs",
                   example_congruence_rmt));

  r.push_back(make("bilocale_classify", B, "balanced/symmetric/Boolean flags; a* = a• when balanced",
                   bilocale_classify));
  r.push_back(make("bilocale_cl_oracle", B, "cl_i(S) equals the intersection of the closed c(a) ⊇ S, a ∈ L_i",
                   bilocale_cl_oracle));
  const char* pseudo[] = {"0• = 1",
                          "a ∧ a• = 0",
                          "a ∧ b = 0 iff a ≤ b• (a ∈ L_j, b ∈ L_i)",
                          "a ≤ b implies b• ≤ a•",
                          "a ≤ a••",
                          "a• = a•••",
                          "(a ∨ b)• = a• ∧ b•"};
  for (int k = 1; k <= 7; ++k) {
    r.push_back(make("prop_pseudo_" + std::to_string(k), B, pseudo[k - 1],
                     [k](CheckContext& c) { return prop_pseudo(c, k); }));
  }
  const char* ints[] = {"S ⊆ closure(S) ⊆ cl_i(S)",
                        "cl_i is monotone",
                        "cl_i is idempotent",
                        "c(a) = cl_i(c(a)) for a ∈ L_i",
                        "Int_i(S) is the join of the o(a) ⊆ S, a ∈ L_i",
                        "Int_i(S) ⊆ Int(S) ⊆ S",
                        "Int_i is monotone",
                        "Int_i is idempotent",
                        "o(a) = Int_i(o(a)) for a ∈ L_i",
                        "c(a•) = cl_j(o(a)) for a ∈ L_i",
                        "o(a•) = Int_j(c(a)) for a ∈ L_i",
                        "cl_j(o(a)) = L∖Int_j(c(a)) for a ∈ L_i",
                        "Int_j(c(a)) = L∖cl_j(o(a)) for a ∈ L_i",
                        "L∖Int_i(o(a)) = cl_i(c(a)) for a ∈ L",
                        "L∖cl_i(c(a)) = Int_i(o(a)) for a ∈ L"};
  for (int k = 1; k <= 15; ++k) {
    r.push_back(make("prop_int_" + std::to_string(k), B, ints[k - 1], [k](CheckContext& c) { return prop_int(c, k); }));
  }
  r.push_back(make("prop_bullet", B, "x ∈ L_j: x• = 0 iff cl_i(o(x)) = L iff a ∧ x = 0 forces a = 0", prop_bullet));
  r.push_back(make("lemma_ijndsubset", B, "sublocales of (i,j)-nowhere dense sublocales are (i,j)-nowhere dense",
                   lemma_ijndsubset));
  r.push_back(make("thm_ijnd", B, "the six characterizations of (i,j)-nowhere density agree", thm_ijnd));
  r.push_back(make("cor_nd_elements", B, "a ∈ L_i is j-dense iff c(a) is (i,j)-nowhere dense (clopen variant too)",
                   cor_nd_elements));
  r.push_back(make("prop_ndbilocaleclopen", B, "the six characterizations of clopen (i,j)-nowhere density agree",
                   [](CheckContext& c) { return prop_ndbilocaleclopen(c, ClopenReading::closure); }));
  r.push_back(make("prop_ndbilocaleclopen_literal", B, "as prop_ndbilocaleclopen with S itself required clopen",
                   [](CheckContext& c) { return prop_ndbilocaleclopen(c, ClopenReading::literal); }, true));
  r.push_back(make("prop_smallest_dense", B, "cl_i(S) ∩ B(L) = O implies S is (i,j)-nowhere dense",
                   [](CheckContext& c) { return prop_smallest_dense(c, true, false); }));
  r.push_back(make("prop_smallest_dense_converse", B, "(i,j)-nowhere dense implies cl_i(S) ∩ B(L) = O",
                   [](CheckContext& c) { return prop_smallest_dense(c, false, true); }, true));
  r.push_back(make("prop_smallest_dense_li", B, "balanced: (i,j)-nowhere dense iff cl_i(S) ∩ B(L) = O",
                   [](CheckContext& c) {
                     return require_balanced(c, [&] { return prop_smallest_dense(c, true, true); });
                   }));
  r.push_back(make("cor_ijndbalanced", B, "balanced: (i,j)-nowhere dense iff cl_i(N) is nowhere dense",
                   [](CheckContext& c) { return require_balanced(c, [&] { return cor_ijndbalanced(c); }); }));
  r.push_back(make("remote_modes_agree", B, "definition, characterization and exhaustive remoteness agree",
                   remote_modes_agree));
  r.push_back(make("example_exabl_1", B, "O is (weakly) (i,j)-remote", example_exabl_1));
  r.push_back(make("example_exabl_2", B, "sublocales of (weakly) (i,j)-remote sublocales are (weakly) remote",
                   example_exabl_2));
  r.push_back(make("example_exabl_3a", B, "symmetric: (i,j)-remote iff remote; B(L) is (i,j)-remote",
                   [](CheckContext& c) { return require_symmetric(c, [&] { return example_exabl_3a(c); }); }));
  r.push_back(make("example_exabl_3b", B, "symmetric: O is the only clopen (i,j)-nowhere dense sublocale and every "
                                          "sublocale is weakly (i,j)-remote",
                   [](CheckContext& c) { return require_symmetric(c, [&] { return example_exabl_3b(c); }); }));
  r.push_back(make("example_exabl_4", B, "(i,j)-remote implies weakly (i,j)-remote, strictly on non-Boolean "
                                         "symmetric bilocales",
                   example_exabl_4));
  r.push_back(make("example_exabl_5", B, "symmetric: the (i,j)-remote sublocales are exactly the b(x*)",
                   [](CheckContext& c) { return require_symmetric(c, [&] { return example_exabl_5(c); }); }));
  r.push_back(make("example_exabl_6", B, "balanced: remote implies (i,j)-remote",
                   [](CheckContext& c) { return require_balanced(c, [&] { return example_exabl_6(c); }); }));
  r.push_back(make("thm_remote_subbilocale_plain", B, "the six characterizations of (i,j)-remoteness agree",
                   [](CheckContext& c) { return thm_remote_subbilocale(c, false); }));
  r.push_back(make("thm_remote_subbilocale_weak", B, "the six characterizations of weak (i,j)-remoteness agree",
                   [](CheckContext& c) { return thm_remote_subbilocale(c, true); }));
  r.push_back(make("thm_remote_subbilocale_weak_literal", B, "weak form with S itself required clopen in the "
                                                             "nowhere dense sublocales it must miss",
                   [](CheckContext& c) { return thm_remote_subbilocale(c, true, ClopenReading::literal); }, true));
  r.push_back(make("prop_bidense", B, "c(a) is (weakly) (i,j)-remote iff a ∨ x = 1 for every (complemented) "
                                      "j-dense x ∈ L_i",
                   prop_bidense));
  r.push_back(make("prop_largestijremote", B, "(weakly) (i,j)-remote sublocales are join-closed with a largest one",
                   prop_largestijremote));
  r.push_back(make("obs_coframe", B, "(weakly) (i,j)-remote sublocales form a coframe under inclusion",
                   obs_coframe));
  r.push_back(make("prop_remclosed", B, "Rmt is a closed sublocale (both variants)", prop_remclosed));
  r.push_back(make("example_booleanbi_2", B, "Boolean bilocales have Rmt = L", example_booleanbi_2));
  r.push_back(make("example_booleanbi_4", B, "symmetric: Rmt_weak = L iff L is Boolean",
                   [](CheckContext& c) { return example_booleanbi_4(c, RmtVariant::weak); }, true));
  r.push_back(make("example_booleanbi_4_strong", B, "symmetric: Rmt_strong = L iff L is Boolean",
                   [](CheckContext& c) { return example_booleanbi_4(c, RmtVariant::strong); }));
  r.push_back(make("example_booleanbi_5", B, "Rmt is upward closed and contains 1", example_booleanbi_5));
  r.push_back(make("prop_remoteremb_weak", B, "L_i = L implies Rmt_weak is remote",
                   [](CheckContext& c) { return prop_remoteremb(c, RmtVariant::weak); }, true));
  r.push_back(make("prop_remoteremb_strong", B, "L_i = L implies Rmt_strong is remote",
                   [](CheckContext& c) { return prop_remoteremb(c, RmtVariant::strong); }));
  r.push_back(make("prop_ijremote_weak", B, "Rmt_weak is (i,j)-remote",
                   [](CheckContext& c) { return prop_ijremote(c, RmtVariant::weak, false); }, true));
  r.push_back(make("prop_ijremote_strong", B, "Rmt_strong is (i,j)-remote",
                   [](CheckContext& c) { return prop_ijremote(c, RmtVariant::strong, false); }));
  r.push_back(make("prop_ijremote_weakly", B, "Rmt_weak is weakly (i,j)-remote",
                   [](CheckContext& c) { return prop_ijremote(c, RmtVariant::weak, true); }));
  r.push_back(make("prop_remequall", B, "weak variant: Rmt = L iff 1 is the only complemented j-dense element of "
                                        "L_i iff 0 ∈ Rmt",
                   prop_remequall));
  r.push_back(make("prop_remequall_clause2_weak", B, "Rmt_weak = L iff L is (i,j)-remote",
                   [](CheckContext& c) { return prop_remequall_clause2(c, RmtVariant::weak); }, true));
  r.push_back(make("prop_remequall_clause2_strong", B, "Rmt_strong = L iff L is (i,j)-remote",
                   [](CheckContext& c) { return prop_remequall_clause2(c, RmtVariant::strong); }));
  r.push_back(make("prop_noetherian", B, "Rmt L = L iff Rmt J(L) = J(L), both pairs and variants", prop_noetherian));
  r.push_back(make("ideal_frame", B, "J ↦ ⋁J is an isomorphism J(L) → L carrying (J L)_i onto L_i", ideal_frame));

  r.push_back(make("maps_adjunction", M, "h(b) ≤ a iff b ≤ f(a)", maps_adjunction));
  r.push_back(make("maps_image", M, "images of sublocales are sublocales", maps_image));
  r.push_back(make("maps_preimage", M, "f₋₁[c(x)] = c(h(x)) and f₋₁[o(x)] = o(h(x))", maps_preimage));
  r.push_back(make("prop_ijndpreserve_plain", M, "(3) iff (2) implies (1); full equivalence on balanced sources",
                   [](CheckContext& c) { return prop_ijndpreserve(c, false); }));
  r.push_back(make("prop_ijndpreserve_weak", M, "weak form: (2) implies (3) and (1); full equivalence on balanced sources",
                   [](CheckContext& c) { return prop_ijndpreserve(c, true); }));
  r.push_back(make("prop_ijndpreserve_weak_32", M, "weak form, (3) implies (2): fails when cl_i of the preimage is not clopen",
                   prop_ijndpreserve_weak_32, true));
  r.push_back(make("prop_preimagebi", M, "f preserving j-dense elements makes f₋₁ preserve (i,j)-remoteness",
                   [](CheckContext& c) { return prop_preimagebi(c, false); }));
  r.push_back(make("prop_preimagebiweakly", M, "with f also a lattice homomorphism, f₋₁ preserves weak "
                                               "(i,j)-remoteness",
                   [](CheckContext& c) { return prop_preimagebi(c, true); }));
  r.push_back(make("prop_restriction", M, "h weakly closed and j-dense preserving makes f a Rem-map",
                   prop_restriction));
  r.back().note = "weakly closed read as h(a) v b = 1 => a v f(b) = 1";

  r.push_back(make("thm_functorrem", D, "Rmt preserves identities and composition of Rem-maps",
                   [](CheckContext& c) { return endo_law(c, Law::functor); }));
  r.push_back(make("prop_natural", D, "inclusions Rmt L ↪ L form a natural transformation",
                   [](CheckContext& c) { return endo_law(c, Law::naturality); }));
  r.push_back(make("thm_comonad", D, "symmetric objects with remote Rmt: the comonad diagrams commute", thm_comonad));
  r.push_back(make("prop_reflective", D, "Rem-maps from symmetric Boolean bilocales factor uniquely through Rmt",
                   prop_reflective));
  r.push_back(make("prop_functorremrb", D, "Rmt is faithful on objects with remote Rmt and only 1 j-dense",
                   [](CheckContext& c) { return rb_law(c, Law::faithful); }));
  r.push_back(make("prop_natural_iso", D, "on such objects each inclusion Rmt L ↪ L is a bijection",
                   [](CheckContext& c) { return rb_law(c, Law::natural_iso); }));

  r.push_back(make("bispace_join_topology", X, "τ is the least topology containing τ1 and τ2",
                   bispace_join_topology));
  r.push_back(make("bispace_points", X, "sup-T_D: x ∈ A iff x̃ ∈ Ã",
                   [](CheckContext& c) { return conservativity_part(c, "membership"); }));
  r.push_back(make("lemma_biclo", X, "the induced sublocale of cl_τi(A) is cl_i(Ã)",
                   [](CheckContext& c) { return conservativity_part(c, "closure transfer"); }));
  r.push_back(make("prop_idense_induced", X, "A is i-dense iff Ã is i-dense",
                   [](CheckContext& c) { return conservativity_part(c, "i-density transfer"); }));
  r.push_back(make("prop_ijndinduced", X, "A is (τi,τj)-nowhere dense iff Ã is (i,j)-nowhere dense",
                   [](CheckContext& c) { return conservativity_part(c, "nowhere density transfer"); }));
  r.push_back(make("thm_remote_subset", X, "the three spatial forms of (τi,τj)-remoteness agree",
                   [](CheckContext& c) { return conservativity_part(c, "spatial remoteness"); }));
  r.push_back(make("prop_remotebilocaleprop", X, "A is (τi,τj)-remote iff Ã is (i,j)-remote",
                   [](CheckContext& c) { return conservativity_part(c, "remoteness transfer"); }));
  r.push_back(make("obs_disjoint_induced", X, "A closed or open: A ∩ B = ∅ iff Ã ∩ B̃ = O",
                   [](CheckContext& c) { return conservativity_part(c, "disjointness"); }));
  r.push_back(make("bispace_bullet", X, "U• = X∖cl_τj(U) for U ∈ τ_i",
                   [](CheckContext& c) { return conservativity_part(c, "bullet of"); }));
  return r;
}

}  // namespace

const std::vector<PropertyCheck>& property_registry() {
  static const std::vector<PropertyCheck> registry = build_registry();
  return registry;
}

const PropertyCheck& find_check(std::string_view id) {
  for (const PropertyCheck& c : property_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownCheckId, "'" + std::string(id) + "'");
}

std::vector<const PropertyCheck*> select_checks(std::string_view spec) {
  std::vector<const PropertyCheck*> out;
  if (spec.empty() || spec == "all") {
    for (const PropertyCheck& c : property_registry()) out.push_back(&c);
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string_view id = spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
    if (!id.empty()) out.push_back(&find_check(id));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::UnknownCheckId, "empty check list");
  return out;
}

std::string format_check_line(const CheckResult& r) {
  std::string line = "CHECK " + r.check->id + " " + r.structure + " ";
  switch (r.verdict) {
    case Verdict::pass: line += "PASS"; break;
    case Verdict::fail: line += "FAIL"; break;
    case Verdict::skip: line += "SKIP(" + r.detail + ")"; break;
  }
  if (r.verdict == Verdict::fail && !r.detail.empty()) line += " witness=" + r.detail;
  return line;
}

bool PropertyReport::has_unexpected_failure() const {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.verdict == Verdict::fail && !r.check->expected_fail; });
}

namespace {

Outcome guarded_evaluate(const PropertyCheck& check, CheckContext& ctx) {
  try {
    Outcome o = check.evaluate(ctx);
    o.detail = compact(std::move(o.detail));
    return o;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge) return Outcome::skip("too-large");
    return Outcome::fail(compact(e.what()));
  } catch (const std::logic_error& e) {
    return Outcome::fail(compact(std::string("internal:") + e.what()));
  }
}

}  // namespace

Outcome evaluate_check(const PropertyCheck& check, const Structure& structure, const SuiteLimits& limits) {
  CheckContext ctx(structure, limits);
  return guarded_evaluate(check, ctx);
}

PropertyReport run_property_suite(const Structure& structure, const std::vector<const PropertyCheck*>& checks,
                                  const SuiteLimits& limits) {
  using clock = std::chrono::steady_clock;
  PropertyReport report;
  report.structure = structure.id;
  const auto start = clock::now();
  CheckContext ctx(structure, limits);
  for (const PropertyCheck* check : checks) {
    const auto t0 = clock::now();
    Outcome o = guarded_evaluate(*check, ctx);
    report.results.push_back(CheckResult{check, structure.id, o.verdict, std::move(o.detail),
                                         std::chrono::duration<double>(clock::now() - t0).count()});
  }
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

void SweepSummary::add(const PropertyReport& report) {
  ++structures;
  for (const CheckResult& r : report.results) {
    auto [it, fresh] = tallies.try_emplace(r.check->id);
    if (fresh) check_order.push_back(r.check->id);
    Tally& t = it->second;
    switch (r.verdict) {
      case Verdict::pass: ++t.pass; break;
      case Verdict::skip: ++t.skip; break;
      case Verdict::fail:
        if (t.fail++ == 0) t.first_failure = r.structure + " " + r.detail;
        break;
    }
  }
}

std::vector<std::string> SweepSummary::problems() const {
  std::vector<std::string> out;
  for (const std::string& id : check_order) {
    const Tally& t = tallies.at(id);
    const bool expected_fail = find_check(id).expected_fail;
    if (!expected_fail && t.fail > 0) {
      out.push_back(id + " failed " + std::to_string(t.fail) + " time(s), first on " + t.first_failure);
    }
    if (expected_fail && t.fail == 0) out.push_back(id + " is registered expected-fail but never failed");
  }
  return out;
}

}  // namespace biloc
