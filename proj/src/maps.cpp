#include "biloc/maps.hpp"

#include <stdexcept>

namespace biloc {

namespace {

std::string map_label(const FiniteLattice& from, Element x, const FiniteLattice& to, Element y) {
  return from.label(x) + "->" + to.label(y);
}

void check_table(const FiniteLattice& source, const FiniteLattice& target, std::span<const Element> table) {
  if (table.size() != source.size()) {
    throw Error(ErrorCode::InvalidInput, "map table has " + std::to_string(table.size()) + " entries, " +
                                             source.name() + " has " + std::to_string(source.size()));
  }
  for (Element x = 0; x < table.size(); ++x) {
    if (table[x] >= target.size()) {
      throw Error(ErrorCode::InvalidInput, "image of '" + source.label(x) + "' is outside " + target.name());
    }
  }
}

// Right adjoint f(a) = ⋁{b : h(b) ≤ a} of a frame homomorphism h: target → source.
std::vector<Element> right_adjoint(const FiniteLattice& source, const FiniteLattice& target,
                                   std::span<const Element> hom) {
  std::vector<Element> out(source.size());
  for (Element a = 0; a < source.size(); ++a) {
    ElementSet below;
    for (Element b = 0; b < target.size(); ++b) {
      if (source.leq(hom[b], a)) below.insert(b);
    }
    out[a] = target.join_of(below);
  }
  return out;
}

std::optional<std::string> frame_hom_violation(const FiniteLattice& from, const FiniteLattice& to,
                                               std::span<const Element> h) {
  if (h[from.bottom()] != to.bottom()) return "h(0) != 0";
  if (h[from.top()] != to.top()) return "h(1) != 1";
  for (Element a = 0; a < from.size(); ++a) {
    for (Element b = 0; b < from.size(); ++b) {
      if (h[from.meet(a, b)] != to.meet(h[a], h[b])) {
        return "h(" + from.label(a) + "∧" + from.label(b) + ") != h(" + from.label(a) + ")∧h(" +
               from.label(b) + ")";
      }
      if (h[from.join(a, b)] != to.join(h[a], h[b])) {
        return "h(" + from.label(a) + "∨" + from.label(b) + ") != h(" + from.label(a) + ")∨h(" +
               from.label(b) + ")";
      }
    }
  }
  return std::nullopt;
}

ElementSet join_irreducibles(const FiniteLattice& lat) {
  ElementSet out;
  for (Element x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom()) continue;
    ElementSet below = lat.down_set(x);
    below.erase(x);
    if (lat.join_of(below) != x) out.insert(x);
  }
  return out;
}

}  // namespace

std::vector<Element> left_adjoint(const FiniteLattice& source, const FiniteLattice& target,
                                  std::span<const Element> table) {
  check_table(source, target, table);
  if (table[source.top()] != target.top()) {
    throw Error(ErrorCode::NotMeetPreserving, "top is sent to '" + target.label(table[source.top()]) + "'");
  }
  for (Element a = 0; a < source.size(); ++a) {
    for (Element b = 0; b < source.size(); ++b) {
      if (table[source.meet(a, b)] != target.meet(table[a], table[b])) {
        throw Error(ErrorCode::NotMeetPreserving,
                    "f(" + source.label(a) + "∧" + source.label(b) + ") != f(" + source.label(a) + ")∧f(" +
                        source.label(b) + ")");
      }
    }
  }
  std::vector<Element> h(target.size());
  for (Element b = 0; b < target.size(); ++b) {
    ElementSet above;
    for (Element a = 0; a < source.size(); ++a) {
      if (target.leq(b, table[a])) above.insert(a);
    }
    h[b] = source.meet_of(above);
  }
  for (Element b = 0; b < target.size(); ++b) {
    for (Element a = 0; a < source.size(); ++a) {
      if (source.leq(h[b], a) != target.leq(b, table[a])) {
        throw std::logic_error("adjunction fails at " + target.label(b) + ", " + source.label(a));
      }
    }
  }
  return h;
}

LocalicMap LocalicMap::validate(std::string name, std::shared_ptr<const FiniteLattice> source,
                                std::shared_ptr<const FiniteLattice> target, std::vector<Element> table) {
  std::vector<Element> h = left_adjoint(*source, *target, table);
  if (auto why = frame_hom_violation(*target, *source, h)) {
    throw Error(ErrorCode::AdjointNotFrameHom, "left adjoint of " + name + ": " + *why);
  }
  LocalicMap f;
  f.name_ = std::move(name);
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.table_ = std::move(table);
  f.adjoint_ = std::move(h);
  return f;
}

LocalicMap LocalicMap::identity(std::shared_ptr<const FiniteLattice> lattice) {
  std::vector<Element> table(lattice->size());
  for (Element x = 0; x < table.size(); ++x) table[x] = x;
  std::string name = "id_" + lattice->name();
  return validate(std::move(name), lattice, lattice, std::move(table));
}

LocalicMap LocalicMap::from_frame_hom(std::string name, std::shared_ptr<const FiniteLattice> source,
                                      std::shared_ptr<const FiniteLattice> target, std::span<const Element> hom) {
  check_table(*target, *source, hom);
  std::vector<Element> table = right_adjoint(*source, *target, hom);
  LocalicMap f = validate(std::move(name), std::move(source), std::move(target), std::move(table));
  if (!std::equal(hom.begin(), hom.end(), f.adjoint_.begin())) {
    throw std::logic_error("frame homomorphism is not the left adjoint of its right adjoint");
  }
  return f;
}

LocalicMap compose(const LocalicMap& g, const LocalicMap& f) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorCode::InvalidInput, "cannot compose " + g.name() + " after " + f.name());
  }
  std::vector<Element> table(f.source().size());
  for (Element x = 0; x < table.size(); ++x) table[x] = g(f(x));
  return LocalicMap::validate(g.name() + "∘" + f.name(), f.source_ptr(), g.target_ptr(), std::move(table));
}

bool is_lattice_homomorphism(const LocalicMap& f) {
  const FiniteLattice& s = f.source();
  const FiniteLattice& t = f.target();
  if (f(s.bottom()) != t.bottom()) return false;
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (f(s.meet(a, b)) != t.meet(f(a), f(b))) return false;
      if (f(s.join(a, b)) != t.join(f(a), f(b))) return false;
    }
  }
  return true;
}

LocalicMap inclusion_map(std::shared_ptr<const FiniteLattice> lattice, ElementSet sublocale, std::string name) {
  auto sub = std::make_shared<const FiniteLattice>(FiniteLattice::induced(*lattice, sublocale, name));
  std::vector<Element> table;
  for (Element e : sublocale) table.push_back(e);
  return LocalicMap::validate("j_" + name, std::move(sub), std::move(lattice), std::move(table));
}

BilocalicMap BilocalicMap::validate(std::string name, std::shared_ptr<const Bilocale> source,
                                    std::shared_ptr<const Bilocale> target, std::vector<Element> table) {
  LocalicMap base = LocalicMap::validate(std::move(name), source->total_ptr(), target->total_ptr(), std::move(table));
  const FiniteLattice& l = source->total();
  const FiniteLattice& m = target->total();
  for (Part p : {Part::first, Part::second}) {
    const std::string which = "part" + std::to_string(to_int(p));
    for (Element x : source->part(p)) {
      if (!target->in_part(base(x), p)) {
        throw Error(ErrorCode::PartViolation, which + ": f sends " + map_label(l, x, m, base(x)));
      }
    }
    for (Element y : target->part(p)) {
      if (!source->in_part(base.adjoint(y), p)) {
        throw Error(ErrorCode::PartViolation, which + ": h sends " + map_label(m, y, l, base.adjoint(y)));
      }
    }
  }
  return BilocalicMap(std::move(base), std::move(source), std::move(target));
}

BilocalicMap BilocalicMap::identity(std::shared_ptr<const Bilocale> b) {
  std::vector<Element> table(b->total().size());
  for (Element x = 0; x < table.size(); ++x) table[x] = x;
  std::string name = "id_" + b->name();
  return validate(std::move(name), b, b, std::move(table));
}

std::vector<std::vector<Element>> enumerate_frame_homs(const FiniteLattice& from, const FiniteLattice& to,
                                                       std::size_t limit) {
  // Frame homomorphisms from → to correspond to monotone maps J(to) → J(from):
  // h(m) = ⋁{p ∈ J(to) : φ(p) ≤ m}.
  std::vector<Element> jt;
  std::vector<Element> jf;
  for (Element p : join_irreducibles(to)) jt.push_back(p);
  for (Element q : join_irreducibles(from)) jf.push_back(q);
  std::vector<std::vector<Element>> out;
  if (jf.empty() && !jt.empty()) return out;
  std::vector<std::size_t> choice(jt.size(), 0);
  while (true) {
    bool monotone = true;
    for (std::size_t a = 0; a < jt.size() && monotone; ++a) {
      for (std::size_t b = 0; b < jt.size() && monotone; ++b) {
        if (to.leq(jt[a], jt[b]) && !from.leq(jf[choice[a]], jf[choice[b]])) monotone = false;
      }
    }
    if (monotone) {
      std::vector<Element> h(from.size());
      for (Element m = 0; m < from.size(); ++m) {
        ElementSet s;
        for (std::size_t a = 0; a < jt.size(); ++a) {
          if (from.leq(jf[choice[a]], m)) s.insert(jt[a]);
        }
        h[m] = to.join_of(s);
      }
      if (auto why = frame_hom_violation(from, to, h)) {
        throw std::logic_error("monotone map gave a non-homomorphism: " + *why);
      }
      out.push_back(std::move(h));
      if (out.size() >= limit) return out;
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == jf.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

std::vector<LocalicMap> enumerate_localic_maps(std::shared_ptr<const FiniteLattice> source,
                                               std::shared_ptr<const FiniteLattice> target, std::size_t limit) {
  std::vector<LocalicMap> out;
  std::size_t k = 0;
  for (const auto& h : enumerate_frame_homs(*target, *source, limit)) {
    out.push_back(LocalicMap::from_frame_hom("f" + std::to_string(k++), source, target, h));
  }
  return out;
}

std::vector<BilocalicMap> enumerate_bilocalic_maps(std::shared_ptr<const Bilocale> source,
                                                   std::shared_ptr<const Bilocale> target, std::size_t limit) {
  std::vector<BilocalicMap> out;
  for (const LocalicMap& f : enumerate_localic_maps(source->total_ptr(), target->total_ptr(), limit)) {
    try {
      out.push_back(BilocalicMap::validate(f.name(), source, target, f.table()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PartViolation) throw;
    }
  }
  return out;
}

Sublocale image_sublocale(const LocalicMap& f, const Sublocale& s) {
  ElementSet image;
  for (Element x : s.members()) image.insert(f(x));
  if (auto check = is_sublocale(f.target(), image); !check) {
    throw std::logic_error("image under " + f.name() + " is not a sublocale: " + check.witness);
  }
  return Sublocale(f.target(), image);
}

Sublocale preimage_sublocale(const LocalicMap& f, const Sublocale& t, const SublocaleSpace& source_space) {
  const FiniteLattice& src = f.source();
  if (&source_space.lattice() != &src) throw Error(ErrorCode::MixedParents, "sublocale space of another frame");
  ElementSet inverse;
  for (Element x = 0; x < src.size(); ++x) {
    if (t.contains(f(x))) inverse.insert(x);
  }
  std::size_t acc = source_space.void_index();
  for (std::size_t k = 0; k < source_space.size(); ++k) {
    if (source_space.members(k).subset_of(inverse)) acc = source_space.join(acc, k);
  }
  return source_space.at(acc);
}

bool is_weakly_closed(const LocalicMap& f) {
  const FiniteLattice& l = f.source();
  const FiniteLattice& m = f.target();
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < l.size(); ++b) {
      if (l.join(f.adjoint(a), b) == l.top() && m.join(a, f(b)) != m.top()) return false;
    }
  }
  return true;
}

bool is_rem_map(const BilocalicMap& f, IndexPair pair, RmtVariant variant) {
  const ElementSet target = rmt(f.target(), pair, variant).members();
  for (Element x : rmt(f.source(), pair, variant).members()) {
    if (!target.contains(f(x))) return false;
  }
  return true;
}

bool adjoint_preserves_dense(const BilocalicMap& f, IndexPair pair, bool complemented_only) {
  const ElementSet dense_l = dense_part_elements(f.source(), pair, complemented_only);
  for (Element a : dense_part_elements(f.target(), pair, complemented_only)) {
    if (!dense_l.contains(f.adjoint(a))) return false;
  }
  return true;
}

bool map_preserves_dense(const BilocalicMap& f, IndexPair pair) {
  const ElementSet dense_m = dense_part_elements(f.target(), pair, false);
  for (Element x : dense_part_elements(f.source(), pair, false)) {
    if (!dense_m.contains(f(x))) return false;
  }
  return true;
}

PreservationReport check_preservation(const BilocalicMap& f, IndexPair pair, bool weak,
                                      const SublocaleSpace& source_space, const SublocaleSpace& target_space) {
  const Bilocale& l = f.source();
  const Bilocale& m = f.target();
  PreservationReport r;
  r.weak = weak;
  r.source_balanced = classify_bilocale(l).balanced;
  r.lattice_homomorphism = is_lattice_homomorphism(f.base());
  r.map_preserves_dense = map_preserves_dense(f, pair);
  r.adjoint_preserves_dense = adjoint_preserves_dense(f, pair, weak);

  auto remote = [&](const Bilocale& b, const Sublocale& s, const SublocaleSpace& space) {
    return is_ij_remote(b, s, pair, weak, RemoteMode::characterization, space);
  };
  auto nd = [&](const Bilocale& b, const Sublocale& s) {
    return weak ? is_clopen_ij_nowhere_dense(b, s, pair) : is_ij_nowhere_dense(b, s, pair);
  };

  r.image_preserves_remote = true;
  for (std::size_t k = 0; k < source_space.size(); ++k) {
    const Sublocale s = source_space.at(k);
    if (remote(l, s, source_space) && !remote(m, image_sublocale(f.base(), s), target_space)) {
      r.image_preserves_remote = false;
      break;
    }
  }
  r.preimage_preserves_nd = true;
  r.preimage_preserves_remote = true;
  for (std::size_t k = 0; k < target_space.size(); ++k) {
    const Sublocale t = target_space.at(k);
    const Sublocale pre = preimage_sublocale(f.base(), t, source_space);
    if (nd(m, t) && !nd(l, pre)) r.preimage_preserves_nd = false;
    if (remote(m, t, target_space) && !remote(l, pre, source_space)) r.preimage_preserves_remote = false;
  }
  for (Element x = 0; x < m.total().size(); ++x) {
    const Element hx = f.adjoint(x);
    if (preimage_sublocale(f.base(), closed_sublocale(m.total(), x), source_space) !=
        closed_sublocale(l.total(), hx)) {
      r.violations.push_back("preimage of c(" + m.total().label(x) + ") != c(h(x))");
    }
    if (preimage_sublocale(f.base(), open_sublocale(m.total(), x), source_space) !=
        open_sublocale(l.total(), hx)) {
      r.violations.push_back("preimage of o(" + m.total().label(x) + ") != o(h(x))");
    }
  }

  const std::string tag = std::string(weak ? "weak " : "") + pair.str() + ": ";
  if (r.preimage_preserves_nd && !r.adjoint_preserves_dense) {
    r.violations.push_back(tag + "clause (2) holds but clause (3) fails");
  }
  if (!weak && r.adjoint_preserves_dense && !r.preimage_preserves_nd) {
    r.violations.push_back(tag + "clause (3) holds but clause (2) fails");
  }
  if (r.preimage_preserves_nd && !r.image_preserves_remote) {
    r.violations.push_back(tag + "clause (2) holds but clause (1) fails");
  }
  if (r.source_balanced && r.image_preserves_remote && !r.adjoint_preserves_dense) {
    r.violations.push_back(tag + "balanced source: clause (1) holds but clause (3) fails");
  }
  const bool hypothesis = r.map_preserves_dense && (!weak || r.lattice_homomorphism);
  if (hypothesis && !r.preimage_preserves_remote) {
    r.violations.push_back(tag + "f preserves j-dense elements but preimage does not preserve remoteness");
  }
  return r;
}

std::shared_ptr<const FiniteLattice> rmt_lattice(const Bilocale& b, IndexPair pair, RmtVariant variant) {
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::induced(b.total(), rmt(b, pair, variant).members(), "Rmt(" + b.name() + ")"));
}

LocalicMap restrict_to_rmt(const BilocalicMap& f, IndexPair pair, RmtVariant variant) {
  const ElementSet from = rmt(f.source(), pair, variant).members();
  const ElementSet to = rmt(f.target(), pair, variant).members();
  std::vector<Element> position(f.target().total().size(), 0);
  Element k = 0;
  for (Element y : to) position[y] = k++;
  std::vector<Element> table;
  for (Element x : from) {
    if (!to.contains(f(x))) {
      throw Error(ErrorCode::HypothesisViolated, f.name() + " is not a Rem-map: sends '" +
                                                     f.source().total().label(x) + "' outside Rmt");
    }
    table.push_back(position[f(x)]);
  }
  return LocalicMap::validate("Rmt(" + f.name() + ")", rmt_lattice(f.source(), pair, variant),
                              rmt_lattice(f.target(), pair, variant), std::move(table));
}

bool is_remote(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  for (Element d = 0; d < lat.size(); ++d) {
    if (lat.is_dense(d) && !s.subset_of(open_sublocale(lat, d))) return false;
  }
  return true;
}

std::string to_string(Law law) {
  switch (law) {
    case Law::functor: return "functor";
    case Law::naturality: return "naturality";
    case Law::comonad: return "comonad";
    case Law::coreflection: return "coreflection";
    case Law::faithful: return "faithful";
    case Law::natural_iso: return "natural_iso";
  }
  return "unknown";
}

namespace {

struct LawContext {
  const Diagram& diagram;
  IndexPair pair;
  RmtVariant variant;
  LawReport& report;

  const Bilocale& object(std::size_t k) const { return *diagram.objects.at(k); }

  void fail(std::string what) { report.failures.push_back(std::move(what)); }

  void require_rem_maps() const {
    for (const DiagramArrow& a : diagram.arrows) {
      if (!is_rem_map(a.map, pair, variant)) {
        throw Error(ErrorCode::HypothesisViolated, "arrow " + a.map.name() + " is not a Rem" + pair.str() + "-map");
      }
    }
  }

  bool rmt_is_remote(const Bilocale& b) const { return is_remote(rmt(b, pair, variant)); }

  bool only_top_dense(const Bilocale& b) const {
    return dense_part_elements(b, pair, false) == ElementSet::single(b.total().top());
  }

  // Runs `body`, turning validation errors into recorded failures.
  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      fail(what + ": " + e.what());
    }
  }
};

std::vector<Element> identity_table(std::size_t n) {
  std::vector<Element> t(n);
  for (Element x = 0; x < n; ++x) t[x] = x;
  return t;
}

void check_functor(LawContext& c) {
  c.require_rem_maps();
  for (const auto& obj : c.diagram.objects) {
    c.guarded("Rmt(id_" + obj->name() + ")", [&] {
      const LocalicMap r = restrict_to_rmt(BilocalicMap::identity(obj), c.pair, c.variant);
      ++c.report.checked;
      if (r.table() != identity_table(r.source().size())) c.fail("Rmt(id_" + obj->name() + ") != id");
    });
  }
  for (const DiagramArrow& f : c.diagram.arrows) {
    for (const DiagramArrow& g : c.diagram.arrows) {
      if (f.target != g.source) continue;
      c.guarded(g.map.name() + "∘" + f.map.name(), [&] {
        const LocalicMap gf = compose(g.map.base(), f.map.base());
        const BilocalicMap composite = BilocalicMap::validate(gf.name(), f.map.source_ptr(), g.map.target_ptr(),
                                                              gf.table());
        ++c.report.checked;
        if (!is_rem_map(composite, c.pair, c.variant)) {
          c.fail(composite.name() + " is not a Rem-map");
          return;
        }
        const LocalicMap lhs = restrict_to_rmt(composite, c.pair, c.variant);
        const LocalicMap rhs = compose(restrict_to_rmt(g.map, c.pair, c.variant),
                                       restrict_to_rmt(f.map, c.pair, c.variant));
        if (lhs.table() != rhs.table()) c.fail("Rmt(" + composite.name() + ") != Rmt(g)∘Rmt(f)");
      });
    }
  }
}

void check_naturality(LawContext& c) {
  c.require_rem_maps();
  for (const DiagramArrow& a : c.diagram.arrows) {
    c.guarded("naturality at " + a.map.name(), [&] {
      const ElementSet rl = rmt(a.map.source(), c.pair, c.variant).members();
      const ElementSet rm = rmt(a.map.target(), c.pair, c.variant).members();
      const LocalicMap r = restrict_to_rmt(a.map, c.pair, c.variant);
      std::vector<Element> rm_list(rm.begin(), rm.end());
      Element k = 0;
      ++c.report.checked;
      for (Element x : rl) {
        // G(f)(η_L(x)) against η_M(Rmt(f)(x)).
        if (a.map(x) != rm_list[r(k)]) {
          c.fail("square fails at " + a.map.source().total().label(x) + " for " + a.map.name());
        }
        ++k;
      }
    });
  }
}

void check_comonad(LawContext& c) {
  for (std::size_t k = 0; k < c.diagram.objects.size(); ++k) {
    const Bilocale& b = c.object(k);
    if (!classify_bilocale(b).symmetric || !c.rmt_is_remote(b)) {
      throw Error(ErrorCode::HypothesisViolated, "object " + b.name() + " is not symmetric with remote Rmt");
    }
  }
  c.require_rem_maps();
  for (const auto& obj : c.diagram.objects) {
    c.guarded("comonad at " + obj->name(), [&] {
      const ElementSet r = rmt(*obj, c.pair, c.variant).members();
      for (Part p : {Part::first, Part::second}) {
        ElementSet image;
        for (Element x : obj->part(p)) image.insert(nu(Sublocale(obj->total(), r), x));
        if (image != r) c.fail("nu[L" + std::to_string(to_int(p)) + "] != Rmt for " + obj->name());
      }
      // Rmt_SB(X) = (R, R, R), itself an object of the category.
      auto sb = std::make_shared<const Bilocale>(Bilocale::symmetric(rmt_lattice(*obj, c.pair, c.variant)));
      ++c.report.checked;
      if (!c.rmt_is_remote(*sb)) c.fail("Rmt_SB(" + obj->name() + ") has non-remote Rmt");
      const ElementSet rr = rmt(*sb, c.pair, c.variant).members();
      if (rr != sb->total().all()) {
        c.fail("Rmt(Rmt(" + obj->name() + ")) != Rmt(" + obj->name() + "): mu is not the identity");
        return;
      }
      const auto sbsb = std::make_shared<const Bilocale>(Bilocale::symmetric(rmt_lattice(*sb, c.pair, c.variant)));
      const std::size_t n = sb->total().size();
      const std::vector<Element> id = identity_table(n);
      // mu_X = id: Rmt_SB X → Rmt_SB Rmt_SB X; must be bilocalic.
      const BilocalicMap mu = BilocalicMap::validate("mu_" + obj->name(), sb, sbsb, id);
      // eta at Rmt_SB X is the inclusion Rmt(R) ↪ R, the identity table here.
      const BilocalicMap eta_sb = BilocalicMap::validate("eta_" + sb->name(), sbsb, sb, id);
      // Rmt_SB(eta_X) is the restriction of the inclusion R ↪ L to Rmt(R) → Rmt(L).
      std::vector<Element> incl(r.begin(), r.end());
      const BilocalicMap eta = BilocalicMap::validate("eta_" + obj->name(), sb, obj, incl);
      if (!is_rem_map(eta, c.pair, c.variant)) c.fail("eta_" + obj->name() + " is not a Rem-map");
      const LocalicMap rmt_eta = restrict_to_rmt(eta, c.pair, c.variant);
      const LocalicMap left = compose(eta_sb.base(), mu.base());
      const LocalicMap right = compose(rmt_eta, mu.base());
      if (left.table() != id) c.fail("(eta Rmt_SB)∘mu != id at " + obj->name());
      if (right.table() != id) c.fail("(Rmt_SB eta)∘mu != id at " + obj->name());
      const LocalicMap rmt_mu = restrict_to_rmt(mu, c.pair, c.variant);
      const auto sbsbsb =
          std::make_shared<const Bilocale>(Bilocale::symmetric(rmt_lattice(*sbsb, c.pair, c.variant)));
      const BilocalicMap mu_sb = BilocalicMap::validate("mu_" + sb->name(), sbsb, sbsbsb,
                                                        identity_table(sbsb->total().size()));
      if (compose(rmt_mu, mu.base()).table() != compose(mu_sb.base(), mu.base()).table()) {
        c.fail("(Rmt_SB mu)∘mu != (mu Rmt_SB)∘mu at " + obj->name());
      }
    });
  }
  for (const DiagramArrow& a : c.diagram.arrows) {
    c.guarded("Rmt_SB(" + a.map.name() + ")", [&] {
      const LocalicMap r = restrict_to_rmt(a.map, c.pair, c.variant);
      auto src = std::make_shared<const Bilocale>(Bilocale::symmetric(r.source_ptr()));
      auto dst = std::make_shared<const Bilocale>(Bilocale::symmetric(r.target_ptr()));
      const BilocalicMap sb = BilocalicMap::validate(r.name(), src, dst, r.table());
      ++c.report.checked;
      if (!is_rem_map(sb, c.pair, c.variant)) c.fail("Rmt_SB(" + a.map.name() + ") is not a Rem-map");
    });
  }
}

void check_coreflection(LawContext& c) {
  c.require_rem_maps();
  for (const DiagramArrow& a : c.diagram.arrows) {
    const Bilocale& n = a.map.source();
    const Bilocale& l = a.map.target();
    const BilocaleClass cn = classify_bilocale(n);
    if (!cn.symmetric || !cn.boolean) {
      throw Error(ErrorCode::HypothesisViolated, "source of " + a.map.name() + " is not symmetric Boolean");
    }
    if (!classify_bilocale(l).symmetric || !c.rmt_is_remote(l)) {
      throw Error(ErrorCode::HypothesisViolated, "target of " + a.map.name() + " is not symmetric with remote Rmt");
    }
    c.guarded("coreflection at " + a.map.name(), [&] {
      const ElementSet r = rmt(l, c.pair, c.variant).members();
      auto sb = std::make_shared<const Bilocale>(Bilocale::symmetric(rmt_lattice(l, c.pair, c.variant)));
      ++c.report.checked;
      if (!classify_bilocale(*sb).boolean) c.fail("Rmt(" + l.name() + ") is not Boolean");
      const std::vector<Element> incl(r.begin(), r.end());
      const BilocalicMap j = BilocalicMap::validate("j_" + l.name(), sb, a.map.target_ptr(), incl);
      if (!is_rem_map(j, c.pair, c.variant)) c.fail("j_Rmt(" + l.name() + ") is not a Rem-map");
      std::size_t factors = 0;
      for (const BilocalicMap& k : enumerate_bilocalic_maps(a.map.source_ptr(), sb)) {
        bool through = true;
        for (Element x = 0; x < n.total().size() && through; ++x) through = j(k(x)) == a.map(x);
        if (through) ++factors;
      }
      if (factors != 1) {
        c.fail(a.map.name() + " has " + std::to_string(factors) + " factorizations through j_Rmt");
      }
    });
  }
}

void require_rb_objects(const LawContext& c) {
  for (std::size_t k = 0; k < c.diagram.objects.size(); ++k) {
    const Bilocale& b = c.object(k);
    if (!c.rmt_is_remote(b) || !c.only_top_dense(b)) {
      throw Error(ErrorCode::HypothesisViolated, "object " + b.name() + " has non-remote Rmt or j-dense elements besides 1");
    }
  }
  c.require_rem_maps();
}

void check_faithful(LawContext& c) {
  require_rb_objects(c);
  const auto& arrows = c.diagram.arrows;
  for (std::size_t x = 0; x < arrows.size(); ++x) {
    for (std::size_t y = x + 1; y < arrows.size(); ++y) {
      if (arrows[x].source != arrows[y].source || arrows[x].target != arrows[y].target) continue;
      c.guarded("faithful", [&] {
        ++c.report.checked;
        const bool same_rmt = restrict_to_rmt(arrows[x].map, c.pair, c.variant).table() ==
                              restrict_to_rmt(arrows[y].map, c.pair, c.variant).table();
        const bool same = arrows[x].map.base().table() == arrows[y].map.base().table();
        if (same_rmt && !same) c.fail(arrows[x].map.name() + " and " + arrows[y].map.name() + " collapse under Rmt");
      });
    }
  }
}

void check_natural_iso(LawContext& c) {
  require_rb_objects(c);
  for (const auto& obj : c.diagram.objects) {
    ++c.report.checked;
    if (rmt(*obj, c.pair, c.variant).members() != obj->total().all()) {
      c.fail("eta_" + obj->name() + " is not a bijection");
    }
  }
}

}  // namespace

LawReport verify_category_laws(const Diagram& diagram, Law law, IndexPair pair, RmtVariant variant) {
  LawReport report;
  report.law = law;
  for (const DiagramArrow& a : diagram.arrows) {
    if (a.source >= diagram.objects.size() || a.target >= diagram.objects.size() ||
        &a.map.source() != diagram.objects[a.source].get() || &a.map.target() != diagram.objects[a.target].get()) {
      throw Error(ErrorCode::InvalidInput, "arrow " + a.map.name() + " does not match its diagram endpoints");
    }
  }
  LawContext c{diagram, pair, variant, report};
  switch (law) {
    case Law::functor: check_functor(c); break;
    case Law::naturality: check_naturality(c); break;
    case Law::comonad: check_comonad(c); break;
    case Law::coreflection: check_coreflection(c); break;
    case Law::faithful: check_faithful(c); break;
    case Law::natural_iso: check_natural_iso(c); break;
  }
  return report;
}

}  // namespace biloc
