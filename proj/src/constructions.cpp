#include "biloc/constructions.hpp"

#include <stdexcept>

namespace biloc {

namespace {

Congruence from_classifier(const FiniteLattice& lat, const std::vector<Element>& key) {
  Congruence c;
  c.parent = &lat;
  c.rows.assign(lat.size(), ElementSet{});
  for (Element x = 0; x < lat.size(); ++x) {
    for (Element y = 0; y < lat.size(); ++y) {
      if (key[x] == key[y]) c.rows[x].insert(y);
    }
  }
  return c;
}

}  // namespace

bool Congruence::subset_of(const Congruence& other) const {
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (!rows[x].subset_of(other.rows[x])) return false;
  }
  return true;
}

Congruence kernel(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  std::vector<Element> key(lat.size());
  for (Element x = 0; x < lat.size(); ++x) key[x] = nu(s, x);
  return from_classifier(lat, key);
}

Congruence nabla(const FiniteLattice& lattice, Element a) {
  std::vector<Element> key(lattice.size());
  for (Element x = 0; x < lattice.size(); ++x) key[x] = lattice.join(x, a);
  return from_classifier(lattice, key);
}

Congruence delta(const FiniteLattice& lattice, Element a) {
  std::vector<Element> key(lattice.size());
  for (Element x = 0; x < lattice.size(); ++x) key[x] = lattice.meet(x, a);
  return from_classifier(lattice, key);
}

bool is_congruence(const Congruence& c) {
  const FiniteLattice& lat = *c.parent;
  const std::size_t n = lat.size();
  for (Element x = 0; x < n; ++x) {
    if (!c.related(x, x)) return false;
    for (Element y : c.rows[x]) {
      if (!c.related(y, x)) return false;
      if (!c.rows[y].subset_of(c.rows[x])) return false;
      for (Element z = 0; z < n; ++z) {
        if (!c.related(lat.meet(x, z), lat.meet(y, z))) return false;
        if (!c.related(lat.join(x, z), lat.join(y, z))) return false;
      }
    }
  }
  return true;
}

CongruenceBilocale congruence_bilocale(std::shared_ptr<const FiniteLattice> lattice) {
  const FiniteLattice& lat = *lattice;
  const std::vector<Sublocale> subs = enumerate_sublocales(lat);
  if (subs.size() > kMaxBits) {
    throw Error(ErrorCode::TooLarge, lat.name() + " has " + std::to_string(subs.size()) +
                                         " congruences (limit " + std::to_string(kMaxBits) + ")");
  }
  CongruenceBilocale out;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    Congruence c = kernel(subs[k]);
    if (!is_congruence(c)) throw std::logic_error("kernel of a sublocale is not a congruence");
    for (const Congruence& earlier : out.congruences) {
      if (earlier == c) throw std::logic_error("two sublocales share a kernel");
    }
    out.congruences.push_back(std::move(c));
    out.sublocales.push_back(subs[k].members());
    labels.push_back("theta_S#" + std::to_string(k));
  }
  const std::size_t n = subs.size();
  std::vector<std::pair<Element, Element>> order;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const bool rel = out.congruences[a].subset_of(out.congruences[b]);
      if (rel != out.sublocales[b].subset_of(out.sublocales[a])) {
        throw std::logic_error("kernel map is not order-reversing");
      }
      if (rel) order.emplace_back(a, b);
    }
  }
  auto total = std::make_shared<const FiniteLattice>(
      FiniteLattice::from_relation("C(" + lat.name() + ")", std::move(labels), order, kMaxBits));
  const FiniteLattice& cl = *total;

  auto locate = [&](const Congruence& c) -> Element {
    for (Element k = 0; k < n; ++k) {
      if (out.congruences[k] == c) return k;
    }
    throw std::logic_error("congruence missing from the kernel enumeration");
  };
  ElementSet nabla_part;
  ElementSet delta_seed;
  for (Element a = 0; a < lat.size(); ++a) {
    const Element na = locate(nabla(lat, a));
    const Element da = locate(delta(lat, a));
    if (out.congruences[na] != kernel(closed_sublocale(lat, a)) ||
        out.congruences[da] != kernel(open_sublocale(lat, a))) {
      throw std::logic_error("nabla/delta disagree with the closed/open kernels");
    }
    if (cl.meet(na, da) != cl.bottom() || cl.join(na, da) != cl.top()) {
      throw std::logic_error("delta_a is not the complement of nabla_a");
    }
    out.nabla_index.push_back(na);
    out.delta_index.push_back(da);
    nabla_part.insert(na);
    delta_seed.insert(da);
  }
  if (!is_subframe(cl, nabla_part)) throw std::logic_error("nabla_L is not a subframe");
  const ElementSet delta_part = subframe_closure(cl, delta_seed);
  out.bilocale = std::make_shared<const Bilocale>(Bilocale::validate(cl.name(), total, nabla_part, delta_part));
  return out;
}

bool is_ideal(const FiniteLattice& lattice, ElementSet members) {
  if (members.empty()) return false;
  for (Element x : members) {
    if (!lattice.down_set(x).subset_of(members)) return false;
    for (Element y : members) {
      if (!members.contains(lattice.join(x, y))) return false;
    }
  }
  return true;
}

ElementSet generated_ideal(const FiniteLattice& lattice, ElementSet seed) {
  ElementSet current = seed | ElementSet::single(lattice.bottom());
  while (true) {
    ElementSet next = current;
    for (Element x : current) {
      next |= lattice.down_set(x);
      for (Element y : current) next.insert(lattice.join(x, y));
    }
    if (next == current) return current;
    current = next;
  }
}

std::vector<ElementSet> enumerate_ideals(const FiniteLattice& lattice) {
  // Finite lattices are Noetherian, so the candidates ↓a are all the ideals;
  // each is still checked against the defining conditions.
  std::vector<ElementSet> out;
  for (Element a = 0; a < lattice.size(); ++a) {
    const ElementSet down = lattice.down_set(a);
    if (!is_ideal(lattice, down)) throw std::logic_error("principal down-set is not an ideal");
    out.push_back(down);
  }
  return out;
}

IdealBilocale ideal_bilocale(const Bilocale& b) {
  const FiniteLattice& lat = b.total();
  IdealBilocale out;
  out.ideals = enumerate_ideals(lat);
  const std::size_t n = out.ideals.size();
  std::vector<std::string> labels;
  for (Element a = 0; a < n; ++a) labels.push_back("down_" + lat.label(a));
  std::vector<std::pair<Element, Element>> order;
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      if (out.ideals[a].subset_of(out.ideals[c])) order.emplace_back(a, c);
    }
  }
  auto total = std::make_shared<const FiniteLattice>(
      FiniteLattice::from_relation("J(" + b.name() + ")", std::move(labels), order, kMaxBits));
  ElementSet parts[2];
  for (Part p : {Part::first, Part::second}) {
    for (Element k = 0; k < n; ++k) {
      const ElementSet j = out.ideals[k];
      if (generated_ideal(lat, j & b.part(p)) == j) parts[to_int(p) - 1].insert(k);
    }
  }
  out.bilocale = std::make_shared<const Bilocale>(
      Bilocale::validate(total->name(), total, parts[0], parts[1]));
  return out;
}

ConstructionReport check_construction_theorems(const Bilocale& b) {
  ConstructionReport r;
  const IdealBilocale ideal = ideal_bilocale(b);
  const CongruenceBilocale cong = congruence_bilocale(b.total_ptr());
  for (IndexPair pair : kBothPairs) {
    for (RmtVariant v : {RmtVariant::weak, RmtVariant::strong}) {
      const bool whole = rmt(b, pair, v).is_whole();
      const bool ideal_whole = rmt(*ideal.bilocale, pair, v).is_whole();
      std::string line = "noetherian " + pair.str() + " " + to_string(v) + ": Rmt L = L is " +
                         (whole ? "true" : "false") + ", Rmt JL = JL is " + (ideal_whole ? "true" : "false");
      if (whole != ideal_whole) {
        r.violations.push_back(line);
        line += " FAIL";
      }
      r.lines.push_back(line);

      const bool cong_whole = rmt(*cong.bilocale, pair, v).is_whole();
      std::string cline = "congruence " + pair.str() + " " + to_string(v) + ": Rmt CL = CL is " +
                          (cong_whole ? "true" : "false");
      if (v == RmtVariant::weak && !cong_whole) {
        r.violations.push_back(cline);
        cline += " FAIL";
      }
      r.lines.push_back(cline);
    }
  }
  return r;
}

}  // namespace biloc
