#include "biloc/bispace.hpp"

#include <algorithm>
#include <stdexcept>

namespace biloc {

namespace {

bool by_size_then_mask(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

Family family_of(Part p) { return p == Part::first ? Family::tau1 : Family::tau2; }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::tau1: return "tau1";
    case Family::tau2: return "tau2";
    case Family::tau: return "tau";
  }
  return "?";
}

std::vector<PointSet> generate_topology(std::size_t n, const std::vector<PointSet>& seed) {
  std::vector<PointSet> current = seed;
  current.push_back(PointSet{});
  current.push_back(PointSet::full(n));
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  while (true) {
    std::vector<PointSet> next = current;
    for (PointSet a : current) {
      for (PointSet b : current) {
        next.push_back(a | b);
        next.push_back(a & b);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next == current) break;
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), by_size_then_mask);
  return current;
}

std::optional<std::string> topology_violation(std::size_t n, const std::vector<PointSet>& family) {
  auto has = [&](PointSet s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  for (PointSet s : family) {
    if (!s.subset_of(PointSet::full(n))) return "an open set mentions unknown points";
  }
  if (!has(PointSet{})) return "the empty set is missing";
  if (!has(PointSet::full(n))) return "the whole space is missing";
  for (PointSet a : family) {
    for (PointSet b : family) {
      if (!has(a | b)) return "union of masks " + std::to_string(a.bits()) + " and " + std::to_string(b.bits()) + " missing";
      if (!has(a & b)) {
        return "intersection of masks " + std::to_string(a.bits()) + " and " + std::to_string(b.bits()) + " missing";
      }
    }
  }
  return std::nullopt;
}

Bispace Bispace::build(std::string name, std::vector<std::string> points, const std::vector<PointSet>& opens1,
                       const std::vector<PointSet>& opens2, bool generate, std::size_t max_points) {
  const std::size_t n = points.size();
  if (n > max_points || n > kMaxBits) {
    throw Error(ErrorCode::TooLarge, name + " has " + std::to_string(n) + " points (limit " +
                                         std::to_string(max_points) + ")");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (points[a] == points[b]) throw Error(ErrorCode::InvalidInput, "duplicate point '" + points[a] + "'");
    }
  }
  Bispace s;
  s.name_ = std::move(name);
  s.points_ = std::move(points);
  const std::vector<PointSet>* given[] = {&opens1, &opens2};
  std::vector<PointSet>* out[] = {&s.tau1_, &s.tau2_};
  for (int k = 0; k < 2; ++k) {
    for (PointSet p : *given[k]) {
      if (!p.subset_of(PointSet::full(n))) {
        throw Error(ErrorCode::NotATopology, "tau" + std::to_string(k + 1) + ": open set outside the point set");
      }
    }
    if (generate) {
      *out[k] = generate_topology(n, *given[k]);
    } else {
      if (auto why = topology_violation(n, *given[k])) {
        throw Error(ErrorCode::NotATopology, "tau" + std::to_string(k + 1) + ": " + *why);
      }
      *out[k] = *given[k];
      std::sort(out[k]->begin(), out[k]->end(), by_size_then_mask);
      out[k]->erase(std::unique(out[k]->begin(), out[k]->end()), out[k]->end());
    }
  }
  std::vector<PointSet> both = s.tau1_;
  both.insert(both.end(), s.tau2_.begin(), s.tau2_.end());
  s.tau_ = generate_topology(n, both);
  if (s.tau_.size() > kMaxBits) {
    throw Error(ErrorCode::TooLarge, s.name_ + " has " + std::to_string(s.tau_.size()) + " joint opens");
  }
  return s;
}

const std::vector<PointSet>& Bispace::opens(Family f) const {
  switch (f) {
    case Family::tau1: return tau1_;
    case Family::tau2: return tau2_;
    case Family::tau: return tau_;
  }
  return tau_;
}

bool Bispace::is_open(PointSet s, Family f) const {
  const auto& o = opens(f);
  return std::find(o.begin(), o.end(), s) != o.end();
}

PointSet Bispace::interior(PointSet s, Family f) const {
  PointSet acc;
  for (PointSet u : opens(f)) {
    if (u.subset_of(s)) acc |= u;
  }
  return acc;
}

PointSet Bispace::closure(PointSet s, Family f) const { return whole() - interior(whole() - s, f); }

Element Bispace::open_index(PointSet s) const {
  auto it = std::find(tau_.begin(), tau_.end(), s);
  if (it == tau_.end()) throw Error(ErrorCode::InvalidInput, format(s) + " is not open in " + name_);
  return static_cast<Element>(it - tau_.begin());
}

std::string Bispace::format(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t p : s) {
    if (!first) out += ", ";
    out += points_[p];
    first = false;
  }
  return out + "}";
}

std::string Bispace::open_label(PointSet s) const {
  if (s.empty()) return "0";
  if (s == whole()) return "1";
  const bool short_names =
      std::all_of(points_.begin(), points_.end(), [](const std::string& p) { return p.size() == 1; });
  std::string out;
  for (std::uint32_t p : s) {
    if (!out.empty() && !short_names) out += "+";
    out += points_[p];
  }
  return out;
}

bool is_sup_td(const Bispace& b) {
  for (std::uint32_t x = 0; x < b.point_count(); ++x) {
    bool found = false;
    for (PointSet u : b.opens(Family::tau)) {
      if (!u.contains(x)) continue;
      PointSet rest = u;
      rest.erase(x);
      if (b.is_open(rest, Family::tau)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::shared_ptr<const Bilocale> to_bilocale(const Bispace& b) {
  const auto& tau = b.opens(Family::tau);
  std::vector<std::string> labels;
  for (PointSet u : tau) labels.push_back(b.open_label(u));
  std::vector<std::pair<Element, Element>> order;
  for (Element x = 0; x < tau.size(); ++x) {
    for (Element y = 0; y < tau.size(); ++y) {
      if (tau[x].subset_of(tau[y])) order.emplace_back(x, y);
    }
  }
  auto total = std::make_shared<const FiniteLattice>(
      FiniteLattice::from_relation(b.name(), std::move(labels), order, kMaxBits));
  ElementSet parts[2];
  for (Part p : {Part::first, Part::second}) {
    for (PointSet u : b.opens(family_of(p))) parts[to_int(p) - 1].insert(b.open_index(u));
  }
  return std::make_shared<const Bilocale>(Bilocale::validate(b.name(), total, parts[0], parts[1]));
}

Sublocale induced_sublocale(const Bispace& b, const Bilocale& frame, PointSet a) {
  const FiniteLattice& lat = frame.total();
  if (lat.size() != b.opens(Family::tau).size()) {
    throw Error(ErrorCode::MixedParents, "frame does not come from " + b.name());
  }
  ElementSet members;
  for (PointSet g : b.opens(Family::tau)) {
    members.insert(b.open_index(b.interior((b.whole() - a) | g, Family::tau)));
  }
  if (auto check = is_sublocale(lat, members); !check) {
    throw std::logic_error("induced set of " + b.format(a) + " is not a sublocale: " + check.witness);
  }
  return Sublocale(lat, members);
}

Element point_element(const Bispace& b, std::size_t x) {
  const auto p = static_cast<std::uint32_t>(x);
  return b.open_index(b.whole() - b.closure(PointSet::single(p), Family::tau));
}

bool tau_ij_nowhere_dense(const Bispace& b, PointSet a, IndexPair pair) {
  return b.interior(b.closure(a, family_of(pair.i)), family_of(pair.j)).empty();
}

bool tau_ij_remote(const Bispace& b, PointSet a, IndexPair pair, TauRemoteMode mode) {
  if (mode == TauRemoteMode::characterization) {
    for (PointSet u : b.opens(family_of(pair.i))) {
      if (b.closure(u, family_of(pair.j)) == b.whole() && !a.subset_of(u)) return false;
    }
    return true;
  }
  const std::uint64_t limit = std::uint64_t{1} << b.point_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const PointSet f(bits);
    if (!tau_ij_nowhere_dense(b, f, pair)) continue;
    const PointSet target = mode == TauRemoteMode::closure ? b.closure(f, family_of(pair.i)) : f;
    if (a.intersects(target)) return false;
  }
  return true;
}

ConservativityReport conservativity_check(const Bispace& b) {
  ConservativityReport r;
  if (!is_sup_td(b)) {
    r.skipped = true;
    r.notice = b.name() + " is not sup-T_D";
    return r;
  }
  const auto frame_ptr = to_bilocale(b);
  const Bilocale& frame = *frame_ptr;
  const FiniteLattice& lat = frame.total();
  const SublocaleSpace space(lat);
  const std::uint64_t limit = std::uint64_t{1} << b.point_count();
  std::vector<Sublocale> induced;
  for (std::uint64_t bits = 0; bits < limit; ++bits) induced.push_back(induced_sublocale(b, frame, PointSet(bits)));
  auto fail = [&](std::string what) { r.violations.push_back(std::move(what)); };

  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const PointSet a(bits);
    const Sublocale& at = induced[bits];
    const std::string as = b.format(a);
    ++r.checked;
    for (std::uint32_t x = 0; x < b.point_count(); ++x) {
      if (a.contains(x) != at.contains(point_element(b, x))) {
        fail("point " + b.points()[x] + " membership differs for " + as);
      }
    }
    for (IndexPair pair : kBothPairs) {
      const std::string tag = pair.str() + " " + as + ": ";
      const Family fi = family_of(pair.i);
      if (induced[b.closure(a, fi).bits()] != cl_index(frame, at, pair.i)) fail(tag + "closure transfer");
      if ((b.closure(a, fi) == b.whole()) != is_index_dense_sublocale(frame, at, pair.i)) {
        fail(tag + "i-density transfer");
      }
      if (tau_ij_nowhere_dense(b, a, pair) != is_ij_nowhere_dense(frame, at, pair)) {
        fail(tag + "nowhere density transfer");
      }
      const bool remote = tau_ij_remote(b, a, pair, TauRemoteMode::definition);
      if (remote != tau_ij_remote(b, a, pair, TauRemoteMode::closure) ||
          remote != tau_ij_remote(b, a, pair, TauRemoteMode::characterization)) {
        fail(tag + "spatial remoteness forms disagree");
      }
      if (remote != is_ij_remote(frame, at, pair, false, RemoteMode::characterization, space)) {
        fail(tag + "remoteness transfer");
      }
    }
    const bool open = b.is_open(a, Family::tau);
    const bool closed = b.is_open(b.whole() - a, Family::tau);
    if (open || closed) {
      for (std::uint64_t other = 0; other < limit; ++other) {
        const bool disjoint = (bits & other) == 0;
        if (disjoint != meet_sublocales(at, induced[other]).is_void()) {
          fail("disjointness transfer for " + as + " and " + b.format(PointSet(other)));
        }
      }
    }
  }
  for (Part p : {Part::first, Part::second}) {
    const Family fj = family_of(other(p));
    for (PointSet u : b.opens(family_of(p))) {
      ++r.checked;
      const Element expected = b.open_index(b.whole() - b.closure(u, fj));
      if (bullet(frame, b.open_index(u), p) != expected) {
        fail("bullet of " + b.format(u) + " in part " + std::to_string(to_int(p)));
      }
    }
  }
  return r;
}

}  // namespace biloc
