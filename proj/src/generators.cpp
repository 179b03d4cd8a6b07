#include "biloc/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace biloc {

namespace {

std::string point_name(std::size_t k) { return std::string(1, static_cast<char>('a' + k)); }

struct Signature {
  std::size_t up;
  std::size_t down;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteLattice& l) {
  std::vector<Signature> out;
  for (Element x = 0; x < l.size(); ++x) out.push_back({l.up_set(x).size(), l.down_set(x).size()});
  return out;
}

// Calls `visit` with each order isomorphism a → b until it returns false.
template <class Visit>
void for_each_isomorphism(const FiniteLattice& a, const FiniteLattice& b, Visit&& visit) {
  if (a.size() != b.size()) return;
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return;
  }
  const std::size_t n = a.size();
  std::vector<Element> image(n);
  std::vector<bool> used(n, false);
  bool stop = false;
  auto extend = [&](auto&& self, Element k) -> void {
    if (stop) return;
    if (k == n) {
      if (!visit(image)) stop = true;
      return;
    }
    for (Element c = 0; c < n && !stop; ++c) {
      if (used[c] || sa[k] != sb[c]) continue;
      bool ok = true;
      for (Element p = 0; p < k && ok; ++p) {
        ok = a.leq(p, k) == b.leq(image[p], c) && a.leq(k, p) == b.leq(c, image[p]);
      }
      if (!ok) continue;
      used[c] = true;
      image[k] = c;
      self(self, k + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
}

std::uint64_t invariant_hash(const FiniteLattice& l) {
  auto sig = signatures(l);
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = l.size();
  for (const Signature& s : sig) h = h * 1000003ULL + s.up * 131 + s.down;
  std::vector<std::size_t> cover_degree(l.size(), 0);
  for (const auto& [x, y] : l.covers()) ++cover_degree[x], cover_degree[y] += 100;
  std::sort(cover_degree.begin(), cover_degree.end());
  for (std::size_t d : cover_degree) h = h * 1000003ULL + d;
  return h;
}

Poset random_poset(std::size_t n, std::mt19937_64& rng) {
  Poset p{n, std::vector<PointSet>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (rng() & 1U) p.below[j].insert(static_cast<std::uint32_t>(i));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t i : p.below[j]) p.below[j] |= p.below[i];
  }
  return p;
}

ElementSet apply(const std::vector<Element>& perm, ElementSet s) {
  ElementSet out;
  for (Element e : s) out.insert(perm[e]);
  return out;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Poset p{n, std::vector<PointSet>(n)};
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1U) p.below[slots[k].second].insert(slots[k].first);
    }
    bool transitive = true;
    for (std::size_t j = 0; j < n && transitive; ++j) {
      for (std::uint32_t i : p.below[j]) transitive = transitive && p.below[i].subset_of(p.below[j]);
    }
    if (transitive) out.push_back(std::move(p));
  }
  return out;
}

FiniteLattice down_set_lattice(const Poset& p, std::string name) {
  std::vector<PointSet> downs;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.n); ++bits) {
    const PointSet s(bits);
    bool closed = true;
    for (std::uint32_t x : s) closed = closed && p.below[x].subset_of(s);
    if (closed) downs.push_back(s);
  }
  std::sort(downs.begin(), downs.end(), [](PointSet a, PointSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  std::vector<std::string> labels;
  for (PointSet s : downs) {
    std::string label;
    for (std::uint32_t x : s) label += point_name(x);
    labels.push_back(label.empty() ? "0" : label);
  }
  std::vector<std::pair<Element, Element>> order;
  for (Element x = 0; x < downs.size(); ++x) {
    for (Element y = 0; y < downs.size(); ++y) {
      if (x != y && downs[x].subset_of(downs[y])) order.emplace_back(x, y);
    }
  }
  return FiniteLattice::from_relation(std::move(name), std::move(labels), order, kMaxBits);
}

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  bool found = false;
  for_each_isomorphism(a, b, [&](const std::vector<Element>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<std::vector<Element>> lattice_automorphisms(const FiniteLattice& lattice) {
  std::vector<std::vector<Element>> out;
  for_each_isomorphism(lattice, lattice, [&](const std::vector<Element>& perm) {
    out.push_back(perm);
    return true;
  });
  return out;
}

std::vector<std::shared_ptr<const FiniteLattice>> generate_lattices(std::size_t max_points, GenerationMode mode) {
  if (mode.exhaustive && max_points > 5) {
    throw Error(ErrorCode::TooLarge, "exhaustive lattice generation is limited to posets on 5 points");
  }
  if (max_points > 6) throw Error(ErrorCode::TooLarge, "posets are limited to 6 points");
  std::vector<std::shared_ptr<const FiniteLattice>> out;
  std::multimap<std::uint64_t, std::size_t> seen;
  auto offer = [&](const Poset& p) {
    FiniteLattice lat = down_set_lattice(p, "");
    const std::uint64_t h = invariant_hash(lat);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (lattices_isomorphic(*out[it->second], lat)) return;
    }
    std::size_t related = 0;
    for (const PointSet& b : p.below) related += b.size();
    std::string name;
    if (related == p.n * (p.n - 1) / 2) {
      name = "C" + std::to_string(lat.size());
    } else if (related == 0) {
      name = "B" + std::to_string(lat.size());
    } else {
      const std::string prefix = "D" + std::to_string(p.n) + "_";
      std::size_t same_points = 0;
      for (const auto& l : out) {
        if (l->name().rfind(prefix, 0) == 0) ++same_points;
      }
      name = prefix + std::to_string(same_points);
    }
    seen.emplace(h, out.size());
    out.push_back(std::make_shared<const FiniteLattice>(lat.renamed(name)));
  };
  if (mode.exhaustive) {
    for (std::size_t n = 1; n <= max_points; ++n) {
      for (const Poset& p : enumerate_posets(n)) offer(p);
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    for (std::size_t k = 0; k < mode.count; ++k) offer(random_poset(max_points, rng));
  }
  return out;
}

std::vector<ElementSet> enumerate_subframes(const FiniteLattice& lattice) {
  if (lattice.size() > 20) throw Error(ErrorCode::TooLarge, "subframe enumeration is limited to 20 elements");
  const ElementSet base = subframe_closure(lattice, ElementSet{});
  std::set<std::uint64_t> found{base.bits()};
  std::vector<ElementSet> frontier{base};
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet s : frontier) {
      for (Element x = 0; x < lattice.size(); ++x) {
        if (s.contains(x)) continue;
        const ElementSet t = subframe_closure(lattice, s | ElementSet::single(x));
        if (found.insert(t.bits()).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out;
  for (std::uint64_t bits : found) out.emplace_back(bits);
  return out;
}

std::vector<std::shared_ptr<const Bilocale>> generate_bilocales(std::shared_ptr<const FiniteLattice> lattice,
                                                                GenerationMode mode) {
  const FiniteLattice& lat = *lattice;
  std::vector<std::shared_ptr<const Bilocale>> out;
  out.push_back(std::make_shared<const Bilocale>(Bilocale::validate(lat.name() + ".sym", lattice, lat.all(), lat.all())));

  const std::vector<ElementSet> subframes = enumerate_subframes(lat);
  const auto autos = lattice_automorphisms(lat);
  ElementSet irreducibles;
  for (Element x = 0; x < lat.size(); ++x) {
    ElementSet below = lat.down_set(x);
    below.erase(x);
    if (x != lat.bottom() && lat.join_of(below) != x) irreducibles.insert(x);
  }
  auto canonical = [&](ElementSet a, ElementSet b) {
    std::pair<std::uint64_t, std::uint64_t> best{~std::uint64_t{0}, ~std::uint64_t{0}};
    for (const auto& perm : autos) {
      const std::uint64_t pa = apply(perm, a).bits();
      const std::uint64_t pb = apply(perm, b).bits();
      best = std::min(best, std::make_pair(std::min(pa, pb), std::max(pa, pb)));
    }
    return best;
  };
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  const auto whole = std::make_pair(lat.all().bits(), lat.all().bits());
  for (std::size_t x = 0; x < subframes.size(); ++x) {
    for (std::size_t y = x; y < subframes.size(); ++y) {
      // Generation holds iff every join-irreducible is a meet of part elements.
      if (!irreducibles.subset_of(pairwise_meets(lat, subframes[x], subframes[y]))) continue;
      const auto key = std::make_pair(subframes[x].bits(), subframes[y].bits());
      if (key == whole || canonical(subframes[x], subframes[y]) != key) continue;
      pairs.emplace_back(subframes[x], subframes[y]);
    }
  }
  if (!mode.exhaustive && pairs.size() > mode.count) {
    std::mt19937_64 rng(mode.seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(mode.count);
    std::sort(pairs.begin(), pairs.end());
  }
  std::size_t k = 0;
  for (const auto& [a, b] : pairs) {
    out.push_back(std::make_shared<const Bilocale>(
        Bilocale::validate(lat.name() + ".b" + std::to_string(k++), lattice, a, b)));
  }
  return out;
}

std::vector<std::vector<PointSet>> enumerate_topologies(std::size_t n) {
  if (n > 4) throw Error(ErrorCode::TooLarge, "topology enumeration is limited to 4 points");
  const std::uint64_t whole = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> middle;
  for (std::uint64_t s = 1; s < whole; ++s) middle.push_back(s);
  std::vector<std::vector<PointSet>> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << middle.size()); ++choice) {
    std::vector<PointSet> family{PointSet{}};
    for (std::size_t k = 0; k < middle.size(); ++k) {
      if ((choice >> k) & 1U) family.emplace_back(middle[k]);
    }
    if (n > 0) family.push_back(PointSet(whole));
    if (topology_violation(n, family)) continue;
    std::sort(family.begin(), family.end(), [](PointSet a, PointSet b) {
      return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    out.push_back(std::move(family));
  }
  return out;
}

std::vector<std::shared_ptr<const Bispace>> generate_bispaces(std::size_t n) {
  const auto tops = enumerate_topologies(n);
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t k = 0; k < n; ++k) perm[k] = k;
  std::vector<std::vector<std::uint32_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  auto key_of = [](std::vector<PointSet> family) {
    std::vector<std::uint64_t> k;
    for (PointSet s : family) k.push_back(s.bits());
    std::sort(k.begin(), k.end());
    return k;
  };
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t t = 0; t < tops.size(); ++t) index.emplace(key_of(tops[t]), t);
  // permuted[p][t]: index of topology t relabelled by permutation p.
  std::vector<std::vector<std::size_t>> permuted(perms.size(), std::vector<std::size_t>(tops.size()));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (std::size_t t = 0; t < tops.size(); ++t) {
      std::vector<PointSet> moved;
      for (PointSet s : tops[t]) {
        PointSet m;
        for (std::uint32_t x : s) m.insert(perms[p][x]);
        moved.push_back(m);
      }
      permuted[p][t] = index.at(key_of(moved));
    }
  }
  std::vector<std::string> points;
  for (std::size_t k = 0; k < n; ++k) points.push_back(point_name(k));
  std::vector<std::shared_ptr<const Bispace>> out;
  for (std::size_t a = 0; a < tops.size(); ++a) {
    for (std::size_t b = 0; b < tops.size(); ++b) {
      bool minimal = true;
      for (std::size_t p = 0; p < perms.size() && minimal; ++p) {
        const std::size_t pa = permuted[p][a];
        const std::size_t pb = permuted[p][b];
        if (std::make_pair(pa, pb) < std::make_pair(a, b) || std::make_pair(pb, pa) < std::make_pair(a, b)) {
          minimal = false;
        }
      }
      if (!minimal) continue;
      const std::string name = "X" + std::to_string(n) + "_" + std::to_string(out.size());
      out.push_back(std::make_shared<const Bispace>(Bispace::build(name, points, tops[a], tops[b], false)));
    }
  }
  return out;
}

}  // namespace biloc
