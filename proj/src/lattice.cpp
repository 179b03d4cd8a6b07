#include "biloc/lattice.hpp"

#include <unordered_map>

namespace biloc {

namespace {

void check_size(std::size_t n, std::size_t max_elements) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a lattice needs at least one element");
  if (n > max_elements || n > kMaxBits) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " elements exceeds the limit of " +
                                         std::to_string(std::min(max_elements, kMaxBits)));
  }
}

}  // namespace

FiniteLattice FiniteLattice::build(std::string name, std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& order_pairs,
                                   std::size_t max_elements) {
  check_size(labels.size(), max_elements);
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate element label '" + labels[i] + "'");
    }
  }
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(order_pairs.size());
  for (const auto& [lo, hi] : order_pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::InvalidInput, "unknown element '" + lo + "'");
    if (b == index.end()) throw Error(ErrorCode::InvalidInput, "unknown element '" + hi + "'");
    pairs.emplace_back(a->second, b->second);
  }
  return from_relation(std::move(name), std::move(labels), pairs, max_elements);
}

FiniteLattice FiniteLattice::from_relation(std::string name, std::vector<std::string> labels,
                                           const std::vector<std::pair<Element, Element>>& order_pairs,
                                           std::size_t max_elements) {
  const std::size_t n = labels.size();
  check_size(n, max_elements);
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) up[x].insert(x);
  for (const auto& [lo, hi] : order_pairs) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::InvalidInput, "order pair references unknown index");
    up[lo].insert(hi);
  }
  // Warshall on bit rows: if k is above x, everything above k is above x.
  for (Element k = 0; k < n; ++k) {
    for (Element x = 0; x < n; ++x) {
      if (up[x].contains(k)) up[x] |= up[k];
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : up[x]) {
      if (y != x && up[y].contains(x)) {
        throw Error(ErrorCode::CycleInOrder,
                    "'" + labels[x] + "' and '" + labels[y] + "' are below each other");
      }
    }
  }
  return from_up_sets(std::move(name), std::move(labels), std::move(up));
}

FiniteLattice FiniteLattice::induced(const FiniteLattice& parent, ElementSet members, std::string name) {
  std::vector<std::string> labels;
  std::vector<Element> original;
  for (Element e : members) {
    labels.push_back(parent.label(e));
    original.push_back(e);
  }
  check_size(labels.size(), kMaxBits);
  std::vector<ElementSet> up(labels.size());
  for (Element x = 0; x < original.size(); ++x) {
    for (Element y = 0; y < original.size(); ++y) {
      if (parent.leq(original[x], original[y])) up[x].insert(y);
    }
  }
  return from_up_sets(std::move(name), std::move(labels), std::move(up));
}

FiniteLattice FiniteLattice::from_up_sets(std::string name, std::vector<std::string> labels,
                                          std::vector<ElementSet> up) {
  const std::size_t n = labels.size();
  FiniteLattice lat;
  lat.name_ = std::move(name);
  lat.labels_ = std::move(labels);
  lat.up_ = std::move(up);
  lat.down_.assign(n, ElementSet{});
  for (Element x = 0; x < n; ++x) {
    for (Element y : lat.up_[x]) lat.down_[y].insert(x);
  }

  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const ElementSet lower = lat.down_[x] & lat.down_[y];
      const ElementSet upper = lat.up_[x] & lat.up_[y];
      std::optional<Element> glb;
      for (Element g : lower) {
        if (lower.subset_of(lat.down_[g])) { glb = g; break; }
      }
      std::optional<Element> lub;
      for (Element l : upper) {
        if (upper.subset_of(lat.up_[l])) { lub = l; break; }
      }
      if (!glb || !lub) {
        throw Error(ErrorCode::NotALattice, "'" + lat.labels_[x] + "' and '" + lat.labels_[y] +
                                                "' have no " + (glb ? "join" : "meet"));
      }
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = *glb;
      lat.join_[x * n + y] = lat.join_[y * n + x] = *lub;
    }
  }
  Element bottom = 0;
  Element top = 0;
  for (Element x = 1; x < n; ++x) {
    bottom = lat.meet(bottom, x);
    top = lat.join(top, x);
  }
  lat.bottom_ = bottom;
  lat.top_ = top;

  lat.frame_ = check_frame(lat);
  if (lat.frame_) {
    lat.heyting_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        ElementSet candidates;
        for (Element c = 0; c < n; ++c) {
          if (lat.leq(lat.meet(c, a), b)) candidates.insert(c);
        }
        lat.heyting_[a * n + b] = lat.join_of(candidates);
      }
    }
  }
  return lat;
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  for (Element i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Element FiniteLattice::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::InvalidInput, "unknown element '" + std::string(label) + "' in " + name_);
}

Element FiniteLattice::meet_of(ElementSet s) const {
  Element acc = top_;
  for (Element e : s) acc = meet(acc, e);
  return acc;
}

Element FiniteLattice::join_of(ElementSet s) const {
  Element acc = bottom_;
  for (Element e : s) acc = join(acc, e);
  return acc;
}

Element FiniteLattice::heyting(Element a, Element b) const {
  if (!frame_) throw Error(ErrorCode::NotAFrame, name_ + " is not distributive");
  return heyting_[a * size() + b];
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x) {
    for (Element y : up_[x]) {
      if (y == x) continue;
      const ElementSet between = (up_[x] & down_[y]) - ElementSet::single(x) - ElementSet::single(y);
      if (between.empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

bool check_frame(const FiniteLattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (lattice.meet(a, lattice.join(b, c)) != lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string format_set(const FiniteLattice& lattice, ElementSet s, std::string_view sep) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += sep;
    out += lattice.label(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace biloc
