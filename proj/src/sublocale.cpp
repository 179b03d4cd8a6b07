#include "biloc/sublocale.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace biloc {

namespace {

ElementSet up_closure_of_heyting(const FiniteLattice& lat, ElementSet s) {
  ElementSet out = s;
  for (Element x = 0; x < lat.size(); ++x) {
    for (Element e : s) out.insert(lat.heyting(x, e));
  }
  return out;
}

constexpr std::size_t kGeneratedEnumerationLimit = std::size_t{1} << 16;
constexpr std::size_t kTabulationLimit = 512;

}  // namespace

Sublocale Sublocale::checked(const FiniteLattice& parent, ElementSet members) {
  if (auto check = is_sublocale(parent, members); !check) {
    throw Error(ErrorCode::InvalidInput, format_set(parent, members) + " is not a sublocale of " +
                                             parent.name() + ": " + check.witness);
  }
  return Sublocale(parent, members);
}

ElementSet pairwise_meets(const FiniteLattice& lattice, ElementSet s, ElementSet t) {
  ElementSet out;
  for (Element a : s) {
    for (Element b : t) out.insert(lattice.meet(a, b));
  }
  return out;
}

SublocaleCheck is_sublocale(const FiniteLattice& lattice, ElementSet members) {
  if (!members.subset_of(lattice.all())) return {false, "members outside the lattice"};
  if (members.empty()) return {false, "empty member set (the void sublocale is {top})"};
  if (!members.contains(lattice.top())) return {false, "top " + lattice.label(lattice.top()) + " missing"};
  for (Element a : members) {
    for (Element b : members) {
      const Element m = lattice.meet(a, b);
      if (!members.contains(m)) {
        return {false, lattice.label(a) + "∧" + lattice.label(b) + "=" + lattice.label(m) + " missing"};
      }
    }
  }
  for (Element x = 0; x < lattice.size(); ++x) {
    for (Element s : members) {
      const Element h = lattice.heyting(x, s);
      if (!members.contains(h)) {
        return {false, lattice.label(x) + "→" + lattice.label(s) + "=" + lattice.label(h) + " missing"};
      }
    }
  }
  return {};
}

Sublocale void_sublocale(const FiniteLattice& lattice) {
  return Sublocale(lattice, ElementSet::single(lattice.top()));
}

Sublocale whole_sublocale(const FiniteLattice& lattice) { return Sublocale(lattice, lattice.all()); }

Sublocale closed_sublocale(const FiniteLattice& lattice, Element a) {
  return Sublocale(lattice, lattice.up_set(a));
}

Sublocale open_sublocale(const FiniteLattice& lattice, Element a) {
  ElementSet out;
  for (Element x = 0; x < lattice.size(); ++x) out.insert(lattice.heyting(a, x));
  return Sublocale(lattice, out);
}

Sublocale generated_sublocale(const FiniteLattice& lattice, ElementSet seed) {
  ElementSet current = seed | ElementSet::single(lattice.top());
  while (true) {
    ElementSet next = up_closure_of_heyting(lattice, pairwise_meets(lattice, current, current));
    if (next == current) return Sublocale(lattice, current);
    current = next;
  }
}

Sublocale b_of(const FiniteLattice& lattice, Element a) {
  Sublocale s = generated_sublocale(lattice, ElementSet::single(a));
  ElementSet formula;
  for (Element x = 0; x < lattice.size(); ++x) formula.insert(lattice.heyting(x, a));
  if (formula != s.members()) {
    throw std::logic_error("b_of(" + lattice.label(a) + ") disagrees with {x→a}");
  }
  return s;
}

Element nu(const Sublocale& s, Element a) {
  const FiniteLattice& lat = s.parent();
  return lat.meet_of(s.members() & lat.up_set(a));
}

Sublocale closure(const Sublocale& s) { return closed_sublocale(s.parent(), s.bottom()); }

Sublocale interior(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  ElementSet generators;
  for (Element a = 0; a < lat.size(); ++a) {
    if (open_sublocale(lat, a).members().subset_of(s.members())) generators.insert(a);
  }
  return open_sublocale(lat, lat.join_of(generators));
}

Sublocale booleanization(const FiniteLattice& lattice) {
  ElementSet out;
  for (Element x = 0; x < lattice.size(); ++x) out.insert(lattice.pseudocomplement(x));
  return Sublocale(lattice, out);
}

namespace {

const FiniteLattice& common_parent(std::span<const Sublocale> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidInput, "empty sublocale list");
  const FiniteLattice& parent = parts.front().parent();
  for (const Sublocale& s : parts) {
    if (&s.parent() != &parent) throw Error(ErrorCode::MixedParents, "sublocales of different frames");
  }
  return parent;
}

}  // namespace

Sublocale join_sublocales(std::span<const Sublocale> parts) {
  const FiniteLattice& parent = common_parent(parts);
  ElementSet acc = ElementSet::single(parent.top());
  for (const Sublocale& s : parts) acc = pairwise_meets(parent, acc, s.members());
  return Sublocale(parent, acc);
}

Sublocale meet_sublocales(std::span<const Sublocale> parts) {
  const FiniteLattice& parent = common_parent(parts);
  ElementSet acc = parent.all();
  for (const Sublocale& s : parts) acc &= s.members();
  return Sublocale(parent, acc);
}

Sublocale join_sublocales(const Sublocale& a, const Sublocale& b) {
  const Sublocale parts[] = {a, b};
  return join_sublocales(parts);
}

Sublocale meet_sublocales(const Sublocale& a, const Sublocale& b) {
  const Sublocale parts[] = {a, b};
  return meet_sublocales(parts);
}

Sublocale supplement(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  const ElementSet voided = ElementSet::single(lat.top());
  ElementSet acc = voided;
  for (const Sublocale& t : enumerate_sublocales(lat)) {
    if ((t.members() & s.members()) == voided) acc = pairwise_meets(lat, acc, t.members());
  }
  return Sublocale(lat, acc);
}

bool is_nowhere_dense(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  return (s.members() & booleanization(lat).members()) == ElementSet::single(lat.top());
}

bool is_dense_sub(const Sublocale& s) { return s.bottom() == s.parent().bottom(); }

std::vector<Sublocale> enumerate_sublocales(const FiniteLattice& lattice, EnumerationMode mode) {
  std::vector<ElementSet> found;
  if (mode == EnumerationMode::brute) {
    if (lattice.size() > kBruteEnumerationLimit) {
      throw Error(ErrorCode::TooLarge, "brute-force enumeration is limited to " +
                                           std::to_string(kBruteEnumerationLimit) + " elements");
    }
    const std::uint64_t limit = std::uint64_t{1} << lattice.size();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      if (is_sublocale(lattice, ElementSet(bits))) found.emplace_back(bits);
    }
  } else {
    std::vector<ElementSet> generators;
    for (Element a = 0; a < lattice.size(); ++a) generators.push_back(b_of(lattice, a).members());
    std::unordered_set<std::uint64_t> seen;
    std::vector<ElementSet> frontier{ElementSet::single(lattice.top())};
    seen.insert(frontier.front().bits());
    found.push_back(frontier.front());
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (ElementSet s : frontier) {
        for (ElementSet g : generators) {
          const ElementSet j = pairwise_meets(lattice, s, g);
          if (seen.insert(j.bits()).second) {
            if (seen.size() > kGeneratedEnumerationLimit) {
              throw Error(ErrorCode::TooLarge, "more than " + std::to_string(kGeneratedEnumerationLimit) +
                                                   " sublocales in " + lattice.name());
            }
            next.push_back(j);
            found.push_back(j);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(found.begin(), found.end());
  }
  std::vector<Sublocale> out;
  out.reserve(found.size());
  for (ElementSet s : found) out.emplace_back(lattice, s);
  return out;
}

std::optional<Element> closed_generator(const Sublocale& s) {
  const Element b = s.bottom();
  if (s.members() == s.parent().up_set(b)) return b;
  return std::nullopt;
}

std::optional<Element> open_generator(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  for (Element a = 0; a < lat.size(); ++a) {
    if (open_sublocale(lat, a) == s) return a;
  }
  return std::nullopt;
}

bool is_closed_and_open(const Sublocale& s) {
  return closed_generator(s).has_value() && open_generator(s).has_value();
}

bool is_clopen_sublocale(const Sublocale& s) {
  const auto a = closed_generator(s);
  const bool closed_form = a.has_value() && s.parent().is_complemented(*a);
  if (closed_form != is_closed_and_open(s)) {
    throw std::logic_error("clopen tests disagree on " + format_set(s.parent(), s.members()));
  }
  return closed_form;
}

std::string principal_name(const Sublocale& s) {
  const FiniteLattice& lat = s.parent();
  if (s.is_void()) return "O";
  if (s.is_whole()) return "L";
  if (auto a = closed_generator(s)) return "c(" + lat.label(*a) + ")";
  if (auto a = open_generator(s)) return "o(" + lat.label(*a) + ")";
  if (s == booleanization(lat)) return "B(L)";
  return {};
}

std::string describe(const Sublocale& s) {
  std::string out = format_set(s.parent(), s.members());
  if (auto name = principal_name(s); !name.empty()) out += " = " + name;
  return out;
}

SublocaleSpace::SublocaleSpace(const FiniteLattice& lattice, std::size_t max_sublocales)
    : lattice_(&lattice) {
  for (const Sublocale& s : enumerate_sublocales(lattice)) members_.push_back(s.members());
  if (members_.size() > max_sublocales) {
    throw Error(ErrorCode::TooLarge, lattice.name() + " has " + std::to_string(members_.size()) +
                                         " sublocales (limit " + std::to_string(max_sublocales) + ")");
  }
  for (std::uint32_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i].bits(), i);

  const std::size_t n = members_.size();
  if (n <= kTabulationLimit) {
    join_table_.resize(n * n);
    meet_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const auto j = static_cast<std::uint32_t>(index_of(pairwise_meets(lattice, members_[a], members_[b])));
        const auto m = static_cast<std::uint32_t>(index_of(members_[a] & members_[b]));
        join_table_[a * n + b] = join_table_[b * n + a] = j;
        meet_table_[a * n + b] = meet_table_[b * n + a] = m;
      }
    }
    tabulated_ = true;
  }

  void_ = index_of(ElementSet::single(lattice.top()));
  whole_ = index_of(lattice.all());
  boolean_ = index_of(booleanization(lattice).members());
  for (Element a = 0; a < lattice.size(); ++a) {
    closed_.push_back(index_of(closed_sublocale(lattice, a).members()));
    open_.push_back(index_of(open_sublocale(lattice, a).members()));
  }
  supplement_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t acc = void_;
    for (std::size_t t = 0; t < n; ++t) {
      if (meet(s, t) == void_) acc = join(acc, t);
    }
    supplement_[s] = acc;
  }
}

std::optional<std::size_t> SublocaleSpace::find(ElementSet members) const {
  auto it = index_.find(members.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SublocaleSpace::index_of(ElementSet members) const {
  if (auto i = find(members)) return *i;
  throw Error(ErrorCode::InvalidInput, format_set(*lattice_, members) + " is not a sublocale of " +
                                           lattice_->name());
}

std::size_t SublocaleSpace::join(std::size_t a, std::size_t b) const {
  if (tabulated_) return join_table_[a * size() + b];
  return index_of(pairwise_meets(*lattice_, members_[a], members_[b]));
}

std::size_t SublocaleSpace::meet(std::size_t a, std::size_t b) const {
  if (tabulated_) return meet_table_[a * size() + b];
  return index_of(members_[a] & members_[b]);
}

}  // namespace biloc
