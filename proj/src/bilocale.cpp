#include "biloc/bilocale.hpp"

#include <stdexcept>

namespace biloc {

IndexPair IndexPair::make(int i, int j) {
  if (i == 1 && j == 2) return one_two();
  if (i == 2 && j == 1) return two_one();
  throw Error(ErrorCode::InvalidInput, "index pair must be (1,2) or (2,1), got (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
}

std::string IndexPair::str() const {
  return "(" + std::to_string(to_int(i)) + "," + std::to_string(to_int(j)) + ")";
}

std::string to_string(RmtVariant v) { return v == RmtVariant::weak ? "weak" : "strong"; }

bool is_subframe(const FiniteLattice& lattice, ElementSet members) {
  if (!members.subset_of(lattice.all())) return false;
  if (!members.contains(lattice.bottom()) || !members.contains(lattice.top())) return false;
  for (Element a : members) {
    for (Element b : members) {
      if (!members.contains(lattice.meet(a, b)) || !members.contains(lattice.join(a, b))) return false;
    }
  }
  return true;
}

ElementSet subframe_closure(const FiniteLattice& lattice, ElementSet seed) {
  ElementSet current = seed | ElementSet::single(lattice.bottom()) | ElementSet::single(lattice.top());
  while (true) {
    ElementSet next = current;
    for (Element a : current) {
      for (Element b : current) {
        next.insert(lattice.meet(a, b));
        next.insert(lattice.join(a, b));
      }
    }
    if (next == current) return current;
    current = next;
  }
}

std::optional<Element> generation_witness(const FiniteLattice& lattice, ElementSet part1, ElementSet part2) {
  std::vector<Element> products;
  for (Element a1 : part1) {
    for (Element a2 : part2) products.push_back(lattice.meet(a1, a2));
  }
  for (Element a = 0; a < lattice.size(); ++a) {
    Element acc = lattice.bottom();
    for (Element p : products) {
      if (lattice.leq(p, a)) acc = lattice.join(acc, p);
    }
    if (acc != a) return a;
  }
  return std::nullopt;
}

Bilocale Bilocale::validate(std::string name, std::shared_ptr<const FiniteLattice> total, ElementSet part1,
                            ElementSet part2) {
  const FiniteLattice& lat = *total;
  if (!lat.is_frame()) throw Error(ErrorCode::NotAFrame, lat.name() + " is not distributive");
  const ElementSet parts[] = {part1, part2};
  for (int p = 0; p < 2; ++p) {
    const std::string which = "part" + std::to_string(p + 1);
    if (!parts[p].subset_of(lat.all())) throw Error(ErrorCode::NotASubframe, which + " has unknown elements");
    if (!is_subframe(lat, parts[p])) {
      const ElementSet missing = subframe_closure(lat, parts[p]) - parts[p];
      throw Error(ErrorCode::NotASubframe, which + " is missing " + format_set(lat, missing));
    }
  }
  if (auto w = generation_witness(lat, part1, part2)) {
    throw Error(ErrorCode::GenerationFails, "element '" + lat.label(*w) + "' is not generated by part meets");
  }
  return Bilocale(std::move(name), std::move(total), part1, part2);
}

Bilocale Bilocale::symmetric(std::shared_ptr<const FiniteLattice> total) {
  const ElementSet all = total->all();
  std::string name = total->name();
  return validate(std::move(name), std::move(total), all, all);
}

Element bullet(const Bilocale& b, Element c, Part owner) {
  if (!b.in_part(c, owner)) {
    throw Error(ErrorCode::NotInPart, "'" + b.total().label(c) + "' is not in part " +
                                          std::to_string(to_int(owner)));
  }
  const FiniteLattice& lat = b.total();
  Element acc = lat.bottom();
  for (Element x : b.part(other(owner))) {
    if (lat.meet(x, c) == lat.bottom()) acc = lat.join(acc, x);
  }
  return acc;
}

Element cl_generator(const Bilocale& b, const Sublocale& s, Part i) {
  const FiniteLattice& lat = b.total();
  // S ⊆ ↑a iff a ≤ ⋀S.
  return lat.join_of(b.part(i) & lat.down_set(s.bottom()));
}

Element int_generator(const Bilocale& b, const Sublocale& s, Part i) {
  const FiniteLattice& lat = b.total();
  ElementSet inside;
  for (Element a : b.part(i)) {
    if (open_sublocale(lat, a).subset_of(s)) inside.insert(a);
  }
  return lat.join_of(inside);
}

Sublocale cl_index(const Bilocale& b, const Sublocale& s, Part i) {
  return closed_sublocale(b.total(), cl_generator(b, s, i));
}

Sublocale int_index(const Bilocale& b, const Sublocale& s, Part i) {
  return open_sublocale(b.total(), int_generator(b, s, i));
}

bool is_index_dense_element(const Bilocale& b, Element x, Part owner) {
  return bullet(b, x, owner) == b.total().bottom();
}

bool is_index_dense_element_by_meets(const Bilocale& b, Element x, Part owner) {
  if (!b.in_part(x, owner)) {
    throw Error(ErrorCode::NotInPart, "'" + b.total().label(x) + "' is not in part " +
                                          std::to_string(to_int(owner)));
  }
  const FiniteLattice& lat = b.total();
  for (Element a : b.part(other(owner))) {
    if (lat.meet(a, x) == lat.bottom() && a != lat.bottom()) return false;
  }
  return true;
}

bool is_index_dense_sublocale(const Bilocale& b, const Sublocale& a, Part i) {
  return cl_index(b, a, i).is_whole();
}

ElementSet dense_part_elements(const Bilocale& b, IndexPair pair, bool complemented_only) {
  const FiniteLattice& lat = b.total();
  ElementSet out;
  for (Element x : b.part(pair.i)) {
    if (!is_index_dense_element(b, x, pair.i)) continue;
    if (complemented_only && !lat.is_complemented(x)) continue;
    out.insert(x);
  }
  return out;
}

namespace {

bool nd_by_definition(const Bilocale& b, const Sublocale& s, IndexPair pair) {
  return int_index(b, cl_index(b, s, pair.i), pair.j).is_void();
}

}  // namespace

bool is_ij_nowhere_dense(const Bilocale& b, const Sublocale& s, IndexPair pair, NdMode mode) {
  switch (mode) {
    case NdMode::definition:
      return nd_by_definition(b, s, pair);
    case NdMode::closure:
      return nd_by_definition(b, cl_index(b, s, pair.i), pair) && nd_by_definition(b, closure(s), pair);
    case NdMode::element:
      return is_index_dense_element(b, cl_generator(b, s, pair.i), pair.i);
  }
  return false;
}

bool is_clopen_ij_nowhere_dense(const Bilocale& b, const Sublocale& s, IndexPair pair, ClopenReading reading) {
  const bool clopen = is_clopen_sublocale(reading == ClopenReading::closure ? cl_index(b, s, pair.i) : s);
  return clopen && is_ij_nowhere_dense(b, s, pair);
}

bool is_ij_remote(const Bilocale& b, const Sublocale& s, IndexPair pair, bool weak, RemoteMode mode,
                  const SublocaleSpace& space) {
  const FiniteLattice& lat = b.total();
  if (&space.lattice() != &lat) throw Error(ErrorCode::MixedParents, "sublocale space of another frame");
  const ElementSet voided = ElementSet::single(lat.top());
  switch (mode) {
    case RemoteMode::characterization:
      for (Element a : dense_part_elements(b, pair, weak)) {
        if (!s.subset_of(open_sublocale(lat, a))) return false;
      }
      return true;
    case RemoteMode::definition:
    case RemoteMode::exhaustive:
      for (std::size_t k = 0; k < space.size(); ++k) {
        const Sublocale n = space.at(k);
        const bool counted = weak ? is_clopen_ij_nowhere_dense(b, n, pair) : is_ij_nowhere_dense(b, n, pair);
        if (!counted) continue;
        const ElementSet target =
            mode == RemoteMode::definition ? cl_index(b, n, pair.i).members() : n.members();
        if ((target & s.members()) != voided) return false;
      }
      return true;
  }
  return false;
}

Sublocale largest_ij_remote(const Bilocale& b, IndexPair pair, bool weak, const SublocaleSpace& space) {
  std::size_t acc = space.void_index();
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (is_ij_remote(b, space.at(k), pair, weak, RemoteMode::characterization, space)) {
      acc = space.join(acc, k);
    }
  }
  return space.at(acc);
}

Sublocale rmt(const Bilocale& b, IndexPair pair, RmtVariant variant) {
  const FiniteLattice& lat = b.total();
  const ElementSet dense = dense_part_elements(b, pair, variant == RmtVariant::weak);
  ElementSet out;
  for (Element x = 0; x < lat.size(); ++x) {
    bool ok = true;
    for (Element a : dense) ok = ok && lat.join(x, a) == lat.top();
    if (ok) out.insert(x);
  }
  return Sublocale(lat, out);
}

BilocaleClass classify_bilocale(const Bilocale& b) {
  const FiniteLattice& lat = b.total();
  BilocaleClass c;
  c.symmetric = b.part(Part::first) == lat.all() && b.part(Part::second) == lat.all();
  c.balanced = true;
  c.boolean = true;
  for (Part p : {Part::first, Part::second}) {
    for (Element x : b.part(p)) {
      if (!b.in_part(lat.pseudocomplement(x), other(p))) c.balanced = false;
      bool has_complement = false;
      for (Element y : b.part(other(p))) {
        if (lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top()) has_complement = true;
      }
      if (!has_complement) c.boolean = false;
    }
  }
  if (c.balanced) {
    for (Part p : {Part::first, Part::second}) {
      for (Element x : b.part(p)) {
        if (lat.pseudocomplement(x) != bullet(b, x, p)) {
          throw std::logic_error("balanced bilocale with a* != a• at " + lat.label(x));
        }
      }
    }
  }
  return c;
}

}  // namespace biloc
