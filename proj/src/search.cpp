#include "biloc/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace biloc {

namespace {

std::vector<std::shared_ptr<const FiniteLattice>> sorted_lattices(const SearchBounds& bounds, GenerationMode mode) {
  std::vector<std::shared_ptr<const FiniteLattice>> lattices = generate_lattices(bounds.max_points, mode);
  std::erase_if(lattices, [&](const auto& l) { return l->size() > bounds.max_elems; });
  std::stable_sort(lattices.begin(), lattices.end(), [](const auto& a, const auto& b) { return a->size() < b->size(); });
  return lattices;
}

std::string map_block(const BilocalicMap& f) {
  const FiniteLattice& src = f.source().total();
  std::string out = "map " + f.name() + " : " + f.source().name() + " -> " + f.target().name() + "\n";
  for (Element x = 0; x < src.size(); ++x) {
    out += "send " + src.label(x) + " -> " + f.target().total().label(f(x)) + "\n";
  }
  return out + "end\n";
}

}  // namespace

std::vector<Structure> generated_structures(const SearchBounds& bounds, Scope scope, GenerationMode mode) {
  std::vector<Structure> out;
  if (scope == Scope::bispace) {
    for (std::size_t n = 1; n <= bounds.max_bispace_points; ++n) {
      for (const auto& x : generate_bispaces(n)) {
        Structure s = Structure::from_bispace(x);
        if (s.bilocale->total().size() <= bounds.max_elems) out.push_back(std::move(s));
      }
    }
    return out;
  }
  std::uint64_t salt = 0;
  for (const auto& lat : sorted_lattices(bounds, mode)) {
    if (scope == Scope::lattice) {
      out.push_back(Structure::from_lattice(lat));
      continue;
    }
    const GenerationMode sub = mode.exhaustive ? mode : GenerationMode::random(mode.seed + ++salt, mode.count);
    for (const auto& b : generate_bilocales(lat, sub)) out.push_back(Structure::from_bilocale(b));
  }
  return out;
}

std::optional<Counterexample> search_counterexample(std::string_view property, const SearchBounds& bounds,
                                                    std::uint64_t seed, bool exhaustive) {
  const PropertyCheck& check = find_check(property);
  const GenerationMode mode = exhaustive ? GenerationMode::full() : GenerationMode::random(seed, bounds.samples);
  for (const Structure& s : generated_structures(bounds, check.scope, mode)) {
    const Outcome o = evaluate_check(check, s);
    if (o.verdict == Verdict::fail) return Counterexample{check.id, s.id, serialize(s), o.detail};
  }
  return std::nullopt;
}

std::string serialize(const Structure& s) {
  std::string out;
  if (s.bispace) return serialize(*s.bispace);
  if (s.bilocale->name() == s.bilocale->total().name() && s.maps.empty()) {
    out = serialize(s.bilocale->total());
  } else {
    out = serialize(*s.bilocale);
  }
  std::set<std::string> written{s.bilocale->name()};
  for (const BilocalicMap& f : s.maps) {
    if (written.insert(f.target().name()).second) out += serialize(f.target());
    out += map_block(f);
  }
  return out;
}

std::vector<Structure> document_structures(const Document& doc) {
  std::vector<Structure> out;
  for (const auto& x : doc.bispaces) out.push_back(Structure::from_bispace(x));
  std::set<const FiniteLattice*> used;
  for (const auto& b : doc.bilocales) {
    used.insert(&b->total());
    Structure s = Structure::from_bilocale(b);
    for (const BilocalicMap& f : doc.bilocalic_maps) {
      if (&f.source() == b.get()) s.maps.push_back(f);
    }
    out.push_back(std::move(s));
  }
  for (const auto& l : doc.lattices) {
    if (!used.count(l.get())) out.push_back(Structure::from_lattice(l));
  }
  return out;
}

bool reproduces(const Counterexample& c) {
  const std::vector<Structure> parsed = document_structures(parse_document(c.serialized));
  if (parsed.empty()) return false;
  const Outcome o = evaluate_check(find_check(c.property), parsed.front());
  return o.verdict == Verdict::fail && o.detail == c.witness;
}

std::vector<SweepEntry> sweep_plan(const std::vector<const PropertyCheck*>& checks, const SearchBounds& bounds) {
  std::vector<const PropertyCheck*> lattice_checks, bilocale_checks, bispace_checks;
  for (const PropertyCheck* c : checks) {
    switch (c->scope) {
      case Scope::lattice: lattice_checks.push_back(c); break;
      case Scope::bispace: bispace_checks.push_back(c); break;
      default: bilocale_checks.push_back(c); break;
    }
  }
  std::vector<SweepEntry> plan;
  if (!lattice_checks.empty() || !bilocale_checks.empty()) {
    for (Structure& s : generated_structures(bounds, Scope::bilocale)) {
      const bool symmetric = s.bilocale->part(Part::first) == s.bilocale->total().all() &&
                             s.bilocale->part(Part::second) == s.bilocale->total().all();
      std::vector<const PropertyCheck*> cs;
      if (symmetric) cs = lattice_checks;
      cs.insert(cs.end(), bilocale_checks.begin(), bilocale_checks.end());
      if (!cs.empty()) plan.push_back(SweepEntry{std::move(s), std::move(cs)});
    }
  }
  if (!bispace_checks.empty()) {
    for (Structure& s : generated_structures(bounds, Scope::bispace)) plan.push_back(SweepEntry{std::move(s), bispace_checks});
  }
  return plan;
}

std::vector<PropertyReport> run_sweep(const std::vector<SweepEntry>& plan, const SuiteLimits& limits,
                                      unsigned threads) {
  std::vector<PropertyReport> reports(plan.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(plan.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < plan.size(); k = next++) {
      reports[k] = run_property_suite(plan[k].structure, plan[k].checks, limits);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return reports;
}

}  // namespace biloc
