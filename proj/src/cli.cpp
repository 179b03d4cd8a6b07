#include "biloc/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <ostream>

#include "biloc/constructions.hpp"
#include "biloc/search.hpp"

namespace biloc {

namespace {

constexpr std::array<std::string_view, 8> kVerbs = {"validate", "sublocales", "classify", "rmt",
                                                    "suite",    "search",     "convert",  "construct"};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Document load(const std::string& path) {
  Document doc = parse_file(path);
  if (doc.empty()) throw Error(ErrorCode::InvalidInput, path + " defines no structure");
  return doc;
}

Structure first_structure(const std::string& path) { return document_structures(load(path)).front(); }

std::shared_ptr<const Bilocale> first_bilocale(const std::string& path) { return first_structure(path).bilocale; }

void list_sublocales(std::ostream& out, const std::string& title, const std::vector<Sublocale>& subs) {
  out << title << ": " << subs.size() << "\n";
  for (const Sublocale& s : subs) out << "  " << describe(s) << "\n";
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Document doc = load(path);
  for (const auto& l : doc.lattices) out << "lattice " << l->name() << ": " << l->size() << " elements, frame\n";
  for (const auto& b : doc.bilocales) {
    const BilocaleClass k = classify_bilocale(*b);
    out << "bilocale " << b->name() << ": |L1|=" << b->part(Part::first).size()
        << " |L2|=" << b->part(Part::second).size() << " balanced=" << yes_no(k.balanced)
        << " symmetric=" << yes_no(k.symmetric) << " boolean=" << yes_no(k.boolean) << "\n";
  }
  for (const auto& x : doc.bispaces) {
    out << "bispace " << x->name() << ": " << x->points().size() << " points, |tau|=" << x->opens(Family::tau).size()
        << " sup-TD=" << yes_no(is_sup_td(*x)) << "\n";
  }
  for (const auto& f : doc.localic_maps) out << "map " << f.name() << ": localic\n";
  for (const auto& f : doc.bilocalic_maps) out << "map " << f.name() << ": bilocalic\n";
  return 0;
}

int cmd_sublocales(const std::string& path, bool oracle, std::ostream& out) {
  const Structure s = first_structure(path);
  const FiniteLattice& l = s.bilocale->total();
  const std::vector<Sublocale> subs = enumerate_sublocales(l);
  list_sublocales(out, "sublocales of " + l.name(), subs);
  if (!oracle) return 0;
  const std::vector<Sublocale> brute = enumerate_sublocales(l, EnumerationMode::brute);
  const bool agree = std::equal(subs.begin(), subs.end(), brute.begin(), brute.end(),
                                [](const Sublocale& a, const Sublocale& b) { return a.members() == b.members(); });
  out << "oracle: " << (agree ? "agree" : "DISAGREE") << " (" << brute.size() << " by brute force)\n";
  return agree ? 0 : 1;
}

int cmd_classify(const std::string& path, IndexPair pair, std::ostream& out) {
  const auto b = first_bilocale(path);
  const SublocaleSpace space(b->total());
  const BilocaleClass k = classify_bilocale(*b);
  out << "bilocale " << b->name() << " pair " << pair.str() << ": balanced=" << yes_no(k.balanced)
      << " symmetric=" << yes_no(k.symmetric) << " boolean=" << yes_no(k.boolean) << "\n";
  std::vector<Sublocale> nd, clopen_nd, remote, weakly_remote;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Sublocale s = space.at(i);
    if (is_ij_nowhere_dense(*b, s, pair)) nd.push_back(s);
    if (is_clopen_ij_nowhere_dense(*b, s, pair)) clopen_nd.push_back(s);
    if (is_ij_remote(*b, s, pair, false, RemoteMode::characterization, space)) remote.push_back(s);
    if (is_ij_remote(*b, s, pair, true, RemoteMode::characterization, space)) weakly_remote.push_back(s);
  }
  list_sublocales(out, pair.str() + "-nowhere dense", nd);
  list_sublocales(out, "clopen " + pair.str() + "-nowhere dense", clopen_nd);
  list_sublocales(out, pair.str() + "-remote", remote);
  list_sublocales(out, "weakly " + pair.str() + "-remote", weakly_remote);
  return 0;
}

int cmd_rmt(const std::string& path, IndexPair pair, const std::string& variant, std::ostream& out) {
  const auto b = first_bilocale(path);
  const RmtVariant v = variant == "strong" ? RmtVariant::strong : RmtVariant::weak;
  out << describe(rmt(*b, pair, v)) << "\n";
  return 0;
}

void print_human(const PropertyReport& r, std::ostream& out) {
  auto note = [](const CheckResult& c) { return c.check->note.empty() ? "" : "  [" + c.check->note + "]"; };
  std::size_t pass = 0, fail = 0, expected = 0, skip = 0;
  out << "structure " << r.structure << "\n";
  for (const CheckResult& c : r.results) {
    switch (c.verdict) {
      case Verdict::pass:
        ++pass;
        out << "  PASS  " << c.check->id << note(c) << "\n";
        break;
      case Verdict::skip:
        ++skip;
        out << "  SKIP  " << c.check->id << " (" << c.detail << ")\n";
        break;
      case Verdict::fail:
        ++fail;
        if (c.check->expected_fail) ++expected;
        out << "  FAIL  " << c.check->id << (c.check->expected_fail ? " [expected]" : "") << "  witness "
            << c.detail << note(c) << "\n";
        break;
    }
  }
  out << "  " << pass << " passed, " << fail << " failed (" << expected << " expected), " << skip << " skipped\n";
}

struct SuiteOptions {
  std::string file;
  std::string checks = "all";
  std::string format = "human";
  bool generated = false;
  std::size_t max_points = 4;
  std::size_t max_elems = 16;
  std::size_t bispace_points = 4;
  unsigned threads = 0;
};

int cmd_suite(const SuiteOptions& o, std::ostream& out) {
  const std::vector<const PropertyCheck*> checks = select_checks(o.checks);
  const bool machine = o.format == "machine";
  if (!o.generated) {
    bool bad = false;
    for (const Structure& s : document_structures(load(o.file))) {
      const PropertyReport r = run_property_suite(s, checks);
      if (machine) {
        for (const CheckResult& c : r.results) out << format_check_line(c) << "\n";
      } else {
        print_human(r, out);
      }
      bad = bad || r.has_unexpected_failure();
    }
    return bad ? 1 : 0;
  }
  SearchBounds bounds;
  bounds.max_points = o.max_points;
  bounds.max_elems = o.max_elems;
  bounds.max_bispace_points = o.bispace_points;
  const std::vector<SweepEntry> plan = sweep_plan(checks, bounds);
  SweepSummary summary;
  for (const PropertyReport& r : run_sweep(plan, {}, o.threads)) {
    summary.add(r);
    if (machine) {
      for (const CheckResult& c : r.results) out << format_check_line(c) << "\n";
    }
  }
  if (!machine) {
    out << "sweep over " << summary.structures << " structures\n";
    for (const std::string& id : summary.check_order) {
      const SweepSummary::Tally& t = summary.tallies.at(id);
      out << "  " << id << (find_check(id).expected_fail ? " [expected-fail]" : "") << " pass=" << t.pass
          << " fail=" << t.fail << " skip=" << t.skip;
      if (t.fail > 0) out << " first=" << t.first_failure;
      out << "\n";
    }
  }
  const std::vector<std::string> problems = summary.problems();
  for (const std::string& p : problems) out << "PROBLEM " << p << "\n";
  return problems.empty() ? 0 : 1;
}

int cmd_search(const std::string& prop, const SearchBounds& bounds, std::uint64_t seed, bool exhaustive,
               std::ostream& out) {
  const std::optional<Counterexample> c = search_counterexample(prop, bounds, seed, exhaustive);
  if (!c) {
    out << "none " << prop << "\n";
    return 0;
  }
  out << "counterexample " << c->property << " " << c->structure << " witness=" << c->witness << "\n"
      << c->serialized;
  return 1;
}

int cmd_convert(const std::string& path, std::ostream& out) {
  const Document doc = load(path);
  if (doc.bispaces.empty()) throw Error(ErrorCode::InvalidInput, path + " defines no bispace");
  for (const auto& x : doc.bispaces) out << serialize(*to_bilocale(*x));
  return 0;
}

int cmd_construct(const std::string& what, const std::string& path, std::ostream& out) {
  const auto b = first_bilocale(path);
  if (what == "congruence") {
    out << serialize(*congruence_bilocale(b->total_ptr()).bilocale);
  } else {
    out << serialize(*ideal_bilocale(*b).bilocale);
  }
  return 0;
}

IndexPair pair_of(int i, int j) { return IndexPair::make(i, j); }

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  const std::string verb = args.front();
  CLI::App app{"biloc " + verb};
  app.name("biloc " + verb);
  std::string file, variant = "weak", what, prop;
  int i = 1, j = 2;
  bool oracle = false, exhaustive = false;
  std::uint64_t seed = 0;
  SuiteOptions so;
  SearchBounds bounds;

  if (verb == "validate" || verb == "convert") {
    app.add_option("file", file, "input file")->required();
  } else if (verb == "sublocales") {
    app.add_option("file", file, "input file")->required();
    app.add_flag("--oracle", oracle, "compare with brute-force enumeration");
  } else if (verb == "classify" || verb == "rmt") {
    app.add_option("file", file, "input file")->required();
    app.add_option("--i", i, "first index")->required()->check(CLI::Range(1, 2));
    app.add_option("--j", j, "second index")->required()->check(CLI::Range(1, 2));
    if (verb == "rmt") {
      app.add_option("--variant", variant, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
    }
  } else if (verb == "suite") {
    app.add_option("file", so.file, "input file");
    app.add_option("--checks", so.checks, "all or comma-separated check ids");
    app.add_option("--format", so.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    app.add_flag("--generated", so.generated, "sweep generated structures instead of a file");
    app.add_option("--max-points", so.max_points, "poset points for --generated")->check(CLI::Range(1, 5));
    app.add_option("--max-elems", so.max_elems, "lattice size cap for --generated")->check(CLI::Range(2, 64));
    app.add_option("--bispace-points", so.bispace_points, "bispace points for --generated")->check(CLI::Range(0, 4));
    app.add_option("--threads", so.threads, "worker threads for --generated (0 = hardware)");
  } else if (verb == "search") {
    app.add_option("--prop", prop, "check id")->required();
    app.add_option("--max-elems", bounds.max_elems, "lattice size cap")->required()->check(CLI::Range(2, 64));
    app.add_option("--max-points", bounds.max_points, "poset points")->check(CLI::Range(1, 5));
    app.add_option("--samples", bounds.samples, "random mode: posets drawn");
    app.add_option("--seed", seed, "random seed");
    app.add_flag("--exhaustive", exhaustive, "sweep every structure within bounds");
  } else {
    app.add_option("what", what, "congruence or ideal")->required()->check(CLI::IsMember({"congruence", "ideal"}));
    app.add_option("file", file, "input file")->required();
  }

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }

  if (verb == "validate") return cmd_validate(file, out);
  if (verb == "sublocales") return cmd_sublocales(file, oracle, out);
  if (verb == "classify") return cmd_classify(file, pair_of(i, j), out);
  if (verb == "rmt") return cmd_rmt(file, pair_of(i, j), variant, out);
  if (verb == "suite") {
    if (!so.generated && so.file.empty()) throw Error(ErrorCode::InvalidInput, "suite needs a file or --generated");
    return cmd_suite(so, out);
  }
  if (verb == "search") {
    return cmd_search(prop, bounds, seed, exhaustive, out);
  }
  if (verb == "convert") return cmd_convert(file, out);
  return cmd_construct(what, file, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty() || std::find(kVerbs.begin(), kVerbs.end(), args.front()) == kVerbs.end()) {
      throw Error(ErrorCode::UnknownVerb, args.empty() ? "no verb given" : "'" + args.front() + "'");
    }
    return dispatch(args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace biloc
