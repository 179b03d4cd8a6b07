#include "biloc/text_format.hpp"

#include <fstream>
#include <sstream>

namespace biloc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::string strip_comment(std::string_view line) {
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '#' && (k == 0 || line[k - 1] == ' ' || line[k - 1] == '\t')) return std::string(line.substr(0, k));
  }
  return std::string(line);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream in(strip_comment(text.substr(start, end - start)));
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens, std::size_t from) {
  std::string out;
  for (std::size_t k = from; k < tokens.size(); ++k) out += tokens[k];
  return out;
}

std::vector<std::string> split(const std::string& s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

// Runs `body`, re-raising library errors with the block's line number.
template <class F>
auto at_line(std::size_t line, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    throw Error(e.code(), "line " + std::to_string(line) + ": " + message);
  }
}

class Parser {
 public:
  Parser(std::vector<Line> lines, std::size_t max_elements) : lines_(std::move(lines)), max_(max_elements) {}

  Document run() {
    while (pos_ < lines_.size()) {
      const Line& head = lines_[pos_];
      const std::string& kw = head.tokens[0];
      if (kw == "lattice") {
        doc_.lattices.push_back(lattice_block());
      } else if (kw == "bilocale") {
        doc_.bilocales.push_back(bilocale_block());
      } else if (kw == "map") {
        map_block();
      } else if (kw == "bispace") {
        doc_.bispaces.push_back(bispace_block());
      } else {
        throw ParseError(head.number, "unexpected '" + kw + "' outside a block");
      }
    }
    return std::move(doc_);
  }

 private:
  const Line& next(std::string_view block) {
    if (pos_ >= lines_.size()) {
      throw ParseError(lines_.empty() ? 1 : lines_.back().number, "missing 'end' for " + std::string(block));
    }
    return lines_[pos_++];
  }

  static std::string block_name(const Line& head) {
    if (head.tokens.size() != 2) throw ParseError(head.number, "expected '" + head.tokens[0] + " NAME'");
    return head.tokens[1];
  }

  std::shared_ptr<const FiniteLattice> lattice_block() {
    const Line& head = next("lattice");
    const std::string name = block_name(head);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> order;
    bool have_elements = false;
    while (true) {
      const Line& line = next("lattice " + name);
      const std::string& kw = line.tokens[0];
      if (kw == "end") break;
      if (kw == "elements") {
        if (have_elements) throw ParseError(line.number, "second 'elements' line");
        labels.assign(line.tokens.begin() + 1, line.tokens.end());
        have_elements = true;
      } else if (kw == "order") {
        const std::vector<std::string> chain = split(join_tokens(line.tokens, 1), "<=");
        if (chain.size() < 2) throw ParseError(line.number, "expected 'order a<=b'");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
          if (chain[k].empty() || chain[k + 1].empty()) throw ParseError(line.number, "empty label in order");
          order.emplace_back(chain[k], chain[k + 1]);
        }
      } else {
        throw ParseError(line.number, "unknown lattice keyword '" + kw + "'");
      }
    }
    if (!have_elements) throw ParseError(head.number, "lattice " + name + " has no 'elements' line");
    return at_line(head.number, [&] {
      return std::make_shared<const FiniteLattice>(FiniteLattice::build(name, labels, order, max_));
    });
  }

  std::shared_ptr<const Bilocale> bilocale_block() {
    const Line& head = next("bilocale");
    const std::string name = block_name(head);
    std::shared_ptr<const FiniteLattice> total;
    std::vector<std::string> parts[2];
    bool seen[2] = {false, false};
    while (true) {
      if (pos_ < lines_.size() && lines_[pos_].tokens[0] == "lattice") {
        if (total) throw ParseError(lines_[pos_].number, "bilocale " + name + " already has a total part");
        total = lattice_block();
        doc_.lattices.push_back(total);
        continue;
      }
      const Line& line = next("bilocale " + name);
      const std::string& kw = line.tokens[0];
      if (kw == "end") break;
      if (kw == "use") {
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'use LATTICE'");
        if (total) throw ParseError(line.number, "bilocale " + name + " already has a total part");
        total = doc_.find_lattice(line.tokens[1]);
        if (!total) throw ParseError(line.number, "unknown lattice '" + line.tokens[1] + "'");
      } else if (kw == "part1" || kw == "part2") {
        const int k = kw == "part1" ? 0 : 1;
        if (seen[k]) throw ParseError(line.number, "second '" + kw + "' line");
        seen[k] = true;
        parts[k].assign(line.tokens.begin() + 1, line.tokens.end());
      } else {
        throw ParseError(line.number, "unknown bilocale keyword '" + kw + "'");
      }
    }
    if (!total) throw ParseError(head.number, "bilocale " + name + " has no total part");
    if (!seen[0] || !seen[1]) throw ParseError(head.number, "bilocale " + name + " needs part1 and part2");
    return at_line(head.number, [&] {
      ElementSet sets[2];
      for (int k = 0; k < 2; ++k) {
        for (const std::string& label : parts[k]) sets[k].insert(total->at(label));
      }
      return std::make_shared<const Bilocale>(Bilocale::validate(name, total, sets[0], sets[1]));
    });
  }

  void map_block() {
    const Line& head = next("map");
    const auto& t = head.tokens;
    if (t.size() != 6 || t[2] != ":" || t[4] != "->") {
      throw ParseError(head.number, "expected 'map NAME : SOURCE -> TARGET'");
    }
    const std::string name = t[1];
    std::vector<std::pair<std::string, std::string>> sends;
    std::vector<std::size_t> numbers;
    while (true) {
      const Line& line = next("map " + name);
      if (line.tokens[0] == "end") break;
      if (line.tokens[0] != "send") throw ParseError(line.number, "unknown map keyword '" + line.tokens[0] + "'");
      const std::vector<std::string> sides = split(join_tokens(line.tokens, 1), "->");
      if (sides.size() != 2 || sides[0].empty() || sides[1].empty()) {
        throw ParseError(line.number, "expected 'send e -> e2'");
      }
      sends.emplace_back(sides[0], sides[1]);
      numbers.push_back(line.number);
    }
    auto sb = doc_.find_bilocale(t[3]);
    auto tb = doc_.find_bilocale(t[5]);
    std::shared_ptr<const FiniteLattice> source = sb && tb ? sb->total_ptr() : doc_.find_lattice(t[3]);
    std::shared_ptr<const FiniteLattice> target = sb && tb ? tb->total_ptr() : doc_.find_lattice(t[5]);
    if (!source) throw ParseError(head.number, "unknown source '" + t[3] + "'");
    if (!target) throw ParseError(head.number, "unknown target '" + t[5] + "'");
    std::vector<Element> table(source->size());
    std::vector<bool> given(source->size(), false);
    for (std::size_t k = 0; k < sends.size(); ++k) {
      const auto from = source->find(sends[k].first);
      const auto to = target->find(sends[k].second);
      if (!from) throw ParseError(numbers[k], "unknown source element '" + sends[k].first + "'");
      if (!to) throw ParseError(numbers[k], "unknown target element '" + sends[k].second + "'");
      if (given[*from]) throw ParseError(numbers[k], "'" + sends[k].first + "' is sent twice");
      given[*from] = true;
      table[*from] = *to;
    }
    for (Element x = 0; x < given.size(); ++x) {
      if (!given[x]) throw ParseError(head.number, "map " + name + " does not send '" + source->label(x) + "'");
    }
    at_line(head.number, [&] {
      if (sb && tb) {
        doc_.bilocalic_maps.push_back(BilocalicMap::validate(name, sb, tb, table));
      } else {
        doc_.localic_maps.push_back(LocalicMap::validate(name, source, target, table));
      }
      return 0;
    });
  }

  std::shared_ptr<const Bispace> bispace_block() {
    const Line& head = next("bispace");
    const std::string name = block_name(head);
    std::vector<std::string> points;
    std::vector<std::pair<int, std::pair<std::size_t, std::vector<std::string>>>> opens;
    bool generate = true;
    bool have_points = false;
    while (true) {
      const Line& line = next("bispace " + name);
      const std::string& kw = line.tokens[0];
      if (kw == "end") break;
      if (kw == "points") {
        if (have_points) throw ParseError(line.number, "second 'points' line");
        points.assign(line.tokens.begin() + 1, line.tokens.end());
        have_points = true;
      } else if (kw == "open1" || kw == "open2") {
        const std::string body = join_tokens(line.tokens, 1);
        if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
          throw ParseError(line.number, "expected '" + kw + " {p,...}'");
        }
        std::vector<std::string> members;
        if (body.size() > 2) members = split(body.substr(1, body.size() - 2), ",");
        opens.push_back({kw == "open1" ? 0 : 1, {line.number, members}});
      } else if (kw == "generate") {
        if (line.tokens.size() != 2 || (line.tokens[1] != "on" && line.tokens[1] != "off")) {
          throw ParseError(line.number, "expected 'generate on|off'");
        }
        generate = line.tokens[1] == "on";
      } else {
        throw ParseError(line.number, "unknown bispace keyword '" + kw + "'");
      }
    }
    if (!have_points) throw ParseError(head.number, "bispace " + name + " has no 'points' line");
    std::vector<PointSet> families[2];
    for (const auto& [k, spec] : opens) {
      PointSet set;
      for (const std::string& p : spec.second) {
        std::size_t idx = 0;
        while (idx < points.size() && points[idx] != p) ++idx;
        if (idx == points.size()) throw ParseError(spec.first, "unknown point '" + p + "'");
        set.insert(static_cast<std::uint32_t>(idx));
      }
      families[k].push_back(set);
    }
    return at_line(head.number, [&] {
      return std::make_shared<const Bispace>(Bispace::build(name, points, families[0], families[1], generate));
    });
  }

  std::vector<Line> lines_;
  std::size_t max_;
  std::size_t pos_ = 0;
  Document doc_;
};

}  // namespace

std::shared_ptr<const FiniteLattice> Document::find_lattice(std::string_view name) const {
  for (auto it = lattices.rbegin(); it != lattices.rend(); ++it) {
    if ((*it)->name() == name) return *it;
  }
  return nullptr;
}

std::shared_ptr<const Bilocale> Document::find_bilocale(std::string_view name) const {
  for (auto it = bilocales.rbegin(); it != bilocales.rend(); ++it) {
    if ((*it)->name() == name) return *it;
  }
  return nullptr;
}

Document parse_document(std::string_view text, std::size_t max_elements) {
  return Parser(tokenize(text), max_elements).run();
}

Document parse_file(const std::string& path, std::size_t max_elements) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), max_elements);
}

std::string serialize(const FiniteLattice& lattice) {
  std::string out = "lattice " + lattice.name() + "\nelements";
  for (const std::string& label : lattice.labels()) out += " " + label;
  out += "\n";
  for (const auto& [x, y] : lattice.covers()) out += "order " + lattice.label(x) + "<=" + lattice.label(y) + "\n";
  return out + "end\n";
}

std::string serialize(const Bilocale& b) {
  const FiniteLattice& lat = b.total();
  std::string out = serialize(lat);
  out += "bilocale " + b.name() + "\nuse " + lat.name() + "\n";
  for (Part p : {Part::first, Part::second}) {
    out += "part" + std::to_string(to_int(p));
    for (Element e : b.part(p)) out += " " + lat.label(e);
    out += "\n";
  }
  return out + "end\n";
}

std::string serialize(const LocalicMap& f) {
  std::string out = "map " + f.name() + " : " + f.source().name() + " -> " + f.target().name() + "\n";
  for (Element x = 0; x < f.source().size(); ++x) {
    out += "send " + f.source().label(x) + " -> " + f.target().label(f(x)) + "\n";
  }
  return out + "end\n";
}

std::string serialize(const BilocalicMap& f) {
  std::string out = serialize(f.source());
  if (&f.source() != &f.target()) out += serialize(f.target());
  out += "map " + f.name() + " : " + f.source().name() + " -> " + f.target().name() + "\n";
  for (Element x = 0; x < f.source().total().size(); ++x) {
    out += "send " + f.source().total().label(x) + " -> " + f.target().total().label(f(x)) + "\n";
  }
  return out + "end\n";
}

std::string serialize(const Bispace& b) {
  std::string out = "bispace " + b.name() + "\npoints";
  for (const std::string& p : b.points()) out += " " + p;
  out += "\n";
  for (Family f : {Family::tau1, Family::tau2}) {
    for (PointSet u : b.opens(f)) {
      std::string body;
      for (std::uint32_t p : u) body += (body.empty() ? "" : ",") + b.points()[p];
      out += std::string(f == Family::tau1 ? "open1" : "open2") + " {" + body + "}\n";
    }
  }
  return out + "generate off\nend\n";
}

}  // namespace biloc
