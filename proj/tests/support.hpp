#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>

#include "biloc/bilocale.hpp"
#include "biloc/text_format.hpp"

namespace biloc::test {

inline std::string fixture(std::string_view name) { return std::string(BILOC_FIXTURES) + "/" + std::string(name); }

inline Document load(std::string_view name) { return parse_file(fixture(name)); }

inline std::shared_ptr<const Bilocale> load_bilocale(std::string_view name) {
  return load(name).bilocales.front();
}

inline std::shared_ptr<const Bilocale> pt() { return load_bilocale("PT.biloc"); }
inline std::shared_ptr<const Bilocale> c3() { return load_bilocale("C3.biloc"); }
inline std::shared_ptr<const Bilocale> b4() { return load_bilocale("B4.biloc"); }

inline ElementSet set_of(const FiniteLattice& l, std::initializer_list<std::string_view> labels) {
  ElementSet s;
  for (std::string_view x : labels) s.insert(l.at(x));
  return s;
}

inline std::shared_ptr<const FiniteLattice> chain3() {
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::build("C3", {"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}));
}

inline std::shared_ptr<const FiniteLattice> diamond_m3() {
  return std::make_shared<const FiniteLattice>(FiniteLattice::build(
      "M3", {"0", "x", "y", "z", "1"}, {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}));
}

inline std::shared_ptr<const FiniteLattice> point() {
  return std::make_shared<const FiniteLattice>(FiniteLattice::build("P1", {"0"}, {}));
}

}  // namespace biloc::test
