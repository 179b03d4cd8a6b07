#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "biloc/bilocale.hpp"
#include "biloc/bispace.hpp"
#include "biloc/lattice.hpp"
#include "biloc/maps.hpp"

namespace biloc {

/// Everything defined in one text file, in block order per kind.
///
/// Grammar (line oriented; `#` at line start or after whitespace begins a
/// comment, so labels like `theta_S#3` survive):
///
///     lattice NAME / elements e1 .. en / order a<=b / end
///     bilocale NAME / use LATTICE | inline lattice block / part1 .. / part2 .. / end
///     map NAME : SOURCE -> TARGET / send e -> e' / end
///     bispace NAME / points p1 .. / open1 {p,..} / open2 {p,..} / generate on|off / end
///
/// A map between two bilocale names is bilocalic, otherwise localic between
/// lattice names.
struct Document {
  std::vector<std::shared_ptr<const FiniteLattice>> lattices;
  std::vector<std::shared_ptr<const Bilocale>> bilocales;
  std::vector<std::shared_ptr<const Bispace>> bispaces;
  std::vector<LocalicMap> localic_maps;
  std::vector<BilocalicMap> bilocalic_maps;

  std::shared_ptr<const FiniteLattice> find_lattice(std::string_view name) const;
  std::shared_ptr<const Bilocale> find_bilocale(std::string_view name) const;
  bool empty() const {
    return lattices.empty() && bilocales.empty() && bispaces.empty() && localic_maps.empty() &&
           bilocalic_maps.empty();
  }
};

/// Syntax errors throw ParseError(line); semantic errors keep their own code
/// with the offending line prefixed to the message.
Document parse_document(std::string_view text, std::size_t max_elements = kDefaultMaxElements);
/// Throws InvalidInput when the file cannot be read.
Document parse_file(const std::string& path, std::size_t max_elements = kDefaultMaxElements);

std::string serialize(const FiniteLattice& lattice);
/// The total part as a lattice block followed by the bilocale block.
std::string serialize(const Bilocale& bilocale);
/// The map block only.
std::string serialize(const LocalicMap& map);
/// Source and target bilocales (the target only when it differs) and the map.
std::string serialize(const BilocalicMap& map);
std::string serialize(const Bispace& bispace);

}  // namespace biloc
