/*
  exceptional.hpp - named nilpotent orbit tables for G2, F4, E6, E7, E8,
  loaded from the bundled data files and validated against the recomputed
  orbit dimensions.
*/

#ifndef COXBLOCK_EXCEPTIONAL_HPP
#define COXBLOCK_EXCEPTIONAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxblock/data.hpp"
#include "coxblock/weighted.hpp"

namespace coxblock {

struct ExceptionalOrbit {
  std::string name;
  std::vector<Int> diagram;
  Int dim = 0;
};

inline bool is_exceptional_family(Family f) {
  return f == Family::E || f == Family::F || f == Family::G;
}

inline std::string orbit_table_filename(Family f, int rank) {
  std::string fam(1, static_cast<char>(tolower(static_cast<char>(f))));
  return "orbits_" + fam + std::to_string(rank) + ".txt";
}

// Load and validate one exceptional table.  Dimension entries in the file
// are re-derived from the weights and must agree.
inline std::vector<ExceptionalOrbit> exceptional_orbit_table(const RootSystem& rs,
                                                             const std::string& dir_override = "") {
  Family f = rs.type().family;
  if (!is_exceptional_family(f))
    throw std::invalid_argument("exceptional_orbit_table: classical type " + rs.type().str());
  std::string path = data_dir(dir_override) + "/" + orbit_table_filename(f, rs.rank());
  DataFile file = load_data_file(path);
  std::vector<ExceptionalOrbit> out;
  for (size_t k = 0; k < file.lines.size(); ++k) {
    int line = file.line_numbers[k];
    auto fields = detail::split(file.lines[k], '|');
    if (fields.size() != 3) throw DataError(path, line, "expected name | weights | dim");
    ExceptionalOrbit orbit;
    orbit.name = detail::strip(fields[0]);
    orbit.diagram = detail::parse_int_list(fields[1], path, line);
    orbit.dim = std::stoll(detail::strip(fields[2]));
    if (static_cast<int>(orbit.diagram.size()) != rs.rank())
      throw DataError(path, line, "weight vector has wrong length");
    for (Int w : orbit.diagram)
      if (w < 0 || w > 2) throw DataError(path, line, "weight outside {0,1,2}");
    if (orbit_dimension_formula(rs, orbit.diagram) != orbit.dim)
      throw DataError(path, line, "stored dimension disagrees with the weight data");
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::optional<ExceptionalOrbit> lookup_orbit(const std::vector<ExceptionalOrbit>& table,
                                                    const std::string& name) {
  std::string want = name == "regular" ? "" : name;
  for (const auto& orbit : table) {
    if (orbit.name == name) return orbit;
  }
  if (name == "regular") {
    // the regular orbit is the all-2 diagram
    for (const auto& orbit : table)
      if (std::all_of(orbit.diagram.begin(), orbit.diagram.end(), [](Int w) { return w == 2; }))
        return orbit;
  }
  return std::nullopt;
}

inline std::optional<ExceptionalOrbit> lookup_orbit_by_diagram(
    const std::vector<ExceptionalOrbit>& table, const std::vector<Int>& diagram) {
  for (const auto& orbit : table)
    if (orbit.diagram == diagram) return orbit;
  return std::nullopt;
}

// Lazily loaded registry of the bundled tables, keyed by (family, rank).
class OrbitTables {
public:
  explicit OrbitTables(std::string dir_override = "") : dir_(std::move(dir_override)) {}

  const std::vector<ExceptionalOrbit>& table(Family f, int rank) const {
    auto key = std::make_pair(f, rank);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      RootSystem rs(CartanType{f, rank, 1});
      it = cache_.emplace(key, exceptional_orbit_table(rs, dir_)).first;
    }
    return it->second;
  }

private:
  std::string dir_;
  mutable std::map<std::pair<Family, int>, std::vector<ExceptionalOrbit>> cache_;
};

}  // namespace coxblock

#endif
