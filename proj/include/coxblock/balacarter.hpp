/*
  balacarter.hpp - generation of all weighted Dynkin diagrams of a type
  from pairs (Levi subset, distinguished even diagram), by solving for the
  grading element in the span of the Levi coroots and conjugating it into
  the dominant chamber.  Serves as the independent oracle for the bundled
  exceptional orbit tables.
*/

#ifndef COXBLOCK_BALACARTER_HPP
#define COXBLOCK_BALACARTER_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxblock/levi.hpp"
#include "coxblock/weighted.hpp"

namespace coxblock {

// Even {0,2} diagrams with dim g(0) = dim g(2); these are exactly the
// weighted diagrams of the distinguished orbits.  Sorted by descending
// orbit dimension.
inline std::vector<std::vector<Int>> distinguished_diagrams(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<std::vector<Int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Int> d(n, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) d[i] = 2;
    Int z0 = 0, z2 = 0;
    for (const Root& r : rs.positive_roots()) {
      Int w = root_weight(d, r);
      if (w == 0) ++z0;
      else if (w == 2) ++z2;
    }
    if (n + 2 * z0 == z2) out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return orbit_dimension_formula(rs, a) > orbit_dimension_formula(rs, b);
  });
  return out;
}

namespace detail {

// Solve sum_i c_i * C[i][j] = rhs_j over the subset I (Cartan submatrices
// are invertible), then return a_j = alpha_j(H) for every node j.
inline std::vector<Rat> grading_values(const RootSystem& rs, const std::vector<int>& I,
                                       const std::vector<Int>& rhs_on_I) {
  int k = static_cast<int>(I.size());
  int n = rs.rank();
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
  for (int row = 0; row < k; ++row) {
    for (int col = 0; col < k; ++col) m[row][col] = Rat(rs.cartan(I[col], I[row]));
    m[row][k] = Rat(rhs_on_I[row]);
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && m[piv][col] == Rat(0)) ++piv;
    if (piv == k) throw std::logic_error("grading_values: singular Cartan submatrix");
    std::swap(m[col], m[piv]);
    Rat p = m[col][col];
    for (auto& v : m[col]) v = v / p;
    for (int row = 0; row < k; ++row) {
      if (row == col || m[row][col] == Rat(0)) continue;
      Rat f = m[row][col];
      for (int t = 0; t <= k; ++t) m[row][t] = m[row][t] - f * m[col][t];
    }
  }
  std::vector<Rat> a(n, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int t = 0; t < k; ++t) a[j] = a[j] + m[t][k] * Rat(rs.cartan(I[t], j));
  return a;
}

// Reflect the grading values into the dominant chamber.
inline std::vector<Int> dominant_diagram(const RootSystem& rs, std::vector<Rat> a) {
  int n = rs.rank();
  while (true) {
    int j = -1;
    for (int t = 0; t < n; ++t)
      if (a[t] < Rat(0)) { j = t; break; }
    if (j < 0) break;
    Rat aj = a[j];
    for (int t = 0; t < n; ++t) a[t] = a[t] - aj * Rat(rs.cartan(j, t));
  }
  std::vector<Int> d(n);
  for (int t = 0; t < n; ++t) {
    if (!a[t].is_integer()) throw std::logic_error("dominant_diagram: non-integral weight");
    d[t] = a[t].num();
    if (d[t] < 0 || d[t] > 2) throw std::logic_error("dominant_diagram: weight outside {0,1,2}");
  }
  return d;
}

}  // namespace detail

struct GeneratedOrbit {
  std::vector<Int> diagram;
  Int dim = 0;
  // one Bala-Carter provenance: per component (family, rank, index into the
  // component's distinguished list sorted by descending dimension, all-short flag)
  struct Component {
    Family family;
    int rank;
    int distinguished_index;
    bool all_short;
    bool operator<(const Component& o) const {
      if (rank != o.rank) return rank > o.rank;
      if (family != o.family) return family < o.family;
      if (all_short != o.all_short) return all_short < o.all_short;
      return distinguished_index < o.distinguished_index;
    }
    bool operator==(const Component&) const = default;
  };
  std::vector<Component> provenance;
};

// Every nilpotent orbit of the (split) type, as a map diagram -> data.
inline std::map<std::vector<Int>, GeneratedOrbit> generate_orbits(const RootSystem& rs) {
  int n = rs.rank();
  auto nrm = simple_norms(rs.type().family, n);
  Int lo = *std::min_element(nrm.begin(), nrm.end());
  bool two_lengths = *std::max_element(nrm.begin(), nrm.end()) != lo;

  // distinguished lists per abstract component type, cached
  std::map<std::pair<Family, int>, std::vector<std::vector<Int>>> dist_cache;
  auto dist_of = [&](Family f, int k) -> const std::vector<std::vector<Int>>& {
    auto key = std::make_pair(f, k);
    auto it = dist_cache.find(key);
    if (it == dist_cache.end()) {
      RootSystem sub(CartanType{f, k, 1});
      it = dist_cache.emplace(key, distinguished_diagrams(sub)).first;
    }
    return it->second;
  };

  std::map<std::vector<Int>, GeneratedOrbit> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) I.push_back(i);
    std::vector<std::vector<int>> comps = diagram_components(rs, I);
    std::vector<ComponentType> types;
    for (const auto& c : comps) types.push_back(classify_component(rs, c));

    // product over per-component distinguished choices
    std::vector<size_t> counts;
    for (const auto& ct : types) counts.push_back(dist_of(ct.family, ct.rank).size());
    std::vector<size_t> pick(types.size(), 0);
    while (true) {
      std::vector<Int> rhs(I.size(), 0);
      GeneratedOrbit orbit;
      for (size_t ci = 0; ci < types.size(); ++ci) {
        const auto& ct = types[ci];
        const auto& dd = dist_of(ct.family, ct.rank)[pick[ci]];
        for (size_t t = 0; t < ct.order.size(); ++t) {
          auto pos = std::find(I.begin(), I.end(), ct.order[t]) - I.begin();
          rhs[static_cast<size_t>(pos)] = dd[t];
        }
        bool all_short = two_lengths;
        for (int node : ct.order)
          if (nrm[node] != lo) all_short = false;
        orbit.provenance.push_back(
            {ct.family, ct.rank, static_cast<int>(pick[ci]), all_short});
      }
      std::vector<Int> diagram;
      if (I.empty()) {
        diagram.assign(n, 0);
      } else {
        auto a = detail::grading_values(rs, I, rhs);
        diagram = detail::dominant_diagram(rs, std::move(a));
      }
      orbit.diagram = diagram;
      orbit.dim = orbit_dimension_formula(rs, diagram);
      std::sort(orbit.provenance.begin(), orbit.provenance.end());
      auto it = out.find(diagram);
      if (it == out.end()) out.emplace(std::move(diagram), std::move(orbit));

      // advance the mixed-radix picker
      size_t ci = 0;
      for (; ci < pick.size(); ++ci) {
        if (++pick[ci] < counts[ci]) break;
        pick[ci] = 0;
      }
      if (ci == pick.size()) break;
    }
  }
  return out;
}

}  // namespace coxblock

#endif
