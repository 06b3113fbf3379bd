/*
  weighted.hpp - weighted Dynkin diagrams: weights on simple roots in
  {0,1,2}, extended additively to all roots; weight filtrations, orbit
  dimension, the index-condition parity and character support.
*/

#ifndef COXBLOCK_WEIGHTED_HPP
#define COXBLOCK_WEIGHTED_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxblock/rootsystem.hpp"

namespace coxblock {

struct WeightedDynkinDiagram {
  std::vector<Int> weights;  // indexed by simple nodes, each in {0,1,2}

  explicit WeightedDynkinDiagram(std::vector<Int> w) : weights(std::move(w)) {
    for (Int v : weights)
      if (v < 0 || v > 2) throw std::invalid_argument("diagram weight outside {0,1,2}");
  }
  bool operator==(const WeightedDynkinDiagram&) const = default;
};

inline Int root_weight(const std::vector<Int>& weights, const Root& r) {
  Int w = 0;
  for (size_t i = 0; i < weights.size(); ++i) w += weights[i] * r[i];
  return w;
}

struct RootWeightSets {
  // positive roots by exact weight, and the filtration Phi+_{>= w}
  std::map<Int, std::vector<Root>> by_weight;
  std::vector<Root> at_least(Int w) const {
    std::vector<Root> out;
    for (const auto& [v, roots] : by_weight)
      if (v >= w) out.insert(out.end(), roots.begin(), roots.end());
    return out;
  }
  size_t count_eq(Int w) const {
    auto it = by_weight.find(w);
    return it == by_weight.end() ? 0 : it->second.size();
  }
};

inline RootWeightSets root_weight_sets(const RootSystem& rs, const WeightedDynkinDiagram& d) {
  RootWeightSets out;
  for (const Root& r : rs.positive_roots()) out.by_weight[root_weight(d.weights, r)].push_back(r);
  return out;
}

// dim O = dim g - dim g(0) - dim g(1).  g(0) holds the Cartan and the
// weight-zero root spaces (both signs); g(1) the weight-one spaces, which
// all sit over positive roots.
inline Int orbit_dimension_formula(const RootSystem& rs, const std::vector<Int>& weights) {
  Int z0 = 0, z1 = 0;
  for (const Root& r : rs.positive_roots()) {
    Int w = root_weight(weights, r);
    if (w == 0) ++z0;
    else if (w == 1) ++z1;
  }
  return static_cast<Int>(rs.roots().size()) - 2 * z0 - z1;
}

struct KawanakaReport {
  Int dim_g1 = 0;
  bool even = false;
};

// The index condition [U_{1.5}:U_2] = [U_1:U_{1.5}] amounts to dim g(1)
// being even.
inline KawanakaReport kawanaka_parity(const RootSystem& rs, const WeightedDynkinDiagram& d) {
  Int z1 = 0;
  for (const Root& r : rs.positive_roots())
    if (root_weight(d.weights, r) == 1) ++z1;
  return KawanakaReport{z1, z1 % 2 == 0};
}

struct SupportFlag {
  std::vector<Root> orbit;  // phi-orbit of weight-2 positive roots
  bool nontrivial = false;  // orbit meets the support of N
};

// Remark-style support test: the restriction of the linear character to the
// group attached to a phi-orbit of weight-2 roots is nontrivial exactly when
// the support of N meets the orbit.
inline std::vector<SupportFlag> character_support(const RootSystem& rs,
                                                  const WeightedDynkinDiagram& d,
                                                  const std::vector<Root>& n_support) {
  std::set<Root> weight2;
  for (const Root& r : rs.positive_roots())
    if (root_weight(d.weights, r) == 2) weight2.insert(r);
  for (const Root& r : n_support)
    if (!weight2.count(r))
      throw std::invalid_argument("character_support: support root not of weight 2");
  std::set<Root> support(n_support.begin(), n_support.end());
  std::vector<SupportFlag> out;
  std::set<Root> seen;
  for (const Root& r : rs.positive_roots()) {
    if (!weight2.count(r) || seen.count(r)) continue;
    SupportFlag flag;
    Root x = r;
    do {
      seen.insert(x);
      flag.orbit.push_back(x);
      if (support.count(x)) flag.nontrivial = true;
      x = rs.phi_root(x);
    } while (x != r);
    out.push_back(std::move(flag));
  }
  return out;
}

}  // namespace coxblock

#endif
