/*
  levi.hpp - standard Levi data: the root subsystem on a subset of simple
  nodes, its decomposition into irreducible components, classification of
  each component onto a standard Cartan type, and weighted-diagram
  comparison up to diagram automorphism.
*/

#ifndef COXBLOCK_LEVI_HPP
#define COXBLOCK_LEVI_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coxblock/rootsystem.hpp"

namespace coxblock {

// Connected components of the sub-diagram on the node set I.
inline std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                        const std::vector<int>& I) {
  std::vector<std::vector<int>> comps;
  std::vector<int> pending(I);
  while (!pending.empty()) {
    std::vector<int> comp{pending.back()};
    pending.pop_back();
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto it = pending.begin(); it != pending.end();) {
        bool touches = false;
        for (int c : comp)
          if (rs.cartan(c, *it) != 0) touches = true;
        if (touches) {
          comp.push_back(*it);
          it = pending.erase(it);
          grew = true;
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

struct ComponentType {
  Family family;
  int rank;
  std::vector<int> order;  // ambient nodes in Bourbaki order of the component
};

// Identify the abstract type of a connected sub-diagram and return its
// nodes in Bourbaki order.  Rank-2 systems with a double edge are reported
// as B2 (long node first).
inline ComponentType classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  int k = static_cast<int>(nodes.size());
  auto deg = [&](int i) {
    int d = 0;
    for (int j : nodes)
      if (j != i && rs.cartan(i, j) != 0) ++d;
    return d;
  };
  auto walk_from = [&](int start) {
    std::vector<int> order{start};
    while (static_cast<int>(order.size()) < k) {
      int last = order.back();
      int next = -1;
      for (int j : nodes) {
        if (std::find(order.begin(), order.end(), j) != order.end()) continue;
        if (rs.cartan(last, j) != 0) { next = j; break; }
      }
      if (next < 0) break;
      order.push_back(next);
    }
    return order;
  };

  if (k == 1) return {Family::A, 1, nodes};

  std::pair<int, int> multi{-1, -1};
  for (int i : nodes)
    for (int j : nodes)
      if (i < j && rs.cartan(i, j) * rs.cartan(j, i) >= 2) multi = {i, j};

  if (multi.first < 0) {
    // simply laced: A, D or E
    int fork = -1;
    for (int i : nodes)
      if (deg(i) == 3) fork = i;
    if (fork < 0) {
      for (int i : nodes)
        if (deg(i) == 1) return {Family::A, k, walk_from(i)};
      throw std::logic_error("classify_component: cycle in diagram");
    }
    std::vector<std::vector<int>> branches;
    for (int s : nodes) {
      if (s == fork || rs.cartan(fork, s) == 0) continue;
      std::vector<int> br{s};
      int prev = fork;
      while (true) {
        int next = -1;
        for (int j : nodes) {
          if (j == prev || j == fork) continue;
          if (std::find(br.begin(), br.end(), j) != br.end()) continue;
          if (rs.cartan(br.back(), j) != 0) { next = j; break; }
        }
        if (next < 0) break;
        prev = br.back();
        br.push_back(next);
      }
      branches.push_back(std::move(br));
    }
    std::sort(branches.begin(), branches.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    size_t l1 = branches[0].size(), l2 = branches[1].size(), l3 = branches[2].size();
    if (l1 == 1 && l2 == 1) {
      // D_k: long branch reversed, fork node, then the two short tips
      std::vector<int> order(branches[2].rbegin(), branches[2].rend());
      order.push_back(fork);
      order.push_back(branches[0][0]);
      order.push_back(branches[1][0]);
      return {Family::D, k, order};
    }
    if (l1 == 1 && l2 == 2 && l3 == 2) {
      std::vector<int> order{branches[2][1], branches[0][0], branches[2][0],
                             fork, branches[1][0], branches[1][1]};
      return {Family::E, 6, order};
    }
    if (l1 == 1 && l2 == 2) {
      // E7/E8: the chain starts at the far end of the length-2 branch
      std::vector<int> chain(branches[1].rbegin(), branches[1].rend());
      chain.push_back(fork);
      chain.insert(chain.end(), branches[2].begin(), branches[2].end());
      std::vector<int> order{chain[0], branches[0][0]};
      order.insert(order.end(), chain.begin() + 1, chain.end());
      return {Family::E, k, order};
    }
    throw std::logic_error("classify_component: not a Dynkin diagram");
  }

  // multiple edge present: G2, B, C or F4
  auto [i, j] = multi;
  Int m = rs.cartan(i, j) * rs.cartan(j, i);
  if (m == 3) {
    // G2, short node first (its row carries the -3)
    if (rs.cartan(i, j) == -3) return {Family::G, 2, {i, j}};
    return {Family::G, 2, {j, i}};
  }
  if (k == 2) {
    // B2 with the long node first: its row carries the -1
    if (rs.cartan(i, j) == -1) return {Family::B, 2, {i, j}};
    return {Family::B, 2, {j, i}};
  }
  for (int e : nodes) {
    if (deg(e) != 1) continue;
    auto order = walk_from(e);
    if (static_cast<int>(order.size()) != k) continue;
    int a = order[k - 2], b = order[k - 1];
    if (rs.cartan(a, b) * rs.cartan(b, a) >= 2) {
      if (rs.cartan(a, b) == -1 && rs.cartan(b, a) == -2) return {Family::B, k, order};
      if (rs.cartan(a, b) == -2 && rs.cartan(b, a) == -1) return {Family::C, k, order};
    }
    // F4: double edge in the middle, long side first
    if (k == 4 && rs.cartan(order[1], order[2]) * rs.cartan(order[2], order[1]) == 2) {
      if (rs.cartan(order[1], order[2]) == -1) return {Family::F, 4, order};
      std::reverse(order.begin(), order.end());
      return {Family::F, 4, order};
    }
  }
  throw std::logic_error("classify_component: not a Dynkin diagram");
}

struct LeviDatum {
  std::vector<int> subset;                 // I
  std::vector<ComponentType> components;   // irreducible pieces of Phi_I
  std::vector<Root> levi_positives;        // Phi_I^+
  std::vector<Root> radical_roots;         // u_I = Phi^+ \ Phi_I^+
};

inline LeviDatum levi_datum(const RootSystem& rs, const std::vector<int>& I) {
  LeviDatum out;
  out.subset = I;
  std::sort(out.subset.begin(), out.subset.end());
  std::vector<bool> in(rs.rank(), false);
  for (int i : out.subset) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("levi_datum: node out of range");
    in[i] = true;
  }
  for (const Root& r : rs.positive_roots()) {
    bool supported = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (r[j] != 0 && !in[j]) supported = false;
    (supported ? out.levi_positives : out.radical_roots).push_back(r);
  }
  for (const auto& comp : diagram_components(rs, out.subset))
    out.components.push_back(classify_component(rs, comp));
  return out;
}

// ---- weighted component comparison up to diagram automorphism ----------

struct TypedDiagram {
  Family family;
  int rank;
  std::vector<Int> weights;  // Bourbaki order
  bool operator==(const TypedDiagram&) const = default;
  bool operator<(const TypedDiagram& o) const {
    if (family != o.family) return family < o.family;
    if (rank != o.rank) return rank < o.rank;
    return weights < o.weights;
  }
};

// Canonical representative under diagram automorphisms, with rank-2 B/C
// normalised to B2.
inline TypedDiagram canonical_typed_diagram(TypedDiagram t) {
  if (t.family == Family::C && t.rank == 2) {
    t.family = Family::B;
    std::swap(t.weights[0], t.weights[1]);
  }
  std::vector<std::vector<Int>> variants{t.weights};
  if (t.family == Family::A) {
    auto rev = t.weights;
    std::reverse(rev.begin(), rev.end());
    variants.push_back(rev);
  } else if (t.family == Family::D && t.rank == 4) {
    // triality: any arrangement of the three outer nodes 1,3,4
    std::vector<Int> outer{t.weights[0], t.weights[2], t.weights[3]};
    std::sort(outer.begin(), outer.end());
    do {
      variants.push_back({outer[0], t.weights[1], outer[1], outer[2]});
    } while (std::next_permutation(outer.begin(), outer.end()));
  } else if (t.family == Family::D) {
    auto swp = t.weights;
    std::swap(swp[t.rank - 2], swp[t.rank - 1]);
    variants.push_back(swp);
  } else if (t.family == Family::E && t.rank == 6) {
    const auto& w = t.weights;
    variants.push_back({w[5], w[1], w[4], w[3], w[2], w[0]});
  }
  t.weights = *std::min_element(variants.begin(), variants.end());
  return t;
}

// The multiset of typed component diagrams of (I, d), canonicalised.
inline std::vector<TypedDiagram> component_diagrams(const RootSystem& rs, const LeviDatum& levi,
                                                    const std::vector<Int>& weights) {
  std::vector<TypedDiagram> out;
  for (const auto& comp : levi.components) {
    std::vector<Int> w;
    for (int node : comp.order) w.push_back(weights[node]);
    out.push_back(canonical_typed_diagram({comp.family, comp.rank, std::move(w)}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxblock

#endif
