/*
  lemma32.hpp - the induced-orbit criterion for a weighted Dynkin diagram d
  and a subset I of simple nodes, with J its complement:

    (i)   d restricted to I is a weighted Dynkin diagram of a Levi orbit
          (each irreducible component separately);
    (ii)  d is 2 on all of J;
    (iii) each connected component C of the sub-diagram on J attaches to
          the rest of the diagram through a chain of weight-0 nodes of I:
          there are beta in C and a (possibly empty) simple path
          a_1,...,a_k of weight-0 nodes of I with a_k adjacent to beta,
          every neighbour of each a_t lying in {a_{t-1}, a_{t+1}, beta} or
          having positive weight in I, and every weight-0 node of I
          adjacent to C lying on the chain.  The last clause is what the
          picture enforces: the component may touch the zero part of I
          only through its chain (dropping it would accept the subregular
          A3 counterexample).

  The report also carries u_I c u(2) and the dimension identity
  dim(ambient orbit) = dim(Levi orbit) + 2|u_I|.
*/

#ifndef COXBLOCK_LEMMA32_HPP
#define COXBLOCK_LEMMA32_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxblock/exceptional.hpp"
#include "coxblock/labels.hpp"
#include "coxblock/levi.hpp"

namespace coxblock {

struct ChainWitness {
  std::vector<int> component;  // nodes of the J-component
  int beta = -1;               // attachment node in the component
  std::vector<int> chain;      // weight-0 nodes of I, walking toward beta
  bool found = false;
};

struct Lemma32Report {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool uI_in_u2 = false;
  bool dim_identity = false;

  std::vector<std::string> levi_orbit_labels;  // matched label per component
  std::vector<ChainWitness> witnesses;         // per J-component
  Int ambient_dim = 0;
  Int levi_dim = 0;
  Int radical_size = 0;

  bool pass() const { return cond_i && cond_ii && cond_iii && uI_in_u2 && dim_identity; }
};

namespace detail {

// dim of the Levi orbit cut out by the restricted weights, computed inside
// Phi_I; the Cartan contribution cancels against g(0)'s torus part.
inline Int levi_orbit_dim(const RootSystem& rs, const std::vector<Int>& weights,
                          const LeviDatum& levi) {
  Int z0 = 0, z1 = 0;
  for (const Root& r : levi.levi_positives) {
    Int w = root_weight(weights, r);
    if (w == 0) ++z0;
    else if (w == 1) ++z1;
  }
  return 2 * static_cast<Int>(levi.levi_positives.size()) - 2 * z0 - z1;
}

inline std::vector<int> node_neighbors(const RootSystem& rs, int i) {
  std::vector<int> out;
  for (int j = 0; j < rs.rank(); ++j)
    if (j != i && rs.cartan(i, j) != 0) out.push_back(j);
  return out;
}

// search for the chain of condition (iii) on one J-component
inline ChainWitness find_chain(const RootSystem& rs, const std::vector<Int>& d,
                               const std::vector<int>& I, const std::vector<int>& comp) {
  ChainWitness w;
  w.component = comp;
  std::vector<bool> inI(rs.rank(), false), inComp(rs.rank(), false);
  for (int i : I) inI[i] = true;
  for (int c : comp) inComp[c] = true;

  std::vector<int> zero_nodes;
  for (int i : I)
    if (d[i] == 0) zero_nodes.push_back(i);
  std::vector<int> must_cover;  // weight-0 I-nodes adjacent to the component
  for (int z : zero_nodes)
    for (int c : comp)
      if (rs.cartan(z, c) != 0) { must_cover.push_back(z); break; }

  // all simple paths within the weight-0 nodes, plus the empty path
  std::vector<std::vector<int>> paths{{}};
  std::vector<int> cur;
  auto extend = [&](auto&& self, int last) -> void {
    paths.push_back(cur);
    for (int z : zero_nodes) {
      if (std::find(cur.begin(), cur.end(), z) != cur.end()) continue;
      if (last >= 0 && rs.cartan(last, z) == 0) continue;
      cur.push_back(z);
      self(self, z);
      cur.pop_back();
    }
  };
  for (int z : zero_nodes) {
    cur = {z};
    extend(extend, z);
  }

  for (int beta : comp) {
    for (const auto& path : paths) {
      if (!path.empty() && rs.cartan(path.back(), beta) == 0) continue;
      bool covered = true;
      for (int z : must_cover)
        if (std::find(path.begin(), path.end(), z) == path.end()) covered = false;
      if (!covered) continue;
      bool ok = true;
      for (size_t t = 0; t < path.size() && ok; ++t) {
        for (int nb : node_neighbors(rs, path[t])) {
          if (t > 0 && nb == path[t - 1]) continue;
          if (t + 1 < path.size() && nb == path[t + 1]) continue;
          if (nb == beta) continue;
          if (inI[nb] && d[nb] > 0) continue;
          ok = false;
          break;
        }
      }
      if (ok) {
        w.beta = beta;
        w.chain = path;
        w.found = true;
        return w;
      }
    }
  }
  return w;
}

}  // namespace detail

// The five findings for (rs, d, I).  Never throws on mathematical failure;
// every finding is a report field.
inline Lemma32Report lemma32_check(const RootSystem& rs, const WeightedDynkinDiagram& d,
                                   const std::vector<int>& I, const OrbitTables& tables) {
  Lemma32Report rep;
  int n = rs.rank();
  std::vector<bool> inI(n, false);
  for (int i : I) inI[i] = true;
  std::vector<int> J;
  for (int j = 0; j < n; ++j)
    if (!inI[j]) J.push_back(j);

  LeviDatum levi = levi_datum(rs, I);

  // (i): validate the restriction on each irreducible component
  rep.cond_i = true;
  for (const auto& comp : levi.components) {
    std::vector<Int> w;
    for (int node : comp.order) w.push_back(d.weights[node]);
    if (is_exceptional_family(comp.family)) {
      auto hit = lookup_orbit_by_diagram(tables.table(comp.family, comp.rank), w);
      if (!hit && comp.family == Family::E && comp.rank == 6) {
        std::vector<Int> flip{w[5], w[1], w[4], w[3], w[2], w[0]};
        hit = lookup_orbit_by_diagram(tables.table(comp.family, comp.rank), flip);
      }
      if (hit) rep.levi_orbit_labels.push_back(hit->name);
      else rep.cond_i = false;
    } else {
      auto label = classical_label(comp.family, comp.rank, w);
      if (label) rep.levi_orbit_labels.push_back(label_str(*label));
      else rep.cond_i = false;
    }
  }

  // (ii)
  rep.cond_ii = true;
  for (int j : J)
    if (d.weights[j] != 2) rep.cond_ii = false;

  // (iii)
  rep.cond_iii = true;
  for (const auto& comp : diagram_components(rs, J)) {
    ChainWitness w = detail::find_chain(rs, d.weights, I, comp);
    if (!w.found) rep.cond_iii = false;
    rep.witnesses.push_back(std::move(w));
  }

  // u_I c u(2)
  rep.uI_in_u2 = true;
  for (const Root& r : levi.radical_roots)
    if (root_weight(d.weights, r) < 2) rep.uI_in_u2 = false;

  // dimension identity
  rep.ambient_dim = orbit_dimension_formula(rs, d.weights);
  rep.levi_dim = detail::levi_orbit_dim(rs, d.weights, levi);
  rep.radical_size = static_cast<Int>(levi.radical_roots.size());
  rep.dim_identity = rep.ambient_dim == rep.levi_dim + 2 * rep.radical_size;
  return rep;
}

// Validity-checked orbit dimension: d must label an actual orbit of the
// type (classical label or exceptional table membership).
inline Int orbit_dimension(const RootSystem& rs, const WeightedDynkinDiagram& d,
                           const OrbitTables& tables) {
  Family f = rs.type().family;
  if (is_exceptional_family(f)) {
    if (!lookup_orbit_by_diagram(tables.table(f, rs.rank()), d.weights))
      throw std::invalid_argument("orbit_dimension: not a weighted Dynkin diagram for " +
                                  rs.type().str());
  } else if (!classical_label(f, rs.rank(), d.weights)) {
    throw std::invalid_argument("orbit_dimension: not a weighted Dynkin diagram for " +
                                rs.type().str());
  }
  return orbit_dimension_formula(rs, d.weights);
}

}  // namespace coxblock

#endif
