/*
  brauer.hpp - Brauer trees of blocks with cyclic defect in the shape the
  tree conjecture prescribes: one path of unipotent characters per
  Harish-Chandra series, the low end of every path attached to the
  exceptional node.  Planar embeddings are data, validated but never
  inferred.
*/

#ifndef COXBLOCK_BRAUER_HPP
#define COXBLOCK_BRAUER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxblock/numeric.hpp"

namespace coxblock {

struct RootOfUnitySpec {
  Int order = 1;  // multiplicative order of the tag zeta
  Int exp = 0;    // zeta is congruent to q^exp mod ell
  bool operator==(const RootOfUnitySpec&) const = default;
};

struct CharacterName {
  std::string name;  // display label, verbatim from the data
  Int index = 0;     // j with eigenvalue congruent to q^(j*delta)
  bool operator==(const CharacterName&) const = default;
};

struct HCSeriesDatum {
  RootOfUnitySpec zeta;
  Int m = 0, M = 0;                      // lowest and highest index
  std::vector<CharacterName> characters; // chi_m .. chi_M in order

  void check() const {
    if (M < m) throw std::invalid_argument("series: M < m");
    if (static_cast<Int>(characters.size()) != M - m + 1)
      throw std::invalid_argument("series: character count differs from M - m + 1");
    for (size_t i = 0; i < characters.size(); ++i)
      if (characters[i].index != m + static_cast<Int>(i))
        throw std::invalid_argument("series: indices must run m..M");
  }
};

struct BrauerEdge {
  std::string id;
  std::string u, v;  // endpoint node names
};

struct BrauerTree {
  static constexpr const char* exceptional_name = "exc";

  std::vector<std::string> nodes;  // exceptional node first
  Int multiplicity = 1;            // of the exceptional node
  std::vector<BrauerEdge> edges;
  std::map<std::string, std::vector<std::string>> planar;  // node -> edge ids, cyclic

  bool has_node(const std::string& n) const {
    return std::find(nodes.begin(), nodes.end(), n) != nodes.end();
  }
  std::vector<std::string> incident(const std::string& n) const {
    std::vector<std::string> out;
    for (const auto& e : edges)
      if (e.u == n || e.v == n) out.push_back(e.id);
    return out;
  }
  std::vector<std::string> neighbors(const std::string& n) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
      if (e.u == n) out.push_back(e.v);
      if (e.v == n) out.push_back(e.u);
    }
    return out;
  }

  // tree axioms: connected with |E| = |V| - 1, exceptional node present
  void check() const {
    if (nodes.empty() || nodes.front() != exceptional_name)
      throw std::logic_error("tree: exceptional node missing");
    if (std::set<std::string>(nodes.begin(), nodes.end()).size() != nodes.size())
      throw std::logic_error("tree: duplicate node names");
    if (edges.size() + 1 != nodes.size()) throw std::logic_error("tree: |E| != |V| - 1");
    std::set<std::string> reached{nodes.front()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : edges) {
        bool ru = reached.count(e.u), rv = reached.count(e.v);
        if (ru != rv) {
          reached.insert(ru ? e.v : e.u);
          grew = true;
        }
      }
    }
    if (reached.size() != nodes.size()) throw std::logic_error("tree: not connected");
  }
};

// Build the conjectured tree shape from the series data: per series a path
// chi_m - chi_{m+1} - ... - chi_M, with exc joined to every chi_m.
inline BrauerTree build_hlm_tree(const std::vector<HCSeriesDatum>& series, Int multiplicity) {
  if (series.empty()) throw std::invalid_argument("build_hlm_tree: no series");
  if (multiplicity < 1) throw std::invalid_argument("build_hlm_tree: multiplicity must be >= 1");
  std::set<Int> indices;
  std::set<std::string> names;
  for (const auto& s : series) {
    s.check();
    for (const auto& c : s.characters) {
      if (!indices.insert(c.index).second)
        throw std::invalid_argument("build_hlm_tree: duplicate character index " +
                                    std::to_string(c.index));
      if (!names.insert(c.name).second)
        throw std::invalid_argument("build_hlm_tree: duplicate character name " + c.name);
    }
  }
  BrauerTree t;
  t.multiplicity = multiplicity;
  t.nodes.push_back(BrauerTree::exceptional_name);
  int edge_no = 0;
  for (const auto& s : series) {
    for (const auto& c : s.characters) t.nodes.push_back(c.name);
    std::string prev = BrauerTree::exceptional_name;
    for (const auto& c : s.characters) {
      t.edges.push_back({"e" + std::to_string(edge_no++), prev, c.name});
      prev = c.name;
    }
  }
  t.check();
  return t;
}

// Attach per-node cyclic edge orders.  Validation only: every node must be
// covered and its list must be a permutation of its incident edges.
inline BrauerTree attach_planar_order(BrauerTree tree,
                                      const std::map<std::string, std::vector<std::string>>& orders) {
  tree.check();
  for (const auto& [node, order] : orders) {
    if (!tree.has_node(node))
      throw std::invalid_argument("attach_planar_order: unknown node " + node);
    auto inc = tree.incident(node);
    std::multiset<std::string> a(inc.begin(), inc.end()), b(order.begin(), order.end());
    if (a != b)
      throw std::invalid_argument("attach_planar_order: order at " + node +
                                  " is not a permutation of its incident edges");
  }
  for (const auto& n : tree.nodes)
    if (!orders.count(n))
      throw std::invalid_argument("attach_planar_order: node " + n + " not covered");
  tree.planar = orders;
  return tree;
}

// Formal character of the projective module attached to an edge: the sum
// of its two endpoint characters, with the exceptional node contributing
// the symbol chi_exc (multiplicity kept as an attribute).
struct ProjectiveCharacter {
  bool has_exceptional = false;
  std::vector<std::string> constituents;  // non-exceptional endpoint names
};

inline std::map<std::string, ProjectiveCharacter> projective_characters(const BrauerTree& tree) {
  tree.check();
  std::map<std::string, ProjectiveCharacter> out;
  for (const auto& e : tree.edges) {
    ProjectiveCharacter pc;
    for (const std::string& end : {e.u, e.v}) {
      if (end == BrauerTree::exceptional_name) pc.has_exceptional = true;
      else pc.constituents.push_back(end);
    }
    out[e.id] = std::move(pc);
  }
  return out;
}

// chi_{m+i} occurs in cohomological degree r+i.
inline std::map<std::string, Int> degree_layout(const HCSeriesDatum& series, Int r) {
  if (r < 1) throw std::invalid_argument("degree_layout: r must be >= 1");
  series.check();
  std::map<std::string, Int> out;
  for (size_t i = 0; i < series.characters.size(); ++i)
    out[series.characters[i].name] = r + static_cast<Int>(i);
  return out;
}

// ---- binding the root-of-unity tags to residues -------------------------

struct BindingResult {
  bool bound = false;
  Int residue = 0;
  std::string reason;  // when not bound
};

// Resolve zeta = q^exp mod ell and verify it has exactly the stated order.
// For the very twisted types q^exp is integral only for even exp; set
// q_power = q^2 there and halve exponents accordingly before calling.
inline BindingResult bind_root_of_unity(const RootOfUnitySpec& spec, Int q, Int ell) {
  BindingResult out;
  if (!is_prime(ell)) {
    out.reason = "ell is not prime";
    return out;
  }
  if (q % ell == 0) {
    out.reason = "ell divides q";
    return out;
  }
  if ((ell - 1) % spec.order != 0) {
    out.reason = "no element of order " + std::to_string(spec.order) + " mod " +
                 std::to_string(ell);
    return out;
  }
  Int residue = pow_mod(q, spec.exp, ell);
  Int order = mult_order(residue, ell);
  if (order != spec.order) {
    out.reason = "residue " + std::to_string(residue) + " has order " + std::to_string(order) +
                 ", expected " + std::to_string(spec.order);
    return out;
  }
  out.bound = true;
  out.residue = residue;
  return out;
}

inline std::vector<BindingResult> bind_roots_of_unity(const std::vector<RootOfUnitySpec>& specs,
                                                      Int q, Int ell) {
  std::vector<BindingResult> out;
  for (const auto& s : specs) out.push_back(bind_root_of_unity(s, q, ell));
  return out;
}

}  // namespace coxblock

#endif
