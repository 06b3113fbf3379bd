/*
  rootsystem.hpp - exact root systems: closure of the simple roots under
  reflections, positivity, root lengths, and the root-level action of the
  diagram automorphism.
*/

#ifndef COXBLOCK_ROOTSYSTEM_HPP
#define COXBLOCK_ROOTSYSTEM_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxblock/cartan.hpp"

namespace coxblock {

using Root = std::vector<Int>;  // coordinates over the simple basis

inline bool root_positive(const Root& r) {
  bool any = false;
  for (Int v : r) {
    if (v < 0) return false;
    if (v > 0) any = true;
  }
  return any;
}

inline Root negate(const Root& r) {
  Root m(r);
  for (Int& v : m) v = -v;
  return m;
}

class RootSystem {
public:
  explicit RootSystem(CartanType t) : type_(t) {
    validate(t);
    cartan_ = cartan_matrix(t.family, t.rank);
    norms_ = simple_norms(t.family, t.rank);
    phi_ = twist_permutation(t);
    generate();
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<Int>>& cartan() const { return cartan_; }
  Int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<int>& phi() const { return phi_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positives_; }
  bool is_root(const Root& r) const { return index_.count(r) != 0; }

  // s_i acting on root coordinates
  Root reflect(int i, const Root& r) const {
    Int pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing += cartan_[i][j] * r[j];
    Root out(r);
    out[i] -= pairing;
    return out;
  }

  // squared length (scale as in simple_norms); constant on W-orbits
  Int norm(const Root& r) const {
    Int n2 = 0;
    int n = rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) n2 += r[i] * r[j] * gram(i, j) ;
    return n2;
  }
  bool is_long_root(const Root& r) const { return norm(r) != min_norm_; }

  // Root-level automorphism phi: for graph twists it permutes coordinates;
  // for the very twisted types it is sigma rescaled back into the root set.
  Root phi_root(const Root& r) const {
    int n = rank();
    if (!very_twisted(type_)) {
      Root out(n, 0);
      for (int j = 0; j < n; ++j) out[phi_[j]] += r[j];
      return out;
    }
    int d = 0;
    auto S = very_twisted_sigma(type_, d);
    Root img(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) img[i] += S[i][j] * r[j];
    if (is_root(img)) return img;
    Root scaled(n);
    for (int i = 0; i < n; ++i) {
      if (img[i] % d != 0) throw std::logic_error("phi_root: image not a root multiple");
      scaled[i] = img[i] / d;
    }
    if (!is_root(scaled)) throw std::logic_error("phi_root: image not a root");
    return scaled;
  }

  // Orbits of phi on the simple nodes, each sorted, listed by least member.
  std::vector<std::vector<int>> phi_orbits() const {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(rank(), false);
    for (int i = 0; i < rank(); ++i) {
      if (seen[i]) continue;
      std::vector<int> orbit;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
        j = phi_[j];
      }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    return orbits;
  }

  int twisted_rank() const { return static_cast<int>(phi_orbits().size()); }

private:
  void generate() {
    std::set<Root> all;
    std::vector<Root> frontier;
    for (int i = 0; i < rank(); ++i) {
      Root e(rank(), 0);
      e[i] = 1;
      all.insert(e);
      all.insert(negate(e));
      frontier.push_back(e);
      frontier.push_back(negate(e));
    }
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& r : frontier)
        for (int i = 0; i < rank(); ++i) {
          Root img = reflect(i, r);
          if (all.insert(img).second) next.push_back(img);
        }
      frontier = std::move(next);
    }
    roots_.assign(all.begin(), all.end());
    for (const Root& r : roots_) {
      index_.insert(r);
      if (root_positive(r)) positives_.push_back(r);
    }
    if (2 * positives_.size() != roots_.size())
      throw std::logic_error("root system: positivity failure");
    min_norm_ = norm(roots_.front());
    for (const Root& r : roots_) min_norm_ = std::min(min_norm_, norm(r));
    // phi must preserve the Cartan matrix (transposed for length swaps)
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) {
        Int expect = very_twisted(type_) ? cartan_[j][i] : cartan_[i][j];
        if (cartan_[phi_[i]][phi_[j]] != expect)
          throw std::logic_error("twist permutation does not preserve the diagram");
      }
  }

  Int gram(int i, int j) const { return cartan_[i][j] * norms_[i] / 2; }

  CartanType type_;
  std::vector<std::vector<Int>> cartan_;
  std::vector<Int> norms_;
  std::vector<int> phi_;
  std::vector<Root> roots_;
  std::vector<Root> positives_;
  std::set<Root> index_;
  Int min_norm_ = 2;
};

inline RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }

}  // namespace coxblock

#endif
