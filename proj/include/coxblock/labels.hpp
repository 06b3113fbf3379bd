/*
  labels.hpp - nilpotent orbit labels for the classical types and the
  translation between labels and weighted Dynkin diagrams.

  Labelling conventions (Carter ch. 13.1):
    A_n : partitions of n+1;
    B_n : pairs (a,b), 2|a|+|b| = 2n+1, parts of b odd and distinct;
    C_n : pairs (a,b),  |a|+|b| = n,    parts of b distinct;
    D_n : pairs (a,b), 2|a|+|b| = 2n,   parts of b odd and distinct.
  The underlying so/sp partition is a,a,b (type C doubles b entrywise).
*/

#ifndef COXBLOCK_LABELS_HPP
#define COXBLOCK_LABELS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "coxblock/cartan.hpp"

namespace coxblock {

using Partition = std::vector<Int>;  // weakly decreasing, positive parts

inline Int part_sum(const Partition& p) {
  Int s = 0;
  for (Int v : p) s += v;
  return s;
}

inline Partition sorted_partition(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<Int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

struct PartitionPair {
  Partition alpha, beta;
  bool operator==(const PartitionPair&) const = default;
  std::string str() const { return partition_str(alpha) + ";" + partition_str(beta); }
};

struct NamedOrbit {
  std::string name;
  bool operator==(const NamedOrbit&) const = default;
};

using OrbitLabel = std::variant<Partition, PartitionPair, NamedOrbit>;

inline std::string label_str(const OrbitLabel& l) {
  if (auto* p = std::get_if<Partition>(&l)) return partition_str(*p);
  if (auto* pp = std::get_if<PartitionPair>(&l)) return pp->str();
  return std::get<NamedOrbit>(l).name;
}

// ---- label validity ---------------------------------------------------

inline bool parts_distinct(const Partition& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

inline bool parts_all_odd(const Partition& p) {
  for (Int v : p)
    if (v % 2 == 0) return false;
  return true;
}

// Returns an error message, or empty string if the label is valid for the
// classical type (family, rank).
inline std::string label_error(Family f, int n, const OrbitLabel& l) {
  if (f == Family::A) {
    auto* p = std::get_if<Partition>(&l);
    if (!p) return "type A expects a single partition";
    if (part_sum(*p) != n + 1)
      return "partition of " + std::to_string(n + 1) + " required, got " + label_str(l);
    return "";
  }
  auto* pp = std::get_if<PartitionPair>(&l);
  if (!pp) return "types B/C/D expect a partition pair";
  Int a = part_sum(pp->alpha), b = part_sum(pp->beta);
  switch (f) {
    case Family::B:
      if (2 * a + b != 2 * n + 1) return "B_n requires 2|a|+|b| = 2n+1";
      if (!parts_all_odd(pp->beta)) return "B_n requires all parts of b odd";
      if (!parts_distinct(pp->beta)) return "B_n requires parts of b distinct";
      return "";
    case Family::C:
      if (a + b != n) return "C_n requires |a|+|b| = n";
      if (!parts_distinct(pp->beta)) return "C_n requires parts of b distinct";
      return "";
    case Family::D:
      if (2 * a + b != 2 * n) return "D_n requires 2|a|+|b| = 2n";
      if (!parts_all_odd(pp->beta)) return "D_n requires all parts of b odd";
      if (!parts_distinct(pp->beta)) return "D_n requires parts of b distinct";
      return "";
    default: return "not a classical family";
  }
}

// ---- label -> diagram --------------------------------------------------

namespace detail {

// sl2 weight multiset of a partition: every part p contributes the chain
// p-1, p-3, ..., 1-p.  Returned sorted descending.
inline std::vector<Int> weight_multiset(const Partition& lam) {
  std::vector<Int> w;
  for (Int p : lam)
    for (Int k = 0; k < p; ++k) w.push_back(p - 1 - 2 * k);
  std::sort(w.begin(), w.end(), std::greater<Int>());
  return w;
}

inline Partition underlying_partition(Family f, const PartitionPair& pp) {
  Partition lam;
  for (Int v : pp.alpha) {
    lam.push_back(v);
    lam.push_back(v);
  }
  for (Int v : pp.beta) lam.push_back(f == Family::C ? 2 * v : v);
  return sorted_partition(lam);
}

}  // namespace detail

// Weight vector d(alpha_1..alpha_n) of the orbit labelled l, Bourbaki order.
inline std::vector<Int> classical_diagram(Family f, int n, const OrbitLabel& l) {
  std::string err = label_error(f, n, l);
  if (!err.empty()) throw std::invalid_argument("classical_diagram: " + err);
  if (f == Family::A) {
    auto w = detail::weight_multiset(std::get<Partition>(l));
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = w[i] - w[i + 1];
    return d;
  }
  const auto& pp = std::get<PartitionPair>(l);
  auto w = detail::weight_multiset(detail::underlying_partition(f, pp));
  std::vector<Int> h(w.begin(), w.begin() + n);
  std::vector<Int> d(n);
  switch (f) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = h[i] - h[i + 1];
      d[n - 1] = h[n - 1];
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = h[i] - h[i + 1];
      d[n - 1] = 2 * h[n - 1];
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) d[i] = h[i] - h[i + 1];
      d[n - 2] = h[n - 2] - h[n - 1];
      d[n - 1] = h[n - 2] + h[n - 1];
      break;
    default: throw std::logic_error("classical_diagram: unreachable");
  }
  return d;
}

// ---- diagram -> label --------------------------------------------------

namespace detail {

// Decompose a symmetric weight multiset into sl2 chains; nullopt if the
// multiset is not a disjoint union of chains.
inline std::optional<Partition> partition_from_weights(std::vector<Int> w) {
  std::map<Int, Int> count;
  for (Int v : w) ++count[v];
  Partition lam;
  while (!count.empty()) {
    Int top = count.rbegin()->first;
    if (top < 0) return std::nullopt;
    for (Int v = top; v >= -top; v -= 2) {
      auto it = count.find(v);
      if (it == count.end() || it->second == 0) return std::nullopt;
      if (--it->second == 0) count.erase(it);
    }
    lam.push_back(top + 1);
  }
  return sorted_partition(lam);
}

// Split an so/sp partition back into the (a,b) label.
inline std::optional<PartitionPair> split_pair(Family f, const Partition& lam) {
  std::map<Int, Int> count;
  for (Int v : lam) ++count[v];
  PartitionPair pp;
  for (auto it = count.rbegin(); it != count.rend(); ++it) {
    Int v = it->first, m = it->second;
    bool beta_eligible = (f == Family::C) ? v % 2 == 0 : v % 2 == 1;
    if (!beta_eligible && m % 2 != 0) return std::nullopt;
    for (Int k = 0; k < m / 2; ++k) pp.alpha.push_back(v);
    if (m % 2) pp.beta.push_back(f == Family::C ? v / 2 : v);
  }
  return pp;
}

}  // namespace detail

// Inverse of classical_diagram; nullopt when d is not a weighted Dynkin
// diagram for the type.
inline std::optional<OrbitLabel> classical_label(Family f, int n, const std::vector<Int>& d) {
  if (static_cast<int>(d.size()) != n) return std::nullopt;
  std::vector<Int> w;
  if (f == Family::A) {
    // h_i = t + suffix sums; the trace condition fixes t
    std::vector<Int> suffix(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];
    Int total = 0;
    for (int i = 0; i <= n; ++i) total += suffix[i];
    if (total % (n + 1) != 0) return std::nullopt;
    Int t = -total / (n + 1);
    for (int i = 0; i <= n; ++i) w.push_back(suffix[i] + t);
  } else {
    std::vector<Int> h(n);
    if (f == Family::B) {
      h[n - 1] = d[n - 1];
    } else if (f == Family::C) {
      if (d[n - 1] % 2 != 0) return std::nullopt;
      h[n - 1] = d[n - 1] / 2;
    } else if (f == Family::D) {
      if ((d[n - 1] - d[n - 2]) % 2 != 0) return std::nullopt;
      h[n - 1] = (d[n - 1] - d[n - 2]) / 2;
      h[n - 2] = (d[n - 1] + d[n - 2]) / 2;
    } else {
      return std::nullopt;
    }
    for (int i = n - (f == Family::D ? 3 : 2); i >= 0; --i) h[i] = h[i + 1] + d[i];
    w = h;
    if (f == Family::B) w.push_back(0);
    for (int i = n - 1; i >= 0; --i) w.push_back(-h[i]);
  }
  auto lam = detail::partition_from_weights(std::move(w));
  if (!lam) return std::nullopt;
  if (f == Family::A) {
    OrbitLabel l = *lam;
    return label_error(f, n, l).empty() ? std::optional<OrbitLabel>(l) : std::nullopt;
  }
  auto pp = detail::split_pair(f, *lam);
  if (!pp) return std::nullopt;
  OrbitLabel l = *pp;
  return label_error(f, n, l).empty() ? std::optional<OrbitLabel>(l) : std::nullopt;
}

// All valid labels of a classical type, for sweeps and round-trip tests.
namespace detail {
inline void enum_parts(Int m, Int max_part, Partition& cur,
                       const std::function<void(const Partition&)>& emit) {
  if (m == 0) {
    emit(cur);
    return;
  }
  for (Int first = std::min(m, max_part); first >= 1; --first) {
    cur.push_back(first);
    enum_parts(m - first, first, cur, emit);
    cur.pop_back();
  }
}
}  // namespace detail

inline std::vector<Partition> partitions_of(Int m) {
  std::vector<Partition> out;
  if (m == 0) return {Partition{}};
  Partition cur;
  detail::enum_parts(m, m, cur, [&](const Partition& p) { out.push_back(p); });
  return out;
}

inline std::vector<OrbitLabel> all_classical_labels(Family f, int n) {
  std::vector<OrbitLabel> out;
  if (f == Family::A) {
    for (auto& p : partitions_of(n + 1)) out.push_back(p);
    return out;
  }
  Int total = (f == Family::C) ? n : 2 * n + (f == Family::B ? 1 : 0);
  Int alpha_max = (f == Family::C) ? n : n;
  for (Int asum = 0; asum <= alpha_max; ++asum) {
    Int bsum = (f == Family::C) ? n - asum : total - 2 * asum;
    if (bsum < 0) continue;
    for (auto& alpha : partitions_of(asum))
      for (auto& beta : partitions_of(bsum)) {
        PartitionPair pp{alpha, beta};
        OrbitLabel l = pp;
        if (label_error(f, n, l).empty()) out.push_back(l);
      }
  }
  return out;
}

}  // namespace coxblock

#endif
