#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "epglab/distance.hpp"
#include "epglab/graph.hpp"
#include "epglab/polynomial.hpp"

namespace epglab {

constexpr int kDefaultEnumCap = 16;
constexpr long long kDefaultSubsetBudget = 1ll << 26;

enum class TwinKind { True, False, Singleton };

struct TwinClass {
  TwinKind kind = TwinKind::Singleton;
  std::vector<int> members;  // sorted
};

/// Partition of the vertices into maximal twin classes. Twins share either the
/// closed neighborhood (true twins, necessarily adjacent) or the open one
/// (false twins, necessarily non-adjacent); a class is never mixed.
inline std::vector<TwinClass> twin_classes(const SimpleGraph& g) {
  const int n = g.vcount();
  std::map<std::vector<int>, std::vector<int>> by_closed, by_open;
  for (int v = 0; v < n; ++v) {
    by_closed[g.closed_neighborhood(v)].push_back(v);
    by_open[g.neighbors(v)].push_back(v);
  }
  std::vector<TwinClass> out;
  std::vector<char> assigned(n, 0);
  for (auto& [key, members] : by_closed) {
    if (members.size() >= 2) {
      for (int v : members) assigned[v] = 1;
      out.push_back(TwinClass{TwinKind::True, members});
    }
  }
  for (auto& [key, members] : by_open) {
    std::vector<int> rest;
    for (int v : members)
      if (!assigned[v]) rest.push_back(v);
    if (rest.size() >= 2) {
      for (int v : rest) assigned[v] = 1;
      out.push_back(TwinClass{TwinKind::False, rest});
    }
  }
  for (int v = 0; v < n; ++v)
    if (!assigned[v]) out.push_back(TwinClass{TwinKind::Singleton, {v}});
  std::sort(out.begin(), out.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.members[0] < b.members[0]; });
  return out;
}

/// Sum of (|class| - 1) over non-singleton twin classes; a lower bound on the
/// metric dimension since every resolving set misses at most one twin per class.
inline int twin_lower_bound(const std::vector<TwinClass>& classes) {
  int lb = 0;
  for (const auto& c : classes) lb += static_cast<int>(c.members.size()) - 1;
  return lb;
}

/// True when the distance vectors to S are pairwise distinct.
inline bool is_resolving(const SimpleGraph& g, const std::vector<int>& landmarks,
                         const DistanceMatrix& dist) {
  const int n = g.vcount();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool resolved = false;
      for (int s : landmarks)
        if (dist.at(u, s) != dist.at(v, s)) {
          resolved = true;
          break;
        }
      if (!resolved) return false;
    }
  return true;
}

namespace detail {

// Per-twin-class membership masks; a candidate set missing two or more members
// of one class can never resolve, so it is rejected without the full check.
struct TwinMasks {
  std::vector<uint32_t> masks;
  std::vector<int> sizes;
};

inline TwinMasks twin_masks(const std::vector<TwinClass>& classes) {
  TwinMasks tm;
  for (const auto& c : classes) {
    if (c.members.size() < 2) continue;
    uint32_t m = 0;
    for (int v : c.members) m |= uint32_t(1) << v;
    tm.masks.push_back(m);
    tm.sizes.push_back(static_cast<int>(c.members.size()));
  }
  return tm;
}

inline bool passes_twin_filter(uint32_t subset, const TwinMasks& tm) {
  for (size_t i = 0; i < tm.masks.size(); ++i)
    if (tm.sizes[i] - __builtin_popcount(subset & tm.masks[i]) >= 2) return false;
  return true;
}

}  // namespace detail

struct MetricDimensionResult {
  int dimension = 0;
  std::vector<int> witness;
};

/// Least size of a resolving set, found by enumerating subsets in increasing
/// size starting from the twin lower bound. Deterministic lexicographic search;
/// counts candidate subsets against `budget` and throws capacity_error beyond.
inline MetricDimensionResult metric_dimension(const SimpleGraph& g,
                                              long long budget = kDefaultSubsetBudget) {
  if (!g.connected()) throw parameter_error("metric dimension undefined on disconnected graph");
  const int n = g.vcount();
  if (n > 32) throw capacity_error("metric dimension search limited to 32 vertices", 32);
  auto dist = all_pairs_geodesic(g);
  auto classes = twin_classes(g);
  auto tm = detail::twin_masks(classes);
  int lb = std::max(1, twin_lower_bound(classes));
  long long examined = 0;
  std::vector<int> subset;
  for (int k = lb; k <= n; ++k) {
    subset.assign(k, 0);
    // lexicographically first k-combination and successors
    for (int i = 0; i < k; ++i) subset[i] = i;
    for (;;) {
      if (++examined > budget)
        throw capacity_error("metric dimension search exceeded subset budget", int(budget));
      uint32_t mask = 0;
      for (int v : subset) mask |= uint32_t(1) << v;
      if (detail::passes_twin_filter(mask, tm) && is_resolving(g, subset, dist))
        return MetricDimensionResult{k, subset};
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  throw std::logic_error("vertex set itself must resolve");
}

struct ResolvingReport {
  int dimension = 0;
  std::vector<BigInt> counts;  // counts[i] = number of resolving i-subsets, i = 0..vcount
  IntPolynomial polynomial;
  std::vector<TwinClass> twins;
};

/// Exact r_i for every i by exhaustive subset enumeration (2^vcount masks, with
/// the twin filter short-circuiting provably non-resolving masks). The mask
/// space is split into ranges processed in parallel and merged by addition.
inline ResolvingReport resolving_counts(const SimpleGraph& g, int cap = kDefaultEnumCap) {
  if (!g.connected()) throw parameter_error("resolving counts undefined on disconnected graph");
  const int n = g.vcount();
  if (n > cap)
    throw capacity_error("resolving enumeration limited to " + std::to_string(cap) +
                             " vertices (got " + std::to_string(n) + ")",
                         cap);
  auto dist = all_pairs_geodesic(g);
  auto classes = twin_classes(g);
  auto tm = detail::twin_masks(classes);

  const uint32_t total = uint32_t(1) << n;
  const int pieces = std::min<int>(64, std::max<int>(1, int(total >> 12)));
  std::vector<std::vector<long long>> partial(pieces, std::vector<long long>(n + 1, 0));
  parallel_for(pieces, [&](int piece) {
    uint32_t lo = uint32_t((uint64_t(total) * piece) / pieces);
    uint32_t hi = uint32_t((uint64_t(total) * (piece + 1)) / pieces);
    std::vector<int> landmarks;
    for (uint32_t mask = lo; mask < hi; ++mask) {
      if (!detail::passes_twin_filter(mask, tm)) continue;
      landmarks.clear();
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) landmarks.push_back(v);
      if (is_resolving(g, landmarks, dist)) ++partial[piece][landmarks.size()];
    }
  });

  ResolvingReport rep;
  rep.twins = std::move(classes);
  rep.counts.assign(n + 1, 0);
  for (const auto& p : partial)
    for (int i = 0; i <= n; ++i) rep.counts[i] += p[i];
  rep.dimension = n;
  for (int i = 0; i <= n; ++i)
    if (rep.counts[i] > 0) {
      rep.dimension = i;
      break;
    }
  rep.polynomial = IntPolynomial(rep.counts);
  return rep;
}

// ---------------------------------------------------------------------------
// Closed-form resolving polynomial of EPG(SD_{8n}).
// ---------------------------------------------------------------------------

/// k_t of the closed form: ways of selecting 6n - t vertices from the non-pair
/// classes subject to the twin constraints (k_0..k_4; zero outside).
inline BigInt sd_resolving_k(int n, int t) {
  BigInt N = n;
  switch (t) {
    case 0: return 1;
    case 1: return 6 * N;
    case 2: return 8 * N * N + 8 * N - 3;
    case 3: return 16 * N * N - 2 * N - 2;
    case 4: return 8 * N * N - 4 * N;
    default: return 0;
  }
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// r_i of the closed form for dim <= i <= 8n-2: sum over j of
/// C(n, j) 2^{n-j} k_{7n+j-i}, with vanishing out-of-range terms. The paper
/// prints this as three range-limited branches; on their stated ranges the
/// branches agree with this sum (see sd_resolving_branch_coverage).
inline BigInt sd_resolving_r_closed_form(int n, int i) {
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) {
    int t = 7 * n + j - i;
    if (t < 0 || t > 4) continue;
    BigInt pow2 = BigInt(1) << (n - j);
    total += binomial(n, j) * pow2 * sd_resolving_k(n, t);
  }
  return total;
}

/// Resolving polynomial x^{8n} + 8n x^{8n-1} + sum_{i=7n-4}^{8n-2} r_i x^i.
inline IntPolynomial sd_resolving_polynomial_closed_form(int n) {
  if (n < 2) throw parameter_error("semidihedral parameter must satisfy n >= 2");
  std::vector<BigInt> coeffs(8 * n + 1, 0);
  for (int i = 7 * n - 4; i <= 8 * n - 2; ++i) coeffs[i] = sd_resolving_r_closed_form(n, i);
  coeffs[8 * n - 1] = 8 * n;
  coeffs[8 * n] = 1;
  return IntPolynomial(std::move(coeffs));
}

struct BranchCoverage {
  std::vector<int> uncovered;           // indices in [7n-4, 8n-2] hit by no branch
  std::vector<int> overlapping;         // indices hit by more than one branch
  std::vector<int> disagreeing;         // overlapping indices where branch values differ
};

/// Diagnostic for the printed three-branch form: which indices of
/// [7n-4, 8n-2] each branch range covers, and whether overlaps agree.
inline BranchCoverage sd_resolving_branch_coverage(int n) {
  auto branch_value = [&](int which, int i) -> BigInt {
    BigInt total = 0;
    if (which == 0) {  // 7n-4 <= i <= 7n-1: sum_{j=0}^{i-(7n-4)}
      for (int j = 0; j <= i - (7 * n - 4) && j <= n; ++j)
        total += binomial(n, j) * (BigInt(1) << (n - j)) * sd_resolving_k(n, 7 * n + j - i);
    } else if (which == 1) {  // 7n <= i <= 8n-4: sum_{j=0}^{4}
      for (int j = 0; j <= 4; ++j) {
        int c = i - 7 * n + j;
        if (c < 0 || c > n) continue;
        total += binomial(n, c) * (BigInt(1) << (n - c)) * sd_resolving_k(n, j);
      }
    } else {  // 8n-3 <= i <= 8n-2: sum_{j=0}^{8n-i}
      for (int j = 0; j <= 8 * n - i; ++j) {
        int c = n + j - (8 * n - i);
        if (c < 0 || c > n) continue;
        total += binomial(n, c) * (BigInt(1) << (n - c)) * sd_resolving_k(n, j);
      }
    }
    return total;
  };
  BranchCoverage cov;
  for (int i = 7 * n - 4; i <= 8 * n - 2; ++i) {
    std::vector<BigInt> hits;
    if (i >= 7 * n - 4 && i <= 7 * n - 1) hits.push_back(branch_value(0, i));
    if (i >= 7 * n && i <= 8 * n - 4) hits.push_back(branch_value(1, i));
    if (i >= 8 * n - 3 && i <= 8 * n - 2) hits.push_back(branch_value(2, i));
    if (hits.empty()) cov.uncovered.push_back(i);
    if (hits.size() > 1) {
      cov.overlapping.push_back(i);
      for (size_t k = 1; k < hits.size(); ++k)
        if (hits[k] != hits[0]) {
          cov.disagreeing.push_back(i);
          break;
        }
    }
  }
  return cov;
}

}  // namespace epglab
