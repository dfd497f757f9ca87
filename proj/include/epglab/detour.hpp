#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "epglab/distance.hpp"
#include "epglab/graph.hpp"

namespace epglab {

constexpr int kDefaultDetourCap = 26;
constexpr int kDetourDpLimit = 20;  // subset DP below, branch-and-bound above

namespace detail {

// Longest simple path lengths from `source` to every vertex via DP over
// (visited-mask, endpoints). reach[mask] holds the endpoint set of simple
// paths from source visiting exactly `mask`.
inline std::vector<int> detour_row_dp(const SimpleGraph& g, int source) {
  const int n = g.vcount();
  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) adj[v] = static_cast<uint32_t>(g.row_word(v));
  std::vector<int> best(n, DistanceMatrix::kUnreachable);
  const uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
  std::vector<uint32_t> reach(size_t(1) << n, 0);
  reach[uint32_t(1) << source] = uint32_t(1) << source;
  for (uint32_t mask = uint32_t(1) << source; mask <= full; ++mask) {
    uint32_t ends = reach[mask];
    if (!ends) continue;
    int len = __builtin_popcount(mask) - 1;
    uint32_t e = ends;
    while (e) {
      int v = __builtin_ctz(e);
      e &= e - 1;
      if (len > best[v]) best[v] = len;
    }
    uint32_t cand = full & ~mask;
    while (cand) {
      int v = __builtin_ctz(cand);
      cand &= cand - 1;
      if (adj[v] & ends) reach[mask | (uint32_t(1) << v)] |= uint32_t(1) << v;
    }
  }
  return best;
}

// Exact longest simple source-target path by branch-and-bound DFS over
// bitmasks. Prunings, all sound:
//  - the target must stay reachable through unvisited vertices;
//  - unvisited vertices that cannot serve as path interiors (fewer than two
//    remaining neighbors) are peeled before bounding, and the surviving count
//    bounds the best possible extension;
//  - twin vertices are interchangeable in simple paths, so among unvisited
//    members of one twin class only the lowest-indexed non-target one is tried.
class DetourSearch {
public:
  explicit DetourSearch(const SimpleGraph& g) : n_(g.vcount()) {
    if (n_ > 32) throw capacity_error("detour search limited to 32 vertices", 32);
    adj_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) adj_[v] = static_cast<uint32_t>(g.row_word(v));
    // twin classes: same closed or same open neighborhood
    twin_mask_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
      uint32_t self = uint32_t(1) << v;
      for (int u = 0; u < n_; ++u) {
        uint32_t other = uint32_t(1) << u;
        bool true_twins = (adj_[v] | self) == (adj_[u] | other);
        bool false_twins = adj_[v] == adj_[u];
        if (true_twins || false_twins) twin_mask_[v] |= other;
      }
    }
    // fail-first static ordering: low-degree successors first
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return __builtin_popcount(adj_[a]) < __builtin_popcount(adj_[b]);
    });
  }

  int longest_path(int source, int target) {
    if (source == target) return 0;
    target_ = target;
    target_bit_ = uint32_t(1) << target;
    best_ = -1;
    dfs(source, uint32_t(1) << source, 0);
    return best_;  // -1 when target is unreachable
  }

private:
  uint32_t reachable_from(int from, uint32_t visited) const {
    uint32_t blocked = visited & ~(uint32_t(1) << from);
    uint32_t reach = uint32_t(1) << from;
    for (;;) {
      uint32_t frontier = reach;
      uint32_t grown = reach;
      while (frontier) {
        int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        grown |= adj_[v] & ~blocked;
      }
      if (grown == reach) return reach;
      reach = grown;
    }
  }

  void dfs(int end, uint32_t visited, int len) {
    if (end == target_) {
      if (len > best_) best_ = len;
      return;  // a simple path cannot revisit the target
    }
    uint32_t reach = reachable_from(end, visited);
    if (!(reach & target_bit_)) return;
    // peel vertices that cannot be interior to any extension: every used
    // vertex other than end and the target needs two neighbors among the
    // used set, so iteratively dropping under-connected ones is sound
    uint32_t end_bit = uint32_t(1) << end;
    uint32_t pool = reach & ~end_bit;
    for (;;) {
      uint32_t keep = pool;
      uint32_t scan = pool & ~target_bit_;
      while (scan) {
        int v = __builtin_ctz(scan);
        scan &= scan - 1;
        if (__builtin_popcount(adj_[v] & (pool | end_bit)) < 2) keep &= ~(uint32_t(1) << v);
      }
      if (keep == pool) break;
      pool = keep;
      if (!(pool & target_bit_)) return;
    }
    // the peel may disconnect the target from the end
    uint32_t usable = reachable_from(end, visited | (reach & ~pool & ~end_bit));
    if (!(usable & target_bit_)) return;
    pool &= usable;
    if (len + __builtin_popcount(pool) <= best_) return;

    uint32_t fresh = adj_[end] & ~visited & pool;
    // target last, so full detours are found before short terminations
    for (int pass = 0; pass < 2; ++pass) {
      for (int idx = 0; idx < n_; ++idx) {
        int y = order_[idx];
        uint32_t y_bit = uint32_t(1) << y;
        if (!(fresh & y_bit)) continue;
        if ((y == target_) != (pass == 1)) continue;
        if (y != target_) {
          // canonical twin: skip y when a lower unvisited twin could stand in
          uint32_t peers = twin_mask_[y] & ~visited & ~target_bit_;
          if (peers & (y_bit - 1)) continue;
        }
        dfs(y, visited | y_bit, len + 1);
      }
    }
  }

  int n_;
  std::vector<uint32_t> adj_;
  std::vector<uint32_t> twin_mask_;
  std::vector<int> order_;
  int target_ = 0, best_ = -1;
  uint32_t target_bit_ = 0;
};

}  // namespace detail

/// Longest-simple-path distances from one source to every vertex.
/// Unreachable targets get DistanceMatrix::kUnreachable.
inline std::vector<int> detour_row(const SimpleGraph& g, int source, int cap = kDefaultDetourCap) {
  if (g.vcount() > cap)
    throw capacity_error("detour computation limited to " + std::to_string(cap) +
                             " vertices (got " + std::to_string(g.vcount()) + ")",
                         cap);
  if (g.vcount() <= kDetourDpLimit) return detail::detour_row_dp(g, source);
  detail::DetourSearch search(g);
  std::vector<int> row(g.vcount(), DistanceMatrix::kUnreachable);
  row[source] = 0;
  for (int t = 0; t < g.vcount(); ++t)
    if (t != source) row[t] = search.longest_path(source, t);
  return row;
}

/// Exact all-pairs detour distances. Source rows are independent work items and
/// are computed in parallel; the assembled matrix does not depend on thread
/// count. d_D is symmetric, so only one direction is ever searched.
inline DistanceMatrix all_pairs_detour(const SimpleGraph& g, int cap = kDefaultDetourCap) {
  const int n = g.vcount();
  if (n > cap)
    throw capacity_error("detour computation limited to " + std::to_string(cap) +
                             " vertices (got " + std::to_string(n) + ")",
                         cap);
  DistanceMatrix m;
  m.vcount = n;
  m.kind = DistanceKind::Detour;
  m.entries.assign(size_t(n) * n, DistanceMatrix::kUnreachable);
  for (int v = 0; v < n; ++v) m.at(v, v) = 0;
  if (n <= kDetourDpLimit) {
    parallel_for(n, [&](int s) {
      auto row = detail::detour_row_dp(g, s);
      for (int t = 0; t < n; ++t) m.at(s, t) = row[t];
    });
  } else {
    parallel_for(n - 1, [&](int s) {
      detail::DetourSearch search(g);
      for (int t = s + 1; t < n; ++t) m.at(s, t) = search.longest_path(s, t);
    });
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) m.at(v, u) = m.at(u, v);
  }
  return m;
}

/// Per-vertex and graph-level detour statistics.
struct DetourProfile {
  std::vector<int> ecc;                 // detour eccentricity per vertex
  std::vector<int> detour_degree;       // d_D(v) = #vertices attaining ecc_D(v)
  std::vector<std::vector<int>> dds;    // dense sequence, length ecc+1
  int radius = 0;
  int diameter = 0;
  std::vector<int> degree_sequence;     // d_D values, non-increasing
  BigRational average_degree;
};

inline DetourProfile detour_profile_from_matrix(const DistanceMatrix& m) {
  const int n = m.vcount;
  DetourProfile p;
  p.ecc.assign(n, 0);
  p.detour_degree.assign(n, 0);
  p.dds.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      if (!m.reachable(v, u))
        throw parameter_error("detour profile undefined on disconnected graph");
      p.ecc[v] = std::max(p.ecc[v], m.at(v, u));
    }
    p.dds[v].assign(p.ecc[v] + 1, 0);
    p.dds[v][0] = 1;
    for (int u = 0; u < n; ++u)
      if (u != v) ++p.dds[v][m.at(v, u)];
    p.detour_degree[v] = p.dds[v][p.ecc[v]];
  }
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  p.degree_sequence = p.detour_degree;
  std::sort(p.degree_sequence.begin(), p.degree_sequence.end(), std::greater<int>());
  long long total = std::accumulate(p.detour_degree.begin(), p.detour_degree.end(), 0ll);
  p.average_degree = BigRational(total, n);
  return p;
}

inline DetourProfile detour_profile(const SimpleGraph& g, int cap = kDefaultDetourCap) {
  return detour_profile_from_matrix(all_pairs_detour(g, cap));
}

// ---------------------------------------------------------------------------
// Closed forms for EPG(SD_{8n}), by vertex class.
// ---------------------------------------------------------------------------

enum class SdVertexClass { Identity, Central, Rotation, OddReflection, EvenReflection };

inline SdVertexClass sd_vertex_class(int n, int v) {
  if (v < 0 || v >= 8 * n) throw std::out_of_range("vertex index out of range");
  if (v == 0) return SdVertexClass::Identity;
  if (v == 2 * n) return SdVertexClass::Central;
  if (v < 4 * n) return SdVertexClass::Rotation;
  return ((v - 4 * n) % 2 == 1) ? SdVertexClass::OddReflection : SdVertexClass::EvenReflection;
}

/// Detour distance in EPG(SD_{8n}) by the thirteen-case table.
inline int sd_detour_closed_form(int n, int u, int v) {
  if (n < 2) throw parameter_error("semidihedral parameter must satisfy n >= 2");
  if (u == v) throw parameter_error("detour case table is defined for distinct vertices");
  SdVertexClass cu = sd_vertex_class(n, u), cv = sd_vertex_class(n, v);
  if (static_cast<int>(cu) > static_cast<int>(cv)) {
    std::swap(u, v);
    std::swap(cu, cv);
  }
  using C = SdVertexClass;
  if (cu == C::Identity) {
    if (cv == C::Central) return 4 * n - 1;
    if (cv == C::Rotation) return 4 * n + 1;
    if (cv == C::OddReflection) return 4 * n + 1;
    if (cv == C::EvenReflection) return 1;
  }
  if (cu == C::Central) {
    if (cv == C::Rotation) return 4 * n + 1;
    if (cv == C::OddReflection) return 4 * n + 1;
    if (cv == C::EvenReflection) return 4 * n;
  }
  if (cu == C::Rotation) {
    if (cv == C::Rotation) return 4 * n + 1;
    if (cv == C::OddReflection) return 4 * n + 3;
    if (cv == C::EvenReflection) return 4 * n + 2;
  }
  if (cu == C::OddReflection) {
    if (cv == C::OddReflection) {
      int iu = u - 4 * n, iv = v - 4 * n;
      bool partners = ((iu + 2 * n) % (4 * n)) == iv;
      return partners ? 4 * n + 1 : 4 * n + 3;
    }
    if (cv == C::EvenReflection) return 4 * n + 2;
  }
  if (cu == C::EvenReflection && cv == C::EvenReflection) return 2;
  throw std::logic_error("unreachable detour case");
}

inline DistanceMatrix sd_detour_closed_form_matrix(int n) {
  DistanceMatrix m;
  m.vcount = 8 * n;
  m.kind = DistanceKind::Detour;
  m.entries.assign(size_t(m.vcount) * m.vcount, 0);
  for (int u = 0; u < m.vcount; ++u)
    for (int v = 0; v < m.vcount; ++v)
      if (u != v) m.at(u, v) = sd_detour_closed_form(n, u, v);
  return m;
}

/// Detour distance degree sequence of a vertex of EPG(SD_{8n}), dense with
/// zeros, one of five class sequences.
inline std::vector<int> sd_dds_closed_form(int n, int v) {
  if (n < 2) throw parameter_error("semidihedral parameter must satisfy n >= 2");
  std::vector<int> seq;
  auto zeros = [&](int k) { seq.insert(seq.end(), k, 0); };
  switch (sd_vertex_class(n, v)) {
    case SdVertexClass::Identity:
      seq = {1, 2 * n};
      zeros(4 * n - 3);
      seq.push_back(1);
      seq.push_back(0);
      seq.push_back(6 * n - 2);
      break;
    case SdVertexClass::Central:
      seq = {1};
      zeros(4 * n - 2);
      seq.push_back(1);
      seq.push_back(2 * n);
      seq.push_back(6 * n - 2);
      break;
    case SdVertexClass::Rotation:
      seq = {1};
      zeros(4 * n);
      seq.push_back(4 * n - 1);
      seq.push_back(2 * n);
      seq.push_back(2 * n);
      break;
    case SdVertexClass::EvenReflection:
      seq = {1, 1, 2 * n - 1};
      zeros(4 * n - 3);
      seq.push_back(1);
      seq.push_back(0);
      seq.push_back(6 * n - 2);
      break;
    case SdVertexClass::OddReflection:
      seq = {1};
      zeros(4 * n);
      seq.push_back(3);
      seq.push_back(2 * n);
      seq.push_back(6 * n - 4);
      break;
  }
  return seq;
}

inline int sd_detour_eccentricity_closed_form(int n, int v) {
  switch (sd_vertex_class(n, v)) {
    case SdVertexClass::Identity:
    case SdVertexClass::Central:
      return 4 * n + 1;
    case SdVertexClass::EvenReflection:
      return 4 * n + 2;
    default:
      return 4 * n + 3;
  }
}

inline int sd_detour_degree_closed_form(int n, int v) {
  switch (sd_vertex_class(n, v)) {
    case SdVertexClass::OddReflection:
      return 6 * n - 4;
    case SdVertexClass::Rotation:
      return 2 * n;
    default:
      return 6 * n - 2;  // even reflections and both central vertices
  }
}

}  // namespace epglab
