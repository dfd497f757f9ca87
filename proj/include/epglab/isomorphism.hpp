#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

/// Backtracking isomorphism search with degree and neighbor-degree-multiset
/// pruning. Intended for graphs up to 64 vertices; search order is
/// deterministic, so the returned bijection (g1 index -> g2 index) is too.
inline std::optional<std::vector<int>> is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2) {
  const int n = g1.vcount();
  if (n != g2.vcount()) return std::nullopt;
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n > 64) throw capacity_error("isomorphism checker supports at most 64 vertices", 64);
  if (n == 0) return std::vector<int>{};

  auto signature = [](const SimpleGraph& g) {
    std::vector<std::pair<int, std::vector<int>>> sig(g.vcount());
    for (int v = 0; v < g.vcount(); ++v) {
      sig[v].first = g.degree(v);
      for (int u : g.neighbors(v)) sig[v].second.push_back(g.degree(u));
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    return sig;
  };
  auto sig1 = signature(g1), sig2 = signature(g2);
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  // Map most-constrained (rarest signature, then highest degree) vertices first.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::map<std::pair<int, std::vector<int>>, int> freq;
  for (const auto& s : sig1) ++freq[s];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int fa = freq[sig1[a]], fb = freq[sig1[b]];
    if (fa != fb) return fa < fb;
    if (sig1[a].first != sig1[b].first) return sig1[a].first > sig1[b].first;
    return a < b;
  });

  std::vector<int> mapping(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int v1, int v2, int depth) {
    if (sig1[v1] != sig2[v2]) return false;
    for (int k = 0; k < depth; ++k) {
      int u1 = order[k];
      if (g1.adjacent(v1, u1) != g2.adjacent(v2, mapping[u1])) return false;
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    int v1 = order[depth];
    for (int v2 = 0; v2 < n; ++v2) {
      if (used[v2] || !consistent(v1, v2, depth)) continue;
      mapping[v1] = v2;
      used[v2] = 1;
      if (extend(depth + 1)) return true;
      used[v2] = 0;
      mapping[v1] = -1;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return mapping;
}

}  // namespace epglab
