#pragma once

#include <deque>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

enum class DistanceKind { Geodesic, Detour };

/// Symmetric all-pairs distance table; -1 marks an unreachable pair.
struct DistanceMatrix {
  static constexpr int kUnreachable = -1;

  int vcount = 0;
  DistanceKind kind = DistanceKind::Geodesic;
  std::vector<int> entries;  // row-major vcount x vcount

  int at(int u, int v) const { return entries[size_t(u) * vcount + v]; }
  int& at(int u, int v) { return entries[size_t(u) * vcount + v]; }
  bool reachable(int u, int v) const { return at(u, v) >= 0; }
};

inline std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
  std::vector<int> dist(g.vcount(), DistanceMatrix::kUnreachable);
  dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < g.vcount(); ++y)
      if (g.adjacent(x, y) && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

inline DistanceMatrix all_pairs_geodesic(const SimpleGraph& g) {
  DistanceMatrix m;
  m.vcount = g.vcount();
  m.kind = DistanceKind::Geodesic;
  m.entries.assign(size_t(g.vcount()) * g.vcount(), DistanceMatrix::kUnreachable);
  parallel_for(g.vcount(), [&](int s) {
    auto row = bfs_distances(g, s);
    for (int t = 0; t < g.vcount(); ++t) m.at(s, t) = row[t];
  });
  return m;
}

/// Eccentricity per vertex; requires a connected graph.
inline std::vector<int> eccentricities(const DistanceMatrix& m) {
  std::vector<int> ecc(m.vcount, 0);
  for (int v = 0; v < m.vcount; ++v)
    for (int u = 0; u < m.vcount; ++u) {
      if (u == v) continue;
      if (!m.reachable(v, u)) throw parameter_error("eccentricity undefined on disconnected graph");
      ecc[v] = std::max(ecc[v], m.at(v, u));
    }
  return ecc;
}

}  // namespace epglab
