#pragma once

#include <algorithm>
#include <vector>

#include "epglab/distance.hpp"
#include "epglab/graph.hpp"

namespace epglab {

/// Induced subgraph on the vertices of minimum eccentricity.
inline SimpleGraph center(const SimpleGraph& g) {
  if (!g.connected()) throw parameter_error("center undefined on disconnected graph");
  auto dist = all_pairs_geodesic(g);
  auto ecc = eccentricities(dist);
  int radius = *std::min_element(ecc.begin(), ecc.end());
  std::vector<int> keep;
  for (int v = 0; v < g.vcount(); ++v)
    if (ecc[v] == radius) keep.push_back(v);
  return g.induced(keep);
}

/// Vertices that are eccentric for some vertex: v with d(u, v) = ecc(u).
inline std::vector<int> eccentric_vertices(const SimpleGraph& g) {
  if (!g.connected()) throw parameter_error("eccentric subgraph undefined on disconnected graph");
  auto dist = all_pairs_geodesic(g);
  auto ecc = eccentricities(dist);
  std::vector<char> mark(g.vcount(), 0);
  for (int u = 0; u < g.vcount(); ++u)
    for (int v = 0; v < g.vcount(); ++v)
      if (u != v && dist.at(u, v) == ecc[u]) mark[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vcount(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

inline SimpleGraph eccentric_subgraph(const SimpleGraph& g) {
  return g.induced(eccentric_vertices(g));
}

/// Closure: repeatedly join non-adjacent pairs whose degree sum reaches the
/// vertex count. Pairs are scanned in (i, j) lexicographic order with a restart
/// after each insertion; the fixed point does not depend on the order (a test
/// asserts this rather than assuming it).
inline SimpleGraph closure(const SimpleGraph& g, bool reverse_scan = false) {
  SimpleGraph out = g;
  const int n = out.vcount();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = out.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n && !changed; ++a)
      for (int b = a + 1; b < n && !changed; ++b) {
        int i = reverse_scan ? n - 1 - a : a;
        int j = reverse_scan ? n - 1 - b : b;
        if (i > j) std::swap(i, j);
        if (!out.adjacent(i, j) && deg[i] + deg[j] >= n) {
          out.add_edge(i, j);
          ++deg[i];
          ++deg[j];
          changed = true;
        }
      }
  }
  return out;
}

struct BoundaryReport {
  std::vector<int> boundary;        // boundary vertices of the graph
  std::vector<int> interior;        // complement of boundary
  SimpleGraph interior_subgraph;    // induced on the interior
  std::vector<int> complete;        // v whose open neighborhood is a clique
};

/// v is a boundary vertex of u when no neighbor of v is farther from u than v.
inline bool is_boundary_vertex_of(const SimpleGraph& g, const DistanceMatrix& dist, int v, int u) {
  for (int w = 0; w < g.vcount(); ++w)
    if (g.adjacent(v, w) && dist.at(u, w) > dist.at(u, v)) return false;
  return true;
}

/// Boundary, interior and complete vertices with respect to the given distance
/// matrix (geodesic or detour). Interior is the complement of the boundary.
inline BoundaryReport boundary_interior(const SimpleGraph& g, const DistanceMatrix& dist) {
  if (!g.connected()) throw parameter_error("boundary/interior undefined on disconnected graph");
  const int n = g.vcount();
  BoundaryReport rep;
  for (int v = 0; v < n; ++v) {
    bool bd = false;
    for (int u = 0; u < n && !bd; ++u)
      if (u != v && is_boundary_vertex_of(g, dist, v, u)) bd = true;
    (bd ? rep.boundary : rep.interior).push_back(v);
  }
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    bool clique = true;
    for (size_t i = 0; i < nb.size() && clique; ++i)
      for (size_t j = i + 1; j < nb.size() && clique; ++j)
        if (!g.adjacent(nb[i], nb[j])) clique = false;
    if (clique) rep.complete.push_back(v);
  }
  rep.interior_subgraph = g.induced(rep.interior);
  return rep;
}

inline BoundaryReport boundary_interior(const SimpleGraph& g) {
  return boundary_interior(g, all_pairs_geodesic(g));
}

/// Independent interior test via metric betweenness: v is interior when every
/// other u has some w with d(u, v) + d(v, w) = d(u, w). Coincides with
/// "not a boundary vertex" for geodesic distances (book theorem); used as the
/// cross-check implementation in tests.
inline bool is_interior_by_betweenness(const DistanceMatrix& dist, int v) {
  for (int u = 0; u < dist.vcount; ++u) {
    if (u == v) continue;
    bool found = false;
    for (int w = 0; w < dist.vcount && !found; ++w)
      if (w != v && dist.at(u, v) + dist.at(v, w) == dist.at(u, w)) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace epglab
