#pragma once

#include <set>
#include <vector>

#include "epglab/graph.hpp"
#include "epglab/group.hpp"

namespace epglab {

/// Enhanced power graph: x ~ y iff some cyclic subgroup contains both, which is
/// equivalent to sharing a maximal cyclic subgroup. Adjacency is computed from
/// per-vertex membership masks over the maximal cyclic subgroups.
inline SimpleGraph enhanced_power_graph(const FiniteGroup& g) {
  auto maxcyc = maximal_cyclic_subgroups(g);
  const int nsub = static_cast<int>(maxcyc.size());
  const int words = (nsub + 63) / 64;
  std::vector<uint64_t> mask(size_t(g.order) * words, 0);
  for (int s = 0; s < nsub; ++s)
    for (int x : maxcyc[s].members) mask[size_t(x) * words + (s >> 6)] |= uint64_t(1) << (s & 63);
  SimpleGraph graph(g.order, g.labels);
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y) {
      for (int w = 0; w < words; ++w)
        if (mask[size_t(x) * words + w] & mask[size_t(y) * words + w]) {
          graph.add_edge(x, y);
          break;
        }
    }
  return graph;
}

/// Power graph: x ~ y iff one is a positive power of the other.
inline SimpleGraph power_graph(const FiniteGroup& g) {
  std::vector<std::vector<char>> in_cyc(g.order, std::vector<char>(g.order, 0));
  for (int x = 0; x < g.order; ++x)
    for (int m : cyclic_subgroup_members(g, x)) in_cyc[x][m] = 1;
  SimpleGraph graph(g.order, g.labels);
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (in_cyc[x][y] || in_cyc[y][x]) graph.add_edge(x, y);
  return graph;
}

/// Closed neighborhood N[v] in EPG(SD_{8n}) by the five-case closed form:
/// identity, a^{2n}, other rotations, odd a^i b, even a^i b.
inline std::vector<int> sd_neighborhood_oracle(int n, int v) {
  if (n < 2) throw parameter_error("semidihedral parameter must satisfy n >= 2");
  if (v < 0 || v >= 8 * n) throw std::out_of_range("vertex index out of range");
  const int q = 4 * n;
  std::set<int> out;
  if (v == 0) {
    for (int i = 0; i < 8 * n; ++i) out.insert(i);
  } else if (v == 2 * n) {
    for (int i = 0; i < q; ++i) out.insert(i);
    for (int i = 0; i < 2 * n; ++i) out.insert(q + 2 * i + 1);
  } else if (v < q) {
    for (int i = 0; i < q; ++i) out.insert(i);
  } else if ((v - q) % 2 == 1) {
    int i = v - q;
    out = {0, 2 * n, q + i, q + (i + 2 * n) % q};
  } else {
    out = {0, v};
  }
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace epglab
