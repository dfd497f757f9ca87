#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "epglab/common.hpp"

namespace epglab {

/// Immutable undirected simple graph over indexed vertices.
/// Adjacency is kept as one dynamic bitset row per vertex.
class SimpleGraph {
public:
  SimpleGraph() = default;

  explicit SimpleGraph(int vcount, std::vector<std::string> vlabels = {})
      : vcount_(vcount), words_((vcount + 63) / 64), bits_(size_t(vcount) * words_, 0) {
    if (vcount < 0) throw parameter_error("vertex count must be nonnegative");
    if (vlabels.empty()) {
      labels_.resize(vcount);
      for (int i = 0; i < vcount; ++i) labels_[i] = std::to_string(i);
    } else {
      if (static_cast<int>(vlabels.size()) != vcount)
        throw parameter_error("label count does not match vertex count");
      labels_ = std::move(vlabels);
    }
  }

  int vcount() const { return vcount_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  bool adjacent(int u, int v) const {
    return (bits_[size_t(u) * words_ + size_t(v >> 6)] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v) {
    if (u == v) throw parameter_error("self-loops are not allowed");
    bits_[size_t(u) * words_ + size_t(v >> 6)] |= uint64_t(1) << (v & 63);
    bits_[size_t(v) * words_ + size_t(u >> 6)] |= uint64_t(1) << (u & 63);
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += __builtin_popcountll(bits_[size_t(v) * words_ + w]);
    return d;
  }

  long long edge_count() const {
    long long total = 0;
    for (int v = 0; v < vcount_; ++v) total += degree(v);
    return total / 2;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < vcount_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  /// N[v] as a sorted index list.
  std::vector<int> closed_neighborhood(int v) const {
    std::vector<int> out;
    for (int u = 0; u < vcount_; ++u)
      if (u == v || adjacent(v, u)) out.push_back(u);
    return out;
  }

  std::vector<int> degree_sequence() const {  // non-increasing
    std::vector<int> ds(vcount_);
    for (int v = 0; v < vcount_; ++v) ds[v] = degree(v);
    std::sort(ds.begin(), ds.end(), std::greater<int>());
    return ds;
  }

  SimpleGraph induced(const std::vector<int>& vertices) const {
    std::vector<std::string> lab;
    lab.reserve(vertices.size());
    for (int v : vertices) lab.push_back(labels_[v]);
    SimpleGraph out(static_cast<int>(vertices.size()), std::move(lab));
    for (size_t i = 0; i < vertices.size(); ++i)
      for (size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(vertices[i], vertices[j])) out.add_edge(int(i), int(j));
    return out;
  }

  bool same_edges(const SimpleGraph& other) const {
    return vcount_ == other.vcount_ && bits_ == other.bits_;
  }

  bool connected() const {
    if (vcount_ == 0) return true;
    std::vector<char> seen(vcount_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < vcount_; ++y)
        if (adjacent(x, y) && !seen[y]) {
          seen[y] = 1;
          ++visited;
          stack.push_back(y);
        }
    }
    return visited == vcount_;
  }

  /// Neighbor set of v restricted to the first 64 vertices, as a word.
  uint64_t row_word(int v) const { return bits_[size_t(v) * words_]; }

private:
  int vcount_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<std::string> labels_;
};

inline SimpleGraph complete(int k) {
  SimpleGraph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

inline SimpleGraph edgeless(int k) { return SimpleGraph(k); }

/// Vertices of g1 first, then g2; no cross edges.
inline SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
  std::vector<std::string> lab;
  lab.reserve(g1.vcount() + g2.vcount());
  for (int v = 0; v < g1.vcount(); ++v) lab.push_back(g1.label(v));
  for (int v = 0; v < g2.vcount(); ++v) lab.push_back(g2.label(v));
  SimpleGraph g(g1.vcount() + g2.vcount(), std::move(lab));
  for (int i = 0; i < g1.vcount(); ++i)
    for (int j = i + 1; j < g1.vcount(); ++j)
      if (g1.adjacent(i, j)) g.add_edge(i, j);
  int off = g1.vcount();
  for (int i = 0; i < g2.vcount(); ++i)
    for (int j = i + 1; j < g2.vcount(); ++j)
      if (g2.adjacent(i, j)) g.add_edge(off + i, off + j);
  return g;
}

/// Join g1 v g2: disjoint union plus every cross edge.
inline SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2) {
  SimpleGraph g = disjoint_union(g1, g2);
  for (int i = 0; i < g1.vcount(); ++i)
    for (int j = 0; j < g2.vcount(); ++j) g.add_edge(i, g1.vcount() + j);
  return g;
}

/// k disjoint copies of g.
inline SimpleGraph copies(int k, const SimpleGraph& g) {
  SimpleGraph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace epglab
