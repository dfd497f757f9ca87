#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "epglab/common.hpp"

namespace epglab {

enum class GroupFamily { Semidihedral, GeneralizedQuaternion, Dihedral, Custom };

/// Finite group as an explicit Cayley table over 0-based element indices.
/// Immutable after construction; element 0 is always the identity.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[x][y] = x*y
  int identity = 0;
  std::vector<std::string> labels;
  GroupFamily family = GroupFamily::Custom;
  int family_parameter = 0;  // the n of SD_{8n}, Q_{4n}, D_{2n}; 0 for custom

  int mul(int x, int y) const { return table[x][y]; }
};

/// Generator plus the full member set of the cyclic subgroup it generates.
struct CyclicSubgroup {
  int generator = 0;
  std::vector<int> members;  // sorted, always contains the identity
};

namespace detail {

inline std::string power_label(int exponent, bool with_b) {
  std::string base;
  if (exponent == 0)
    base = "";
  else if (exponent == 1)
    base = "a";
  else
    base = "a^" + std::to_string(exponent);
  if (!with_b) return base.empty() ? "e" : base;
  return base + "b";
}

inline std::vector<std::string> two_part_labels(int half) {
  std::vector<std::string> labels(2 * half);
  for (int i = 0; i < half; ++i) {
    labels[i] = power_label(i, false);
    labels[half + i] = power_label(i, true);
  }
  return labels;
}

}  // namespace detail

/// Checks Latin-square, identity-at-0, inverse and (optionally) associativity
/// invariants; throws validation_error naming the offending row or triple.
inline void validate_group(const FiniteGroup& g, bool check_associativity) {
  const int m = g.order;
  if (m <= 0) throw validation_error("group order must be positive");
  if (static_cast<int>(g.table.size()) != m)
    throw validation_error("table has " + std::to_string(g.table.size()) +
                           " rows, expected " + std::to_string(m));
  std::vector<char> seen(m);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(g.table[r].size()) != m)
      throw validation_error("row " + std::to_string(r) + " has wrong length");
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < m; ++c) {
      int v = g.table[r][c];
      if (v < 0 || v >= m)
        throw validation_error("row " + std::to_string(r) + " contains out-of-range entry " +
                               std::to_string(v));
      if (seen[v]++)
        throw validation_error("row " + std::to_string(r) +
                               " is not a permutation (duplicate entry " + std::to_string(v) + ")");
    }
  }
  for (int c = 0; c < m; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < m; ++r) {
      int v = g.table[r][c];
      if (seen[v]++)
        throw validation_error("column " + std::to_string(c) +
                               " is not a permutation (duplicate entry " + std::to_string(v) + ")");
    }
  }
  for (int x = 0; x < m; ++x) {
    if (g.table[g.identity][x] != x || g.table[x][g.identity] != x)
      throw validation_error("element " + std::to_string(g.identity) +
                             " is not a two-sided identity (fails at " + std::to_string(x) + ")");
  }
  for (int x = 0; x < m; ++x) {
    std::optional<int> inv;
    for (int y = 0; y < m; ++y) {
      if (g.table[x][y] == g.identity && g.table[y][x] == g.identity) {
        if (inv) throw validation_error("element " + std::to_string(x) + " has two inverses");
        inv = y;
      }
    }
    if (!inv) throw validation_error("element " + std::to_string(x) + " has no two-sided inverse");
  }
  if (check_associativity) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z)
          if (g.table[g.table[x][y]][z] != g.table[x][g.table[y][z]])
            throw validation_error("associativity fails at triple (" + std::to_string(x) + ", " +
                                   std::to_string(y) + ", " + std::to_string(z) + ")");
  }
}

/// Semidihedral group SD_{8n} = <a, b : a^{4n} = b^2 = e, ba = a^{2n-1}b>.
/// Elements indexed a^0..a^{4n-1}, then a^0 b..a^{4n-1} b.
inline FiniteGroup make_semidihedral(int n) {
  if (n < 2) throw parameter_error("semidihedral parameter must satisfy n >= 2");
  const int q = 4 * n;
  FiniteGroup g;
  g.order = 8 * n;
  g.family = GroupFamily::Semidihedral;
  g.family_parameter = n;
  g.labels = detail::two_part_labels(q);
  // b a^i = a^{4n-i} b (i even), a^{2n-i} b (i odd)
  auto conj = [&](int i) { return (i % 2 == 0 ? (q - i) % q : ((2 * n - i) % q + q) % q); };
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    int xi = x % q, xb = x / q;
    for (int y = 0; y < g.order; ++y) {
      int yi = y % q, yb = y / q;
      if (xb == 0) {
        g.table[x][y] = (xi + yi) % q + q * yb;
      } else {
        int shifted = conj(yi);
        g.table[x][y] = (xi + shifted) % q + q * (1 - yb);
      }
    }
  }
  return g;
}

/// Generalized quaternion group Q_{4n} = <a, b : a^{2n} = e, b^2 = a^n,
/// b a b^{-1} = a^{-1}>. Elements indexed a^0..a^{2n-1}, then a^0 b..a^{2n-1} b.
inline FiniteGroup make_generalized_quaternion(int n) {
  if (n < 2) throw parameter_error("generalized quaternion parameter must satisfy n >= 2");
  const int q = 2 * n;
  FiniteGroup g;
  g.order = 4 * n;
  g.family = GroupFamily::GeneralizedQuaternion;
  g.family_parameter = n;
  g.labels = detail::two_part_labels(q);
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    int xi = x % q, xb = x / q;
    for (int y = 0; y < g.order; ++y) {
      int yi = y % q, yb = y / q;
      if (xb == 0) {
        g.table[x][y] = (xi + yi) % q + q * yb;
      } else if (yb == 0) {
        g.table[x][y] = ((xi - yi) % q + q) % q + q;
      } else {
        g.table[x][y] = ((xi - yi + n) % q + q) % q;
      }
    }
  }
  return g;
}

/// Dihedral group D_{2n} = <a, b : a^n = b^2 = e, bab = a^{-1}>.
/// Elements indexed a^0..a^{n-1}, then a^0 b..a^{n-1} b.
inline FiniteGroup make_dihedral(int n) {
  if (n < 3) throw parameter_error("dihedral parameter must satisfy n >= 3");
  FiniteGroup g;
  g.order = 2 * n;
  g.family = GroupFamily::Dihedral;
  g.family_parameter = n;
  g.labels = detail::two_part_labels(n);
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    int xi = x % n, xb = x / n;
    for (int y = 0; y < g.order; ++y) {
      int yi = y % n, yb = y / n;
      if (xb == 0)
        g.table[x][y] = (xi + yi) % n + n * yb;
      else if (yb == 0)
        g.table[x][y] = ((xi - yi) % n + n) % n + n;
      else
        g.table[x][y] = ((xi - yi) % n + n) % n;
    }
  }
  return g;
}

/// Parses the Cayley-table text format: first token is the order m, followed by
/// exactly m*m whitespace-separated 0-based products, row by row. Element 0 must
/// be the identity. Trailing non-whitespace is rejected.
inline FiniteGroup load_cayley_table(const std::string& text) {
  std::istringstream in(text);
  long long m = 0;
  if (!(in >> m)) throw validation_error("missing group order");
  if (m <= 0 || m > 4096) throw validation_error("group order out of range: " + std::to_string(m));
  FiniteGroup g;
  g.order = static_cast<int>(m);
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int r = 0; r < g.order; ++r)
    for (int c = 0; c < g.order; ++c) {
      long long v;
      if (!(in >> v))
        throw validation_error("table truncated at row " + std::to_string(r) + ", column " +
                               std::to_string(c));
      if (v < 0 || v >= m)
        throw validation_error("row " + std::to_string(r) + " contains out-of-range entry " +
                               std::to_string(v));
      g.table[r][c] = static_cast<int>(v);
    }
  std::string extra;
  if (in >> extra) throw validation_error("trailing garbage after table: '" + extra + "'");
  g.labels.resize(g.order);
  for (int i = 0; i < g.order; ++i) g.labels[i] = "g" + std::to_string(i);
  g.labels[0] = "e";
  validate_group(g, /*check_associativity=*/true);
  return g;
}

/// Renders a group in the Cayley-table text format accepted by load_cayley_table.
inline std::string render_cayley_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order << "\n";
  for (int r = 0; r < g.order; ++r) {
    for (int c = 0; c < g.order; ++c) {
      if (c) out << ' ';
      out << g.table[r][c];
    }
    out << "\n";
  }
  return out.str();
}

/// Least k >= 1 with x^k = e.
inline int element_order(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order) throw std::out_of_range("element index out of range");
  int p = x, k = 1;
  while (p != g.identity) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

/// Members of <x>, sorted.
inline std::vector<int> cyclic_subgroup_members(const FiniteGroup& g, int x) {
  std::vector<char> in(g.order, 0);
  in[g.identity] = 1;
  int p = x;
  while (!in[p]) {
    in[p] = 1;
    p = g.mul(p, x);
  }
  std::vector<int> members;
  for (int i = 0; i < g.order; ++i)
    if (in[i]) members.push_back(i);
  return members;
}

/// All cyclic subgroups not properly contained in another cyclic subgroup,
/// deduplicated by member set. Generators are the smallest index attaining the set.
inline std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
  std::vector<CyclicSubgroup> all;
  for (int x = 0; x < g.order; ++x) {
    auto members = cyclic_subgroup_members(g, x);
    bool dup = false;
    for (const auto& s : all)
      if (s.members == members) {
        dup = true;
        break;
      }
    if (!dup) all.push_back(CyclicSubgroup{x, std::move(members)});
  }
  std::vector<CyclicSubgroup> maximal;
  for (const auto& s : all) {
    bool contained = false;
    for (const auto& t : all) {
      if (t.members.size() <= s.members.size()) continue;
      if (std::includes(t.members.begin(), t.members.end(), s.members.begin(), s.members.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(s);
  }
  return maximal;
}

}  // namespace epglab
