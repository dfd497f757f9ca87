#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "epglab/graph.hpp"
#include "epglab/group.hpp"
#include "epglab/polynomial.hpp"

namespace epglab {

constexpr int kDefaultCharpolyCap = 128;

/// Integer eigenvalues with multiplicities plus whatever would not factor.
struct SpectrumSummary {
  std::vector<std::pair<long long, int>> roots;  // (eigenvalue, multiplicity), ascending
  IntPolynomial residual;                        // degree 0 when fully factored

  int total_multiplicity() const {
    int t = 0;
    for (const auto& [v, m] : roots) t += m;
    return t;
  }

  bool fully_integer() const { return residual.degree() <= 0; }

  bool operator==(const SpectrumSummary& o) const {
    return roots == o.roots && residual == o.residual;
  }
};

inline std::vector<std::vector<BigInt>> laplacian_matrix(const SimpleGraph& g) {
  const int n = g.vcount();
  std::vector<std::vector<BigInt>> L(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) {
    L[i][i] = g.degree(i);
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) L[i][j] = -1;
  }
  return L;
}

/// Exact monic characteristic polynomial of an integer matrix by the
/// Faddeev-LeVerrier recurrence; every division is exact over the integers.
inline IntPolynomial charpoly_faddeev_leverrier(const std::vector<std::vector<BigInt>>& A) {
  const int n = static_cast<int>(A.size());
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n, 0));
  std::vector<std::vector<BigInt>> AM(n, std::vector<BigInt>(n, 0));
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int l = 0; l < n; ++l) acc += A[i][l] * M[l][j];
        AM[i][j] = std::move(acc);
      }
    for (int i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    std::swap(M, AM);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) trace += A[i][l] * M[l][i];
    c[n - k] = -trace / k;
  }
  return IntPolynomial(std::move(c));
}

inline IntPolynomial laplacian_charpoly(const SimpleGraph& g, int cap = kDefaultCharpolyCap) {
  if (g.vcount() > cap)
    throw capacity_error("characteristic polynomial limited to " + std::to_string(cap) +
                             " vertices (got " + std::to_string(g.vcount()) + ")",
                         cap);
  return charpoly_faddeev_leverrier(laplacian_matrix(g));
}

/// Extracts every integer root of a Laplacian characteristic polynomial by
/// synthetic-division deflation. Laplacian eigenvalues are nonnegative and at
/// most the vertex count, so the candidates are exactly 0..vcount.
inline SpectrumSummary integer_spectrum_of_charpoly(IntPolynomial p, int vcount) {
  SpectrumSummary s;
  for (long long lambda = 0; lambda <= vcount; ++lambda) {
    int mult = 0;
    while (p.deflate_root(lambda)) ++mult;
    if (mult > 0) s.roots.emplace_back(lambda, mult);
  }
  s.residual = std::move(p);
  return s;
}

inline SpectrumSummary integer_spectrum(const SimpleGraph& g, int cap = kDefaultCharpolyCap) {
  return integer_spectrum_of_charpoly(laplacian_charpoly(g, cap), g.vcount());
}

/// Exact determinant by fraction-free Bareiss elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Number of spanning trees by the Kirchhoff reduced determinant (row and
/// column 0 of the Laplacian deleted). Returns 0 for disconnected graphs.
inline BigInt spanning_tree_count(const SimpleGraph& g) {
  const int n = g.vcount();
  if (n == 0) return 0;
  if (n == 1) return 1;
  auto L = laplacian_matrix(g);
  std::vector<std::vector<BigInt>> reduced(n - 1, std::vector<BigInt>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) reduced[i - 1][j - 1] = L[i][j];
  return bareiss_determinant(std::move(reduced));
}

/// (product of nonzero eigenvalues) / vcount; defined when the spectrum is
/// fully integer and 0 has multiplicity 1.
inline BigInt tree_count_from_spectrum(const SpectrumSummary& s, int vcount) {
  BigInt prod = 1;
  for (const auto& [lambda, mult] : s.roots) {
    if (lambda == 0) continue;
    for (int i = 0; i < mult; ++i) prod *= lambda;
  }
  return prod / vcount;
}

// ---------------------------------------------------------------------------
// Closed-form Laplacian spectra.
// ---------------------------------------------------------------------------

enum class SpectrumFamily { SD, Q, D };

/// Paper factorizations of the Laplacian characteristic polynomial of the
/// enhanced power graph, with coinciding eigenvalues merged:
///   SD_{8n}: x (x-8n) (x-6n) (x-4n)^{4n-3} (x-2)^n (x-4)^n (x-1)^{2n}
///   Q_{4n}:  x (x-4n)^2 (x-4)^n (x-2)^n (x-2n)^{2n-3}
///   D_{2n}:  x (x-1)^n (x-n)^{n-2} (x-2n)
inline SpectrumSummary closed_form_spectrum(SpectrumFamily family, int n) {
  std::map<long long, int> acc;
  auto add = [&](long long lambda, int mult) {
    if (mult > 0) acc[lambda] += mult;
  };
  switch (family) {
    case SpectrumFamily::SD:
      if (n < 2) throw parameter_error("SD spectrum requires n >= 2");
      add(0, 1);
      add(8ll * n, 1);
      add(6ll * n, 1);
      add(4ll * n, 4 * n - 3);
      add(2, n);
      add(4, n);
      add(1, 2 * n);
      break;
    case SpectrumFamily::Q:
      if (n < 2) throw parameter_error("Q spectrum requires n >= 2");
      add(0, 1);
      add(4ll * n, 2);
      add(4, n);
      add(2, n);
      add(2ll * n, 2 * n - 3);
      break;
    case SpectrumFamily::D:
      if (n < 3) throw parameter_error("D spectrum requires n >= 3");
      add(0, 1);
      add(1, n);
      add(n, n - 2);
      add(2ll * n, 1);
      break;
  }
  SpectrumSummary s;
  for (const auto& [lambda, mult] : acc) s.roots.emplace_back(lambda, mult);
  s.residual = IntPolynomial::one();
  return s;
}

inline IntPolynomial expand_spectrum(const SpectrumSummary& s) {
  std::vector<std::pair<BigInt, int>> roots;
  for (const auto& [lambda, mult] : s.roots) roots.emplace_back(BigInt(lambda), mult);
  IntPolynomial p = expand_factorization(roots);
  if (!s.residual.is_zero() && s.residual.degree() > 0) p = p * s.residual;
  return p;
}

/// Paper spanning-tree counts: SD 2^{11n-5} 3 n^{4n-2}, Q 2^{5n-1} n^{2n-2},
/// D n^{n-2}.
inline BigInt closed_form_tree_count(SpectrumFamily family, int n) {
  auto ipow = [](BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  switch (family) {
    case SpectrumFamily::SD:
      if (n < 2) throw parameter_error("SD tree count requires n >= 2");
      return ipow(2, 11 * n - 5) * 3 * ipow(n, 4 * n - 2);
    case SpectrumFamily::Q:
      if (n < 2) throw parameter_error("Q tree count requires n >= 2");
      return ipow(2, 5 * n - 1) * ipow(n, 2 * n - 2);
    case SpectrumFamily::D:
      if (n < 3) throw parameter_error("D tree count requires n >= 3");
      return ipow(n, n - 2);
  }
  throw std::logic_error("unreachable family");
}

}  // namespace epglab
