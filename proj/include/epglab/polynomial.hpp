#pragma once

#include <string>
#include <vector>

#include "epglab/common.hpp"

namespace epglab {

/// Integer-coefficient polynomial, coefficients lowest degree first.
/// Normalized so the leading coefficient is nonzero (zero polynomial = {}).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt v) { return IntPolynomial({std::move(v)}); }
  static IntPolynomial one() { return constant(1); }

  /// x - root
  static IntPolynomial linear_root(const BigInt& root) { return IntPolynomial({-root, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<BigInt>& coefficients() const { return c_; }

  const BigInt& operator[](int i) const {
    static const BigInt zero = 0;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
  }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPolynomial(std::move(out));
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Divides by (x - root) when root is an exact root; returns false otherwise
  /// (and leaves *this untouched). Synthetic division.
  bool deflate_root(const BigInt& root) {
    if (is_zero()) return false;
    std::vector<BigInt> q(c_.size() - 1, 0);
    BigInt carry = 0;
    for (int i = degree(); i >= 1; --i) {
      carry = carry * root + c_[i];
      q[i - 1] = carry;
    }
    if (carry * root + c_[0] != 0) return false;
    c_ = std::move(q);
    trim();
    return true;
  }

  /// Largest k with x^k dividing the polynomial.
  int trailing_zero_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.str());
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline IntPolynomial expand_factorization(const std::vector<std::pair<BigInt, int>>& roots) {
  IntPolynomial p = IntPolynomial::one();
  for (const auto& [root, mult] : roots)
    for (int i = 0; i < mult; ++i) p = p * IntPolynomial::linear_root(root);
  return p;
}

}  // namespace epglab
