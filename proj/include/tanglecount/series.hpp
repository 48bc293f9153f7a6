#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "tanglecount/errors.hpp"
#include "tanglecount/numeric.hpp"

namespace tanglecount {

// Univariate truncated power series with exact rational coefficients,
// indices 0..order.  Arithmetic never extends the truncation order: binary
// operations return the minimum of the operand orders.
class Series1 {
public:
  explicit Series1(int order) : coeffs_(static_cast<std::size_t>(order) + 1) { assert(order >= 0); }

  static Series1 constant(const Rational& c, int order) {
    Series1 s(order);
    s[0] = c;
    return s;
  }
  static Series1 zero(int order) { return Series1(order); }
  static Series1 one(int order) { return constant(1, order); }
  static Series1 monomial(int k, const Rational& c, int order) {
    Series1 s(order);
    if (k <= order) s[k] = c;
    return s;
  }
  static Series1 x(int order) { return monomial(1, 1, order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  // Lowest index with nonzero coefficient; order()+1 for the zero series.
  int valuation() const {
    for (int k = 0; k <= order(); ++k)
      if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
    return order() + 1;
  }

  Series1 truncated(int new_order) const {
    assert(new_order <= order());
    Series1 s(new_order);
    for (int k = 0; k <= new_order; ++k) s[k] = (*this)[k];
    return s;
  }

  friend Series1 operator+(const Series1& a, const Series1& b) {
    Series1 s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
    return s;
  }
  friend Series1 operator-(const Series1& a, const Series1& b) {
    Series1 s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
    return s;
  }
  friend Series1 operator-(const Series1& a) {
    Series1 s(a.order());
    for (int k = 0; k <= s.order(); ++k) s[k] = -a[k];
    return s;
  }
  friend Series1 operator*(const Series1& a, const Series1& b) {
    Series1 s(std::min(a.order(), b.order()));
    for (int i = 0; i <= std::min(a.order(), s.order()); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= s.order() && j <= b.order(); ++j) {
        if (b[j] == 0) continue;
        s[i + j] += a[i] * b[j];
      }
    }
    return s;
  }
  friend Series1 operator*(const Rational& c, const Series1& a) {
    Series1 s(a.order());
    for (int k = 0; k <= s.order(); ++k) s[k] = c * a[k];
    return s;
  }
  friend Series1 operator+(const Series1& a, const Rational& c) {
    Series1 s = a;
    s[0] += c;
    return s;
  }
  friend Series1 operator+(const Rational& c, const Series1& a) { return a + c; }
  friend Series1 operator-(const Rational& c, const Series1& a) { return (-a) + c; }

  // Multiplicative inverse; requires a nonzero constant term.
  Series1 reciprocal() const {
    if ((*this)[0] == 0) throw ZeroConstantTermError("reciprocal requires nonzero constant term");
    Series1 s(order());
    s[0] = Rational(1) / (*this)[0];
    for (int k = 1; k <= order(); ++k) {
      Rational acc = 0;
      for (int j = 1; j <= k; ++j) acc += (*this)[j] * s[k - j];
      s[k] = -acc / (*this)[0];
    }
    return s;
  }

  // this(inner); inner must have zero constant term.
  Series1 compose(const Series1& inner) const {
    if (inner[0] != 0) throw CompositionOrderError("composition requires inner constant term zero");
    const int N = std::min(order(), inner.order());
    Series1 acc = Series1::zero(N);
    for (int k = order(); k >= 0; --k) acc = acc * inner.truncated(std::min(N, inner.order())) + (*this)[k];
    return acc;
  }

  bool operator==(const Series1&) const = default;

private:
  std::vector<Rational> coeffs_;
};

// Bivariate truncated power series, dense rectangular coefficient table.
class Series2 {
public:
  Series2(int order_x, int order_y)
      : nx_(order_x), ny_(order_y),
        coeffs_(static_cast<std::size_t>(order_x + 1) * static_cast<std::size_t>(order_y + 1)) {
    assert(order_x >= 0 && order_y >= 0);
  }

  static Series2 constant(const Rational& c, int nx, int ny) {
    Series2 s(nx, ny);
    s.at(0, 0) = c;
    return s;
  }
  static Series2 zero(int nx, int ny) { return Series2(nx, ny); }
  static Series2 one(int nx, int ny) { return constant(1, nx, ny); }
  static Series2 x(int nx, int ny) {
    Series2 s(nx, ny);
    if (nx >= 1) s.at(1, 0) = 1;
    return s;
  }
  static Series2 y(int nx, int ny) {
    Series2 s(nx, ny);
    if (ny >= 1) s.at(0, 1) = 1;
    return s;
  }

  int order_x() const { return nx_; }
  int order_y() const { return ny_; }

  const Rational& at(int i, int j) const {
    return coeffs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(ny_ + 1) + static_cast<std::size_t>(j)];
  }
  Rational& at(int i, int j) {
    return coeffs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(ny_ + 1) + static_cast<std::size_t>(j)];
  }

  friend Series2 operator+(const Series2& a, const Series2& b) {
    Series2 s(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
    for (int i = 0; i <= s.nx_; ++i)
      for (int j = 0; j <= s.ny_; ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
    return s;
  }
  friend Series2 operator-(const Series2& a, const Series2& b) {
    Series2 s(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
    for (int i = 0; i <= s.nx_; ++i)
      for (int j = 0; j <= s.ny_; ++j) s.at(i, j) = a.at(i, j) - b.at(i, j);
    return s;
  }
  friend Series2 operator-(const Series2& a) {
    Series2 s(a.nx_, a.ny_);
    for (int i = 0; i <= s.nx_; ++i)
      for (int j = 0; j <= s.ny_; ++j) s.at(i, j) = -a.at(i, j);
    return s;
  }
  friend Series2 operator*(const Series2& a, const Series2& b) {
    Series2 s(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
    for (int i1 = 0; i1 <= std::min(a.nx_, s.nx_); ++i1)
      for (int j1 = 0; j1 <= std::min(a.ny_, s.ny_); ++j1) {
        if (a.at(i1, j1) == 0) continue;
        for (int i2 = 0; i1 + i2 <= s.nx_ && i2 <= b.nx_; ++i2)
          for (int j2 = 0; j1 + j2 <= s.ny_ && j2 <= b.ny_; ++j2) {
            if (b.at(i2, j2) == 0) continue;
            s.at(i1 + i2, j1 + j2) += a.at(i1, j1) * b.at(i2, j2);
          }
      }
    return s;
  }
  friend Series2 operator+(const Series2& a, const Rational& c) {
    Series2 s = a;
    s.at(0, 0) += c;
    return s;
  }
  friend Series2 operator-(const Rational& c, const Series2& a) { return (-a) + c; }

  Series2 reciprocal() const {
    if (at(0, 0) == 0) throw ZeroConstantTermError("reciprocal requires nonzero constant term");
    Series2 s(nx_, ny_);
    const Rational inv0 = Rational(1) / at(0, 0);
    for (int d = 0; d <= nx_ + ny_; ++d) {
      for (int i = std::max(0, d - ny_); i <= std::min(d, nx_); ++i) {
        const int j = d - i;
        if (i == 0 && j == 0) {
          s.at(0, 0) = inv0;
          continue;
        }
        Rational acc = 0;
        for (int a = 0; a <= i; ++a)
          for (int b = 0; b <= j; ++b) {
            if (a == 0 && b == 0) continue;
            if (at(a, b) == 0) continue;
            acc += at(a, b) * s.at(i - a, j - b);
          }
        s.at(i, j) = -acc * inv0;
      }
    }
    return s;
  }

  // Substitutes univariate series for both variables; gx and gy must have
  // zero constant term.  Exactness holds to order min(gx, gy) provided the
  // bivariate truncation covers the contributing monomials.
  Series1 compose(const Series1& gx, const Series1& gy) const {
    if (gx[0] != 0 || gy[0] != 0)
      throw CompositionOrderError("composition requires inner constant terms zero");
    const int N = std::min(gx.order(), gy.order());
    Series1 acc = Series1::zero(N);
    for (int i = nx_; i >= 0; --i) {
      Series1 row = Series1::zero(N);
      for (int j = ny_; j >= 0; --j) row = row * gy.truncated(N) + at(i, j);
      acc = acc * gx.truncated(N) + row;
    }
    return acc;
  }

  // y := x diagonal collapse, summing coefficients over i + j = n.
  Series1 diagonal(int order) const {
    assert(order <= nx_ + ny_);
    Series1 s(order);
    for (int i = 0; i <= nx_; ++i)
      for (int j = 0; j <= ny_ && i + j <= order; ++j) s[i + j] += at(i, j);
    return s;
  }

  bool operator==(const Series2&) const = default;

private:
  int nx_, ny_;
  std::vector<Rational> coeffs_;
};

}  // namespace tanglecount
