#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "tanglecount/numeric.hpp"
#include "tanglecount/series.hpp"

namespace tanglecount {

// Ordinary generating function for skeleta by clone-set and tangle counts:
// the unique solution of  S = 1 + (c/(1+c)) S^2 + t S^3.  Solved by fixed
// point iteration from S = 1; both substituted variables have positive
// valuation, so every round is correct one further total degree.
inline Series2 skeleton_series(int order_c, int order_t) {
  const Series2 c = Series2::x(order_c, order_t);
  const Series2 t = Series2::y(order_c, order_t);
  const Series2 c_frac = c * (Series2::one(order_c, order_t) + c).reciprocal();
  Series2 s = Series2::one(order_c, order_t);
  for (int k = 0; k <= order_c + order_t; ++k) {
    Series2 next = Series2::one(order_c, order_t) + c_frac * (s * s) + t * (s * s * s);
    if (next == s) break;
    s = next;
  }
  return s;
}

// Solves P = 1 + (C/(1+C)) P^2 + T P^3 in the truncated ring, the
// substitution pattern shared by both main counting corollaries.  C and T
// must have zero constant term; N+1 rounds of iteration pin all
// coefficients through x^N.
inline Series1 solve_counting_series(const Series1& c, const Series1& t, int order) {
  if (c[0] != 0 || t[0] != 0)
    throw ValuationError("substituted series must have zero constant term");
  assert(c.order() >= order && t.order() >= order);
  const Series1 cn = c.order() == order ? c : c.truncated(order);
  const Series1 tn = t.order() == order ? t : t.truncated(order);
  const Series1 c_frac = cn * (Series1::one(order) + cn).reciprocal();
  Series1 p = Series1::one(order);
  for (int k = 0; k <= order; ++k) {
    Series1 next = Series1::one(order) + c_frac * (p * p) + tn * (p * p * p);
    if (next == p) break;
    p = next;
  }
  return p;
}

// Labelled bicoloured graphs: b_lbl(n) = sum_i C(n,i) 2^{i(n-i)}.
inline std::vector<Int> b_lbl_counts(int upto) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(upto) + 1);
  for (int n = 0; n <= upto; ++n) {
    Int total = 0;
    for (int i = 0; i <= n; ++i) total += binomial(n, i) * pow2(static_cast<long>(i) * (n - i));
    out.push_back(total);
  }
  return out;
}

// Unlabelled bicoloured graphs with colour classes of sizes (k, m), by the
// Burnside sum over S_k x S_m in partition-pair form: a cycle pair of
// lengths (p, q) has gcd(p, q) orbits on its p*q edge block, so
//   b_unl(k, m) = sum_{lambda, mu} 2^{sum gcd(lambda_i, mu_j)} / (z_lambda z_mu).
inline Int b_unl_pair(int k, int m) {
  Rational total = 0;
  const auto& ls = partitions_of(k);
  const auto& ms = partitions_of(m);
  for (const auto& lambda : ls) {
    const Int zl = z_of_partition(lambda);
    for (const auto& mu : ms) {
      long orbits = 0;
      for (int p : lambda)
        for (int q : mu) orbits += std::gcd(p, q);
      total += Rational(pow2(orbits), zl * z_of_partition(mu));
    }
  }
  assert(boost::multiprecision::denominator(total) == 1);
  return boost::multiprecision::numerator(total);
}

inline std::vector<Int> b_unl_counts(int upto) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(upto) + 1);
  for (int n = 0; n <= upto; ++n) {
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += b_unl_pair(k, n - k);
    out.push_back(total);
  }
  return out;
}

inline Series2 b_unl_bivariate(int order_x, int order_y) {
  Series2 s(order_x, order_y);
  for (int i = 0; i <= order_x; ++i)
    for (int j = 0; j <= order_y; ++j) s.at(i, j) = Rational(b_unl_pair(i, j));
  return s;
}

// EGF for labelled bicoloured graphs, B_lbl(x, y) = sum 2^{ij} x^i y^j / i! j!.
inline Series2 b_lbl_bivariate(int order_x, int order_y) {
  Series2 s(order_x, order_y);
  for (int i = 0; i <= order_x; ++i)
    for (int j = 0; j <= order_y; ++j)
      s.at(i, j) = Rational(pow2(static_cast<long>(i) * j), factorial(i) * factorial(j));
  return s;
}

// T_unl(x, y) = 1 - x - y - B_unl(x, y)^{-1}.
inline Series2 tangle_series_unl(int order_x, int order_y) {
  const Series2 one = Series2::one(order_x, order_y);
  return one - Series2::x(order_x, order_y) - Series2::y(order_x, order_y) -
         b_unl_bivariate(order_x, order_y).reciprocal();
}

// T_lbl(x, y) = e^{-x} + e^{-y} - 1 - B_lbl(x, y)^{-1}.
inline Series2 tangle_series_lbl(int order_x, int order_y) {
  Series2 exp_nx(order_x, order_y), exp_ny(order_x, order_y);
  for (int i = 0; i <= order_x; ++i) exp_nx.at(i, 0) = Rational(i % 2 == 0 ? 1 : -1, factorial(i));
  for (int j = 0; j <= order_y; ++j) exp_ny.at(0, j) = Rational(j % 2 == 0 ? 1 : -1, factorial(j));
  return exp_nx + exp_ny - Series2::one(order_x, order_y) - b_lbl_bivariate(order_x, order_y).reciprocal();
}

// Diagonal tangle OGF, T_unl(x, x) = 1 - 2x - B_unl(x)^{-1}.
inline Series1 tangle_series_unl_diagonal(int order) {
  Series1 b(order);
  const std::vector<Int> counts = b_unl_counts(order);
  for (int n = 0; n <= order; ++n) b[n] = Rational(counts[static_cast<std::size_t>(n)]);
  return Series1::one(order) - Rational(2) * Series1::x(order) - b.reciprocal();
}

namespace detail {

inline std::vector<Int> extract_integer_coeffs(const Series1& s, bool egf, const char* what) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) {
    const Rational v = egf ? Rational(factorial(n)) * s[n] : s[n];
    if (boost::multiprecision::denominator(v) != 1)
      throw IntegralityError(std::string(what) + ": non-integral coefficient at n=" + std::to_string(n));
    out.push_back(boost::multiprecision::numerator(v));
  }
  return out;
}

}  // namespace detail

// Unlabelled (3+1)-free posets: S(x/(1-x), T_unl(x, x)).
inline std::vector<Int> p_unl_counts(int upto) {
  Series1 geo(upto);
  for (int k = 1; k <= upto; ++k) geo[k] = 1;
  const Series1 t = tangle_series_unl_diagonal(upto);
  if (upto >= 4 && !(t.valuation() >= 4))
    throw ValuationError("tangle series must have valuation >= 4");
  return detail::extract_integer_coeffs(solve_counting_series(geo, t, upto), false, "p_unl");
}

// Labelled (3+1)-free posets: S(e^x - 1, 2e^{-x} - 1 - B_lbl(x)^{-1}),
// carried as an EGF; integer counts are extracted at the boundary.
inline std::vector<Int> p_lbl_counts(int upto) {
  Series1 exp_m1(upto), exp_neg(upto), b(upto);
  const std::vector<Int> bl = b_lbl_counts(upto);
  for (int n = 0; n <= upto; ++n) {
    if (n >= 1) exp_m1[n] = Rational(1, factorial(n));
    exp_neg[n] = Rational(n % 2 == 0 ? 1 : -1, factorial(n));
    b[n] = Rational(bl[static_cast<std::size_t>(n)], factorial(n));
  }
  const Series1 t = Rational(2) * exp_neg - Series1::one(upto) - b.reciprocal();
  if (upto >= 4 && !(t.valuation() >= 4))
    throw ValuationError("tangle series must have valuation >= 4");
  return detail::extract_integer_coeffs(solve_counting_series(exp_m1, t, upto), true, "p_lbl");
}

// Exact ratios tracking the asymptotic statements: p_unl(n)/b_unl(n),
// p_lbl(n)/b_lbl(n) and n! b_unl(n)/b_lbl(n) all tend to 1.
struct AsymptoticRow {
  int n;
  Rational p_unl_over_b_unl;
  Rational p_lbl_over_b_lbl;
  Rational relabelled_ratio;  // n! b_unl(n) / b_lbl(n)
};

inline std::vector<AsymptoticRow> asymptotic_report(int upto) {
  const int cap = size_cap(22);
  if (upto > cap) throw SizeError("asymptotic report bounded at n = " + std::to_string(cap));
  const std::vector<Int> pu = p_unl_counts(upto), pl = p_lbl_counts(upto);
  const std::vector<Int> bu = b_unl_counts(upto), bl = b_lbl_counts(upto);
  std::vector<AsymptoticRow> rows;
  for (int n = 0; n <= upto; ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    rows.push_back({n, Rational(pu[i], bu[i]), Rational(pl[i], bl[i]),
                    Rational(factorial(n) * bu[i], bl[i])});
  }
  return rows;
}

}  // namespace tanglecount
