#pragma once

#include <cassert>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tanglecount {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int pow2(long e) {
  assert(e >= 0);
  return Int(1) << e;
}

// All partitions of n as non-increasing part lists, lexicographically
// descending ([n], [n-1,1], ...).  Cached; partitions of 22 number 1002.
inline const std::vector<std::vector<int>>& partitions_of(int n) {
  static std::unordered_map<int, std::vector<std::vector<int>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return cache.emplace(n, std::move(out)).first->second;
}

// Centralizer size z_lambda = prod i^{m_i} m_i! for a partition with m_i
// parts of size i.
inline Int z_of_partition(const std::vector<int>& parts) {
  Int z = 1;
  int run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    z *= parts[i];
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    z *= run;
  }
  return z;
}

// Fixed-point decimal rendering of an exact rational, truncated toward zero.
inline std::string decimal_string(const Rational& r, int digits = 9) {
  const bool neg = r < 0;
  Int num = boost::multiprecision::numerator(r);
  if (neg) num = -num;
  const Int den = boost::multiprecision::denominator(r);
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Int scaled = num * scale / den;
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (neg) s.insert(0, "-");
  return s;
}

// Reads TANGLECOUNT_MAX_N; a set value replaces the given soft cap.
inline int size_cap(int soft_default) {
  if (const char* env = std::getenv("TANGLECOUNT_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return soft_default;
}

}  // namespace tanglecount
