#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftsnd/errors.hpp"

namespace ftsnd {

/// C(n, k) in exact integer arithmetic; 0 when k < 0 or k > n (negative
/// arguments are accepted so formulas like C(n-2, k-2) need no special casing).
/// Throws std::overflow_error if the value does not fit in 64 bits.
inline std::uint64_t binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (r > UINT64_MAX / i) throw std::overflow_error("factorial overflows");
    r *= i;
  }
  return r;
}

/// Non-negative rational with a 64-bit numerator and denominator, kept reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    const auto g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  std::uint64_t floor() const { return num / den; }
  std::uint64_t ceil() const { return num / den + (num % den != 0 ? 1 : 0); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto l = static_cast<unsigned __int128>(a.num) * b.den;
    const auto r = static_cast<unsigned __int128>(b.num) * a.den;
    return l <=> r;
  }
};

/// All w-subsets of {0..n-1} as bit masks, in lexicographic order of their
/// ascending element lists (so {0,1} < {0,2} < ... < {1,2}). Needs n <= 64.
inline std::vector<std::uint64_t> subsets_lex(unsigned n, unsigned w) {
  if (n > 64) throw usage_error("subset enumeration supports n <= 64");
  std::vector<std::uint64_t> out;
  if (w > n) return out;
  std::vector<unsigned> idx(w);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    unsigned i = w;
    while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (unsigned j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// All w-subsets of {0..n-1} in colexicographic order (numeric order of the masks).
inline std::vector<std::uint64_t> subsets_colex(unsigned n, unsigned w) {
  if (n > 64) throw usage_error("subset enumeration supports n <= 64");
  std::vector<std::uint64_t> out;
  if (w > n) return out;
  if (w == 0) return {0};
  std::uint64_t x = (w == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  const std::uint64_t limit_bit = (n == 64) ? 0 : (std::uint64_t{1} << n);
  while (true) {
    out.push_back(x);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
    if (n < 64 && x >= limit_bit) break;
  }
  return out;
}

}  // namespace ftsnd
