#pragma once

// Hadamard matrices by Sylvester doubling and the Paley I construction
// (q a prime power with q ≡ 3 mod 4 gives order q + 1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftsnd/errors.hpp"

namespace ftsnd {

class HadamardMatrix {
 public:
  HadamardMatrix() = default;
  HadamardMatrix(std::size_t order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) throw usage_error("Hadamard matrix entries do not match order");
    for (int x : entries_) {
      if (x != 1 && x != -1) throw usage_error("Hadamard matrix entries must be +1 or -1");
    }
  }

  std::size_t order() const { return order_; }
  int operator()(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
  const std::vector<int>& entries() const { return entries_; }

  /// H Hᵀ == order · I, in exact integer arithmetic.
  bool is_hadamard() const {
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        long long dot = 0;
        for (std::size_t k = 0; k < order_; ++k) dot += (*this)(i, k) * (*this)(j, k);
        if (dot != (i == j ? static_cast<long long>(order_) : 0)) return false;
      }
    }
    return true;
  }

  /// Negates rows, then columns, so the first row and first column are all +1.
  HadamardMatrix normalized() const {
    std::vector<int> e = entries_;
    for (std::size_t r = 0; r < order_; ++r) {
      if (e[r * order_] < 0) {
        for (std::size_t c = 0; c < order_; ++c) e[r * order_ + c] = -e[r * order_ + c];
      }
    }
    for (std::size_t c = 0; c < order_; ++c) {
      if (e[c] < 0) {
        for (std::size_t r = 0; r < order_; ++r) e[r * order_ + c] = -e[r * order_ + c];
      }
    }
    return HadamardMatrix(order_, std::move(e));
  }

 private:
  std::size_t order_ = 0;
  std::vector<int> entries_;
};

namespace detail {

struct PrimePower {
  unsigned p = 0;
  unsigned k = 0;
};

inline std::optional<PrimePower> as_prime_power(std::size_t q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  std::size_t n = q;
  while (static_cast<std::size_t>(p) * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = static_cast<unsigned>(n);
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

// GF(p^k) with elements encoded as base-p digit strings of polynomials of
// degree < k, reduced modulo a monic irreducible found by trial division.
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;
    modulus_ = find_irreducible();
    mul_.assign(q_ * q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) mul_[a * q_ + b] = encode(mulmod(decode(a), decode(b)));
    }
  }

  unsigned size() const { return q_; }

  unsigned sub(unsigned a, unsigned b) const {
    auto x = decode(a);
    auto y = decode(b);
    for (unsigned i = 0; i < k_; ++i) x[i] = (x[i] + p_ - y[i]) % p_;
    return encode(x);
  }

  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }

 private:
  using Poly = std::vector<unsigned>;  // coefficient i of x^i

  Poly decode(unsigned a) const {
    Poly c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  unsigned encode(const Poly& c) const {
    unsigned a = 0;
    for (unsigned i = k_; i-- > 0;) a = a * p_ + c[i];
    return a;
  }

  static Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    // m is monic of degree deg(m) = m.size() - 1
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
      const unsigned c = a[i] % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + p * p - c * m[j] % p) % p;
    }
    a.resize(dm);
    return a;
  }

  Poly mulmod(const Poly& a, const Poly& b) const {
    Poly r(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    if (k_ == 1) return Poly{r[0] % p_};
    return poly_mod(r, modulus_, p_);
  }

  // Monic polynomial of degree k with no monic factor of degree 1..k/2.
  Poly find_irreducible() const {
    if (k_ == 1) return Poly{0, 1};
    const unsigned count = q_;  // lower coefficients range over p^k values
    for (unsigned low = 0; low < count; ++low) {
      Poly f = decode(low);
      f.push_back(1);
      bool irreducible = true;
      for (unsigned deg = 1; deg <= k_ / 2 && irreducible; ++deg) {
        unsigned span = 1;
        for (unsigned i = 0; i < deg; ++i) span *= p_;
        for (unsigned g_low = 0; g_low < span && irreducible; ++g_low) {
          Poly g(deg + 1, 0);
          unsigned t = g_low;
          for (unsigned i = 0; i < deg; ++i) {
            g[i] = t % p_;
            t /= p_;
          }
          g[deg] = 1;
          auto rem = poly_mod(f, g, p_);
          bool zero = true;
          for (auto c : rem) zero = zero && c == 0;
          if (zero) irreducible = false;
        }
      }
      if (irreducible) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  unsigned p_, k_, q_;
  Poly modulus_;
  std::vector<unsigned> mul_;
};

inline bool paley_applicable(std::size_t order) {
  if (order < 4) return false;
  const std::size_t q = order - 1;
  return q % 4 == 3 && as_prime_power(q).has_value();
}

inline HadamardMatrix paley(std::size_t order) {
  const std::size_t q = order - 1;
  const auto pp = *as_prime_power(q);
  FiniteField f(pp.p, pp.k);
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (unsigned x = 1; x < q; ++x) chi[f.mul(x, x)] = 1;

  // H = [[1, jᵀ], [-j, Q + I]], Q[a][b] = chi(a - b); Q is skew since -1 is a non-square.
  std::vector<int> e(order * order);
  for (std::size_t c = 0; c < order; ++c) e[c] = 1;
  for (std::size_t a = 0; a < q; ++a) {
    e[(a + 1) * order] = -1;
    for (std::size_t b = 0; b < q; ++b) {
      const int val = (a == b) ? 1 : chi[f.sub(static_cast<unsigned>(a), static_cast<unsigned>(b))];
      e[(a + 1) * order + (b + 1)] = val;
    }
  }
  return HadamardMatrix(order, std::move(e));
}

inline HadamardMatrix sylvester(const HadamardMatrix& h) {
  const std::size_t n = h.order();
  std::vector<int> e(4 * n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int x = h(r, c);
      e[r * 2 * n + c] = x;
      e[r * 2 * n + c + n] = x;
      e[(r + n) * 2 * n + c] = x;
      e[(r + n) * 2 * n + c + n] = -x;
    }
  }
  return HadamardMatrix(2 * n, std::move(e));
}

}  // namespace detail

/// Whether hadamard_matrix(order) succeeds: orders reachable from 1 by
/// doubling, possibly after a Paley I base.
inline bool hadamard_supported(std::size_t order) {
  if (order == 1 || order == 2) return true;
  if (order == 0 || order % 4 != 0) return false;
  if (hadamard_supported(order / 2)) return true;
  return detail::paley_applicable(order);
}

/// Exact ±1 matrix with H Hᵀ = order·I. Sylvester doubling is preferred;
/// Paley I supplies the base when doubling cannot reach the order.
inline HadamardMatrix hadamard_matrix(std::size_t order) {
  if (order == 1) return HadamardMatrix(1, {1});
  if (!hadamard_supported(order)) {
    throw not_supported_error("no Sylvester/Paley construction for Hadamard order " + std::to_string(order));
  }
  if (order == 2 || hadamard_supported(order / 2)) return detail::sylvester(hadamard_matrix(order / 2));
  return detail::paley(order);
}

}  // namespace ftsnd
