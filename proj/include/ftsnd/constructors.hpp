#pragma once

// Explicit fault-tolerant decoders: each one certifies a lower bound on N(m, e).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ftsnd/bitvector.hpp"
#include "ftsnd/combinatorics.hpp"
#include "ftsnd/decoder.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/hadamard.hpp"
#include "ftsnd/set_system.hpp"
#include "ftsnd/steiner.hpp"

namespace ftsnd {

/// All floor(m/2)-subsets of [m], lexicographic.
inline SetSystem middle_layer(std::size_t m) {
  if (m < 1) throw usage_error("middle_layer needs m >= 1");
  if (m > 64) throw usage_error("middle_layer supports m <= 64");
  SetSystem s(m);
  for (auto mask : subsets_lex(static_cast<unsigned>(m), static_cast<unsigned>(m / 2))) s.add(Block::from_mask(m, mask));
  return s;
}

/// Order in which the greedy code construction visits weight-w words.
struct GreedyOrder {
  enum class Kind { lexicographic, colex, seeded_random };
  Kind kind = Kind::lexicographic;
  std::uint64_t seed = 0;

  static GreedyOrder lex() { return {Kind::lexicographic, 0}; }
  static GreedyOrder colex() { return {Kind::colex, 0}; }
  static GreedyOrder seeded(std::uint64_t seed) { return {Kind::seeded_random, seed}; }

  static GreedyOrder parse(const std::string& text) {
    if (text == "lex") return lex();
    if (text == "colex") return colex();
    if (text.rfind("seed=", 0) == 0) {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(text.substr(5), &used);
        if (used == text.size() - 5) return seeded(v);
      } catch (const std::exception&) {
      }
    }
    throw usage_error("greedy order must be lex, colex or seed=<int>, got '" + text + "'");
  }
};

namespace detail {

inline std::vector<std::uint64_t> ordered_words(unsigned n, unsigned w, const GreedyOrder& order) {
  if (order.kind == GreedyOrder::Kind::colex) return subsets_colex(n, w);
  auto words = subsets_lex(n, w);
  if (order.kind == GreedyOrder::Kind::seeded_random) {
    // Fisher-Yates driven by mt19937_64, whose output sequence is fixed by
    // the standard; std::shuffle's use of the engine is not.
    std::mt19937_64 rng(order.seed);
    for (std::size_t i = words.size(); i > 1; --i) {
      const std::uint64_t bound = i;
      const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
      std::uint64_t r = rng();
      while (r >= limit) r = rng();
      std::swap(words[i - 1], words[r % bound]);
    }
  }
  return words;
}

}  // namespace detail

/// Greedy weight-w code of length n with pairwise distance >= 2d: take the
/// next surviving word, then discard every surviving word within distance
/// 2d-1 of it, until nothing survives.
inline std::vector<BinaryWord> greedy_constant_weight(std::size_t n, std::size_t d, std::size_t w,
                                                      const GreedyOrder& order = GreedyOrder::lex()) {
  if (w > n) throw usage_error("greedy_constant_weight needs w <= n");
  if (d < 1) throw usage_error("greedy_constant_weight needs d >= 1");
  if (n > 64) throw usage_error("greedy_constant_weight supports n <= 64");
  const auto words = detail::ordered_words(static_cast<unsigned>(n), static_cast<unsigned>(w), order);
  const std::size_t radius = 2 * d - 1;
  std::vector<char> alive(words.size(), 1);
  std::vector<BinaryWord> code;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!alive[i]) continue;
    code.emplace_back(BitVector::from_mask(n, words[i]));
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (alive[j] && static_cast<std::size_t>(std::popcount(words[i] ^ words[j])) <= radius) alive[j] = 0;
    }
  }
  return code;
}

/// Symmetric (4e+3, 2e+1, e) design from a normalized Hadamard matrix of
/// order 4(e+1), with point 1 and the blocks through it removed. Yields
/// 2e+2 blocks over [4e+2].
inline Decoder hadamard_ftsnd(std::size_t e) {
  const std::size_t order = 4 * (e + 1);
  const auto h = hadamard_matrix(order).normalized();
  const std::size_t v = order - 1;
  // Design point j (1-based) is column j; block i is row i; the core's +1 entries are incidences.
  SetSystem design(v);
  for (std::size_t r = 1; r < order; ++r) {
    Block b(v);
    for (std::size_t c = 1; c < order; ++c) {
      if (h(r, c) == 1) b.insert(c);
    }
    design.add(std::move(b));
  }
  SetSystem out(v - 1);
  for (const auto& b : design.blocks()) {
    if (b.contains(1)) continue;
    Block shifted(v - 1);
    for (auto p : b.points()) shifted.insert(p - 1);
    out.add(std::move(shifted));
  }
  return Decoder(std::move(out));
}

/// Incidence of a symmetric design built from a Hadamard matrix, before point deletion.
inline SetSystem hadamard_design(std::size_t e) {
  const std::size_t order = 4 * (e + 1);
  const auto h = hadamard_matrix(order).normalized();
  SetSystem design(order - 1);
  for (std::size_t r = 1; r < order; ++r) {
    Block b(order - 1);
    for (std::size_t c = 1; c < order; ++c) {
      if (h(r, c) == 1) b.insert(c);
    }
    design.add(std::move(b));
  }
  return design;
}

/// Checks that every point lies in exactly r blocks and every pair in exactly lambda.
inline void require_rlambda_design(const SetSystem& s, std::size_t r, std::size_t lambda) {
  const std::size_t n = s.order();
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t c = 0;
    for (const auto& b : s.blocks()) c += b.contains(x) ? 1 : 0;
    if (c != r) {
      throw usage_error("not an (r,lambda)-design: point " + std::to_string(x) + " lies in " + std::to_string(c) +
                        " blocks, expected r = " + std::to_string(r));
    }
  }
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t y = x + 1; y <= n; ++y) {
      std::size_t c = 0;
      for (const auto& b : s.blocks()) c += (b.contains(x) && b.contains(y)) ? 1 : 0;
      if (c != lambda) {
        throw usage_error("not an (r,lambda)-design: pair {" + std::to_string(x) + "," + std::to_string(y) + "} lies in " +
                          std::to_string(c) + " blocks, expected lambda = " + std::to_string(lambda));
      }
    }
  }
}

/// Dual of an (r, lambda)-design: an r-uniform family whose blocks meet
/// pairwise in lambda points, hence (r - lambda)-diffbounded.
inline Decoder rlambda_dual(const SetSystem& s, std::size_t r, std::size_t lambda) {
  require_rlambda_design(s, r, lambda);
  return Decoder(dual(s));
}

/// Dual of ([n], all k-subsets): m = C(n,k) mesowires, n blocks of size
/// C(n-1,k-1) meeting pairwise in C(n-2,k-2) points.
inline Decoder complete_uniform_dual(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw usage_error("complete_uniform_dual needs 1 <= k <= n");
  if (n > 64) throw usage_error("complete_uniform_dual supports n <= 64");
  const auto mm = binomial(n, k);
  if (mm > 4096) throw usage_error("complete_uniform_dual: C(n,k) = " + std::to_string(mm) + " mesowires is too large");
  SetSystem complete(n);
  for (auto mask : subsets_lex(static_cast<unsigned>(n), static_cast<unsigned>(k))) complete.add(Block::from_mask(n, mask));
  return rlambda_dual(complete, binomial(static_cast<long long>(n) - 1, static_cast<long long>(k) - 1),
                      binomial(static_cast<long long>(n) - 2, static_cast<long long>(k) - 2));
}

/// Fault tolerance certified by complete_uniform_dual(n, k): C(n-2, k-1) - 1.
inline std::size_t complete_uniform_tolerance(std::size_t n, std::size_t k) {
  const auto diff = binomial(static_cast<long long>(n) - 2, static_cast<long long>(k) - 1);
  return diff == 0 ? 0 : static_cast<std::size_t>(diff - 1);
}

inline bool steiner_ftsnd_supported(std::size_t m) { return m == 4 || m == 7 || m == 8 || m == 11 || m == 12; }

/// Blocks of S(floor(m/2)-1, floor(m/2), m), a 2-diffbounded family.
inline Decoder steiner_ftsnd(std::size_t m) {
  if (!steiner_ftsnd_supported(m)) {
    throw not_supported_error("no Steiner system S(floor(m/2)-1, floor(m/2), m) available for m = " + std::to_string(m));
  }
  const auto k = static_cast<unsigned>(m / 2);
  return Decoder(steiner_system(k - 1, k, static_cast<unsigned>(m)));
}

/// {1..e+1} and {e+2..2e+2} over [m].
inline Decoder disjoint_pair(std::size_t m, std::size_t e) {
  if (m < 2 * e + 2) throw usage_error("disjoint_pair needs m >= 2e+2");
  Block a(m), b(m);
  for (std::size_t p = 1; p <= e + 1; ++p) a.insert(p);
  for (std::size_t p = e + 2; p <= 2 * e + 2; ++p) b.insert(p);
  return Decoder(SetSystem(m, {a, b}));
}

/// Same family over a larger ground set (unused mesowires appended).
inline SetSystem embed(const SetSystem& s, std::size_t m) {
  if (m < s.order()) throw usage_error("embed: target ground set is smaller");
  SetSystem out(m);
  for (const auto& b : s.blocks()) out.add(Block::from_points(m, b.points()));
  return out;
}

}  // namespace ftsnd
