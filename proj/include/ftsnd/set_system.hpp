#pragma once

// Set systems over [m], their codes, and the structural verifiers
// (antichain, diffbounded, t-design) the rest of the library relies on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftsnd/bitvector.hpp"
#include "ftsnd/combinatorics.hpp"
#include "ftsnd/errors.hpp"

namespace ftsnd {

/// Ordered list of blocks over [m]. Block i is nanowire i; duplicates are
/// representable and left for the verifiers to report.
class SetSystem {
 public:
  SetSystem() = default;
  explicit SetSystem(std::size_t m) : m_(m) {}
  SetSystem(std::size_t m, std::vector<Block> blocks) : m_(m), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) check(b);
  }

  static SetSystem from_points(std::size_t m, const std::vector<std::vector<std::size_t>>& lists) {
    SetSystem s(m);
    for (const auto& l : lists) s.add(Block::from_points(m, l));
    return s;
  }

  std::size_t order() const { return m_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& operator[](std::size_t i) const { return blocks_.at(i); }

  void add(Block b) {
    check(b);
    blocks_.push_back(std::move(b));
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  void check(const Block& b) const {
    if (b.ground_size() != m_) {
      throw usage_error("block over [" + std::to_string(b.ground_size()) + "] added to a system of order " +
                        std::to_string(m_));
    }
  }

  std::size_t m_ = 0;
  std::vector<Block> blocks_;
};

struct DesignParams {
  std::size_t t = 0;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 1;

  void validate() const {
    if (!(t <= k && k <= v)) throw usage_error("design parameters need t <= k <= v");
    if (lambda < 1) throw usage_error("design parameters need lambda >= 1");
  }
};

// Ordered pair (i, j) of block indices; |A_i \ A_j| is the offending quantity.
struct BlockPair {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t difference = 0;
};

inline BinaryWord incidence_vector(const Block& b) { return BinaryWord(b.bits()); }

inline std::size_t hamming_distance(const BinaryWord& u, const BinaryWord& v) {
  if (u.length() != v.length()) {
    throw usage_error("hamming_distance on words of length " + std::to_string(u.length()) + " and " +
                      std::to_string(v.length()));
  }
  return u.bits().count_xor(v.bits());
}

/// Block j of the dual holds the indices (1-based) of the blocks of `s` that contain point j.
inline SetSystem dual(const SetSystem& s) {
  const std::size_t n = s.size();
  SetSystem d(n);
  for (std::size_t point = 1; point <= s.order(); ++point) {
    Block b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i].contains(point)) b.insert(i + 1);
    }
    d.add(std::move(b));
  }
  return d;
}

/// Rows are blocks, columns are points.
inline std::vector<std::vector<std::uint8_t>> incidence_matrix(const SetSystem& s) {
  std::vector<std::vector<std::uint8_t>> mat(s.size(), std::vector<std::uint8_t>(s.order(), 0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (auto p : s[i].points()) mat[i][p - 1] = 1;
  }
  return mat;
}

/// Ordered pair with the smallest one-sided difference; empty for fewer than two blocks.
inline std::optional<BlockPair> tightest_pair(const SetSystem& s) {
  std::optional<BlockPair> best;
  const auto& bl = s.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      if (i == j) continue;
      const std::size_t d = bl[i].minus_size(bl[j]);
      if (!best || d < best->difference) best = BlockPair{i, j, d};
      if (d == 0) return best;
    }
  }
  return best;
}

/// min over ordered pairs of distinct blocks of |A \ B|. Fewer than two
/// blocks yields m + 1, so single-block systems satisfy every bound.
inline std::size_t min_one_sided_difference(const SetSystem& s) {
  auto p = tightest_pair(s);
  return p ? p->difference : s.order() + 1;
}

/// First ordered pair (i, j) with |A_i \ A_j| < d, if any.
inline std::optional<BlockPair> find_violating_pair(const SetSystem& s, std::size_t d) {
  const auto& bl = s.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      if (i == j) continue;
      const std::size_t diff = bl[i].minus_size(bl[j]);
      if (diff < d) return BlockPair{i, j, diff};
    }
  }
  return std::nullopt;
}

inline bool is_diffbounded(const SetSystem& s, std::size_t d) { return !find_violating_pair(s, d).has_value(); }

inline bool is_antichain(const SetSystem& s) { return min_one_sided_difference(s) >= 1; }

namespace detail {

// Calls f(mask) for every t-subset of the bits of `points` (given as a bit list).
template <class F>
void for_each_subset(const std::vector<std::size_t>& points, std::size_t t, F&& f) {
  const std::size_t k = points.size();
  if (t > k) return;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == k - t + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// True iff s is k-uniform of order v and every t-subset of [v] lies in exactly lambda blocks.
inline bool is_t_design(const SetSystem& s, const DesignParams& p) {
  p.validate();
  if (s.order() != p.v) return false;
  for (const auto& b : s.blocks()) {
    if (b.cardinality() != p.k) return false;
  }
  const auto expected_subsets = binomial(p.v, p.t);
  std::map<BitVector, std::size_t> hits;
  for (const auto& b : s.blocks()) {
    const auto pts = b.points();
    detail::for_each_subset(pts, p.t, [&](const std::vector<std::size_t>& idx) {
      BitVector key(p.v);
      for (auto i : idx) key.set(pts[i] - 1);
      ++hits[key];
    });
  }
  if (hits.size() != expected_subsets) return false;
  return std::all_of(hits.begin(), hits.end(), [&](const auto& kv) { return kv.second == p.lambda; });
}

inline SetSystem system_from_code(const std::vector<BinaryWord>& code) {
  if (code.empty()) return SetSystem(0);
  const std::size_t n = code.front().length();
  SetSystem s(n);
  for (const auto& w : code) {
    if (w.length() != n) throw usage_error("code words have unequal lengths");
    s.add(Block(w.bits()));
  }
  return s;
}

inline std::vector<BinaryWord> code_from_system(const SetSystem& s) {
  std::vector<BinaryWord> code;
  code.reserve(s.size());
  for (const auto& b : s.blocks()) code.push_back(incidence_vector(b));
  return code;
}

/// Same blocks sorted lexicographically; the byte-stable form written to files.
inline SetSystem canonical(const SetSystem& s) {
  auto blocks = s.blocks();
  std::sort(blocks.begin(), blocks.end());
  return SetSystem(s.order(), std::move(blocks));
}

}  // namespace ftsnd
