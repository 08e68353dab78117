#pragma once

// Fixed-width bit vectors and the two domain views over them: a Block is a
// subset of the ground set [m] (points are 1-based), a BinaryWord is a word
// of the Hamming space (positions are 0-based).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ftsnd/errors.hpp"

namespace ftsnd {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  static BitVector from_mask(std::size_t width, std::uint64_t mask) {
    BitVector v(width);
    if (width < 64 && (mask >> width) != 0) throw usage_error("mask has bits beyond width");
    if (!v.words_.empty()) v.words_[0] = mask;
    return v;
  }

  std::size_t width() const { return width_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void set(std::size_t i, bool value = true) {
    check_index(i);
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }

  void reset(std::size_t i) { set(i, false); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  // |this \ other|
  std::size_t count_minus(const BitVector& other) const {
    check_width(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    }
    return c;
  }

  std::size_t count_xor(const BitVector& other) const {
    check_width(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    }
    return c;
  }

  std::size_t count_and(const BitVector& other) const {
    check_width(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
  }

  bool intersects(const BitVector& other) const { return count_and(other) != 0; }
  bool is_subset_of(const BitVector& other) const { return count_minus(other) == 0; }

  BitVector operator&(const BitVector& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  BitVector operator|(const BitVector& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  BitVector operator^(const BitVector& o) const { return combine(o, [](auto a, auto b) { return a ^ b; }); }
  BitVector minus(const BitVector& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  BitVector complement() const {
    BitVector r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  // Indices of set bits, ascending.
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    return out;
  }

  // Low 64 bits; the whole vector when width <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  // Position 0 first, e.g. "1010".
  std::string to_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  // Width first, then the words from the most significant end.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= width_) throw usage_error("bit index " + std::to_string(i) + " outside width " + std::to_string(width_));
  }

  void check_width(const BitVector& o) const {
    if (o.width_ != width_) {
      throw usage_error("width mismatch: " + std::to_string(width_) + " vs " + std::to_string(o.width_));
    }
  }

  template <class Op>
  BitVector combine(const BitVector& o, Op op) const {
    check_width(o);
    BitVector r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
    return r;
  }

  void trim() {
    if (width_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Subset of the ground set [m]. Point p (1-based) is stored at bit p-1.
class Block {
 public:
  Block() = default;
  explicit Block(std::size_t ground_size) : bits_(ground_size) {}
  explicit Block(BitVector bits) : bits_(std::move(bits)) {}

  static Block from_points(std::size_t ground_size, std::span<const std::size_t> points) {
    Block b(ground_size);
    for (auto p : points) b.insert(p);
    return b;
  }

  static Block from_points(std::size_t ground_size, std::initializer_list<std::size_t> points) {
    return from_points(ground_size, std::span<const std::size_t>(points.begin(), points.size()));
  }

  static Block from_mask(std::size_t ground_size, std::uint64_t mask) {
    return Block(BitVector::from_mask(ground_size, mask));
  }

  static Block full(std::size_t ground_size) { return Block(BitVector(ground_size).complement()); }

  std::size_t ground_size() const { return bits_.width(); }
  std::size_t cardinality() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(std::size_t point) const {
    return point >= 1 && point <= ground_size() && bits_.test(point - 1);
  }

  void insert(std::size_t point) {
    check_point(point);
    bits_.set(point - 1);
  }

  void erase(std::size_t point) {
    check_point(point);
    bits_.reset(point - 1);
  }

  std::vector<std::size_t> points() const {
    auto v = bits_.ones();
    for (auto& p : v) ++p;
    return v;
  }

  // |this \ other|
  std::size_t minus_size(const Block& other) const { return bits_.count_minus(other.bits_); }
  std::size_t intersection_size(const Block& other) const { return bits_.count_and(other.bits_); }
  bool intersects(const Block& other) const { return bits_.intersects(other.bits_); }
  bool is_subset_of(const Block& other) const { return bits_.is_subset_of(other.bits_); }

  Block complement() const { return Block(bits_.complement()); }

  const BitVector& bits() const { return bits_; }

  friend bool operator==(const Block&, const Block&) = default;

  // Lexicographic order of the ascending point lists ({1,2} < {1,2,3} < {1,3} < {2}).
  friend std::strong_ordering operator<=>(const Block& a, const Block& b) {
    if (auto c = a.ground_size() <=> b.ground_size(); c != 0) return c;
    const auto pa = a.points();
    const auto pb = b.points();
    return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
  }

 private:
  void check_point(std::size_t point) const {
    if (point < 1 || point > ground_size()) {
      throw usage_error("point " + std::to_string(point) + " outside [1," + std::to_string(ground_size()) + "]");
    }
  }

  BitVector bits_;
};

/// Word of the Hamming space H(n); position i is 0-based.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::size_t length) : bits_(length) {}
  explicit BinaryWord(BitVector bits) : bits_(std::move(bits)) {}

  // Parses "1010": character i is position i.
  static BinaryWord parse(std::string_view text) {
    BinaryWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        w.bits_.set(i);
      } else if (text[i] != '0') {
        throw usage_error("binary word may only contain '0' and '1'");
      }
    }
    return w;
  }

  std::size_t length() const { return bits_.width(); }
  std::size_t weight() const { return bits_.count(); }
  bool operator[](std::size_t i) const { return bits_.test(i); }
  void set(std::size_t i, bool value = true) { bits_.set(i, value); }

  // Support as 1-based points, so support() of an incidence vector is the block.
  std::vector<std::size_t> support() const {
    auto v = bits_.ones();
    for (auto& p : v) ++p;
    return v;
  }

  const BitVector& bits() const { return bits_; }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  BitVector bits_;
};

}  // namespace ftsnd
