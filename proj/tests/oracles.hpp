#pragma once

// Deliberately naive reference implementations. They work on raw bit masks
// and share no code with the library beyond the standard library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline int size_of(Mask a) {
  int c = 0;
  for (; a; a >>= 1) c += static_cast<int>(a & 1);
  return c;
}

// |A \ B| by walking points.
inline int minus(Mask a, Mask b, int m) {
  int c = 0;
  for (int p = 0; p < m; ++p) c += ((a >> p) & 1) && !((b >> p) & 1);
  return c;
}

inline bool subset(Mask a, Mask b, int m) { return minus(a, b, m) == 0; }

inline bool antichain(const std::vector<Mask>& f, int m) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && subset(f[i], f[j], m)) return false;
    }
  }
  return true;
}

inline bool diffbounded(const std::vector<Mask>& f, int d, int m) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && minus(f[i], f[j], m) < d) return false;
    }
  }
  return true;
}

// Nanowire i is independently addressable iff some V of the 2^m patterns
// misses A_i and meets every other block.
inline bool addressable_exhaustive(const std::vector<Mask>& f, std::size_t i, int m) {
  for (Mask v = 0; v < (Mask{1} << m); ++v) {
    bool ok = (f[i] & v) == 0;
    for (std::size_t j = 0; ok && j < f.size(); ++j) {
      if (j != i && (f[j] & v) == 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Size of the largest d-diffbounded family on [m], by enumerating every
// such family: blocks are added in increasing mask order, each new block
// compatible with all earlier ones. Visits each valid family exactly once.
inline std::size_t max_family(int m, int d) {
  std::vector<Mask> all;
  for (Mask b = 0; b < (Mask{1} << m); ++b) all.push_back(b);
  std::size_t best = 1;  // a single block is always valid
  std::function<void(const std::vector<Mask>&, std::size_t)> rec = [&](const std::vector<Mask>& cand, std::size_t chosen) {
    best = std::max(best, chosen);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<Mask> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (minus(cand[i], cand[j], m) >= d && minus(cand[j], cand[i], m) >= d) next.push_back(cand[j]);
      }
      rec(next, chosen + 1);
    }
  };
  rec(all, 0);
  return best;
}

inline unsigned long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

// Maximum size of a constant-weight code by exhaustive search (tiny n only).
inline std::size_t max_constant_weight_code(int n, int dist, int w) {
  std::vector<Mask> words;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (size_of(x) == w) words.push_back(x);
  }
  std::vector<Mask> current;
  std::size_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    best = std::max(best, current.size());
    for (std::size_t i = from; i < words.size(); ++i) {
      bool ok = true;
      for (Mask c : current) ok = ok && size_of(c ^ words[i]) >= dist;
      if (!ok) continue;
      current.push_back(words[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace oracle
