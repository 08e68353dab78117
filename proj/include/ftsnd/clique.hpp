#pragma once

// Bit-parallel maximum clique branch-and-bound (greedy colouring bound).
//
// Vertices are renumbered by a degeneracy ordering before the search; every
// candidate set is a bitset over that numbering. Colour classes are built
// greedily from the lowest index upward and vertices are expanded in reverse
// colour order, so the colour of a vertex bounds the clique it can close.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace ftsnd::clique {

class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n_ * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    row_mut(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row_mut(v)[u / 64] |= std::uint64_t{1} << (u % 64);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::span<const std::uint64_t> row(std::size_t u) const {
    return {adj_.data() + u * words_, words_};
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (std::size_t u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
  }

 private:
  std::span<std::uint64_t> row_mut(std::size_t u) { return {adj_.data() + u * words_, words_}; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct Limits {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
};

struct Options {
  // Size of a clique already known elsewhere; only strictly larger cliques are reported.
  std::size_t lower = 0;
  // Stop as soon as a clique of this size is found (a proven upper bound).
  std::size_t stop_at = std::numeric_limits<std::size_t>::max();
  Limits limits;
};

struct Result {
  // Best clique found that beats Options::lower; empty if none did.
  std::vector<std::size_t> clique;
  // Largest size established (max of Options::lower and clique.size()).
  std::size_t best_size = 0;
  // True when the search space was exhausted or the stop_at bound was met.
  bool complete = false;
  std::uint64_t nodes = 0;
  // Colouring bound on the unexplored part when the search was interrupted.
  std::size_t open_upper = 0;
};

namespace detail {

// Degeneracy order: repeatedly peel a minimum-degree vertex; the peeled
// sequence reversed puts the densest core first.
inline std::vector<std::size_t> degeneracy_order(const BitGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> gone(n, 0);
  std::vector<std::size_t> peeled;
  peeled.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!gone[v] && (best == n || deg[v] < deg[best])) best = v;
    }
    gone[best] = 1;
    peeled.push_back(best);
    auto r = g.row(best);
    for (std::size_t w = 0; w < r.size(); ++w) {
      for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
        std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (!gone[u]) --deg[u];
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

class Solver {
 public:
  Solver(const BitGraph& g, const Options& opt) : opt_(opt) {
    order_ = degeneracy_order(g);
    const std::size_t n = g.size();
    graph_ = BitGraph(n);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) graph_.add_edge(pos[u], pos[v]);
      }
    }
    words_ = graph_.words();
    best_ = opt.lower;
    start_ = std::chrono::steady_clock::now();
  }

  Result run() {
    const std::size_t n = graph_.size();
    Result res;
    if (n == 0 || best_ >= opt_.stop_at) {
      res.best_size = best_;
      res.complete = true;
      return res;
    }
    pool_.assign((n + 2) * words_, 0);
    std::span<std::uint64_t> root{pool_.data(), words_};
    for (std::size_t v = 0; v < n; ++v) root[v / 64] |= std::uint64_t{1} << (v % 64);
    current_.clear();
    expand(root, 0);
    res.best_size = best_;
    res.nodes = nodes_;
    res.complete = !aborted_ || best_ >= opt_.stop_at;
    res.open_upper = std::max(best_, open_upper_);
    for (auto v : best_clique_) res.clique.push_back(order_[v]);
    std::sort(res.clique.begin(), res.clique.end());
    return res;
  }

 private:
  bool out_of_budget() {
    if (opt_.limits.node_limit && nodes_ >= *opt_.limits.node_limit) return true;
    if (opt_.limits.time_limit_seconds && (nodes_ & 1023) == 0) {
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (dt >= *opt_.limits.time_limit_seconds) return true;
    }
    return false;
  }

  void expand(std::span<std::uint64_t> cand, std::size_t depth) {
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
    }

    // Greedy sequential colouring of the candidate set.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colour;
    {
      std::span<std::uint64_t> uncoloured{pool_.data() + (depth + 1) * words_, words_};
      std::copy(cand.begin(), cand.end(), uncoloured.begin());
      std::vector<std::uint64_t> q(words_);
      const std::size_t kmin = best_ + 1 > current_.size() ? best_ + 1 - current_.size() : 1;
      std::size_t k = 0;
      bool any = true;
      while (any) {
        any = false;
        for (auto w : uncoloured) {
          if (w) {
            any = true;
            break;
          }
        }
        if (!any) break;
        ++k;
        std::copy(uncoloured.begin(), uncoloured.end(), q.begin());
        for (std::size_t w = 0; w < words_; ++w) {
          while (q[w]) {
            const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
            q[w] &= q[w] - 1;
            uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
            auto r = graph_.row(v);
            for (std::size_t x = w; x < words_; ++x) q[x] &= ~r[x];
            if (k >= kmin) {
              verts.push_back(v);
              colour.push_back(k);
            }
          }
        }
      }
    }

    std::span<std::uint64_t> next{pool_.data() + (depth + 1) * words_, words_};
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colour[idx] <= best_) return;
      if (aborted_) {
        open_upper_ = std::max(open_upper_, current_.size() + colour[idx]);
        return;
      }
      const std::size_t v = verts[idx];
      current_.push_back(v);
      auto r = graph_.row(v);
      bool empty = true;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = cand[w] & r[w];
        empty = empty && next[w] == 0;
      }
      if (empty) {
        if (current_.size() > best_) {
          best_ = current_.size();
          best_clique_ = current_;
          if (best_ >= opt_.stop_at) aborted_ = true;
        }
      } else {
        expand(next, depth + 1);
      }
      current_.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (aborted_ && best_ >= opt_.stop_at) return;
    }
  }

  Options opt_;
  BitGraph graph_;
  std::vector<std::size_t> order_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> pool_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_clique_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t open_upper_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Maximum clique of `g`, or the best clique found within the limits.
inline Result max_clique(const BitGraph& g, const Options& opt = {}) {
  detail::Solver solver(g, opt);
  return solver.run();
}

}  // namespace ftsnd::clique
