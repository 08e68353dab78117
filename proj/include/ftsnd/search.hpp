#pragma once

// Exact N(m, e) by maximum clique over the compatibility graph of blocks,
// plus greedy extension and certificate checking.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftsnd/bounds.hpp"
#include "ftsnd/clique.hpp"
#include "ftsnd/combinatorics.hpp"
#include "ftsnd/constructors.hpp"
#include "ftsnd/decoder.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/set_system.hpp"

namespace ftsnd {

/// Blocks of [m] as vertices (mask = incidence bits), A ~ B iff both
/// one-sided differences are at least e+1. Adjacency is evaluated on demand.
class CompatibilityGraph {
 public:
  static constexpr std::size_t default_cap = 16;

  CompatibilityGraph(std::size_t m, std::size_t e, std::size_t cap = default_cap) : m_(m), e_(e) {
    if (m > cap) throw usage_error("compatibility graph limited to m <= " + std::to_string(cap) + ", got m = " + std::to_string(m));
    if (m > 63) throw usage_error("compatibility graph needs m <= 63");
  }

  std::size_t m() const { return m_; }
  std::size_t e() const { return e_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << m_; }
  Block vertex(std::uint64_t mask) const { return Block::from_mask(m_, mask); }

  bool adjacent(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::size_t>(std::popcount(a & ~b)) >= e_ + 1 &&
           static_cast<std::size_t>(std::popcount(b & ~a)) >= e_ + 1;
  }

  bool adjacent(const Block& a, const Block& b) const {
    return a.minus_size(b) >= e_ + 1 && b.minus_size(a) >= e_ + 1;
  }

  std::uint64_t degree(std::uint64_t mask) const {
    // Choose A\B from outside the block and B\A from inside.
    const auto w = static_cast<long long>(std::popcount(mask));
    const auto out = static_cast<long long>(m_) - w;
    std::uint64_t inside = 0, outside = 0;
    for (long long x = static_cast<long long>(e_) + 1; x <= w; ++x) inside += binomial(w, x);
    for (long long y = static_cast<long long>(e_) + 1; y <= out; ++y) outside += binomial(out, y);
    return inside * outside;
  }

  /// Unordered edges, by counting ordered pairs with |A\B| = x, |B\A| = y.
  std::uint64_t edge_count() const {
    std::uint64_t ordered = 0;
    const auto m = static_cast<long long>(m_);
    for (long long x = static_cast<long long>(e_) + 1; x <= m; ++x) {
      for (long long y = static_cast<long long>(e_) + 1; x + y <= m; ++y) {
        ordered += binomial(m, x) * binomial(m - x, y) * (std::uint64_t{1} << (m - x - y));
      }
    }
    return ordered / 2;
  }

 private:
  std::size_t m_;
  std::size_t e_;
};

inline CompatibilityGraph compatibility_graph(std::size_t m, std::size_t e, std::size_t cap = CompatibilityGraph::default_cap) {
  return CompatibilityGraph(m, e, cap);
}

struct SearchBudget {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  bool unbounded = false;

  static SearchBudget unlimited() { return {std::nullopt, std::nullopt, true}; }
  static SearchBudget seconds(double s) { return {s, std::nullopt, false}; }
  static SearchBudget nodes(std::uint64_t n) { return {std::nullopt, n, false}; }

  void validate() const {
    if (!unbounded && !time_limit_seconds && !node_limit) {
      throw usage_error("search budget needs a time limit, a node limit, or an explicit unbounded request");
    }
    if (time_limit_seconds && !(*time_limit_seconds > 0.0)) throw usage_error("time limit must be positive");
  }
};

enum class SearchStatus { exact, bracket };

inline const char* to_string(SearchStatus s) { return s == SearchStatus::exact ? "exact" : "bracket"; }

struct SearchResult {
  SearchStatus status = SearchStatus::bracket;
  std::size_t m = 0;
  std::size_t e = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::string lower_source;
  std::string upper_source;
  SetSystem witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  std::string note;

  std::uint64_t value() const {
    if (status != SearchStatus::exact) throw std::logic_error("search result is a bracket, not an exact value");
    return lower;
  }
};

struct SearchOptions {
  // Fix the first two blocks to orbit representatives (see max_ftsnd_exact).
  bool canonical_first_block = false;
  // Seed the incumbent with the explicit constructions.
  bool warm_start = true;
  // Stop once the incumbent meets the aggregate upper bound.
  bool use_bounds = true;
  const bounds::CodeTable* code_table = nullptr;
  // Largest adjacency matrix (bytes) the symmetry-oblivious mode will build.
  std::uint64_t oblivious_memory_cap = std::uint64_t{256} << 20;
};

/// Appends blocks (middle weights first, then lexicographic) while the
/// family stays (e+1)-diffbounded, until no block fits.
inline SetSystem extend_greedy(std::size_t m, std::size_t e, const SetSystem& seed) {
  if (seed.order() != m) throw usage_error("seed is over [" + std::to_string(seed.order()) + "], expected [" + std::to_string(m) + "]");
  if (m > 24) throw usage_error("extend_greedy limited to m <= 24");
  if (auto bad = find_violating_pair(seed, e + 1)) {
    throw usage_error("seed is not " + std::to_string(e + 1) + "-diffbounded: |A" + std::to_string(bad->first + 1) + " \\ A" +
                      std::to_string(bad->second + 1) + "| = " + std::to_string(bad->difference));
  }
  std::vector<std::uint64_t> family;
  for (const auto& b : seed.blocks()) family.push_back(b.bits().low_word());
  SetSystem out = seed;
  const CompatibilityGraph g(m, e, 24);
  std::vector<std::size_t> weights(m + 1);
  for (std::size_t w = 0; w <= m; ++w) weights[w] = w;
  std::stable_sort(weights.begin(), weights.end(), [&](std::size_t a, std::size_t b) {
    auto dist = [&](std::size_t w) { return 2 * w > m ? 2 * w - m : m - 2 * w; };
    return dist(a) < dist(b);
  });
  for (auto w : weights) {
    for (auto mask : subsets_lex(static_cast<unsigned>(m), static_cast<unsigned>(w))) {
      bool ok = true;
      for (auto f : family) {
        if (!g.adjacent(mask, f)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        family.push_back(mask);
        out.add(Block::from_mask(m, mask));
      }
    }
  }
  return out;
}

struct Certificate {
  bool valid = false;
  std::size_t m = 0;
  std::size_t e = 0;
  std::size_t size = 0;
  std::optional<BlockPair> violation;

  std::string describe() const {
    if (valid) return "certified N(" + std::to_string(m) + "," + std::to_string(e) + ") >= " + std::to_string(size);
    return "violating pair: |A" + std::to_string(violation->first + 1) + " \\ A" + std::to_string(violation->second + 1) +
           "| = " + std::to_string(violation->difference) + " < " + std::to_string(e + 1);
  }
};

/// Checks that s is an (m, |s|, e)-FTSND; on failure names an ordered pair
/// (1-based block indices) whose one-sided difference is at most e.
inline Certificate certify(const SetSystem& s, std::size_t e) {
  Certificate c;
  c.m = s.order();
  c.e = e;
  c.size = s.size();
  c.violation = find_violating_pair(s, e + 1);
  c.valid = !c.violation.has_value();
  return c;
}

namespace detail {

struct Seeded {
  SetSystem system;
  std::string source;
};

// Largest explicit construction over [m] at fault tolerance e.
inline Seeded best_construction(std::size_t m, std::size_t e) {
  Seeded best{SetSystem(m, {Block(m)}), "single_block"};
  auto offer = [&](const SetSystem& s, const std::string& source) {
    if (s.order() > m || s.size() <= best.system.size()) return;
    SetSystem big = embed(s, m);
    if (!is_ftsnd(Decoder(big), e)) return;
    best = {std::move(big), source};
  };
  if (m >= 2 * e + 2) offer(disjoint_pair(m, e).system(), "disjoint_pair");
  if (e == 0) offer(middle_layer(m), "sperner");
  for (std::size_t ep = e; 4 * ep + 2 <= m; ++ep) {
    if (hadamard_supported(4 * (ep + 1))) offer(hadamard_ftsnd(ep).system(), "hadamard");
  }
  for (std::size_t ep = e; 4 * ep + 3 <= m; ++ep) {
    if (hadamard_supported(4 * (ep + 1))) offer(hadamard_design(ep), "hadamard_design");
  }
  if (e <= 1) {
    for (std::size_t mp = 4; mp <= m; ++mp) {
      if (steiner_ftsnd_supported(mp)) offer(steiner_ftsnd(mp).system(), "steiner");
    }
  }
  for (std::size_t n = 2; n <= m; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      if (binomial(n, k) <= m && complete_uniform_tolerance(n, k) >= e) {
        offer(complete_uniform_dual(n, k).system(), "complete_uniform");
      }
    }
  }
  for (std::size_t mp = 1; mp <= m; ++mp) {
    std::size_t best_w = 0;
    Rational best_v(0, 1);
    for (std::size_t w = 0; w <= mp; ++w) {
      const auto v = bounds::levenshtein_lower(mp, e + 1, w);
      if (v > best_v) {
        best_v = v;
        best_w = w;
      }
    }
    if (best_v.ceil() <= best.system.size() || binomial(mp, best_w) > 13000) continue;
    offer(system_from_code(greedy_constant_weight(mp, e + 1, best_w)), "levenshtein");
  }
  return best;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }
};

inline clique::Limits remaining_limits(const SearchBudget& budget, const Timer& timer, std::uint64_t nodes_used) {
  clique::Limits l;
  if (budget.time_limit_seconds) l.time_limit_seconds = std::max(1e-9, *budget.time_limit_seconds - timer.elapsed());
  if (budget.node_limit) l.node_limit = *budget.node_limit > nodes_used ? *budget.node_limit - nodes_used : 1;
  return l;
}

inline bool budget_spent(const SearchBudget& budget, const Timer& timer, std::uint64_t nodes_used) {
  if (budget.node_limit && nodes_used >= *budget.node_limit) return true;
  return budget.time_limit_seconds && timer.elapsed() >= *budget.time_limit_seconds;
}

inline clique::BitGraph induced(const CompatibilityGraph& g, const std::vector<std::uint64_t>& vertices) {
  clique::BitGraph bg(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) bg.add_edge(i, j);
    }
  }
  return bg;
}

struct Outcome {
  std::vector<std::uint64_t> best;  // improved incumbent, empty if none
  std::uint64_t upper = 0;          // bound on N over the searched space
  std::uint64_t nodes = 0;
  bool complete = true;
};

// Every vertex of weight e+1..m-e-1, ordered by weight then lexicographically.
inline Outcome search_oblivious(const CompatibilityGraph& g, std::uint64_t incumbent, std::uint64_t stop_at,
                                const SearchBudget& budget, const Timer& timer) {
  const std::size_t m = g.m(), e = g.e();
  std::vector<std::uint64_t> vertices;
  for (std::size_t w = e + 1; w + e + 1 <= m; ++w) {
    for (auto mask : subsets_lex(static_cast<unsigned>(m), static_cast<unsigned>(w))) vertices.push_back(mask);
  }
  Outcome out;
  const auto bg = induced(g, vertices);
  clique::Options opt;
  opt.lower = incumbent;
  opt.stop_at = stop_at;
  opt.limits = remaining_limits(budget, timer, 0);
  const auto r = clique::max_clique(bg, opt);
  out.nodes = r.nodes;
  out.complete = r.complete;
  for (auto v : r.clique) out.best.push_back(vertices[v]);
  out.upper = r.complete ? std::max<std::uint64_t>(r.best_size, 1) : std::max<std::uint64_t>(r.open_upper, incumbent);
  return out;
}

// Two-level orbit reduction. Complementing every block preserves the
// property, so orient a family so that its minimum block weight k satisfies
// every weight <= m-k, and relabel so {1..k} is a block. Other blocks have a
// type (a, b) = (|B ∩ [k]|, |B \ [k]|); the stabiliser of {1..k} is
// transitive on each type, so the lexicographically least type present can
// be represented by {1..a} ∪ {k+1..k+b}, and the rest have type >= it.
inline Outcome search_canonical(const CompatibilityGraph& g, std::uint64_t incumbent, std::uint64_t stop_at,
                                const SearchBudget& budget, const Timer& timer) {
  const std::size_t m = g.m(), e = g.e();
  Outcome out;
  out.upper = std::max<std::uint64_t>(incumbent, 1);
  std::uint64_t best = incumbent;
  for (std::size_t k = m / 2; k >= e + 1 && k <= m / 2; --k) {
    const std::uint64_t first = (std::uint64_t{1} << k) - 1;
    auto type = [&](std::uint64_t b) {
      return std::make_pair(std::popcount(b & first), std::popcount(b & ~first));
    };
    std::vector<std::uint64_t> cand;
    for (std::size_t w = k; w + k <= m; ++w) {
      for (auto mask : subsets_lex(static_cast<unsigned>(m), static_cast<unsigned>(w))) {
        if (g.adjacent(first, mask)) cand.push_back(mask);
      }
    }
    std::map<std::pair<int, int>, std::size_t> rank;
    for (auto b : cand) rank.emplace(type(b), 0);
    std::size_t idx = 0;
    for (auto& [t, r] : rank) r = idx++;

    for (const auto& [t, r] : rank) {
      const auto [a, bcount] = t;
      const std::uint64_t second = ((std::uint64_t{1} << a) - 1) | (((std::uint64_t{1} << bcount) - 1) << k);
      std::vector<std::uint64_t> rest;
      for (auto b : cand) {
        if (b != second && rank[type(b)] >= r && g.adjacent(second, b)) rest.push_back(b);
      }
      if (!out.complete) {
        out.upper = std::max<std::uint64_t>(out.upper, 2 + rest.size());
        continue;
      }
      if (budget_spent(budget, timer, out.nodes)) {
        out.complete = false;
        out.upper = std::max<std::uint64_t>(out.upper, 2 + rest.size());
        continue;
      }
      const auto bg = induced(g, rest);
      clique::Options opt;
      opt.lower = best > 2 ? best - 2 : 0;
      opt.stop_at = stop_at > 2 ? stop_at - 2 : 0;
      opt.limits = remaining_limits(budget, timer, out.nodes);
      const auto res = clique::max_clique(bg, opt);
      out.nodes += res.nodes;
      if (res.clique.size() + 2 > best) {
        best = res.clique.size() + 2;
        out.best = {first, second};
        for (auto v : res.clique) out.best.push_back(rest[v]);
      }
      if (res.complete) {
        out.upper = std::max<std::uint64_t>(out.upper, std::max<std::uint64_t>(res.best_size + 2, 2));
        if (best >= stop_at) {
          out.upper = best;
          return out;
        }
      } else {
        out.complete = false;
        out.upper = std::max<std::uint64_t>(out.upper, res.open_upper + 2);
      }
    }
  }
  out.upper = std::max(out.upper, best);
  return out;
}

}  // namespace detail

/// N(m, e) within the budget. The incumbent starts at the best explicit
/// construction; the search stops when it meets the aggregate upper bound.
/// On budget exhaustion the result is a bracket [best found, best bound].
inline SearchResult max_ftsnd_exact(std::size_t m, std::size_t e, const SearchBudget& budget,
                                    const SearchOptions& options = {}) {
  budget.validate();
  if (m < 1) throw usage_error("m must be at least 1");
  const detail::Timer timer;
  SearchResult res;
  res.m = m;
  res.e = e;

  bounds::AggregateOptions agg_opt;
  agg_opt.code_table = options.code_table;
  const auto bracket = bounds::aggregate(m, e, agg_opt);
  std::uint64_t upper = bracket.upper;
  std::string upper_source = bracket.upper_source;
  if (!options.use_bounds) {
    upper = binomial(m, m / 2);
    upper_source = "sperner";
  }

  detail::Seeded incumbent{SetSystem(m, {Block(m)}), "single_block"};
  if (options.warm_start) incumbent = detail::best_construction(m, e);
  if (options.warm_start && incumbent.system.size() < upper && m <= CompatibilityGraph::default_cap && m >= 2 * e + 2) {
    auto grown = extend_greedy(m, e, incumbent.system);
    if (grown.size() > incumbent.system.size()) incumbent = {std::move(grown), incumbent.source + "+greedy_extension"};
  }

  auto finish = [&](std::uint64_t up, std::string up_source) {
    res.lower = incumbent.system.size();
    res.lower_source = incumbent.source;
    res.upper = std::max<std::uint64_t>(up, res.lower);
    res.upper_source = std::move(up_source);
    res.status = res.lower == res.upper ? SearchStatus::exact : SearchStatus::bracket;
    res.witness = canonical(incumbent.system);
    res.elapsed_seconds = timer.elapsed();
    if (!is_ftsnd(Decoder(res.witness), e)) throw std::logic_error("search witness failed verification");
    return res;
  };

  if (incumbent.system.size() >= upper) return finish(upper, upper_source);
  if (m > CompatibilityGraph::default_cap) {
    res.note = "m exceeds the search cap; bracket from bounds only";
    return finish(upper, upper_source);
  }

  const CompatibilityGraph g(m, e);
  bool canonical_mode = options.canonical_first_block;
  if (!canonical_mode) {
    std::uint64_t n = 0;
    for (std::size_t w = e + 1; w + e + 1 <= m; ++w) n += binomial(m, w);
    if (n * n / 8 > options.oblivious_memory_cap) {
      canonical_mode = true;
      res.note = "adjacency matrix too large for the oblivious search; used the canonical first block";
    }
  }
  const std::uint64_t stop_at = options.use_bounds ? bracket.upper : UINT64_MAX;
  const auto found = canonical_mode ? detail::search_canonical(g, incumbent.system.size(), stop_at, budget, timer)
                                    : detail::search_oblivious(g, incumbent.system.size(), stop_at, budget, timer);
  res.nodes = found.nodes;
  if (found.best.size() > incumbent.system.size()) {
    SetSystem s(m);
    for (auto mask : found.best) s.add(Block::from_mask(m, mask));
    incumbent = {std::move(s), "clique_search"};
  }
  const bool search_bound_tighter = found.upper < upper || (found.complete && found.upper <= upper);
  if (search_bound_tighter) return finish(std::min(found.upper, upper), found.complete ? "clique_search" : "coloring_bound");
  return finish(upper, upper_source);
}

}  // namespace ftsnd
