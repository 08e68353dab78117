#pragma once

// Closed-form bounds on N(m, e), the largest (e+1)-diffbounded family on
// [m], and an aggregator that brackets N(m, e) with provenance.
//
// Everything is exact integer or rational arithmetic except the asymptotic
// envelope and the randomized-decoder requirement, which are real-valued.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ftsnd/combinatorics.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/hadamard.hpp"

namespace ftsnd::bounds {

enum class BoundKind { lower, upper, exact, diagnostic };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
    case BoundKind::diagnostic: return "diagnostic";
  }
  return "?";
}

struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::lower;
  bool applicable = true;
  std::uint64_t value = 0;
  double real_value = 0.0;  // diagnostics only
  std::string note;         // reason when not applicable, or detail of the derivation

  static BoundReport integer(std::string name, BoundKind kind, std::uint64_t value, std::string note = {}) {
    BoundReport r;
    r.name = std::move(name);
    r.kind = kind;
    r.value = value;
    r.real_value = static_cast<double>(value);
    r.note = std::move(note);
    return r;
  }

  static BoundReport not_applicable(std::string name, BoundKind kind, std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.kind = kind;
    r.applicable = false;
    r.note = std::move(reason);
    return r;
  }
};

constexpr std::size_t max_order = 64;

namespace detail {

inline void check_order(std::size_t m) {
  if (m < 1) throw usage_error("m must be at least 1");
  if (m > max_order) throw usage_error("bounds are limited to m <= 64");
}

}  // namespace detail

inline BoundReport sperner(std::size_t m) {
  detail::check_order(m);
  return BoundReport::integer("sperner", BoundKind::exact, binomial(m, m / 2), "e = 0: C(m, floor(m/2))");
}

inline BoundReport plotkin(std::size_t m, std::size_t e) {
  detail::check_order(m);
  const std::uint64_t d = e + 1;
  if (m < 4 * d) {
    // Below m = 2(e+1) the formula gives 0; a single block always exists.
    const std::uint64_t v = std::max<std::uint64_t>(1, 2 * ((2 * d) / (4 * d - m)));
    return BoundReport::integer("plotkin", BoundKind::upper, v, "m < 4(e+1)");
  }
  if (m == 4 * d) return BoundReport::integer("plotkin", BoundKind::upper, 8 * d, "m = 4(e+1)");
  return BoundReport::not_applicable("plotkin", BoundKind::upper, "needs m <= 4(e+1)");
}

/// K_e as an exact fraction num/den. Pairs are C(floor(m/2), s) *
/// C(ceil(m/2), s); the odd-e correction term divides by
/// T = floor(2 floor(m/2) / (e+1)), the most words at distance 2s from a
/// word that are pairwise at distance >= 4s.
struct BaldingTorneyDenominator {
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
};

inline BaldingTorneyDenominator balding_torney_denominator(std::size_t m, std::size_t e) {
  const long long lo = static_cast<long long>(m / 2);
  const long long hi = static_cast<long long>(m - m / 2);
  auto pair = [&](long long s) {
    return static_cast<unsigned __int128>(binomial(lo, s)) * binomial(hi, s);
  };
  unsigned __int128 even_sum = 0;
  const long long top = static_cast<long long>(e / 2);
  for (long long s = 0; s <= top; ++s) even_sum += pair(s);
  if (e % 2 == 0) return {even_sum, 1};
  const long long s = static_cast<long long>((e + 1) / 2);
  const std::uint64_t t = (2 * static_cast<std::uint64_t>(lo)) / (e + 1);
  const auto term = pair(s);
  if (t == 0 || term == 0) return {even_sum, 1};  // T = 0 exactly when floor(m/2) < s
  return {even_sum * t + term, t};
}

inline BoundReport balding_torney(std::size_t m, std::size_t e) {
  detail::check_order(m);
  const auto central = binomial(m, m / 2);
  const auto k = balding_torney_denominator(m, e);
  const auto v = static_cast<unsigned __int128>(central) * k.den / k.num;
  std::ostringstream note;
  note << "floor(C(m,floor(m/2)) / K_e), K_e = ";
  if (k.num <= UINT64_MAX) {
    const Rational r(static_cast<std::uint64_t>(k.num), static_cast<std::uint64_t>(k.den));
    note << r.num;
    if (r.den != 1) note << "/" << r.den;
  } else {
    note << "(large)";
  }
  return BoundReport::integer("balding_torney", BoundKind::upper, static_cast<std::uint64_t>(v), note.str());
}

inline bool steiner_exact_supported(std::size_t m) { return m == 4 || m == 7 || m == 8 || m == 11 || m == 12; }

/// e = 1 value forced by an S(floor(m/2)-1, floor(m/2), m).
inline BoundReport steiner_exact(std::size_t m) {
  detail::check_order(m);
  if (!steiner_exact_supported(m)) {
    return BoundReport::not_applicable("steiner", BoundKind::exact, "Steiner system existence unknown/absent");
  }
  const auto k = m / 2;
  return BoundReport::integer("steiner", BoundKind::exact, binomial(m, k - 1) / k, "e = 1: C(m, floor(m/2)-1) / floor(m/2)");
}

inline BoundReport trivial_small(std::size_t m, std::size_t e) {
  if (m <= 2 * e + 1) return BoundReport::integer("trivial", BoundKind::exact, 1, "m <= 2e+1");
  if (m <= 3 * e + 2) return BoundReport::integer("trivial", BoundKind::exact, 2, "2e+2 <= m <= 3e+2");
  return BoundReport::not_applicable("trivial", BoundKind::exact, "needs m <= 3e+2");
}

/// Leading-term envelope of the asymptotic size of a maximum s-diffbounded
/// family, s = e + 1. Diagnostic only: the vanishing terms are dropped.
inline std::pair<BoundReport, BoundReport> katona_envelope(std::size_t m, std::size_t e) {
  if (m < 1) throw usage_error("m must be at least 1");
  const double s = static_cast<double>(e + 1);
  const double c = std::sqrt(2.0 / std::numbers::pi);
  const double alpha = c / std::pow(2.0, s);
  const double beta = c * std::pow(2.0, s - 1) * std::tgamma(s);  // (s-1)!
  const double scale = std::pow(2.0, static_cast<double>(m)) / std::pow(static_cast<double>(m), s - 0.5);
  BoundReport lo, hi;
  lo.name = "katona_lower";
  hi.name = "katona_upper";
  lo.kind = hi.kind = BoundKind::diagnostic;
  lo.real_value = alpha * scale;
  hi.real_value = beta * scale;
  lo.note = hi.note = "leading term only, not a certified bound";
  return {lo, hi};
}

/// C(n, w) / sum_{i<d} C(w, i) C(n-w, i): size guaranteed by greedy
/// selection of weight-w words at pairwise distance >= 2d.
inline Rational levenshtein_lower(std::size_t n, std::size_t d, std::size_t w) {
  if (w > n) throw usage_error("levenshtein_lower needs w <= n");
  if (d < 1) throw usage_error("levenshtein_lower needs d >= 1");
  std::uint64_t den = 0;
  for (std::size_t i = 0; i < d; ++i) den += binomial(w, i) * binomial(n - w, i);
  return Rational(binomial(n, w), den);
}

/// Greedy guarantee at the middle weight w = floor(m/2), distance 2(e+1).
inline Rational middle_weight_levenshtein(std::size_t m, std::size_t e) { return levenshtein_lower(m, e + 1, m / 2); }

inline BoundReport best_levenshtein(std::size_t m, std::size_t e) {
  detail::check_order(m);
  std::uint64_t best = 0;
  std::size_t best_w = 0;
  for (std::size_t w = 0; w <= m; ++w) {
    const auto v = levenshtein_lower(m, e + 1, w).ceil();
    if (v > best) {
      best = v;
      best_w = w;
    }
  }
  return BoundReport::integer("levenshtein", BoundKind::lower, best, "greedy constant-weight code, w = " + std::to_string(best_w));
}

/// Table of A(n, d) values, one "n d value" triple per line ('#' comments).
class CodeTable {
 public:
  CodeTable() = default;

  static CodeTable parse(std::string_view text) {
    CodeTable t;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      start = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream in(line);
      long long n = 0, d = 0, value = 0;
      std::string rest;
      if (!(in >> n)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw parse_error(line_no, "expected 'n d value'");
        continue;
      }
      if (!(in >> d >> value) || (in >> rest) || n < 1 || d < 1 || value < 1) {
        throw parse_error(line_no, "expected three positive integers 'n d value'");
      }
      t.set(static_cast<std::size_t>(n), static_cast<std::size_t>(d), static_cast<std::uint64_t>(value));
    }
    return t;
  }

  void set(std::size_t n, std::size_t d, std::uint64_t value) { values_[{n, d}] = value; }

  std::optional<std::uint64_t> lookup(std::size_t n, std::size_t d) const {
    auto it = values_.find({n, d});
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return values_.size(); }

 private:
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> values_;
};

inline BoundReport external_code_upper(std::size_t m, std::size_t e, const CodeTable& table) {
  const std::size_t d = 2 * (e + 1);
  if (auto v = table.lookup(m, d)) {
    return BoundReport::integer("external_code", BoundKind::upper, *v, "A(" + std::to_string(m) + "," + std::to_string(d) + ")");
  }
  return BoundReport::not_applicable("external_code", BoundKind::upper,
                                     "no A(" + std::to_string(m) + "," + std::to_string(d) + ") entry");
}

/// Mesowire count that makes all n nanowires of an ideal randomized contact
/// decoder addressable under e errors with probability >= 1 - epsilon.
inline double randomized_contact_requirement(double n, double e, double epsilon, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must lie strictly between 0 and 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon must lie strictly between 0 and 1");
  if (!(n >= 1.0)) throw std::domain_error("n must be at least 1");
  if (e < 0.0) throw std::domain_error("e must be non-negative");
  const double root = e + std::sqrt(e * e + 4.0 * std::log(n * n / epsilon));
  return root * root / (4.0 * p * (1.0 - p));
}

inline unsigned info_bits(std::uint64_t n) {
  if (n < 1) throw usage_error("info_bits needs n >= 1");
  return static_cast<unsigned>(std::bit_width(n)) - 1;
}

// ---------------------------------------------------------------------------
// Lower bounds from explicit constructions, evaluated in closed form. Every
// family embeds into any larger ground set and stays valid for smaller e,
// so each is maximised over m' <= m and e' >= e.

inline BoundReport hadamard_lower(std::size_t m, std::size_t e) {
  if (4 * e + 2 > m) return BoundReport::not_applicable("hadamard", BoundKind::lower, "needs m >= 4e+2");
  std::optional<std::size_t> used;
  for (std::size_t ep = e; 4 * ep + 2 <= m; ++ep) {
    if (hadamard_supported(4 * (ep + 1))) used = ep;
  }
  if (!used) {
    return BoundReport::not_applicable("hadamard", BoundKind::lower, "Hadamard order " + std::to_string(4 * (e + 1)) + " not constructible");
  }
  return BoundReport::integer("hadamard", BoundKind::lower, 2 * *used + 2,
                              "Hadamard design minus a point, order " + std::to_string(4 * *used + 2));
}

/// The symmetric (4e+3, 2e+1, e) design itself: blocks pairwise meet in e points.
inline BoundReport hadamard_design_lower(std::size_t m, std::size_t e) {
  std::optional<std::size_t> used;
  for (std::size_t ep = e; 4 * ep + 3 <= m; ++ep) {
    if (hadamard_supported(4 * (ep + 1))) used = ep;
  }
  if (!used) return BoundReport::not_applicable("hadamard_design", BoundKind::lower, "needs m >= 4e+3");
  return BoundReport::integer("hadamard_design", BoundKind::lower, 4 * *used + 3,
                              "symmetric Hadamard design, order " + std::to_string(4 * *used + 3));
}

inline BoundReport complete_uniform_lower(std::size_t m, std::size_t e) {
  std::uint64_t best = 0;
  std::string how;
  for (std::size_t n = 2; n <= m; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto mm = binomial(n, k);
      if (mm > m) continue;
      const auto diff = binomial(static_cast<long long>(n) - 2, static_cast<long long>(k) - 1);
      if (diff < e + 1) continue;
      if (n > best) {
        best = n;
        how = "dual of all " + std::to_string(k) + "-subsets of [" + std::to_string(n) + "]";
      }
    }
  }
  if (best == 0) return BoundReport::not_applicable("complete_uniform", BoundKind::lower, "no (n,k) fits");
  return BoundReport::integer("complete_uniform", BoundKind::lower, best, how);
}

inline BoundReport disjoint_pair_lower(std::size_t m, std::size_t e) {
  if (m < 2 * e + 2) return BoundReport::not_applicable("disjoint_pair", BoundKind::lower, "needs m >= 2e+2");
  return BoundReport::integer("disjoint_pair", BoundKind::lower, 2, "two disjoint (e+1)-sets");
}

inline BoundReport steiner_lower(std::size_t m, std::size_t e) {
  if (e > 1) return BoundReport::not_applicable("steiner", BoundKind::lower, "needs e <= 1");
  std::uint64_t best = 0;
  std::size_t at = 0;
  for (std::size_t mp = 1; mp <= m; ++mp) {
    if (!steiner_exact_supported(mp)) continue;
    const auto v = steiner_exact(mp).value;
    if (v > best) {
      best = v;
      at = mp;
    }
  }
  if (best == 0) return BoundReport::not_applicable("steiner", BoundKind::lower, "needs m >= 4");
  return BoundReport::integer("steiner", BoundKind::lower, best, "Steiner system on " + std::to_string(at) + " points");
}

inline BoundReport levenshtein_closure(std::size_t m, std::size_t e) {
  BoundReport best = best_levenshtein(m, e);
  for (std::size_t mp = 1; mp < m; ++mp) {
    auto r = best_levenshtein(mp, e);
    if (r.value > best.value) {
      best = r;
      best.note += ", m' = " + std::to_string(mp);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

struct Bracket {
  std::uint64_t lower = 1;
  std::string lower_source = "single_block";
  std::uint64_t upper = 0;
  std::string upper_source;
  std::optional<std::uint64_t> exact;
  std::vector<BoundReport> contributions;

  bool is_exact() const { return exact.has_value(); }
};

struct AggregateOptions {
  const CodeTable* code_table = nullptr;
  // Lower bounds from search results or certified witness files.
  std::vector<BoundReport> extra_lower;
  // Upper bounds proven elsewhere (e.g. exhausted searches).
  std::vector<BoundReport> extra_upper;
};

/// Best known bracket for N(m, e): lower is the best construction,
/// certificate or search value; upper the least of the upper bounds.
inline Bracket aggregate(std::size_t m, std::size_t e, const AggregateOptions& options = {}) {
  detail::check_order(m);
  Bracket b;
  b.upper = binomial(m, m / 2);
  b.upper_source = "sperner";

  auto take = [&](const BoundReport& r) {
    b.contributions.push_back(r);
    if (!r.applicable) return;
    const bool lower = r.kind == BoundKind::lower || r.kind == BoundKind::exact;
    const bool upper = r.kind == BoundKind::upper || r.kind == BoundKind::exact;
    if (lower && r.value > b.lower) {
      b.lower = r.value;
      b.lower_source = r.name;
    }
    if (upper && r.value < b.upper) {
      b.upper = r.value;
      b.upper_source = r.name;
    }
  };

  take(trivial_small(m, e));
  if (e == 0) take(sperner(m));
  if (e == 1) take(steiner_exact(m));
  take(plotkin(m, e));
  take(balding_torney(m, e));
  if (options.code_table) take(external_code_upper(m, e, *options.code_table));

  take(disjoint_pair_lower(m, e));
  take(hadamard_lower(m, e));
  take(hadamard_design_lower(m, e));
  take(complete_uniform_lower(m, e));
  take(steiner_lower(m, e));
  take(levenshtein_closure(m, e));
  for (const auto& r : options.extra_lower) take(r);
  for (const auto& r : options.extra_upper) take(r);

  if (b.lower > b.upper) {
    throw std::logic_error("inconsistent bounds at (m=" + std::to_string(m) + ", e=" + std::to_string(e) + "): " +
                           b.lower_source + " " + std::to_string(b.lower) + " > " + b.upper_source + " " +
                           std::to_string(b.upper));
  }
  if (b.lower == b.upper) b.exact = b.lower;
  return b;
}

}  // namespace ftsnd::bounds
