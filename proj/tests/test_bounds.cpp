#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ftsnd/bounds.hpp"
#include "oracles.hpp"

using namespace ftsnd;
using namespace ftsnd::bounds;

TEST(Sperner, Values) {
  EXPECT_EQ(sperner(4).value, 6u);
  EXPECT_EQ(sperner(1).value, 1u);
  EXPECT_EQ(sperner(16).value, 12870u);
  EXPECT_EQ(sperner(4).kind, BoundKind::exact);
  EXPECT_THROW(sperner(0), usage_error);
  EXPECT_THROW(sperner(65), usage_error);
}

TEST(Plotkin, Values) {
  EXPECT_EQ(plotkin(6, 1).value, 4u);
  EXPECT_EQ(plotkin(20, 5).value, 6u);
  EXPECT_EQ(plotkin(8, 1).value, 16u);
  EXPECT_EQ(plotkin(12, 2).value, 24u);
  EXPECT_FALSE(plotkin(9, 1).applicable);
  EXPECT_EQ(plotkin(1, 0).value, 1u);
  EXPECT_EQ(plotkin(3, 1).value, 1u);
  for (std::size_t e = 0; e <= 7; ++e) EXPECT_EQ(plotkin(4 * e + 2, e).value, 2 * e + 2);
}

TEST(BaldingTorney, ReducesToSpernerAtEZero) {
  for (std::size_t m = 1; m <= 16; ++m) EXPECT_EQ(balding_torney(m, 0).value, sperner(m).value) << m;
}

TEST(BaldingTorney, CalibratedAgainstSteinerEqualities) {
  for (std::size_t m : {7u, 8u, 11u, 12u}) {
    EXPECT_EQ(balding_torney(m, 1).value, steiner_exact(m).value) << m;
  }
  EXPECT_EQ(balding_torney(7, 1).value, 7u);
  EXPECT_EQ(balding_torney(12, 1).value, 132u);
}

// Exhaustive maxima at tiny m never exceed the bound.
TEST(BaldingTorney, DominatesBruteForceMaxima) {
  for (int m = 1; m <= 6; ++m) {
    for (int e = 0; e < m; ++e) EXPECT_GE(balding_torney(m, e).value, oracle::max_family(m, e + 1)) << m << "," << e;
  }
}

TEST(SteinerExact, Values) {
  EXPECT_EQ(steiner_exact(4).value, 2u);
  EXPECT_EQ(steiner_exact(7).value, 7u);
  EXPECT_EQ(steiner_exact(8).value, 14u);
  EXPECT_EQ(steiner_exact(11).value, 66u);
  EXPECT_EQ(steiner_exact(12).value, 132u);
  const auto r = steiner_exact(9);
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.note, "Steiner system existence unknown/absent");
}

TEST(TrivialSmall, Values) {
  EXPECT_EQ(trivial_small(3, 1).value, 1u);
  EXPECT_EQ(trivial_small(5, 1).value, 2u);
  EXPECT_EQ(trivial_small(16, 7).value, 2u);
  EXPECT_FALSE(trivial_small(6, 1).applicable);
}

TEST(Katona, EnvelopeShape) {
  for (std::size_t m = 1; m <= 64; ++m) {
    for (std::size_t e = 0; e <= 7; ++e) {
      const auto [lo, hi] = katona_envelope(m, e);
      EXPECT_EQ(lo.kind, BoundKind::diagnostic);
      ASSERT_LE(lo.real_value, hi.real_value);
      const double s = static_cast<double>(e + 1);
      const double ratio = std::pow(2.0, 2 * s - 1) * std::tgamma(s);
      ASSERT_NEAR(hi.real_value / lo.real_value, ratio, 1e-9 * ratio);
    }
  }
  // e = 0: the lower coefficient is half the central-binomial asymptote.
  for (std::size_t m = 10; m <= 30; ++m) {
    const auto [lo, hi] = katona_envelope(m, 0);
    const double c = static_cast<double>(oracle::choose(static_cast<int>(m), static_cast<int>(m / 2)));
    EXPECT_NEAR(2.0 * lo.real_value / c, 1.0, 0.1) << m;
    EXPECT_LE(lo.real_value, c);
    EXPECT_GE(hi.real_value, c);
  }
}

TEST(Levenshtein, Values) {
  EXPECT_EQ(levenshtein_lower(4, 2, 2), Rational(6, 5));
  EXPECT_EQ(middle_weight_levenshtein(15, 1), Rational(6435, 57));
  EXPECT_EQ(middle_weight_levenshtein(15, 1).ceil(), 113u);
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(levenshtein_lower(n, 3, 0), Rational(1, 1));
    EXPECT_EQ(levenshtein_lower(n, 3, n), Rational(1, 1));
  }
  EXPECT_THROW(levenshtein_lower(3, 1, 4), usage_error);
  EXPECT_THROW(levenshtein_lower(3, 0, 1), usage_error);
}

TEST(Levenshtein, BestDominatesMiddleWeight) {
  for (std::size_t m = 1; m <= 16; ++m) {
    for (std::size_t e = 0; e <= 3; ++e) EXPECT_GE(best_levenshtein(m, e).value, middle_weight_levenshtein(m, e).ceil());
  }
}

TEST(CodeTable, ParseAndLookup) {
  const auto t = CodeTable::parse("# A(n,d)\n13 4 256\n\n14 4 512  # trailing\r\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(external_code_upper(13, 1, t).value, 256u);
  EXPECT_EQ(external_code_upper(14, 1, t).value, 512u);
  EXPECT_FALSE(external_code_upper(15, 1, t).applicable);
  EXPECT_THROW(CodeTable::parse("13 4\n"), parse_error);
  EXPECT_THROW(CodeTable::parse("13 4 x\n"), parse_error);
  EXPECT_THROW(CodeTable::parse("13 4 5 6\n"), parse_error);
  EXPECT_THROW(CodeTable::parse("hello\n"), parse_error);
}

TEST(RandomizedContact, Formula) {
  for (double n : {1.0, 10.0, 1000.0}) {
    for (double eps : {0.5, 0.01}) {
      EXPECT_NEAR(randomized_contact_requirement(n, 0, eps, 0.5), 4.0 * std::log(n * n / eps), 1e-9);
    }
  }
  double prev = 0;
  for (double n = 1; n < 1e6; n *= 3) {
    const double v = randomized_contact_requirement(n, 2, 0.1, 0.3);
    EXPECT_GT(v, prev);
    prev = v;
  }
  prev = 0;
  for (double e = 0; e < 10; ++e) {
    const double v = randomized_contact_requirement(100, e, 0.1, 0.3);
    EXPECT_GT(v, prev);
    prev = v;
  }
  double best = 1e300, best_p = 0;
  for (double p = 0.01; p < 1.0; p += 0.01) {
    const double v = randomized_contact_requirement(100, 1, 0.1, p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  }
  EXPECT_NEAR(best_p, 0.5, 0.011);
  EXPECT_THROW(randomized_contact_requirement(10, 1, 0.1, 0.0), std::domain_error);
  EXPECT_THROW(randomized_contact_requirement(10, 1, 0.1, 1.0), std::domain_error);
  EXPECT_THROW(randomized_contact_requirement(10, 1, 0.0, 0.5), std::domain_error);
  EXPECT_THROW(randomized_contact_requirement(0.5, 1, 0.1, 0.5), std::domain_error);
}

// With m = 4 ln(n^2) mesowires the deterministic optimum dwarfs n.
TEST(RandomizedContact, DeterministicComparison) {
  for (double n : {100.0, 1000.0}) {
    const auto m = static_cast<std::size_t>(std::ceil(4.0 * std::log(n * n)));
    EXPECT_GT(sperner(m).real_value, n);
    EXPECT_GT(katona_envelope(m, 0).first.real_value, n);
  }
}

TEST(InfoBits, Values) {
  EXPECT_EQ(info_bits(7), 2u);
  EXPECT_EQ(info_bits(512), 9u);
  EXPECT_EQ(info_bits(1), 0u);
  EXPECT_THROW(info_bits(0), usage_error);
}

TEST(Constructions, ClosedForms) {
  EXPECT_EQ(hadamard_lower(6, 1).value, 4u);
  EXPECT_EQ(hadamard_lower(22, 5).value, 12u);
  EXPECT_EQ(hadamard_lower(10, 1).value, 6u);
  EXPECT_FALSE(hadamard_lower(5, 1).applicable);
  EXPECT_EQ(complete_uniform_lower(20, 5).value, 6u);
  EXPECT_EQ(complete_uniform_lower(6, 1).value, 4u);
  EXPECT_EQ(disjoint_pair_lower(16, 7).value, 2u);
  EXPECT_FALSE(disjoint_pair_lower(15, 7).applicable);
  EXPECT_EQ(steiner_lower(13, 1).value, 132u);
  EXPECT_FALSE(steiner_lower(13, 2).applicable);
}

TEST(Aggregate, Examples) {
  EXPECT_EQ(aggregate(6, 1).exact, std::optional<std::uint64_t>(4));
  EXPECT_EQ(aggregate(2, 0).exact, std::optional<std::uint64_t>(2));
  const auto b = aggregate(12, 2);
  EXPECT_FALSE(b.is_exact());
  EXPECT_EQ(b.upper, 24u);
  EXPECT_EQ(b.upper_source, "plotkin");
  AggregateOptions with;
  with.extra_lower.push_back(BoundReport::integer("search", BoundKind::lower, 22));
  with.extra_upper.push_back(BoundReport::integer("search", BoundKind::upper, 22));
  EXPECT_EQ(aggregate(12, 2, with).exact, std::optional<std::uint64_t>(22));
  AggregateOptions bad;
  bad.extra_lower.push_back(BoundReport::integer("bogus", BoundKind::lower, 25));
  EXPECT_THROW(aggregate(12, 2, bad), std::logic_error);
}

TEST(Aggregate, SpernerColumn) {
  for (std::size_t m = 1; m <= 16; ++m) {
    const auto b = aggregate(m, 0);
    ASSERT_TRUE(b.is_exact()) << m;
    EXPECT_EQ(*b.exact, oracle::choose(static_cast<int>(m), static_cast<int>(m / 2)));
  }
}

TEST(Aggregate, ConsistentAndRetainsProvenance) {
  const auto t = CodeTable::parse("13 4 256\n14 4 512\n15 4 1024\n16 4 2048\n");
  for (std::size_t m = 1; m <= 16; ++m) {
    for (std::size_t e = 0; e < m; ++e) {
      AggregateOptions o;
      o.code_table = &t;
      const auto b = aggregate(m, e, o);
      ASSERT_LE(b.lower, b.upper) << m << "," << e;
      EXPECT_FALSE(b.contributions.empty());
      EXPECT_FALSE(b.lower_source.empty());
      EXPECT_FALSE(b.upper_source.empty());
      EXPECT_EQ(b.is_exact(), b.lower == b.upper);
    }
  }
}

// Brute-force maxima at m <= 6 always lie inside the bracket.
TEST(Aggregate, BracketsBruteForceMaxima) {
  for (int m = 1; m <= 6; ++m) {
    for (int e = 0; e < m; ++e) {
      const auto b = aggregate(m, e);
      const auto v = oracle::max_family(m, e + 1);
      EXPECT_LE(b.lower, v) << m << "," << e;
      EXPECT_GE(b.upper, v) << m << "," << e;
    }
  }
}
