#include <gtest/gtest.h>

#include <random>

#include "ftsnd/constructors.hpp"
#include "ftsnd/set_system.hpp"
#include "ftsnd/steiner.hpp"
#include "oracles.hpp"

using namespace ftsnd;

namespace {

SetSystem fano() { return SetSystem::from_points(7, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}}); }

SetSystem from_masks(std::size_t m, const std::vector<std::uint64_t>& masks) {
  SetSystem s(m);
  for (auto x : masks) s.add(Block::from_mask(m, x));
  return s;
}

}  // namespace

TEST(BitVector, WideVectorsSpanWords) {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.count(), 3u);
  EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 64, 129}));
  const auto c = v.complement();
  EXPECT_EQ(c.count(), 127u);
  EXPECT_FALSE(c.intersects(v));
  EXPECT_EQ((c | v).count(), 130u);
  EXPECT_THROW(v.set(130), usage_error);
}

TEST(Block, CardinalityMatchesPopcount) {
  const auto b = Block::from_points(70, {1, 5, 64, 65, 70});
  EXPECT_EQ(b.cardinality(), 5u);
  EXPECT_TRUE(b.contains(65));
  EXPECT_FALSE(b.contains(2));
  EXPECT_FALSE(b.contains(0));
  EXPECT_THROW(Block::from_points(4, {5}), usage_error);
  EXPECT_THROW(Block::from_points(4, {0}), usage_error);
}

TEST(Block, LexicographicOrder) {
  const auto a = Block::from_points(4, {1, 2});
  const auto b = Block::from_points(4, {1, 2, 3});
  const auto c = Block::from_points(4, {1, 3});
  const auto d = Block::from_points(4, {2});
  EXPECT_LT(Block(4), a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_LT(c, d);
}

TEST(IncidenceVector, Examples) {
  EXPECT_EQ(incidence_vector(Block::from_points(4, {1, 3})).to_string(), "1010");
  EXPECT_EQ(incidence_vector(Block(5)).to_string(), "00000");
  EXPECT_EQ(incidence_vector(Block::full(3)).to_string(), "111");
}

TEST(IncidenceVector, SupportIsTheBlock) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto b = Block::from_mask(6, mask);
    EXPECT_EQ(incidence_vector(b).support(), b.points());
  }
}

TEST(HammingDistance, Examples) {
  EXPECT_EQ(hamming_distance(BinaryWord::parse("1010"), BinaryWord::parse("1010")), 0u);
  EXPECT_EQ(hamming_distance(BinaryWord::parse("1100"), BinaryWord::parse("0011")), 4u);
  EXPECT_THROW(hamming_distance(BinaryWord::parse("10"), BinaryWord::parse("100")), usage_error);
}

TEST(HammingDistance, EqualsSymmetricDifferenceExhaustiveUpTo6) {
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t u = 0; u < (1u << n); ++u) {
      for (std::uint64_t v = 0; v < (1u << n); ++v) {
        const auto a = Block::from_mask(n, u);
        const auto b = Block::from_mask(n, v);
        const auto sym = a.minus_size(b) + b.minus_size(a);
        ASSERT_EQ(hamming_distance(incidence_vector(a), incidence_vector(b)), sym);
        ASSERT_EQ(sym, static_cast<std::size_t>(oracle::minus(u, v, n) + oracle::minus(v, u, n)));
      }
    }
  }
}

TEST(HammingDistance, EqualsSymmetricDifferenceSampledUpTo10) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    const std::uint64_t u = rng() & ((1u << n) - 1), v = rng() & ((1u << n) - 1);
    const auto a = Block::from_mask(n, u), b = Block::from_mask(n, v);
    ASSERT_EQ(hamming_distance(incidence_vector(a), incidence_vector(b)), static_cast<std::size_t>(oracle::size_of(u ^ v)));
  }
}

TEST(Dual, SingleBlock) {
  const auto d = dual(SetSystem::from_points(2, {{1, 2}}));
  EXPECT_EQ(d.order(), 1u);
  EXPECT_EQ(d, SetSystem::from_points(1, {{1}, {1}}));
}

TEST(Dual, FanoIsSymmetric) {
  const auto d = dual(fano());
  EXPECT_EQ(d.order(), 7u);
  EXPECT_EQ(d.size(), 7u);
  EXPECT_TRUE(is_t_design(d, {2, 7, 3, 1}));
}

TEST(Dual, TransposeAndInvolutionOnRandomSystems) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
    SetSystem s(m);
    for (std::size_t i = 0; i < n; ++i) s.add(Block::from_mask(m, rng() & ((1u << m) - 1)));
    const auto d = dual(s);
    const auto a = incidence_matrix(s);
    const auto b = incidence_matrix(d);
    ASSERT_EQ(b.size(), m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) ASSERT_EQ(a[i][j], b[j][i]);
    }
    ASSERT_EQ(dual(d), s);
  }
}

TEST(MinOneSidedDifference, Examples) {
  EXPECT_EQ(min_one_sided_difference(SetSystem::from_points(4, {{1, 2}, {3, 4}})), 2u);
  EXPECT_EQ(min_one_sided_difference(SetSystem::from_points(3, {{1, 2, 3}, {1, 2}})), 0u);
  EXPECT_EQ(min_one_sided_difference(fano()), 2u);
}

TEST(MinOneSidedDifference, SentinelForFewerThanTwoBlocks) {
  EXPECT_EQ(min_one_sided_difference(SetSystem(5)), 6u);
  EXPECT_EQ(min_one_sided_difference(SetSystem::from_points(5, {{1}})), 6u);
}

TEST(MinOneSidedDifference, DuplicatesViolateEveryBound) {
  const auto s = SetSystem::from_points(4, {{1, 2}, {3, 4}, {1, 2}});
  EXPECT_EQ(min_one_sided_difference(s), 0u);
  EXPECT_FALSE(is_antichain(s));
  const auto p = find_violating_pair(s, 1);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->first, 0u);
  EXPECT_EQ(p->second, 2u);
}

TEST(IsAntichain, Examples) {
  EXPECT_TRUE(is_antichain(middle_layer(4)));
  EXPECT_FALSE(is_antichain(SetSystem::from_points(2, {{1}, {1, 2}})));
}

TEST(IsAntichain, AgreesWithIncomparabilityOracleOnAllOrder4Systems) {
  for (std::uint32_t fam = 0; fam < (1u << 16); ++fam) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t b = 0; b < 16; ++b) {
      if ((fam >> b) & 1) masks.push_back(b);
    }
    const auto s = from_masks(4, masks);
    const bool expect = oracle::antichain(masks, 4);
    ASSERT_EQ(is_antichain(s), expect) << fam;
    ASSERT_EQ(is_antichain(s), min_one_sided_difference(s) >= 1) << fam;
  }
}

TEST(IsDiffbounded, AgreesWithOracleOnRandomSystems) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 9);
    const int n = static_cast<int>(rng() % 7);
    std::vector<std::uint64_t> masks;
    for (int i = 0; i < n; ++i) masks.push_back(rng() & ((1u << m) - 1));
    const auto s = from_masks(m, masks);
    for (int d = 0; d <= 4; ++d) ASSERT_EQ(is_diffbounded(s, d), oracle::diffbounded(masks, d, m));
  }
}

TEST(IsTDesign, Fano) {
  EXPECT_TRUE(is_t_design(fano(), {2, 7, 3, 1}));
  EXPECT_FALSE(is_t_design(fano(), {2, 7, 3, 2}));
  EXPECT_TRUE(is_t_design(fano(), {1, 7, 3, 3}));
}

TEST(IsTDesign, HadamardDesignForOneFault) {
  EXPECT_TRUE(is_t_design(hadamard_design(1), {2, 7, 3, 1}));
}

TEST(IsTDesign, RejectsNonUniformAndWrongOrder) {
  EXPECT_FALSE(is_t_design(SetSystem::from_points(3, {{1, 2}, {3}}), {1, 3, 2, 1}));
  EXPECT_FALSE(is_t_design(fano(), {2, 8, 3, 1}));
  EXPECT_THROW(is_t_design(fano(), {4, 7, 3, 1}), usage_error);
}

TEST(IsTDesign, SizeIdentityAndDerivedLambdas) {
  struct Case {
    SetSystem s;
    std::size_t t, v, k;
  };
  const std::vector<Case> cases = {{fano(), 2, 7, 3}, {steiner_system(3, 4, 8), 3, 8, 4}};
  for (const auto& c : cases) {
    ASSERT_TRUE(is_t_design(c.s, {c.t, c.v, c.k, 1}));
    EXPECT_EQ(c.s.size(), binomial(c.v, c.t) / binomial(c.k, c.t));
    for (std::size_t sp = 0; sp <= c.t; ++sp) {
      const auto num = binomial(c.v - sp, c.t - sp);
      const auto den = binomial(c.k - sp, c.t - sp);
      ASSERT_EQ(num % den, 0u);
      if (sp == 0) continue;
      EXPECT_TRUE(is_t_design(c.s, {sp, c.v, c.k, num / den})) << "s' = " << sp;
    }
  }
}

TEST(IsTDesign, UniformIntersectionGivesDifference) {
  // Blocks of a symmetric design pairwise meet in lambda points.
  for (std::size_t e = 0; e <= 3; ++e) {
    const auto d = hadamard_design(e);
    EXPECT_EQ(min_one_sided_difference(d), (2 * e + 1) - e);
  }
  EXPECT_EQ(min_one_sided_difference(fano()), 3u - 1u);
}

TEST(Codes, ExampleBijection) {
  const auto s = system_from_code({BinaryWord::parse("1100"), BinaryWord::parse("0011")});
  EXPECT_EQ(s, SetSystem::from_points(4, {{1, 2}, {3, 4}}));
  EXPECT_THROW(system_from_code({BinaryWord::parse("11"), BinaryWord::parse("011")}), usage_error);
  EXPECT_EQ(system_from_code({}).size(), 0u);
}

TEST(Codes, RoundTripOnRandomCodes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<BinaryWord> code;
    for (std::size_t i = 0, c = rng() % 9; i < c; ++i) code.emplace_back(BitVector::from_mask(n, rng() & ((1u << n) - 1)));
    if (code.empty()) continue;
    EXPECT_EQ(code_from_system(system_from_code(code)), code);
    const auto s = system_from_code(code);
    EXPECT_EQ(system_from_code(code_from_system(s)), s);
  }
}

TEST(Codes, ConstantWeightDistanceFourCodeIsTwoDiffbounded) {
  const auto code = greedy_constant_weight(8, 2, 4);
  ASSERT_GE(code.size(), 2u);
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) ASSERT_GE(hamming_distance(code[i], code[j]), 4u);
  }
  EXPECT_GE(min_one_sided_difference(system_from_code(code)), 2u);
}

TEST(Canonical, SortsBlocks) {
  const auto s = SetSystem::from_points(4, {{3, 4}, {1, 2}, {2}});
  EXPECT_EQ(canonical(s), SetSystem::from_points(4, {{1, 2}, {2}, {3, 4}}));
}

TEST(SetSystem, RejectsForeignGroundSet) {
  SetSystem s(3);
  EXPECT_THROW(s.add(Block(4)), usage_error);
  EXPECT_THROW(SetSystem(3, {Block(2)}), usage_error);
}

TEST(Combinatorics, BinomialAndSubsets) {
  EXPECT_EQ(binomial(16, 8), 12870u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(-1, 0), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534u);
  EXPECT_THROW(binomial(70, 35), std::overflow_error);
  EXPECT_EQ(subsets_lex(4, 2), (std::vector<std::uint64_t>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100}));
  EXPECT_EQ(subsets_colex(4, 2), (std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100}));
  EXPECT_EQ(subsets_lex(5, 0), (std::vector<std::uint64_t>{0}));
}

TEST(Combinatorics, RationalArithmetic) {
  const Rational r(6435, 57);
  EXPECT_EQ(r.floor(), 112u);
  EXPECT_EQ(r.ceil(), 113u);
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::exception);
}
