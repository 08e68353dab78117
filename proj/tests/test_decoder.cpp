#include <gtest/gtest.h>

#include <random>

#include "ftsnd/constructors.hpp"
#include "ftsnd/decoder.hpp"
#include "oracles.hpp"

using namespace ftsnd;

namespace {

Decoder from_masks(std::size_t m, const std::vector<oracle::Mask>& masks) {
  SetSystem s(m);
  for (auto x : masks) s.add(Block::from_mask(m, x));
  return Decoder(s);
}

Decoder fano() { return Decoder(steiner_system(2, 3, 7)); }

}  // namespace

TEST(Addressed, Examples) {
  const auto d = Decoder(SetSystem::from_points(2, {{1}, {2}}));
  EXPECT_EQ(addressed(d, ActivationPattern::of(2, {2})), std::vector<std::size_t>{0});
  EXPECT_EQ(addressed(d, ActivationPattern::of(2, {})), (std::vector<std::size_t>{0, 1}));
  const auto e = Decoder(SetSystem::from_points(3, {{1}, {}, {2, 3}, {}}));
  EXPECT_EQ(addressed(e, {Block::full(3)}), (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(addressed(e, ActivationPattern::of(2, {1})), usage_error);
}

TEST(IndependentlyAddressable, Examples) {
  const auto mid = Decoder(middle_layer(6));
  for (std::size_t i = 0; i < mid.nanowires(); ++i) EXPECT_TRUE(independently_addressable(mid, i));
  const auto chain = Decoder(SetSystem::from_points(2, {{1}, {1, 2}}));
  EXPECT_TRUE(independently_addressable(chain, 0));
  EXPECT_FALSE(independently_addressable(chain, 1));
  EXPECT_FALSE(all_independently_addressable(chain));
  EXPECT_TRUE(all_independently_addressable(fano()));
  EXPECT_THROW(independently_addressable(chain, 2), usage_error);
  EXPECT_THROW(independently_addressable_exhaustive(chain, 2), usage_error);
}

// Every system on [4] without repeated blocks: 2^16 of them.
TEST(AddressabilityEquivalence, ExhaustiveOrderFour) {
  const int m = 4;
  std::size_t disagreements = 0;
  for (std::uint32_t family = 0; family < (1u << 16); ++family) {
    std::vector<oracle::Mask> masks;
    for (oracle::Mask b = 0; b < 16; ++b) {
      if ((family >> b) & 1) masks.push_back(b);
    }
    const auto d = from_masks(m, masks);
    bool every = true;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const bool ex = oracle::addressable_exhaustive(masks, i, m);
      every = every && ex;
      if (ex != independently_addressable(d, i) || ex != independently_addressable_exhaustive(d, i)) ++disagreements;
    }
    const bool anti = oracle::antichain(masks, m);
    if (anti != every || anti != all_independently_addressable(d) || anti != all_independently_addressable_by_witness(d)) {
      ++disagreements;
    }
  }
  EXPECT_EQ(disagreements, 0u);
}

TEST(AddressabilityEquivalence, RandomDecodersUpToOrderEight) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 8);
    std::vector<oracle::Mask> masks(1 + rng() % 10);
    for (auto& x : masks) x = rng() & ((oracle::Mask{1} << m) - 1);
    const auto d = from_masks(m, masks);
    bool every = true;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const bool ex = oracle::addressable_exhaustive(masks, i, m);
      every = every && ex;
      ASSERT_EQ(ex, independently_addressable(d, i));
    }
    ASSERT_EQ(every, oracle::antichain(masks, m));
    ASSERT_EQ(every, all_independently_addressable(d));
  }
}

TEST(WitnessSoundness, ComplementAddressesExactlyI) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    std::vector<oracle::Mask> masks(1 + rng() % 6);
    for (auto& x : masks) x = rng() & ((oracle::Mask{1} << m) - 1);
    const auto d = from_masks(m, masks);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (independently_addressable(d, i)) {
        ASSERT_TRUE(addresses_exactly(d, addressing_witness(d, i), i));
      }
    }
  }
}

TEST(ApplyFaults, Examples) {
  const auto d = Decoder(SetSystem::from_points(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(apply_faults(d, {{0, 2}}), Decoder(SetSystem::from_points(4, {{1}, {3, 4}})));
  EXPECT_EQ(apply_faults(d, {}), d);
  EXPECT_EQ(d.system()[0].cardinality(), 2u);
  try {
    apply_faults(d, {{0, 3}});
    FAIL();
  } catch (const usage_error& e) {
    EXPECT_NE(std::string(e.what()).find("nanowire 1, mesowire 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(apply_faults(d, {{5, 1}}), usage_error);
  EXPECT_THROW(apply_faults(d, {{0, 1}, {0, 1}}), usage_error);
}

TEST(ApplyFaults, HadamardDecoderSurvivesEverySingleFault) {
  const auto d = hadamard_ftsnd(1);
  for (std::size_t i = 0; i < d.nanowires(); ++i) {
    for (auto p : d.system()[i].points()) EXPECT_TRUE(all_independently_addressable(apply_faults(d, {{i, p}})));
  }
}

TEST(Bruteforce, Examples) {
  const auto one = Decoder(SetSystem::from_points(5, {{1, 2, 3}}));
  for (std::size_t e = 0; e < 5; ++e) EXPECT_TRUE(tolerates_errors_bruteforce(one, e));
  const auto pair = Decoder(SetSystem::from_points(4, {{1, 2}, {3, 4}}));
  EXPECT_TRUE(tolerates_errors_bruteforce(pair, 1));
  EXPECT_FALSE(tolerates_errors_bruteforce(pair, 2));
  EXPECT_TRUE(tolerates_errors_bruteforce(fano(), 1));
  EXPECT_FALSE(tolerates_errors_bruteforce(fano(), 2));
}

TEST(Bruteforce, CapIsEnforced) {
  const auto d = Decoder(middle_layer(8));
  EXPECT_THROW(tolerates_errors_bruteforce(d, 3, {.max_fault_sets = 1000}), usage_error);
  EXPECT_TRUE(tolerates_errors_bruteforce(Decoder(steiner_system(2, 3, 7)), 1, {.max_fault_sets = 22}));
  EXPECT_THROW(tolerates_errors_bruteforce(Decoder(steiner_system(2, 3, 7)), 1, {.max_fault_sets = 21}), usage_error);
}

// All multisets of at most 4 blocks over [m], m <= 5, against e in {0,1,2}.
TEST(FaultToleranceEquivalence, ExhaustiveSmallSystems) {
  std::size_t checked = 0, disagreements = 0;
  for (int m = 1; m <= 5; ++m) {
    const oracle::Mask top = oracle::Mask{1} << m;
    std::vector<oracle::Mask> masks;
    auto rec = [&](auto&& self, oracle::Mask from) -> void {
      const auto d = from_masks(m, masks);
      for (std::size_t e = 0; e <= 2; ++e) {
        ++checked;
        const bool a = is_ftsnd(d, e);
        if (a != tolerates_errors_bruteforce(d, e)) ++disagreements;
        if (a != (masks.size() < 2 || oracle::diffbounded(masks, static_cast<int>(e) + 1, m))) ++disagreements;
      }
      if (masks.size() == 4) return;
      for (oracle::Mask b = from; b < top; ++b) {
        masks.push_back(b);
        self(self, b);
        masks.pop_back();
      }
    };
    rec(rec, 0);
  }
  EXPECT_GT(checked, 150000u);
  EXPECT_EQ(disagreements, 0u);
}

TEST(IsFtsnd, ExamplesAndMonotonicity) {
  EXPECT_TRUE(is_ftsnd(fano(), 1));
  EXPECT_FALSE(is_ftsnd(fano(), 2));
  EXPECT_TRUE(is_ftsnd(Decoder(SetSystem(3)), 9));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 2 + rng() % 9;
    std::vector<oracle::Mask> masks(2 + rng() % 4);
    for (auto& x : masks) x = rng() & ((oracle::Mask{1} << m) - 1);
    const auto d = from_masks(m, masks);
    for (std::size_t e = 0; e <= m; ++e) {
      if (is_ftsnd(d, e)) {
        for (std::size_t ep = 0; ep < e; ++ep) ASSERT_TRUE(is_ftsnd(d, ep));
      }
    }
  }
}

TEST(Resistance, CountsActiveControllers) {
  const auto d = Decoder(SetSystem::from_points(4, {{1, 2, 3}, {4}}));
  EXPECT_EQ(resistance_units(d, ActivationPattern::of(4, {1, 3, 4}), 0), 2u);
  EXPECT_EQ(resistance_units(d, ActivationPattern::of(4, {1, 3}), 1), 0u);
  EXPECT_THROW(resistance_units(d, ActivationPattern::of(4, {}), 2), usage_error);
}
