#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "permlab/chain_sampler.hpp"
#include "permlab/errors.hpp"
#include "permlab/tree_density.hpp"

using namespace permlab;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST(Inflation, ValueExamples) {
  EXPECT_EQ(inflate_at_value(P("1"), 1, Sign::Plus), P("12"));
  EXPECT_EQ(inflate_at_value(P("12"), 1, Sign::Minus), P("213"));
  EXPECT_EQ(inflate_at_value(P("132"), 2, Sign::Plus), P("1423"));
  EXPECT_THROW(inflate_at_value(P("12"), 3, Sign::Plus), PreconditionError);
  EXPECT_THROW(inflate_at_value(P("12"), 0, Sign::Plus), PreconditionError);
}

TEST(Inflation, PositionExamples) {
  EXPECT_EQ(inflate_at_position(P("12"), 1, Sign::Minus), P("213"));
  EXPECT_EQ(inflate_at_position(P("21"), 2, Sign::Plus), P("312"));
  EXPECT_THROW(inflate_at_position(P("21"), 3, Sign::Plus), PreconditionError);
}

TEST(Inflation, EitherCopyRestoresTheOriginal) {
  for (const auto& tau : all_permutations(5))
    for (int k = 1; k <= 5; ++k)
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const auto big = inflate_at_position(tau, k, s);
        EXPECT_EQ(remove_point(big, k), tau);
        EXPECT_EQ(remove_point(big, k + 1), tau);
        EXPECT_EQ(big, inflate_at_value(tau, tau(k), s));
      }
}

TEST(ComposeSplit, Examples) {
  EXPECT_EQ(compose_split(P("1"), P("1"), Sign::Plus), P("12"));
  EXPECT_EQ(compose_split(P("21"), P("1"), Sign::Minus), P("321"));
}

TEST(ChainSampler, SizeOneIsTrivial) {
  auto out = sample_chain(ChainConfig{0.3, 1, 1});
  EXPECT_EQ(out.sigma, P("1"));
  EXPECT_EQ(out.history.leaf_count(), 1);
  EXPECT_TRUE(out.history.node(out.history.root()).is_leaf());
}

TEST(ChainSampler, RejectsBadConfig) {
  EXPECT_THROW(sample_chain(ChainConfig{0.0, 1, 3}), PreconditionError);
  EXPECT_THROW(sample_chain(ChainConfig{1.0, 1, 3}), PreconditionError);
  EXPECT_THROW(sample_chain(ChainConfig{0.5, 1, 0}), PreconditionError);
}

TEST(ChainSampler, DeterministicGivenSeed) {
  const ChainConfig cfg{0.4, 99, 40};
  EXPECT_EQ(sample_chain(cfg).sigma, sample_chain(cfg).sigma);
  EXPECT_EQ(sample_chain(cfg).history.to_string(), sample_chain(cfg).history.to_string());
}

TEST(ChainSampler, HistoryTreeInvariants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 30);
    const auto out = sample_chain(ChainConfig{0.37, seed, n});
    out.history.validate();
    EXPECT_TRUE(out.history.is_increasing());
    EXPECT_EQ(out.history.internal_count(), n - 1);
    EXPECT_EQ(perm_of_tree(out.history), out.sigma);
    EXPECT_EQ(out.history.count_sign(Sign::Minus), descents(out.sigma));
    EXPECT_TRUE(is_separable(out.sigma));
  }
}

TEST(ChainSampler, PermOnlyPathMatchesFullPath) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed), b(seed);
    EXPECT_EQ(sample_chain(60, 0.6, a).sigma, sample_chain_perm(60, 0.6, b));
  }
}

TEST(ChainSampler, SizeTwoFrequency) {
  const double p = 0.3;
  const int reps = 100000;
  int up = 0;
  for (int s = 0; s < reps; ++s) {
    Rng rng = Rng::stream(2024, static_cast<std::uint64_t>(s));
    up += sample_chain_perm(2, p, rng) == P("12");
  }
  const double sd = std::sqrt(p * (1 - p) / reps);
  EXPECT_NEAR(static_cast<double>(up) / reps, p, 3 * sd);
}

TEST(ChainSampler, SizeThreeHalf) {
  const int reps = 200000;
  int hits = 0;
  for (int s = 0; s < reps; ++s) {
    Rng rng = Rng::stream(77, static_cast<std::uint64_t>(s));
    hits += sample_chain_perm(3, 0.5, rng) == P("132");
  }
  const double q = 1.0 / 8;
  EXPECT_NEAR(static_cast<double>(hits) / reps, q, 3 * std::sqrt(q * (1 - q) / reps));
}

TEST(ChainSampler, BatchIndependentOfThreads) {
  const ChainConfig cfg{0.45, 5, 25};
  const auto one = sample_chain_batch(cfg, 200, 1);
  const auto four = sample_chain_batch(cfg, 200, 4);
  EXPECT_EQ(one, four);
}

TEST(CographChain, SmallCases) {
  EXPECT_EQ(sample_cograph_chain(ChainConfig{0.5, 3, 1}).size(), 1);
  const double p = 0.35;
  const int reps = 100000;
  int edges = 0;
  for (int s = 0; s < reps; ++s) {
    Rng rng = Rng::stream(31, static_cast<std::uint64_t>(s));
    edges += sample_cograph_chain(2, p, rng).edge_count();
  }
  EXPECT_NEAR(static_cast<double>(edges) / reps, 1 - p, 3 * std::sqrt(p * (1 - p) / reps));
}

TEST(CographChain, NeverContainsP4) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    Rng rng(s);
    const auto g = sample_cograph_chain(4 + static_cast<int>(s % 8), 0.5, rng);
    EXPECT_FALSE(has_induced_p4(g));
  }
}
