#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "permlab/brownian_baseline.hpp"
#include "permlab/errors.hpp"
#include "permlab/order_construction.hpp"
#include "permlab/permuton_ops.hpp"

using namespace permlab;

namespace {

std::vector<int> peaks_of(const DiscreteExcursion& e) {
  std::vector<int> out;
  for (int v = 1; v < 2 * e.m; ++v)
    if (e.height[v - 1] < e.height[v] && e.height[v + 1] < e.height[v]) out.push_back(v);
  return out;
}

DiscreteExcursion with_signs(DiscreteExcursion e, Sign s) {
  for (auto& x : e.signs) x = s;
  return e;
}

}  // namespace

TEST(Excursion, UnitLength) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto e = sample_excursion(1, 0.5, rng);
    EXPECT_EQ(e.steps, (std::vector<int>{1, -1}));
    EXPECT_TRUE(e.minima.empty());
    EXPECT_EQ(brownian_permutation(e), Permutation::identity(1));
  }
}

TEST(Excursion, CatalanUniform) {
  Rng rng(2);
  std::map<std::vector<int>, int> seen;
  const int N = 50000;
  for (int t = 0; t < N; ++t) {
    const auto e = sample_excursion(3, 0.5, rng);
    e.validate();
    ++seen[e.steps];
  }
  ASSERT_EQ(seen.size(), 5u);
  for (const auto& [path, c] : seen) EXPECT_NEAR(c / double(N), 0.2, 4 * std::sqrt(0.16 / N));
}

TEST(Excursion, ValidInvariants) {
  Rng rng(3);
  for (int m : {2, 5, 40, 1000}) {
    const auto e = sample_excursion(m, 0.3, rng);
    e.validate();
    EXPECT_EQ(e.minima.size(), e.signs.size());
    EXPECT_EQ(peaks_of(e).size(), e.minima.size() + 1);
  }
  EXPECT_THROW(sample_excursion(0, 0.5, rng), PreconditionError);
  DiscreteExcursion bad;
  bad.m = 1;
  bad.steps = {-1, 1};
  bad.height = {0, -1, 0};
  EXPECT_THROW(bad.validate(), StructuralError);
}

TEST(BrownianOrder, SingleMinimum) {
  DiscreteExcursion e;
  e.m = 2;
  e.steps = {1, -1, 1, -1};
  e.height = {0, 1, 0, 1, 0};
  e.minima = {2};
  e.signs = {Sign::Plus};
  e.validate();
  EXPECT_EQ(brownian_order(e, 1, 3), Comparison::Before);
  EXPECT_EQ(brownian_order(e, 3, 1), Comparison::After);
  EXPECT_EQ(brownian_permutation(e), Permutation::parse("12"));
  e.signs = {Sign::Minus};
  EXPECT_EQ(brownian_order(e, 1, 3), Comparison::After);
  EXPECT_EQ(brownian_permutation(e), Permutation::parse("21"));
  // argmin at an endpoint
  EXPECT_EQ(brownian_order(e, 1, 2), Comparison::Incomparable);
  EXPECT_EQ(brownian_order(e, 0, 3), Comparison::Incomparable);
}

TEST(BrownianOrder, ConstantSigns) {
  Rng rng(4);
  const auto e = sample_excursion(200, 0.5, rng);
  const auto plus = brownian_permutation(with_signs(e, Sign::Plus));
  const auto minus = brownian_permutation(with_signs(e, Sign::Minus));
  EXPECT_EQ(plus, Permutation::identity(plus.size()));
  EXPECT_EQ(minus, Permutation::reversed(minus.size()));
  const auto pk = peaks_of(e);
  const auto ep = with_signs(e, Sign::Plus);
  for (std::size_t a = 0; a + 1 < pk.size(); a += 7)
    EXPECT_EQ(brownian_order(ep, pk[a], pk[a + 1]), Comparison::Before);
}

TEST(BrownianOrder, TotalOrderOnSmallPaths) {
  Rng rng(5);
  for (int m = 2; m <= 10; ++m)
    for (int rep = 0; rep < 30; ++rep) {
      const auto e = sample_excursion(m, 0.5, rng);
      const auto pk = peaks_of(e);
      const int q = static_cast<int>(pk.size());
      auto before = [&](int a, int b) { return brownian_order(e, pk[a], pk[b]) == Comparison::Before; };
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          if (a == b) continue;
          EXPECT_NE(before(a, b), before(b, a));
          for (int c = 0; c < q; ++c)
            if (c != a && c != b && before(a, b) && before(b, c)) EXPECT_TRUE(before(a, c));
        }
    }
}

TEST(BrownianOrder, PermutationMatchesPairwiseOrder) {
  Rng rng(6);
  for (int rep = 0; rep < 50; ++rep) {
    const auto e = sample_excursion(60, 0.4, rng);
    const auto pk = peaks_of(e);
    const auto direct = perm_of_points(static_cast<int>(pk.size()),
                                       [&](int a, int b) { return brownian_order(e, pk[a], pk[b]); });
    EXPECT_EQ(brownian_permutation(e), direct);
  }
}

TEST(BrownianPermutation, Separable) {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) EXPECT_TRUE(is_separable(brownian_permutation(sample_excursion(100, 0.5, rng))));
  const auto big = brownian_permutation(sample_excursion(4000, 0.5, rng));
  std::map<Permutation, int> freq;
  for (int t = 0; t < 20000; ++t) ++freq[sample_pattern(big, 4, rng)];
  EXPECT_EQ(freq[Permutation::parse("3142")], 0);
  EXPECT_EQ(freq[Permutation::parse("2413")], 0);
}

TEST(DnStatistic, InversionFrequencyAtTwo) {
  // k = 2: des/(k-1) is the indicator of an inversion, mean 1-p on average
  // over realizations
  for (Model model : {Model::Recursive, Model::Brownian}) {
    double s = 0.0;
    const int R = 40;
    for (int r = 0; r < R; ++r) s += dn_statistic(model, 0.3, 2000, 2, 2000, 100 + r).value;
    EXPECT_NEAR(s / R, 0.7, 0.05);
  }
}

TEST(DnStatistic, Errors) {
  EXPECT_THROW(dn_statistic(Model::Recursive, 0.3, 10, 1, 10, 1), PreconditionError);
  EXPECT_THROW(dn_statistic(Model::Recursive, 0.3, 10, 3, 0, 1), PreconditionError);
}

TEST(Corners, Detection) {
  const auto id = Permutation::identity(10);
  EXPECT_TRUE(corner_bl(id, 0.15));
  EXPECT_FALSE(corner_tl(id, 0.15));
  const auto rev = Permutation::reversed(10);
  EXPECT_FALSE(corner_bl(rev, 0.15));
  EXPECT_TRUE(corner_tl(rev, 0.15));
  EXPECT_FALSE(corner_bl(Permutation::parse("2413"), 0.2));
}

TEST(Corners, HalfSquareAlmostSure) {
  const auto rec = corner_events(Model::Recursive, 0.5, 0.49, 500, 200, 1);
  const auto br = corner_events(Model::Brownian, 0.5, 0.49, 500, 200, 1);
  EXPECT_GT(rec.bl, 0.9);
  EXPECT_GT(br.bl, 0.9);
  EXPECT_THROW(corner_events(Model::Recursive, 0.5, 0.5, 10, 1, 1), PreconditionError);
}

TEST(Corners, ThreadCountDoesNotMatter) {
  const auto a = corner_events(Model::Brownian, 0.4, 0.1, 300, 64, 9, 1);
  const auto b = corner_events(Model::Brownian, 0.4, 0.1, 300, 64, 9, 4);
  EXPECT_EQ(a.bl, b.bl);
  EXPECT_EQ(a.tl, b.tl);
  EXPECT_EQ(a.both, b.both);
}
