#include <gtest/gtest.h>

#include <random>

#include "cstar/bmy_checker.hpp"
#include "cstar/generators.hpp"
#include "oracles.hpp"

using namespace cstar;

namespace {

BMYComponent chain_comp(Int d) { return {d, ContractibilityClass::AdmissibleChain}; }

}  // namespace

TEST(LocalGroup, Chains) {
  EXPECT_EQ(local_group_order(chain_comp(2)), 2);
  WeightedTree t;
  t.add_vertex(0, -3);
  for (int i = 1; i <= 12; ++i) {
    t.add_vertex(i, -2);
    t.add_edge(i - 1, i);
  }
  EXPECT_EQ(local_group_order(t, t.ids()), 27);
}

TEST(LocalGroup, ForksUnsupported) {
  EXPECT_THROW(local_group_order(BMYComponent{24, ContractibilityClass::Fork233}),
               BMYUnsupported);
  EXPECT_THROW(local_group_order(BMYComponent{0, ContractibilityClass::NotContractible}),
               BMYError);
}

TEST(CheckBMY, FourChainsContradiction) {
  BMYInstance inst{-1, {chain_comp(2), chain_comp(5), chain_comp(27), chain_comp(9)}, 0};
  auto rep = check_bmy(inst);
  EXPECT_EQ(rep.sum_inverse_orders, Rat(229, 270));
  EXPECT_EQ(rep.rhs, 3 * (Rat(-1) + Rat(229, 270)));
  EXPECT_FALSE(rep.holds);
  EXPECT_LT(rep.slack, 0);
}

TEST(CheckBMY, NoComponentsZero) {
  auto rep = check_bmy(BMYInstance{0, {}, 0});
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.slack, 0);
}

TEST(CheckBMY, CapacityBoundFromChiOne) {
  // p^2 = 2 - eps + sum e <= 3 iff sum e <= 1 + eps.
  for (int eps = 0; eps <= 3; ++eps)
    for (int num = 0; num <= 40; ++num) {
      Rat sum_e(num, 8);
      auto rep = check_bmy(BMYInstance{1, {}, Rat(2 - eps) + sum_e});
      EXPECT_EQ(rep.holds, sum_e <= 1 + eps);
    }
}

TEST(CheckBMY, Monotone) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    BMYInstance inst;
    inst.chi_open = uniform(rng, -3, 3);
    int n = int(uniform(rng, 0, 4));
    for (int k = 0; k < n; ++k) inst.components.push_back(chain_comp(uniform(rng, 2, 30)));
    inst.p_squared = Rat(uniform(rng, -10, 20), uniform(rng, 1, 6));
    bool before = check_bmy(inst).holds;
    BMYInstance more = inst;
    more.chi_open += uniform(rng, 0, 2);
    for (auto& c : more.components) c.determinant = uniform(rng, 2, std::int64_t(c.determinant));
    if (before) EXPECT_TRUE(check_bmy(more).holds);
  }
}

TEST(Enumerate414, Cases) {
  using S = Solution414;
  EXPECT_EQ(enumerate_4_14(8, 8), (std::vector<S>{{2, 2, 8}}));
  EXPECT_EQ(enumerate_4_14(6, 6), (std::vector<S>{{2, 2, 6}, {2, 3, 6}, {3, 2, 6}}));
  EXPECT_EQ(enumerate_4_14(6, 8),
            (std::vector<S>{{2, 2, 6}, {2, 3, 6}, {3, 2, 6}, {2, 2, 7}, {2, 2, 8}}) );
  EXPECT_THROW(enumerate_4_14(5, 6), BMYError);
}

TEST(Enumerate414, StableUnderLargerBound) {
  auto base = enumerate_4_14(6, 8, 12);
  EXPECT_EQ(enumerate_4_14(6, 8, 200), base);
  // Direct brute force.
  std::vector<Solution414> brute;
  for (int g = 6; g <= 8; ++g)
    for (int a = 2; a <= 60; ++a)
      for (int b = 2; b <= 60; ++b)
        if (Rat(1, a) + Rat(1, b) + Rat(1, g) >= 1) brute.push_back({a, b, g});
  auto sorted = base;
  auto key = [](const Solution414& s) { return std::tuple(s.gamma, s.d1, s.d2); };
  std::sort(sorted.begin(), sorted.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  std::sort(brute.begin(), brute.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  EXPECT_EQ(sorted, brute);
}

TEST(Fork22n, DeterminantFormula) {
  for (std::int64_t b = 2; b <= 6; ++b) {
    std::vector<std::vector<std::int64_t>> branches{{-2}, {-3}, {-2, -2}, {-3, -2, -4}, {-5, -2}};
    for (const auto& br : branches) {
      WeightedTree t = make_fork_22n(b, br);
      std::vector<std::int64_t> tail(br.begin() + 1, br.end());
      const Int n = oracle::chain_det(br);
      const Int nt = oracle::chain_det(tail);
      EXPECT_EQ(fork_22n_determinant(n, b, nt), oracle::neg_det(t, t.ids()));
      EXPECT_EQ(fork_22n_determinant(n, b, nt), 4 * (n * (b - 1) - nt));
    }
  }
}
