#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cstar/generators.hpp"
#include "cstar/graph_core.hpp"
#include "oracles.hpp"

using namespace cstar;

namespace {

WeightedTree chain_tree(const std::vector<std::int64_t>& w, int first_id = 0) {
  WeightedTree t;
  for (std::size_t i = 0; i < w.size(); ++i) {
    t.add_vertex(first_id + int(i), w[i]);
    if (i > 0) t.add_edge(first_id + int(i) - 1, first_id + int(i));
  }
  return t;
}

std::vector<std::int64_t> rep(std::int64_t w, int n) { return std::vector<std::int64_t>(n, w); }

// Centre 0 with three branches given as chains, listed from the centre outwards.
WeightedTree fork(std::int64_t centre, const std::vector<std::vector<std::int64_t>>& branches) {
  WeightedTree t;
  t.add_vertex(0, centre);
  int id = 1;
  for (const auto& br : branches) {
    int prev = 0;
    for (auto w : br) {
      t.add_vertex(id, w);
      t.add_edge(prev, id);
      prev = id++;
    }
  }
  return t;
}

}  // namespace

TEST(IntersectionMatrix, SingleVertex) {
  WeightedTree t;
  t.add_vertex(7, -2);
  EXPECT_EQ(intersection_matrix(t, {7}), (IntMatrix{{-2}}));
}

TEST(IntersectionMatrix, Path) {
  WeightedTree t = chain_tree({-2, -3});
  EXPECT_EQ(intersection_matrix(t, {0, 1}), (IntMatrix{{-2, 1}, {1, -3}}));
}

TEST(IntersectionMatrix, UnknownIdRejected) {
  WeightedTree t = chain_tree({-2});
  EXPECT_THROW(intersection_matrix(t, {0, 5}), GraphError);
}

TEST(IntersectionMatrix, MatchesEdgeListOracle) {
  std::mt19937_64 rng(11);
  for (int rep_i = 0; rep_i < 50; ++rep_i) {
    WeightedTree t = random_tree(rng, 8, -6, 2);
    auto ids = t.ids();
    auto m = intersection_matrix(t, ids);
    auto o = oracle::matrix_from_edges(t, ids);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j) EXPECT_EQ(Int(m[i][j]), o[i][j]);
  }
}

TEST(Determinant, EmptyIsOne) {
  WeightedTree t = chain_tree({-2});
  EXPECT_EQ(determinant(t, {}), 1);
}

TEST(Determinant, LongChainWithMinusThreeTip) {
  std::vector<std::int64_t> w{-3};
  auto twos = rep(-2, 12);
  w.insert(w.end(), twos.begin(), twos.end());
  EXPECT_EQ(determinant(chain_tree(w)), 27);
  EXPECT_EQ(chain_determinant(w), 27);
}

TEST(Determinant, SingleVertices) {
  for (std::int64_t k : {9, 5, 2}) {
    WeightedTree t;
    t.add_vertex(0, -k);
    EXPECT_EQ(determinant(t), k);
  }
}

TEST(Determinant, TenVertexTreesMatchRationalElimination) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    WeightedTree t = random_tree(rng, 10, -6, 2);
    EXPECT_EQ(determinant(t), oracle::neg_det(t, t.ids()));
  }
}

TEST(Determinant, SmallTreesMatchLaplace) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 7)), -5, 1);
    auto m = oracle::matrix_from_edges(t, t.ids());
    for (auto& row : m)
      for (auto& x : row) x = -x;
    EXPECT_EQ(determinant(t), oracle::laplace(m));
  }
}

TEST(Determinant, ChainCofactorRecurrence) {
  std::mt19937_64 rng(14);
  for (int len = 1; len <= 12; ++len) {
    for (int i = 0; i < 30; ++i) {
      std::vector<std::int64_t> w;
      for (int k = 0; k < len; ++k) w.push_back(uniform(rng, -7, 1));
      const Int d = determinant(chain_tree(w));
      EXPECT_EQ(d, oracle::chain_det(w));
      EXPECT_EQ(d, chain_determinant(w));
      if (len >= 2) {
        std::vector<std::int64_t> t1(w.begin() + 1, w.end());
        std::vector<std::int64_t> t2(w.begin() + std::min<std::ptrdiff_t>(2, len), w.end());
        EXPECT_EQ(d, Int(-w[0]) * chain_determinant(t1) - chain_determinant(t2));
      }
    }
  }
}

TEST(NegativeDefinite, Minors) {
  EXPECT_TRUE(negative_definite({{-2, 1}, {1, -2}}));
  EXPECT_FALSE(negative_definite({{-1, 1}, {1, -1}}));
  EXPECT_FALSE(negative_definite({{0}}));
}

TEST(Capacity, SmallExamples) {
  EXPECT_EQ(chain_capacity({-3}), Rat(1, 3));
  EXPECT_EQ(chain_capacity(rep(-2, 11)), Rat(11, 12));
  for (int tau = 1; tau <= 15; ++tau) EXPECT_EQ(chain_capacity(rep(-2, tau)), Rat(tau, tau + 1));
}

TEST(Capacity, OnTreeChainUsesDesignatedTip) {
  WeightedTree t = chain_tree({-3, -2});
  EXPECT_EQ(capacity(t, Chain{{0, 1}}), Rat(2, 5));
  EXPECT_EQ(capacity(t, Chain{{1, 0}}), Rat(3, 5));
}

TEST(Capacity, NonAdmissibleRejected) {
  EXPECT_THROW(chain_capacity({-2, -1}), GraphError);
}

TEST(Capacity, LowerBoundByTipWeight) {
  // Every admissible chain of length <= 5 with weights in [-6,-2].
  for (int len = 1; len <= 5; ++len) {
    std::vector<std::int64_t> w(len, -2);
    for (;;) {
      Rat e = chain_capacity(w);
      EXPECT_GT(e, 0);
      EXPECT_LT(e, 1);
      EXPECT_GE(e, Rat(1, -w[0]));
      EXPECT_EQ(e, oracle::capacity(w));
      std::size_t k = 0;
      while (k < w.size() && w[k] == -6) w[k++] = -2;
      if (k == w.size()) break;
      --w[k];
    }
  }
}

TEST(Twigs, ChainHasNoTwigs) {
  WeightedTree t = chain_tree({-2, -3, -2});
  EXPECT_TRUE(maximal_twigs(t).empty());
  EXPECT_TRUE(bark_divisor(t).empty());
}

TEST(Bark, NoTwigsIsZero) {
  WeightedTree t = chain_tree({-2, -2});
  t.add_vertex(9, -3, Tag::E);
  t.add_edge(9, 0);
  t.add_edge(9, 1);
  // A cycle through E: no tips, so no twigs.
  EXPECT_TRUE(maximal_twigs(t).empty());
  EXPECT_EQ(self_intersection(t, bark_divisor(t)), 0);
}

TEST(Bark, MinusTwoTipOnBranchingVertex) {
  WeightedTree t = fork(-3, {{-2}, {-3}, {-4}});
  auto bk = bark_divisor(t);
  ASSERT_TRUE(bk.count(1));
  EXPECT_EQ(bk[1], Rat(1, 2));
  EXPECT_EQ(self_intersection(t, bk), -(Rat(1, 2) + Rat(1, 3) + Rat(1, 4)));
}

TEST(Bark, MinusThreeAndElevenMinusTwos) {
  // Branching vertex carrying a single (-3) twig and a chain of eleven (-2).
  std::vector<std::int64_t> long_twig = rep(-2, 11);
  WeightedTree t = fork(-1, {{-3}, long_twig, {-5, -5}});
  // The third branch is not a twig if it ends in E, so attach E there.
  const int end = int(t.size()) - 1;
  t.add_vertex(100, -4, Tag::E);
  t.add_edge(100, end);
  t.add_edge(100, 0);
  Rat expected = Rat(1, 3) + Rat(11, 12);
  EXPECT_EQ(expected, Rat(5, 4));
  EXPECT_EQ(self_intersection(t, bark_divisor(t)), -expected);
}

TEST(Bark, DefiningEquationsOnRandomTrees) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    WeightedTree t = random_nc_minimal_tree(rng, int(uniform(rng, 2, 12)));
    DivisorQ bk = bark_divisor(t);
    Rat total = 0;
    for (const auto& tw : admissible_maximal_twigs(t)) {
      std::vector<std::int64_t> w;
      for (int v : tw.ids) w.push_back(t.weight(v));
      total += oracle::capacity(w);
      for (int v : tw.ids) {
        Rat lhs = 0;
        for (auto [u, q] : bk) lhs += q * (u == v ? Rat(t.weight(v)) : Rat(t.multiplicity(u, v)));
        EXPECT_EQ(lhs, Rat(t.degree(v) - 2));
      }
    }
    EXPECT_EQ(self_intersection(t, bk), -total);
  }
}

TEST(Classify, AdmissibleChain) {
  WeightedTree t = chain_tree(rep(-2, 5));
  EXPECT_EQ(classify_contractible(t, t.ids()), ContractibilityClass::AdmissibleChain);
}

TEST(Classify, Fork235) {
  // E8: branches of determinant 2, 3, 5.
  WeightedTree t = fork(-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}});
  EXPECT_EQ(classify_contractible(t, t.ids()), ContractibilityClass::Fork235);
  EXPECT_TRUE(negative_definite(intersection_matrix(t, t.ids())));
  EXPECT_EQ(determinant(t), 1);
}

TEST(Classify, OtherForks) {
  EXPECT_EQ(classify_contractible(fork(-2, {{-2}, {-2}, rep(-2, 4)}),
                                  fork(-2, {{-2}, {-2}, rep(-2, 4)}).ids()),
            ContractibilityClass::Fork22n);
  WeightedTree e6 = fork(-2, {{-2}, {-2, -2}, {-2, -2}});
  EXPECT_EQ(classify_contractible(e6, e6.ids()), ContractibilityClass::Fork233);
  WeightedTree e7 = fork(-2, {{-2}, {-2, -2}, {-2, -2, -2}});
  EXPECT_EQ(classify_contractible(e7, e7.ids()), ContractibilityClass::Fork234);
}

TEST(Classify, NotContractible) {
  WeightedTree t;
  t.add_vertex(0, 0);
  EXPECT_EQ(classify_contractible(t, {0}), ContractibilityClass::NotContractible);
  // The extended E8 graph is semi-definite.
  WeightedTree e9 = fork(-2, {{-2}, {-2, -2}, rep(-2, 5)});
  EXPECT_EQ(classify_contractible(e9, e9.ids()), ContractibilityClass::NotContractible);
  // Right branch types, centre too positive.
  WeightedTree bad = fork(-1, {{-2}, {-2, -2}, {-2, -2}});
  EXPECT_EQ(classify_contractible(bad, bad.ids()), ContractibilityClass::NotContractible);
}

TEST(Classify, DisconnectedRejected) {
  WeightedTree t;
  t.add_vertex(0, -2);
  t.add_vertex(1, -2);
  EXPECT_THROW(classify_contractible(t, {0, 1}), GraphError);
}

TEST(Classify, ContractibleImpliesNegativeDefinite) {
  std::mt19937_64 rng(16);
  int hits = 0;
  for (int i = 0; i < 2000; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 9)), -4, -1);
    if (classify_contractible(t, t.ids()) != ContractibilityClass::NotContractible) {
      ++hits;
      EXPECT_TRUE(negative_definite(intersection_matrix(t, t.ids())));
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(Fujita, Shapes) {
  WeightedTree c = chain_tree({-2, -5});
  EXPECT_EQ(classify_fujita_zero(c, c.ids()), FujitaZeroClass::ChainType);
  WeightedTree f333 = fork(-2, {{-3}, {-3}, {-3}});
  EXPECT_EQ(classify_fujita_zero(f333, f333.ids()), FujitaZeroClass::FiniteFork);
  WeightedTree f244 = fork(-2, {{-2}, {-4}, {-4}});
  EXPECT_EQ(classify_fujita_zero(f244, f244.ids()), FujitaZeroClass::FiniteFork);

  // Two branching vertices joined by a chain, each with two (-2) tips.
  WeightedTree t;
  t.add_vertex(0, -3);
  t.add_vertex(1, -4);
  t.add_vertex(2, -3);
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  for (int k = 0; k < 4; ++k) {
    t.add_vertex(10 + k, -2);
    t.add_edge(k < 2 ? 0 : 2, 10 + k);
  }
  EXPECT_EQ(classify_fujita_zero(t, t.ids()), FujitaZeroClass::TwoBranchFourTips);
  t.set_weight(13, -3);
  EXPECT_EQ(classify_fujita_zero(t, t.ids()), FujitaZeroClass::None);
}

TEST(BlowUp, EdgeSite) {
  WeightedTree t = chain_tree({-2, -4});
  auto r = blow_up(t, BlowupSite::edge(0, 1));
  EXPECT_EQ(r.kind, RewriteKind::Subdivisional);
  EXPECT_EQ(r.tree.weight(0), -3);
  EXPECT_EQ(r.tree.weight(1), -5);
  EXPECT_EQ(r.tree.weight(r.new_id), -1);
  EXPECT_EQ(r.tree.multiplicity(0, 1), 0);
  EXPECT_EQ(r.tree.multiplicity(0, r.new_id), 1);
  EXPECT_EQ(r.tree.multiplicity(1, r.new_id), 1);
}

TEST(BlowUp, VertexSite) {
  WeightedTree t;
  t.add_vertex(0, 0);
  auto r = blow_up(t, BlowupSite::vertex(0));
  EXPECT_EQ(r.kind, RewriteKind::Sprouting);
  EXPECT_EQ(r.tree.weight(0), -1);
  EXPECT_EQ(r.tree.weight(r.new_id), -1);
  EXPECT_EQ(r.tree.degree(r.new_id), 1);
}

TEST(BlowUp, InvalidSite) {
  WeightedTree t = chain_tree({-2, -2, -2});
  EXPECT_THROW(blow_up(t, BlowupSite::edge(0, 2)), GraphError);
  EXPECT_THROW(blow_up(t, BlowupSite::vertex(9)), GraphError);
}

TEST(BlowUp, SubdivisionalKeepsCounter) {
  WeightedTree t = chain_tree({-2, -3});
  Int k2 = 5;
  Int before = oracle::kk(t, k2);
  int a = 0, b = 1;
  for (int i = 0; i < 3; ++i) {
    auto r = blow_up(t, BlowupSite::edge(a, b));
    t = r.tree;
    k2 -= 1;
    EXPECT_EQ(oracle::kk(t, k2), before);
    EXPECT_EQ(kk_plus_t(t, t.ids(), k2), before);
    b = r.new_id;
  }
}

TEST(BlowDown, Rules) {
  WeightedTree t = chain_tree({-3, -1, -4});
  auto r = blow_down(t, 1);
  EXPECT_EQ(r.kind, RewriteKind::Subdivisional);
  EXPECT_EQ(r.tree.weight(0), -2);
  EXPECT_EQ(r.tree.weight(2), -3);
  EXPECT_EQ(r.tree.multiplicity(0, 2), 1);

  WeightedTree leaf = chain_tree({-3, -1});
  auto s = blow_down(leaf, 1);
  EXPECT_EQ(s.kind, RewriteKind::Sprouting);
  EXPECT_EQ(s.tree.weight(0), -2);

  EXPECT_THROW(blow_down(chain_tree({-3, -2}), 1), GraphError);
  WeightedTree branching = fork(-1, {{-2}, {-2}, {-2}});
  EXPECT_THROW(blow_down(branching, 0), GraphError);
}

TEST(BlowDown, KindDeltasOnRandomTrees) {
  EXPECT_EQ(kk_blowdown_delta(RewriteKind::Sprouting), 1);
  EXPECT_EQ(kk_blowdown_delta(RewriteKind::Subdivisional), 0);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 10)), -4, 1);
    auto ids = t.ids();
    int v = ids[std::size_t(uniform(rng, 0, std::int64_t(ids.size()) - 1))];
    BlowupSite site = BlowupSite::vertex(v);
    auto nb = t.neighbors(v);
    if (!nb.empty() && uniform(rng, 0, 1) == 1) site = BlowupSite::edge(v, nb.front());
    auto up = blow_up(t, site);
    Int k2 = 3;
    Int mid = oracle::kk(up.tree, k2 - 1);
    auto down = blow_down(up.tree, up.new_id);
    EXPECT_EQ(down.kind, up.kind);
    EXPECT_EQ(oracle::kk(down.tree, k2) - mid, kk_blowdown_delta(down.kind));
    EXPECT_EQ(down.tree, t);
  }
}

TEST(RewriteTracker, RoundTripIsIdentity) {
  WeightedTree t = chain_tree({-2, -3, -1});
  RewriteTracker tr(t, 4);
  const Int c0 = tr.counter();
  auto up = tr.blow_up(BlowupSite::edge(1, 2));
  tr.blow_down(up.new_id);
  EXPECT_EQ(tr.tree(), t);
  EXPECT_EQ(tr.counter(), c0);
  EXPECT_EQ(tr.k_squared(), 4);
}

TEST(NCMinimalize, AlreadyMinimal) {
  WeightedTree t = chain_tree({-2, -3});
  t.add_vertex(5, -1, Tag::E);
  t.add_edge(5, 0);
  t.add_edge(5, 1);
  auto r = nc_minimalize(t);
  EXPECT_EQ(r.tree, t);
  EXPECT_EQ(r.h_psi, 0);
  EXPECT_TRUE(r.contracted.empty());
}

TEST(NCMinimalize, Cascade) {
  // E meets 0 and 3; D: 0 - 1 - 2 - 3 with a (-1) tip 4 - (-2) 5 hanging off 2.
  WeightedTree t = chain_tree({-3, -2, -3, -3});
  t.add_vertex(4, -2);
  t.add_vertex(5, -1);
  t.add_edge(2, 4);
  t.add_edge(4, 5);
  t.add_vertex(9, -2, Tag::E);
  t.add_edge(9, 0);
  t.add_edge(9, 3);
  auto r = nc_minimalize(t);
  // 5 goes, then 4 becomes a (-1) tip and goes, leaving 2 at -2.
  EXPECT_EQ(r.contracted, (std::vector<int>{5, 4}));
  EXPECT_EQ(r.h_psi, 2);
  EXPECT_FALSE(r.e_touched);
  EXPECT_EQ(r.tree.weight(2), -2);
}

TEST(NCMinimalize, OnlyTheLineSprouts) {
  // The line at infinity is a (-1) tip on a (-2) component that stays
  // branching after the contraction.
  WeightedTree t;
  t.add_vertex(0, -1, Tag::LineAtInfinity);
  t.add_vertex(1, -3);
  t.add_vertex(2, -2);
  t.add_vertex(3, -2);
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  t.add_edge(1, 3);
  t.add_vertex(9, -2, Tag::E);
  t.add_edge(9, 2);
  t.add_edge(9, 3);
  auto r = nc_minimalize(t);
  EXPECT_EQ(r.contracted, std::vector<int>{0});
  EXPECT_EQ(r.h_psi, 1);
  EXPECT_EQ(r.tree.weight(1), -2);
}

TEST(NCMinimalize, BranchingMinusOneKept) {
  WeightedTree t = fork(-1, {{-2}, {-3}, {-4}});
  auto r = nc_minimalize(t);
  EXPECT_TRUE(r.contracted.empty());
}

TEST(NCMinimalize, ResultIsNCMinimal) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 200; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 2, 12)), -3, -1);
    auto r = nc_minimalize(t);
    for (int v : r.tree.ids()) EXPECT_FALSE(nc_eligible(r.tree, v));
  }
}

TEST(Serialization, SignatureStableUnderRelabel) {
  WeightedTree a = chain_tree({-2, -3, -4});
  WeightedTree b = chain_tree({-4, -3, -2}, 10);
  EXPECT_EQ(graph_signature(a), graph_signature(b));
  b.set_weight(10, -5);
  EXPECT_NE(graph_signature(a), graph_signature(b));
}

TEST(WeightedTreeInvariants, CycleWithoutERejected) {
  WeightedTree t = chain_tree({-2, -2, -2});
  t.add_edge(0, 2);
  EXPECT_THROW(t.validate(), GraphError);
}
