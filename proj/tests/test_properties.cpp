#include <gtest/gtest.h>

#include <random>

#include "cstar/generators.hpp"
#include "cstar/graph_core.hpp"
#include "oracles.hpp"

using namespace cstar;

namespace {

BlowupSite random_site(Rng& rng, const WeightedTree& t) {
  auto ids = t.ids();
  if (ids.empty()) return BlowupSite::free_point();
  int v = ids[std::size_t(uniform(rng, 0, std::int64_t(ids.size()) - 1))];
  auto nb = t.neighbors(v);
  if (!nb.empty() && uniform(rng, 0, 1) == 1)
    return BlowupSite::edge(v, nb[std::size_t(uniform(rng, 0, std::int64_t(nb.size()) - 1))]);
  return BlowupSite::vertex(v);
}

// Blowups of a base whose boundary weights are all <= -2.
WeightedTree blown_up_tree(Rng& rng) {
  WeightedTree t = random_nc_minimal_tree(rng, int(uniform(rng, 2, 8)));
  for (int k = int(uniform(rng, 1, 10)); k > 0; --k) t = blow_up(t, random_site(rng, t)).tree;
  return t;
}

}  // namespace

TEST(Properties, NCMinimalizationOrderIndependentOnBlownUpTrees) {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    WeightedTree t = blown_up_tree(rng);
    NCResult canon = nc_minimalize(t);
    NCResult other = nc_minimalize_with(t, [&](const std::vector<int>& c) {
      return c[std::size_t(uniform(rng, 0, std::int64_t(c.size()) - 1))];
    });
    EXPECT_EQ(graph_signature(canon.tree), graph_signature(other.tree));
    EXPECT_EQ(canon.contracted.size(), other.contracted.size());
    EXPECT_EQ(canon.h_psi, other.h_psi);
  }
}

TEST(Properties, NCMinimalizationOrderMattersWithAdjacentMinusOnes) {
  // E - v1(0) - v2(-1) - v3(-1): the two orders end in different graphs, which
  // is why the order-independence check is run on blown-up trees only.
  WeightedTree t;
  t.add_vertex(0, -3, Tag::E);
  t.add_vertex(1, 0);
  t.add_vertex(2, -1);
  t.add_vertex(3, -1);
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  t.add_edge(2, 3);
  auto low = nc_minimalize_with(t, [](const std::vector<int>& c) { return c.front(); });
  auto high = nc_minimalize_with(t, [](const std::vector<int>& c) { return c.back(); });
  EXPECT_NE(graph_signature(low.tree), graph_signature(high.tree));
}

TEST(Properties, RewriteCounterMatchesRecomputation) {
  Rng rng(62);
  for (int seq = 0; seq < 200; ++seq) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 8)), -4, 1);
    RewriteTracker tr(t, uniform(rng, -5, 9));
    for (int step = 0; step < 30; ++step) {
      std::vector<int> down;
      for (int v : tr.tree().ids())
        if (tr.tree().weight(v) == -1 && tr.tree().degree(v) <= 2) down.push_back(v);
      const bool grow = tr.tree().size() < 20 && (down.empty() || uniform(rng, 0, 1) == 0);
      if (grow) {
        tr.blow_up(random_site(rng, tr.tree()));
      } else if (!down.empty()) {
        const Int before = oracle::kk(tr.tree(), tr.k_squared());
        auto r = tr.blow_down(down[std::size_t(uniform(rng, 0, std::int64_t(down.size()) - 1))]);
        const Int delta = oracle::kk(tr.tree(), tr.k_squared()) - before;
        if (r.kind == RewriteKind::Sprouting) EXPECT_EQ(delta, 1);
        if (r.kind == RewriteKind::Subdivisional) EXPECT_EQ(delta, 0);
      }
      EXPECT_EQ(tr.counter(), tr.recompute());
      EXPECT_EQ(tr.counter(), oracle::kk(tr.tree(), tr.k_squared()));
    }
  }
}

TEST(Properties, BlowUpThenDownIsIdentity) {
  Rng rng(63);
  for (int i = 0; i < 300; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 12)), -5, 2);
    RewriteTracker tr(t, 1);
    const Int c0 = tr.counter();
    BlowupSite site = uniform(rng, 0, 4) == 0 ? BlowupSite::free_point() : random_site(rng, t);
    auto up = tr.blow_up(site);
    tr.blow_down(up.new_id);
    EXPECT_EQ(tr.tree(), t);
    EXPECT_EQ(tr.counter(), c0);
  }
}

TEST(Properties, BarkEqualsMinusSumOfCapacities) {
  Rng rng(64);
  for (int i = 0; i < 200; ++i) {
    WeightedTree t = random_nc_minimal_tree(rng, int(uniform(rng, 2, 14)));
    Rat total = 0;
    for (const auto& tw : maximal_twigs(t)) {
      std::vector<std::int64_t> w;
      for (int v : tw.ids) w.push_back(t.weight(v));
      total += oracle::capacity(w);
    }
    EXPECT_EQ(self_intersection(t, bark_divisor(t)), -total);
  }
}

TEST(Properties, DeterminantOracleOnTrees) {
  Rng rng(65);
  for (int i = 0; i < 500; ++i) {
    WeightedTree t = random_tree(rng, int(uniform(rng, 1, 12)), -6, 2);
    auto ids = t.ids();
    EXPECT_EQ(determinant(t), oracle::neg_det(t, ids));
    // And on a random connected-or-not subset.
    std::vector<int> sub;
    for (int v : ids)
      if (uniform(rng, 0, 1)) sub.push_back(v);
    EXPECT_EQ(determinant(t, sub), oracle::neg_det(t, sub));
  }
}
