#include "cstar/generators.hpp"

#include <numeric>

#include "cstar/resolution.hpp"

namespace cstar {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

HNSequence random_hn_sequence_from(Rng& rng, std::int64_t c) {
  HNSequence seq;
  for (;;) {
    if (c == 1) {
      if (seq.empty()) seq.push_back({1, 1});
      break;
    }
    std::int64_t p = uniform(rng, 1, c);
    if (uniform(rng, 0, 9) == 0) p = c;
    seq.push_back({c, p});
    c = std::gcd(c, p);
    if (c == 1) break;
  }
  return seq;
}

HNSequence random_hn_sequence(Rng& rng, std::int64_t c1_max) {
  return random_hn_sequence_from(rng, uniform(rng, 1, c1_max));
}

BranchPair random_branch_pair(Rng& rng, std::int64_t c1_max) {
  BranchPair bp;
  bp.lambda = random_hn_sequence(rng, c1_max);
  bp.same_point = uniform(rng, 0, 1) == 1;
  if (!bp.same_point) {
    bp.lambda_t = random_hn_sequence(rng, c1_max);
    return bp;
  }
  bp.s = int(uniform(rng, 0, std::int64_t(bp.lambda.size())));
  if (bp.s == 0) {
    bp.lambda_t = random_hn_sequence(rng, c1_max);
    return bp;
  }
  std::int64_t scale = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> ratio;
  for (int i = 0; i < bp.s; ++i) {
    const auto& pr = bp.lambda[std::size_t(i)];
    const std::int64_t g = std::gcd(pr.c, pr.p);
    ratio.emplace_back(pr.c / g, pr.p / g);
    scale *= pr.c / g;
  }
  const std::int64_t m = uniform(rng, 1, std::max<std::int64_t>(1, c1_max / scale));
  HNSequence shared(std::size_t(bp.s));
  std::int64_t next = m;
  for (int i = bp.s - 1; i >= 0; --i) {
    shared[std::size_t(i)] = {ratio[std::size_t(i)].first * next, ratio[std::size_t(i)].second * next};
    next = shared[std::size_t(i)].c;
  }
  bp.lambda_t = shared;
  if (m > 1) {
    auto tail = random_hn_sequence_from(rng, m);
    bp.lambda_t.insert(bp.lambda_t.end(), tail.begin(), tail.end());
  }
  return bp;
}

WeightedTree random_tree(Rng& rng, int n, std::int64_t lo, std::int64_t hi) {
  WeightedTree t;
  for (int i = 0; i < n; ++i) {
    t.add_vertex(i, uniform(rng, lo, hi), Tag::DComponent);
    if (i > 0) t.add_edge(int(uniform(rng, 0, i - 1)), i);
  }
  return t;
}

WeightedTree random_nc_minimal_tree(Rng& rng, int n, std::int64_t e_weight) {
  WeightedTree t = random_tree(rng, n, -5, -2);
  t.add_vertex(n, e_weight, Tag::E);
  const int u = int(uniform(rng, 0, n - 1));
  int v = int(uniform(rng, 0, n - 1));
  if (n > 1)
    while (v == u) v = int(uniform(rng, 0, n - 1));
  t.add_edge(n, u);
  t.add_edge(n, v);
  return t;
}

std::vector<std::int64_t> random_chain(Rng& rng, int length) {
  std::vector<std::int64_t> w;
  for (int i = 0; i < length; ++i) w.push_back(uniform(rng, -6, -2));
  return w;
}

namespace {

void record(IdentityCheck& c, bool ok, const std::string& what) {
  ++c.cases;
  if (!ok && c.failures++ == 0) c.first_failure = what;
}

Int gauss_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -Rat(m[i][j]);
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

}  // namespace

std::vector<IdentityCheck> run_identity_checks(std::uint64_t seed, int max_vertices) {
  Rng rng(seed);
  std::vector<IdentityCheck> out;

  IdentityCheck mult{"multiplicity formulas", 0, 0, {}};
  for (int i = 0; i < 1000; ++i) {
    const HNSequence seq = random_hn_sequence(rng, 50);
    const auto mu = multiplicity_sequence(seq);
    Int s = 0, q = 0;
    for (auto m : mu) {
      s += m;
      q += Int(m) * m;
    }
    bool ok = s == multiplicity_sum_formula(seq) && q == multiplicity_square_sum_formula(seq);
    if (!is_transversal_smooth(seq)) {
      BranchPair bp{seq, {{1, 1}}, false, 0};
      ok = ok && build_resolution(bp).multiplicities == mu;
    }
    record(mult, ok, to_string(seq));
  }
  out.push_back(mult);

  IdentityCheck joint{"joint multiplicities and E'^2", 0, 0, {}};
  for (int i = 0; i < 300; ++i) {
    const BranchPair bp = random_branch_pair(rng, 30);
    const Scene sc = build_resolution(bp);
    Int s = 0, q = 0;
    for (auto m : sc.multiplicities) {
      s += m;
      q += Int(m) * m;
    }
    const auto tm = total_multiplicities(bp);
    const bool ok = s == tm.sum && q == tm.sum_squares &&
                    -Int(sc.tree.weight(sc.e_id)) == gamma_prime_b(bp) && e_dot_d(sc) == 2;
    record(joint, ok, to_string(bp.lambda) + " " + to_string(bp.lambda_t));
  }
  out.push_back(joint);

  IdentityCheck kk{"K.(K+T) bookkeeping", 0, 0, {}};
  const int cap = std::max(2, max_vertices);
  for (int i = 0; i < 500; ++i) {
    RewriteTracker tr(random_tree(rng, int(uniform(rng, 1, std::max(1, cap / 2))), -4, 1),
                      Int(uniform(rng, -5, 9)));
    bool ok = tr.counter() == tr.recompute();
    for (int step = 0; step < 20 && ok; ++step) {
      std::vector<int> down;
      for (int v : tr.tree().ids())
        if (tr.tree().weight(v) == -1 && tr.tree().degree(v) <= 2) down.push_back(v);
      const Int before = tr.counter();
      if (!down.empty() && (uniform(rng, 0, 1) == 0 || int(tr.tree().size()) >= cap)) {
        auto r = tr.blow_down(down[std::size_t(uniform(rng, 0, std::int64_t(down.size()) - 1))]);
        ok = tr.counter() - before == kk_blowdown_delta(r.kind);
      } else if (int(tr.tree().size()) < cap) {
        const auto ids = tr.tree().ids();
        const auto edges = tr.tree().edges();
        if (ids.empty()) {
          tr.blow_up(BlowupSite::free_point());
        } else if (!edges.empty() && uniform(rng, 0, 1) == 0) {
          auto [a, b] = edges[std::size_t(uniform(rng, 0, std::int64_t(edges.size()) - 1))];
          tr.blow_up(BlowupSite::edge(a, b));
        } else {
          tr.blow_up(BlowupSite::vertex(ids[std::size_t(uniform(rng, 0, std::int64_t(ids.size()) - 1))]));
        }
      }
      ok = ok && tr.counter() == tr.recompute();
    }
    record(kk, ok, "sequence " + std::to_string(i));
  }
  out.push_back(kk);

  IdentityCheck bark{"bark = -sum e", 0, 0, {}};
  for (int i = 0; i < 200; ++i) {
    const WeightedTree t = random_nc_minimal_tree(rng, int(uniform(rng, 2, std::max(2, cap - 1))));
    Rat total = 0;
    for (const auto& tw : admissible_maximal_twigs(t)) total += capacity(t, tw);
    record(bark, self_intersection(t, bark_divisor(t)) == -total, "tree " + std::to_string(i));
  }
  out.push_back(bark);

  IdentityCheck det{"determinant oracle", 0, 0, {}};
  for (int i = 0; i < 500; ++i) {
    const WeightedTree t = random_tree(rng, int(uniform(rng, 1, std::min(12, cap))), -6, 2);
    record(det, determinant(t) == gauss_determinant(intersection_matrix(t, t.ids())),
           "tree " + std::to_string(i));
  }
  out.push_back(det);
  return out;
}

}  // namespace cstar
