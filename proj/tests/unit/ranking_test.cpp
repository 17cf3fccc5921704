#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mwis/generators.hpp"
#include "mwis/ranking.hpp"
#include "support.hpp"

namespace mwis {
namespace {

std::vector<NodeIndex> run_boppana(const WeightedGraph& g, const std::vector<Rank>* ranks,
                                   std::uint64_t seed = 0, unsigned c = 2) {
  const BoppanaProgram program(c, ranks);
  sim::SimOptions o;
  o.seed = seed;
  const auto r = sim::run(g, program, o);
  std::vector<NodeIndex> in;
  for (NodeIndex v = 0; v < g.size(); ++v)
    if (r.outputs[v].value_or(false)) in.push_back(v);
  return in;
}

TEST(RankRange, ExactAndSaturated) {
  EXPECT_TRUE(rank_range(10, 2) == Rank{1000000});
  EXPECT_TRUE(rank_range(1, 5) == Rank{100});
  EXPECT_TRUE(rank_range(1u << 20, 2) == Rank{100} << 80);
  EXPECT_TRUE(rank_range(~std::uint64_t{0}, 4) == ~Rank{0});
  EXPECT_TRUE(rank_range(1u << 30, 3) == ~Rank{0});  // 100 * 2^150 does not fit
}

TEST(Boppana, EdgelessTakesEverything) {
  const auto g = WeightedGraph::with_default_ids({1, 1, 1, 1, 1}, {});
  EXPECT_EQ(run_boppana(g, nullptr).size(), 5u);
}

TEST(Boppana, TriangleWithFixedRanks) {
  const auto g = test::cycle({1, 1, 1});
  const std::vector<Rank> ranks{5, 2, 9};
  EXPECT_EQ(run_boppana(g, &ranks), (std::vector<NodeIndex>{2}));
  EXPECT_EQ(boppana_rule(g, ranks).members, (std::vector<NodeIndex>{2}));
}

TEST(Boppana, TiesExcludeBothEndpoints) {
  const auto g = test::path({1, 1});
  const std::vector<Rank> ranks{7, 7};
  EXPECT_TRUE(run_boppana(g, &ranks).empty());
  EXPECT_TRUE(boppana_rule(g, ranks).members.empty());
}

TEST(Boppana, OneRoundAndIndependent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GraphSpec s;
    s.family = Family::gnp;
    s.n = 50 + static_cast<std::int64_t>(seed);
    s.p = 0.05;
    s.seed = seed;
    const auto g = generate(s);
    const BoppanaProgram program(2);
    sim::SimOptions o;
    o.seed = seed;
    const auto r = sim::run(g, program, o);
    EXPECT_LE(r.stats.rounds, 1u);
    EXPECT_LE(r.stats.max_message_bits, r.stats.budget_bits);
    std::vector<NodeIndex> in;
    for (NodeIndex v = 0; v < g.size(); ++v)
      if (*r.outputs[v]) in.push_back(v);
    EXPECT_TRUE(is_independent(g, in));
  }
}

TEST(SeqBoppana, Examples) {
  const auto p3 = test::path({1, 1, 1});
  const std::vector<NodeIndex> order{2, 0, 1};
  EXPECT_EQ(seq_boppana(p3, order).members, (std::vector<NodeIndex>{0, 2}));

  const auto k4 = test::clique({1, 1, 1, 1});
  const std::vector<NodeIndex> k4_order{3, 1, 0, 2};
  EXPECT_EQ(seq_boppana(k4, k4_order).members, (std::vector<NodeIndex>{3}));

  const auto edgeless = WeightedGraph::with_default_ids({1, 1, 1}, {});
  const std::vector<NodeIndex> e_order{1, 2, 0};
  EXPECT_EQ(seq_boppana(edgeless, e_order).size(), 3u);

  const std::vector<NodeIndex> dup{0, 0, 1};
  EXPECT_THROW(seq_boppana(p3, dup), std::invalid_argument);
  const std::vector<NodeIndex> short_order{0, 1};
  EXPECT_THROW(seq_boppana(p3, short_order), std::invalid_argument);
}

TEST(PermEquivalence, SmallGraphs) {
  EXPECT_TRUE(check_perm_equivalence(test::path({1, 1})));
  EXPECT_TRUE(check_perm_equivalence(test::path({1, 1, 1})));
  EXPECT_TRUE(check_perm_equivalence(WeightedGraph::with_default_ids({1, 1, 1, 1}, {})));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GraphSpec s;
    s.family = Family::gnp;
    s.n = 1 + static_cast<std::int64_t>(seed % 7);
    s.p = 0.4;
    s.seed = seed;
    EXPECT_TRUE(check_perm_equivalence(generate(s)));
  }
}

// Independent restatement: u joins iff it precedes all its neighbors.
TEST(PermEquivalence, PrecedesAllNeighborsCharacterisation) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 6;
  s.p = 0.5;
  s.seed = 8;
  const auto g = generate(s);
  std::vector<NodeIndex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<std::size_t> pos(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<NodeIndex> expected;
    for (NodeIndex u = 0; u < g.size(); ++u) {
      const auto nbrs = g.neighbors(u);
      if (std::all_of(nbrs.begin(), nbrs.end(), [&](NodeIndex v) { return pos[u] < pos[v]; }))
        expected.push_back(u);
    }
    EXPECT_EQ(seq_boppana(g, order).members, expected);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(FastLowDegree, EdgelessTakesEverything) {
  const auto g = WeightedGraph::with_default_ids({1, 1, 1, 1}, {});
  EXPECT_EQ(fast_low_degree_approx(g, 0.5, 2, 0).set.size(), 4u);
}

TEST(FastLowDegree, UnitFiveCycle) {
  const auto g = test::cycle({1, 1, 1, 1, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = fast_low_degree_approx(g, 0.5, 2, seed);
    EXPECT_EQ(r.set.size(), 2u);
    EXPECT_LE(r.stats.rounds, phase_count({0.5, 8}) * (2 + 2));
  }
}

TEST(FastLowDegree, SizeBoundOnSparseGnp) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 2048;
  s.p = 20.0 / 2047.0;
  s.seed = 5;
  const auto g = generate(s);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = fast_low_degree_approx(g, 1.0, 2, seed);
    EXPECT_TRUE(is_independent(g, r.set.members));
    EXPECT_GE(2 * (g.max_degree() + 1) * r.set.size(), g.size());
    EXPECT_LE(r.stats.rounds, 8u * (2 + 2));
  }
}

}  // namespace
}  // namespace mwis
