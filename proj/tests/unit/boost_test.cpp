#include <gtest/gtest.h>

#include "mwis/approx.hpp"
#include "mwis/boost.hpp"
#include "mwis/generators.hpp"
#include "mwis/sparsify.hpp"
#include "support.hpp"

namespace mwis {
namespace {

// Inner algorithm that returns a fixed set per phase (1-based call count).
Algorithm scripted(std::vector<std::vector<NodeIndex>> picks) {
  auto calls = std::make_shared<std::size_t>(0);
  return [picks = std::move(picks), calls](const Instance&, std::uint64_t) {
    AlgorithmRun r;
    if (*calls < picks.size()) r.members = picks[*calls];
    ++*calls;
    return r;
  };
}

TEST(ReduceWeights, PathThreeFiveThree) {
  const auto g = test::path({3, 5, 3});
  const auto w2 = reduce_weights(g, ResidualWeights::from_graph(g), std::vector<NodeIndex>{1});
  EXPECT_EQ(w2.values, (std::vector<Weight>{-2, 0, -2}));
  EXPECT_EQ(w2.phase, 2);
}

TEST(ReduceWeights, EmptySetIsIdentity) {
  const auto g = test::path({3, 5, 3});
  const auto w1 = ResidualWeights::from_graph(g);
  EXPECT_EQ(reduce_weights(g, w1, std::vector<NodeIndex>{}).values, w1.values);
}

TEST(ReduceWeights, PathTwoThreeThreeTwo) {
  const auto g = test::path({2, 3, 3, 2});
  EXPECT_EQ(reduce_weights(g, ResidualWeights::from_graph(g), std::vector<NodeIndex>{1}).values,
            (std::vector<Weight>{-1, 0, 0, 2}));
}

TEST(ReduceWeights, MatchesInclusiveNeighborhoodForm) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GraphSpec s;
    s.family = Family::gnp;
    s.n = 30;
    s.p = 0.15;
    s.weights = WeightModel::uniform_range;
    s.seed = seed;
    const auto g = generate(s);
    const auto I = greedy_mis(g, GreedyOrder::by_permutation, seed).members;
    const auto w = ResidualWeights::from_graph(g);
    const auto next = reduce_weights(g, w, I);
    std::vector<char> in(g.size(), 0);
    for (NodeIndex v : I) in[v] = 1;
    for (NodeIndex v = 0; v < g.size(); ++v) {
      // w_i(v) - sum over N+(v) ∩ I of w_i(u)
      Weight expected = w.values[v];
      if (in[v]) expected -= w.values[v];
      for (NodeIndex u : g.neighbors(v))
        if (in[u]) expected -= w.values[u];
      EXPECT_EQ(next.values[v], expected);
    }
  }
}

TEST(ReduceWeights, RejectsDependentSetAndOverflow) {
  const auto g = test::path({1, 1});
  EXPECT_THROW(reduce_weights(g, ResidualWeights::from_graph(g), std::vector<NodeIndex>{0, 1}),
               std::invalid_argument);
  ResidualWeights w{1, {std::numeric_limits<Weight>::min() + 1, 5}};
  EXPECT_THROW(reduce_weights(g, w, std::vector<NodeIndex>{1}), WeightOverflowError);
}

TEST(ReductionProgram, AgreesWithSequentialReduction) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 80;
  s.p = 0.08;
  s.weights = WeightModel::heavy_tail;
  const auto g = generate(s);
  const auto I = greedy_mis(g).members;
  std::vector<char> mark(g.size(), 0);
  for (NodeIndex v : I) mark[v] = 1;
  const auto r = sim::run(g, ReductionProgram(mark), {});
  EXPECT_EQ(r.stats.rounds, 1u);
  const auto expected = reduce_weights(g, ResidualWeights::from_graph(g), I).values;
  for (NodeIndex v = 0; v < g.size(); ++v) EXPECT_EQ(*r.outputs[v], expected[v]);
}

TEST(PhaseCount, CeilingWithFloatGuard) {
  EXPECT_EQ(phase_count({0.5, 8}), 16u);
  EXPECT_EQ(phase_count({0.25, 8}), 32u);
  EXPECT_EQ(phase_count({1, 8}), 8u);
  EXPECT_EQ(phase_count({0.1, 8}), 80u);
  EXPECT_EQ(phase_count({0.3, 8}), 27u);
  EXPECT_EQ(phase_count({3, 8}), 3u);
  EXPECT_THROW(phase_count({0, 8}), std::invalid_argument);
  EXPECT_THROW(phase_count({0.5, 0.5}), std::invalid_argument);
}

TEST(Boost, ScriptedTraceOnPathTwoThreeThreeTwo) {
  const auto g = test::path({2, 3, 3, 2});
  const auto r = boost(g, scripted({{1}, {3}}), {1.0, 2.0}, 0);
  EXPECT_EQ(r.phases, 2u);
  ASSERT_EQ(r.stack.size(), 2u);
  EXPECT_EQ(r.stack[0].members, (std::vector<NodeIndex>{1}));
  EXPECT_EQ(r.stack[0].residual, (std::vector<Weight>{3}));
  EXPECT_EQ(r.stack[1].members, (std::vector<NodeIndex>{3}));
  EXPECT_EQ(r.stack[1].residual, (std::vector<Weight>{2}));
  EXPECT_EQ(r.set.members, (std::vector<NodeIndex>{1, 3}));
  EXPECT_EQ(r.set.weight, 5);
  EXPECT_TRUE(check_stack_property(g, r.set, r.stack));
}

TEST(Boost, PathThreeFiveThreeWithHeavyInner) {
  const auto g = test::path({3, 5, 3});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = boost(g, heavy_algorithm(), {0.5, 8}, seed);
    EXPECT_EQ(r.phases, 16u);
    EXPECT_TRUE(is_independent(g, r.set.members));
    EXPECT_GE(r.set.weight, 5);
    EXPECT_GE(3 * r.set.weight, 6 * 2 / 2);  // 1.5 * 2 * w(I) >= OPT = 6
  }
}

TEST(Boost, EdgelessIsDoneInPhaseOne) {
  const auto g = WeightedGraph::with_default_ids({1, 2, 3}, {});
  const auto r = boost(g, heavy_algorithm(), {0.5, 8}, 1);
  EXPECT_EQ(r.set.members.size(), 3u);
  EXPECT_EQ(r.stack[0].members.size(), 3u);
  for (std::size_t i = 1; i < r.stack.size(); ++i) EXPECT_TRUE(r.stack[i].members.empty());
}

TEST(Boost, InnerFailureCarriesPhase) {
  const auto g = test::path({2, 3, 3, 2});
  try {
    boost(g, scripted({{1}, {0}}), {1.0, 2.0}, 0);
    FAIL() << "expected an inner failure";
  } catch (const InnerFailure& e) {
    EXPECT_EQ(e.phase(), 2u);
  }
  EXPECT_THROW(boost(g, scripted({{0, 1}}), {1.0, 2.0}, 0), InnerFailure);
}

TEST(StackProperty, Examples) {
  const auto g = test::path({2, 3, 3, 2});
  PhaseStack stack{{1, {1}, {3}}, {2, {3}, {2}}};
  EXPECT_TRUE(check_stack_property(g, make_set(g, {1, 3}), stack));
  EXPECT_FALSE(check_stack_property(g, make_set(g, {1}), stack));
  EXPECT_TRUE(check_stack_property(g, make_set(g, {}), PhaseStack{}));
  EXPECT_TRUE(check_stack_property(g, make_set(g, {1}), PhaseStack{{1, {1}, {3}}}));
}

TEST(PopStage, DistributedMatchesSequential) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GraphSpec s;
    s.family = Family::gnp;
    s.n = 40;
    s.p = 0.1;
    s.weights = WeightModel::uniform_range;
    s.seed = seed;
    const auto g = generate(s);
    const auto r = boost(g, heavy_algorithm(), {1.0, 8}, seed);
    sim::RoundStats stats;
    EXPECT_EQ(pop_stage(g, r.stack, {}, &stats), pop_stack(g, r.stack));
    EXPECT_LE(stats.rounds, r.stack.size());
    EXPECT_TRUE(check_stack_cover(g, r.set.members, r.stack));
  }
}

struct Case {
  bool sparse;
  double eps;
};

class BoostGuarantees : public ::testing::TestWithParam<Case> {};

TEST_P(BoostGuarantees, RatioFractionStackAndRounds) {
  const auto [use_sparse, eps] = GetParam();
  const Algorithm inner = use_sparse ? sparse_algorithm() : heavy_algorithm();
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GraphSpec s;
    s.family = seed % 3 == 0 ? Family::tree : Family::gnp;
    s.n = 4 + static_cast<std::int64_t>(seed % 15);
    s.p = 0.3;
    s.weights = static_cast<WeightModel>(seed % 3);
    s.seed = seed;
    const auto g = generate(s);
    if (g.edge_count() == 0) continue;
    const auto r = boost(g, inner, {eps, 8}, seed);
    ASSERT_TRUE(r.mis_valid);
    const Weight opt = test::exhaustive_opt(g);
    const long double factor = 1.0L + eps;
    EXPECT_GE(factor * g.max_degree() * r.set.weight, static_cast<long double>(opt)) << seed;
    EXPECT_GE(factor * (g.max_degree() + 1) * r.set.weight, static_cast<long double>(g.total_weight()));
    EXPECT_TRUE(check_stack_property(g, r.set, r.stack));
    EXPECT_TRUE(check_stack_cover(g, r.set.members, r.stack));
    EXPECT_EQ(r.phases, phase_count({eps, 8}));
    EXPECT_LE(r.stats.rounds, r.phases * (r.max_inner_rounds + 2));
    for (const auto& f : r.stack)
      for (Weight w : f.residual) EXPECT_GT(w, 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Inner, BoostGuarantees,
                         ::testing::Values(Case{false, 0.25}, Case{false, 0.5}, Case{false, 1.0},
                                           Case{true, 0.5}));

}  // namespace
}  // namespace mwis
