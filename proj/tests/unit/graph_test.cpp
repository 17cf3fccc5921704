#include <gtest/gtest.h>

#include "mwis/generators.hpp"
#include "mwis/graph_io.hpp"
#include "mwis/oracle.hpp"
#include "support.hpp"

namespace mwis {
namespace {

using test::clique;
using test::exhaustive_opt;
using test::path;

GraphSpec spec(Family f, std::int64_t n, std::uint64_t seed = 0) {
  GraphSpec s;
  s.family = f;
  s.n = n;
  s.seed = seed;
  return s;
}

TEST(Generate, CycleOfThree) {
  const auto g = generate(spec(Family::cycle, 3));
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (NodeIndex v = 0; v < 3; ++v) {
    EXPECT_EQ(g.weight(v), 1);
    EXPECT_EQ(g.id(v), v);
  }
}

TEST(Generate, CliqueOfFour) {
  const auto g = generate(spec(Family::clique, 4));
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.max_degree(), 3u);
}

TEST(Generate, GnpWithZeroProbabilityIsEdgeless) {
  auto s = spec(Family::gnp, 100, 7);
  s.p = 0.0;
  const auto g = generate(s);
  EXPECT_EQ(g.size(), 100u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Generate, ClosedFormEdgeCounts) {
  for (std::int64_t n = 3; n <= 40; ++n) {
    EXPECT_EQ(generate(spec(Family::cycle, n)).edge_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(generate(spec(Family::path, n)).edge_count(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(generate(spec(Family::clique, n)).edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(generate(spec(Family::star, n)).edge_count(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(generate(spec(Family::tree, n, n)).edge_count(), static_cast<std::size_t>(n - 1));
  }
}

TEST(Generate, AdjacencyIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = spec(Family::gnp, 60, seed);
    s.p = 0.1;
    const auto g = generate(s);
    std::size_t degree_sum = 0;
    for (NodeIndex u = 0; u < g.size(); ++u) {
      degree_sum += g.degree(u);
      for (NodeIndex v : g.neighbors(u)) EXPECT_TRUE(g.adjacent(v, u));
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(Generate, DeterministicPerSeed) {
  auto s = spec(Family::gnp, 100, 2);
  s.p = 0.1;
  s.weights = WeightModel::heavy_tail;
  EXPECT_EQ(generate(s), generate(s));
  auto t = s;
  t.seed = 3;
  EXPECT_FALSE(generate(s) == generate(t));
}

TEST(Generate, WeightModelsStayInRange) {
  auto s = spec(Family::path, 500, 9);
  s.weights = WeightModel::uniform_range;
  s.weight_lo = 5;
  s.weight_hi = 9;
  for (Weight w : generate(s).weights()) {
    EXPECT_GE(w, 5);
    EXPECT_LE(w, 9);
  }
  s.weights = WeightModel::heavy_tail;
  for (Weight w : generate(s).weights()) EXPECT_GE(w, 1);
}

TEST(Generate, RejectsInvalidParameters) {
  EXPECT_THROW(generate(spec(Family::cycle, 0)), std::invalid_argument);
  auto s = spec(Family::gnp, 10);
  s.p = 1.5;
  EXPECT_THROW(generate(s), std::invalid_argument);
  EXPECT_FALSE(parse_family("hypercube").has_value());
}

TEST(Graph, RejectsBrokenInput) {
  const std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(WeightedGraph::with_default_ids({1, 1}, loop), GraphInvariantError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(WeightedGraph::with_default_ids({1, 1}, dup), GraphInvariantError);
  EXPECT_THROW(WeightedGraph::with_default_ids({1, -1}, {}), GraphInvariantError);
  EXPECT_THROW(WeightedGraph({4, 4}, {1, 1}, {}), GraphInvariantError);
}

TEST(Graph, TotalWeightOverflowIsDetected) {
  const Weight big = std::numeric_limits<Weight>::max() / 2 + 1;
  const auto g = WeightedGraph::with_default_ids({big, big}, {});
  EXPECT_THROW(g.total_weight(), WeightOverflowError);
}

TEST(Graph, MakeSetSortsAndSums) {
  const auto g = path({3, 5, 3});
  const auto s = make_set(g, {2, 0, 2});
  EXPECT_EQ(s.members, (std::vector<NodeIndex>{0, 2}));
  EXPECT_EQ(s.weight, 6);
  EXPECT_TRUE(is_independent(g, s.members));
  EXPECT_FALSE(is_independent(g, std::vector<NodeIndex>{0, 1}));
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy(clique({1, 1, 1, 1})), 3u);
  EXPECT_EQ(degeneracy(WeightedGraph::with_default_ids({1, 1, 1}, {})), 0u);
  EXPECT_EQ(degeneracy(path({1, 1})), 1u);
}

TEST(Degeneracy, RandomTreesAreOne) {
  for (std::int64_t n = 2; n <= 1000; n += 37)
    EXPECT_EQ(degeneracy(generate(spec(Family::tree, n, static_cast<std::uint64_t>(n)))), 1u) << n;
}

TEST(Degeneracy, DegenerateFamilyRespectsK) {
  for (std::int64_t k = 1; k <= 5; ++k) {
    auto s = spec(Family::degenerate, 80, 11);
    s.k = k;
    EXPECT_LE(degeneracy(generate(s)), static_cast<std::size_t>(k));
  }
}

TEST(Oracle, Examples) {
  const auto p3 = path({3, 5, 3});
  const auto s = brute_force_max_is(p3);
  EXPECT_EQ(s.members, (std::vector<NodeIndex>{0, 2}));
  EXPECT_EQ(s.weight, 6);

  const auto single = WeightedGraph::with_default_ids({7}, {});
  EXPECT_EQ(brute_force_max_is(single).weight, 7);

  const auto k4 = clique({1, 2, 3, 4});
  const auto best = brute_force_max_is(k4);
  EXPECT_EQ(best.members, (std::vector<NodeIndex>{3}));
  EXPECT_EQ(best.weight, 4);
}

TEST(Oracle, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = spec(Family::gnp, 4 + static_cast<std::int64_t>(seed % 14), seed);
    s.p = 0.1 + 0.05 * static_cast<double>(seed % 10);
    s.weights = seed % 2 ? WeightModel::heavy_tail : WeightModel::uniform_range;
    const auto g = generate(s);
    const auto best = brute_force_max_is(g);
    EXPECT_TRUE(is_independent(g, best.members));
    EXPECT_EQ(best.weight, exhaustive_opt(g)) << "seed " << seed;
  }
}

TEST(Oracle, RefusesAboveCap) {
  const auto g = generate(spec(Family::path, 30));
  try {
    brute_force_max_is(g);
    FAIL() << "expected a refusal";
  } catch (const OracleCapExceeded& e) {
    EXPECT_EQ(e.cap(), 26u);
    EXPECT_NE(std::string(e.what()).find("26"), std::string::npos);
  }
  EXPECT_EQ(brute_force_max_is(g, 30).weight, 15);
}

TEST(GraphIo, SingleNodeText) {
  const auto g = WeightedGraph::with_default_ids({5}, {});
  EXPECT_EQ(save(g), "1 0\n0 5\n");
  EXPECT_EQ(load("1 0\n0 5\n"), g);
}

TEST(GraphIo, TriangleRoundTrip) {
  const auto g = clique({1, 1, 1});
  const std::string text = save(g);
  EXPECT_EQ(text.substr(0, 4), "3 3\n");
  EXPECT_EQ(load(text), g);
}

TEST(GraphIo, UnknownIdIsAParseError) {
  try {
    load("2 1\n0 1\n1 1\n0 9\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(GraphIo, MalformedHeader) {
  EXPECT_THROW(load("x\n"), ParseError);
  EXPECT_THROW(load("2 0\n0 1\n"), ParseError);
}

TEST(GraphIo, NegativeWeightIsAnInvariantError) {
  EXPECT_THROW(load("1 0\n0 -3\n"), GraphInvariantError);
}

TEST(GraphIo, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto s = spec(static_cast<Family>(seed % 7), 1 + static_cast<std::int64_t>(seed % 40), seed);
    if (s.family == Family::cycle && s.n < 3) s.n = 3;
    s.p = 0.2;
    s.k = 2;
    s.weights = static_cast<WeightModel>(seed % 3);
    const auto g = generate(s);
    EXPECT_EQ(load(save(g)), g) << seed;
  }
}

}  // namespace
}  // namespace mwis
