#include <gtest/gtest.h>

#include "mwis/harness/battery.hpp"
#include "mwis/harness/corpus.hpp"
#include "mwis/harness/experiment.hpp"
#include "mwis/oracle.hpp"

namespace mwis::harness {
namespace {

GraphSpec small_gnp(std::uint64_t seed) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 14;
  s.p = 0.3;
  s.weights = WeightModel::uniform_range;
  s.seed = seed;
  return s;
}

AlgorithmSpec alg(AlgorithmKind k, std::optional<double> eps = std::nullopt) {
  AlgorithmSpec a;
  a.kind = k;
  a.eps = eps;
  return a;
}

TEST(AlgorithmNames, RoundTrip) {
  for (auto k : {AlgorithmKind::heavy, AlgorithmKind::sparse, AlgorithmKind::boost_heavy,
                 AlgorithmKind::boost_sparse, AlgorithmKind::arb, AlgorithmKind::boppana,
                 AlgorithmKind::fastld, AlgorithmKind::luby})
    EXPECT_EQ(parse_algorithm(to_string(k)), k);
  EXPECT_FALSE(parse_algorithm("greedy").has_value());
}

TEST(Validate, MissingOrBadParameters) {
  EXPECT_THROW(validate(alg(AlgorithmKind::boost_heavy)), UsageError);
  EXPECT_THROW(validate(alg(AlgorithmKind::fastld)), UsageError);
  EXPECT_THROW(validate(alg(AlgorithmKind::arb, 0.5)), UsageError);
  EXPECT_THROW(validate(alg(AlgorithmKind::boost_heavy, -1.0)), UsageError);
  auto a = alg(AlgorithmKind::boppana);
  a.c = 1.5;
  EXPECT_THROW(validate(a), UsageError);
  auto b = alg(AlgorithmKind::boost_heavy, 0.5);
  b.c = 0.5;
  EXPECT_THROW(validate(b), UsageError);
  auto arb = alg(AlgorithmKind::arb, 0.5);
  arb.alpha = 2;
  EXPECT_NO_THROW(validate(arb));
  EXPECT_NO_THROW(validate(alg(AlgorithmKind::heavy)));
  EXPECT_DOUBLE_EQ(effective_c(alg(AlgorithmKind::boppana)), 2.0);
  EXPECT_DOUBLE_EQ(effective_c(alg(AlgorithmKind::boost_sparse, 0.5)), 8.0);
}

TEST(Experiment, BoostHeavyMeetsOracleRatio) {
  AlgorithmSpec a = alg(AlgorithmKind::boost_heavy, 0.5);
  a.c = 8;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GraphSpec s = small_gnp(seed);
    s.n = 12;
    const auto g = generate(s);
    const auto e = run_experiment({s, {}}, g, a, seed, {}, true);
    ASSERT_TRUE(e.record.opt.has_value());
    EXPECT_EQ(*e.record.opt, brute_force_max_is(g).weight);
    EXPECT_GE(1.5 * static_cast<double>(g.max_degree()) * static_cast<double>(e.record.weight),
              static_cast<double>(*e.record.opt));
    EXPECT_EQ(e.record.stack_ok, true);
  }
}

TEST(Experiment, BoppanaOnEdgeless) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 5;
  s.p = 0;
  const auto g = generate(s);
  auto a = alg(AlgorithmKind::boppana);
  a.c = 2;
  EXPECT_EQ(run_experiment({s, {}}, g, a, 0, {}, false).record.size, 5u);
}

TEST(Experiment, OracleRefusalIsRecorded) {
  GraphSpec s;
  s.family = Family::path;
  s.n = 40;
  const auto g = generate(s);
  const auto e = run_experiment({s, {}}, g, alg(AlgorithmKind::heavy), 0, {}, true);
  EXPECT_FALSE(e.record.opt.has_value());
  ASSERT_TRUE(e.record.oracle_error.has_value());
  EXPECT_NE(e.record.oracle_error->find("26"), std::string::npos);
}

TEST(Record, JsonRoundTripAndReplay) {
  std::vector<AlgorithmSpec> specs{alg(AlgorithmKind::heavy), alg(AlgorithmKind::sparse),
                                   alg(AlgorithmKind::boost_sparse, 1.0), alg(AlgorithmKind::luby),
                                   alg(AlgorithmKind::fastld, 1.0)};
  auto arb = alg(AlgorithmKind::arb, 1.0);
  arb.alpha = 3;
  specs.push_back(arb);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const GraphSpec s = small_gnp(i);
    const auto g = generate(s);
    const auto e = run_experiment({s, {}}, g, specs[i], 40 + i, {}, i % 2 == 0);
    const auto j = to_json(e.record);
    const auto back = record_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    const auto check = replay(back);
    EXPECT_TRUE(check.identical) << check.difference;
  }
}

TEST(Record, ReplayDetectsTampering) {
  const GraphSpec s = small_gnp(3);
  const auto g = generate(s);
  auto r = run_experiment({s, {}}, g, alg(AlgorithmKind::heavy), 1, {}, false).record;
  r.weight += 1;
  EXPECT_FALSE(replay(r).identical);
}

TEST(Record, SchemaViolations) {
  const GraphSpec s = small_gnp(1);
  const auto g = generate(s);
  const auto good = to_json(run_experiment({s, {}}, g, alg(AlgorithmKind::heavy), 0, {}, true).record);
  auto missing = good;
  missing.erase("rounds");
  EXPECT_THROW(record_from_json(missing), SchemaError);
  auto wrong = good;
  wrong["weight"] = "heavy";
  EXPECT_THROW(record_from_json(wrong), SchemaError);
  auto half = good;
  half.erase("approx_ratio");
  EXPECT_THROW(record_from_json(half), SchemaError);
  auto unknown = good;
  unknown["algorithm"]["name"] = "magic";
  EXPECT_THROW(record_from_json(unknown), SchemaError);
  EXPECT_THROW(record_from_json(nlohmann::json::array()), SchemaError);
}

TEST(Record, DigestIgnoresOrder) {
  const auto g = generate(small_gnp(0));
  const std::vector<NodeIndex> a{1, 5, 9};
  const std::vector<NodeIndex> b{9, 1, 5};
  EXPECT_EQ(digest_members(g, a), digest_members(g, b));
  EXPECT_EQ(digest_members(g, a).size(), 16u);
  EXPECT_NE(digest_members(g, a), digest_members(g, std::vector<NodeIndex>{1, 5}));
}

TEST(Record, CsvRowMatchesHeaderWidth) {
  const GraphSpec s = small_gnp(2);
  const auto g = generate(s);
  const auto r = run_experiment({s, {}}, g, alg(AlgorithmKind::boost_heavy, 0.5), 0, {}, true).record;
  const auto count = [](const std::string& t) { return std::count(t.begin(), t.end(), ','); };
  EXPECT_EQ(count(to_csv_row(r)), count(csv_header()));
}

TEST(Corpus, TreeShapesUpToSeven) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(all_trees(n).size(), expected[n - 1]) << n;
}

TEST(Invariants, ReportIsDeterministic) {
  const auto a = run_invariants();
  const auto b = run_invariants();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].passed) << a[i].title << ": " << a[i].detail;
    EXPECT_EQ(format_line(a[i], false), format_line(b[i], false));
  }
  EXPECT_EQ(summary_json(a, false), summary_json(b, false));
}

}  // namespace
}  // namespace mwis::harness
