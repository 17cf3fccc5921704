#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mwis/arb.hpp"
#include "mwis/harness/battery.hpp"
#include "mwis/harness/corpus.hpp"
#include "mwis/harness/experiment.hpp"
#include "mwis/lowerbound.hpp"
#include "mwis/oracle.hpp"
#include "mwis/ranking.hpp"
#include "mwis/sparsify.hpp"

namespace mwis::harness {
namespace {

using Clock = std::chrono::steady_clock;
using i128 = __int128;

/// Facts gathered across criteria and judged at the end (2, 4 and 10).
struct Ledger {
  std::size_t congest_runs = 0;
  std::vector<std::string> congest_violations;
  std::size_t stack_runs = 0;
  std::vector<std::string> stack_failures;
  std::size_t boost_runs = 0;
  std::vector<std::string> boost_round_failures;
  std::vector<ExperimentRecord> replay_pool;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

/// B = 32 * max(ceil(log2 n), 4), recomputed without the engine's helper.
std::size_t expected_budget(std::uint64_t n) {
  std::size_t log_n = 0;
  while ((std::uint64_t{1} << log_n) < n) ++log_n;
  return 32 * std::max<std::size_t>(log_n, 4);
}

std::string describe(const ExperimentRecord& r) {
  std::string s = std::string(to_string(r.algorithm.kind)) + " seed " + std::to_string(r.seed);
  if (r.graph.spec)
    s += " on " + std::string(to_string(r.graph.spec->family)) + " n=" + std::to_string(r.n) +
         " graph seed " + std::to_string(r.graph.spec->seed);
  return s;
}

void note(Ledger& ledger, const WeightedGraph& g, const Experiment& e, bool keep) {
  const ExperimentRecord& r = e.record;
  if (r.mode == sim::Mode::congest) {
    ++ledger.congest_runs;
    if (r.max_message_bits > expected_budget(std::max<std::size_t>(g.size(), 1)))
      ledger.congest_violations.push_back(describe(r));
  }
  if (e.outcome.stack) {
    ++ledger.stack_runs;
    i128 pushed = 0;
    for (const auto& frame : *e.outcome.stack)
      for (Weight w : frame.residual) pushed += w;
    i128 got = 0;
    for (NodeIndex v : e.outcome.set.members) got += g.weight(v);
    if (got < pushed) ledger.stack_failures.push_back(describe(r));
  }
  if (keep && r.graph.spec) ledger.replay_pool.push_back(r);
}

/// Boost phase count for c = 8 and eps in {1/4, 1/2, 1}: 8 / eps.
std::size_t expected_phases(double eps) {
  if (eps == 0.25) return 32;
  if (eps == 0.5) return 16;
  if (eps == 1.0) return 8;
  return static_cast<std::size_t>(std::ceil(8.0 / eps));
}

void note_boost(Ledger& ledger, const Experiment& e) {
  const Outcome& o = e.outcome;
  const ExperimentRecord& r = e.record;
  ++ledger.boost_runs;
  const std::size_t t = expected_phases(*r.algorithm.eps);
  if (o.phases != t || o.stack->size() != t)
    ledger.boost_round_failures.push_back(describe(r) + ": phases " + std::to_string(o.phases));
  if (o.stats.rounds > t * (o.max_inner_rounds + 2))
    ledger.boost_round_failures.push_back(describe(r) + ": rounds " + std::to_string(o.stats.rounds));
}

/// eps as quarters: (1 + eps) = (4 + q) / 4.
i128 quarters(double eps) { return static_cast<i128>(std::llround(eps * 4)); }

template <typename F>
CheckResult timed(int id, std::string title, double budget, F&& body) {
  CheckResult r;
  r.id = id;
  r.title = std::move(title);
  r.budget_seconds = budget;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "aborted: " + ex.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget > 0 && r.seconds >= budget) {
    r.passed = false;
    r.detail += "; over runtime budget";
  }
  return r;
}

sim::SimOptions congest() { return {}; }

constexpr WeightModel kModels[] = {WeightModel::unit, WeightModel::uniform_range,
                                   WeightModel::heavy_tail};

// ---------------------------------------------------------------------------

CheckResult warmup_guarantee(Ledger& ledger) {
  return timed(1, "warm-up guarantee 4(D+1) w(I) >= w(V)", 60, [&](CheckResult& res) {
    constexpr Family kFamilies[] = {Family::cycle, Family::path, Family::clique, Family::star,
                                    Family::gnp,   Family::tree, Family::degenerate};
    std::size_t valid = 0, invalid = 0, failures = 0;
    std::string first;
    double worst = 1e300;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng = make_stream(0xc1, i);
      GraphSpec s;
      s.family = kFamilies[i % 7];
      s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 199));
      if (s.family == Family::cycle) s.n = std::max<std::int64_t>(s.n, 3);
      if (s.family == Family::clique) s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 79));
      if (s.family == Family::gnp)
        s.p = std::min(1.0, static_cast<double>(1 + uniform_below(rng, 10)) / s.n);
      if (s.family == Family::degenerate) s.k = 1 + static_cast<std::int64_t>(uniform_below(rng, 4));
      s.weights = kModels[(i / 7) % 3];
      s.seed = i;
      const WeightedGraph g = generate(s);
      const Experiment e = run_experiment({s, {}}, g, {AlgorithmKind::heavy}, i, congest(), false);
      note(ledger, g, e, i % 100 == 0);
      if (!e.outcome.mis_valid) {
        ++invalid;
        continue;
      }
      ++valid;
      const i128 lhs = i128{4} * (static_cast<i128>(g.max_degree()) + 1) * e.outcome.set.weight;
      const i128 rhs = g.total_weight();
      const bool ok = is_independent(g, e.outcome.set.members) && lhs >= rhs;
      if (rhs > 0) worst = std::min(worst, static_cast<double>(lhs) / static_cast<double>(rhs));
      if (!ok && failures++ == 0) first = describe(e.record);
    }
    res.passed = failures == 0 && valid > 0;
    res.detail = fmt("%zu graphs, %zu valid MIS runs (%zu invalid), %zu violations, min 4(D+1)w(I)/w(V) = %.3f",
                     valid + invalid, valid, invalid, failures, worst);
    if (!first.empty()) res.detail += "; first violation: " + first;
  });
}

std::vector<GraphSpec> small_connected_corpus(std::size_t count, std::uint64_t salt) {
  std::vector<GraphSpec> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    Rng rng = make_stream(salt, i);
    GraphSpec s;
    s.seed = salt * 1000003 + i * 7919;
    s.weights = kModels[1 + i % 2];
    switch (i % 8) {
      case 0:
        s.family = Family::cycle;
        s.n = 3 + static_cast<std::int64_t>(uniform_below(rng, 22));
        break;
      case 1:
        s.family = Family::path;
        s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 23));
        break;
      case 2:
        s.family = Family::star;
        s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 23));
        break;
      case 3:
        s.family = Family::clique;
        s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 11));
        break;
      case 4:
        s.family = Family::tree;
        s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 23));
        break;
      case 5:
        s.family = Family::degenerate;
        s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 23));
        s.k = 1 + static_cast<std::int64_t>(uniform_below(rng, 3));
        break;
      case 6:
        s.family = Family::gnp;
        s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 23));
        s.p = 0.1 + 0.4 * uniform01(rng);
        s = connected(s);
        break;
      default:
        s.family = Family::cycle_of_cliques;
        s.n0 = 3 + static_cast<std::int64_t>(uniform_below(rng, 4));
        s.n1 = 1 + static_cast<std::int64_t>(uniform_below(rng, 24 / s.n0));
        break;
    }
    out.push_back(s);
  }
  return out;
}

CheckResult boosting_ratio(Ledger& ledger) {
  return timed(3, "boosting ratio (1+eps) D w(I) >= OPT and (1+eps)(D+1) w(I) >= w(V)", 300,
               [&](CheckResult& res) {
    const auto corpus = small_connected_corpus(170, 0xc3);
    constexpr double kEps[] = {0.25, 0.5, 1.0};
    std::size_t runs = 0, ratio_fail = 0, fraction_fail = 0;
    std::map<std::string, std::size_t> per_alg;
    std::string first;
    double worst = 1e300;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
      const GraphSpec& s = corpus[gi];
      const WeightedGraph g = generate(s);
      const Weight opt = brute_force_max_is(g).weight;
      std::vector<AlgorithmSpec> algs;
      for (double eps : kEps) algs.push_back({AlgorithmKind::boost_heavy, eps, 8.0});
      algs.push_back({AlgorithmKind::boost_sparse, 0.5, 8.0});
      for (std::size_t a = 0; a < algs.size(); ++a) {
        const std::uint64_t seed = gi * 31 + a;
        const Experiment e = run_experiment({s, {}}, g, algs[a], seed, congest(), false);
        note(ledger, g, e, (gi + a) % 60 == 0);
        note_boost(ledger, e);
        ++runs;
        ++per_alg[std::string(to_string(algs[a].kind))];
        const i128 q = quarters(*algs[a].eps);
        const i128 w = e.outcome.set.weight;
        const i128 delta = g.max_degree();
        const bool ratio_ok = (4 + q) * delta * w >= i128{4} * opt;
        const bool fraction_ok = (4 + q) * (delta + 1) * w >= i128{4} * g.total_weight();
        if (opt > 0) worst = std::min(worst, static_cast<double>((4 + q) * delta * w) / (4.0 * opt));
        if (!ratio_ok) ++ratio_fail;
        if (!fraction_ok) ++fraction_fail;
        if ((!ratio_ok || !fraction_ok || !is_independent(g, e.outcome.set.members)) && first.empty())
          first = describe(e.record);
      }
    }
    res.passed = ratio_fail == 0 && fraction_fail == 0 && runs >= 500;
    res.detail = fmt("%zu runs on %zu connected graphs (n <= 24; %zu boost-heavy, %zu boost-sparse), "
                     "%zu ratio and %zu fraction violations, min (1+eps)D w(I)/OPT = %.3f",
                     runs, corpus.size(), per_alg["boost-heavy"], per_alg["boost-sparse"], ratio_fail,
                     fraction_fail, worst);
    if (!first.empty()) res.detail += "; first violation: " + first;
  });
}

CheckResult round_accounting(Ledger& ledger) {
  return timed(4, "boost rounds <= ceil(c/eps)(T_max+2), phases = ceil(c/eps)", 0,
               [&](CheckResult& res) {
    std::size_t fastld_fail = 0, extra = 0;
    for (std::uint64_t i = 0; i < 12; ++i) {
      GraphSpec s;
      s.family = Family::gnp;
      s.n = 200;
      s.p = 10.0 / 199;
      s.weights = WeightModel::heavy_tail;
      s.seed = 0xc4 + i;
      const WeightedGraph g = generate(s);
      const double eps = i % 2 == 0 ? 0.5 : 1.0;
      for (AlgorithmKind k : {AlgorithmKind::boost_heavy, AlgorithmKind::boost_sparse,
                              AlgorithmKind::fastld}) {
        AlgorithmSpec spec{k, eps, k == AlgorithmKind::fastld ? 2.0 : 8.0};
        const Experiment e = run_experiment({s, {}}, g, spec, i, congest(), false);
        note(ledger, g, e, i == 0);
        note_boost(ledger, e);
        ++extra;
        if (k == AlgorithmKind::fastld &&
            e.outcome.stats.rounds > expected_phases(eps) * (2 + 2))
          ++fastld_fail;
      }
    }
    res.passed = ledger.boost_round_failures.empty() && fastld_fail == 0 && ledger.boost_runs > 0;
    res.detail = fmt("%zu boost runs checked (%zu on n=200 graphs), %zu accounting failures, "
                     "%zu fastld runs over ceil(8/eps)(c+2)",
                     ledger.boost_runs, extra, ledger.boost_round_failures.size(), fastld_fail);
    if (!ledger.boost_round_failures.empty())
      res.detail += "; first: " + ledger.boost_round_failures.front();
  });
}

CheckResult sparsifier_statistics(Ledger& ledger) {
  return timed(5, "sparsifier D_H <= 10 log2 n and w(V_H) >= min(w(V), w(V) log2 n / D)/8", 120,
               [&](CheckResult& res) {
    constexpr std::size_t kRuns = 50;
    std::size_t degree_ok = 0, weight_ok = 0;
    std::size_t max_dh = 0, min_delta = ~std::size_t{0}, max_delta = 0;
    for (std::uint64_t i = 0; i < kRuns; ++i) {
      GraphSpec s;
      s.family = Family::gnp;
      s.n = 4096;
      s.p = 0.039;
      s.weights = WeightModel::uniform_range;
      s.seed = 0xc5000 + i;
      const WeightedGraph g = generate(s);
      AlgorithmSpec spec{AlgorithmKind::sparse};
      spec.lambda = 4.0;
      const Experiment e = run_experiment({s, {}}, g, spec, i, congest(), false);
      note(ledger, g, e, i == 0);
      const std::size_t delta = g.max_degree();
      min_delta = std::min(min_delta, delta);
      max_delta = std::max(max_delta, delta);
      const std::size_t dh = *e.outcome.diagnostics.sampled_max_degree;
      max_dh = std::max(max_dh, dh);
      if (dh <= 10 * 12) ++degree_ok;
      const i128 wv = g.total_weight();
      const i128 wh = *e.outcome.diagnostics.sampled_weight;
      if (i128{8} * wh * delta >= std::min(wv * delta, wv * 12)) ++weight_ok;
    }
    const bool deg_pass = degree_ok * 100 >= 98 * kRuns;
    const bool weight_pass = weight_ok * 100 >= 98 * kRuns;
    res.passed = deg_pass && weight_pass;
    res.detail = fmt("%zu runs on gnp n=4096 (D in [%zu, %zu]), lambda=4: D_H bound held in %zu, "
                     "weight bound in %zu; max D_H = %zu",
                     kRuns, min_delta, max_delta, degree_ok, weight_ok, max_dh);
  });
}

CheckResult ranking_equivalence() {
  return timed(6, "ranking permutation equivalence on graphs with <= 7 nodes", 120,
               [&](CheckResult& res) {
    std::size_t trees = 0, cycles = 0, randoms = 0, failures = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const WeightedGraph& t : all_trees(n)) {
        ++trees;
        if (!check_perm_equivalence(t)) ++failures;
      }
    }
    for (std::int64_t n = 3; n <= 7; ++n) {
      GraphSpec s;
      s.family = Family::cycle;
      s.n = n;
      ++cycles;
      if (!check_perm_equivalence(generate(s))) ++failures;
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng = make_stream(0xc6, i);
      GraphSpec s;
      s.family = Family::gnp;
      s.n = 1 + static_cast<std::int64_t>(uniform_below(rng, 7));
      s.p = 0.1 + 0.8 * uniform01(rng);
      s.seed = i;
      ++randoms;
      if (!check_perm_equivalence(generate(s))) ++failures;
    }
    res.passed = failures == 0 && trees == 25;
    res.detail = fmt("%zu trees (all shapes up to 7 nodes), %zu cycles, %zu random graphs, %zu mismatches",
                     trees, cycles, randoms, failures);
  });
}

CheckResult ranking_size(Ledger& ledger) {
  return timed(7, "ranking size |I| >= n/(8(D+1)) for D <= n/(256 ln 100) - 1", 120,
               [&](CheckResult& res) {
    constexpr std::int64_t kN = 4096;
    // Delta <= n / (256 ln(1/p)) - 1 with failure probability p = 0.01.
    const auto regime = static_cast<std::size_t>(
        std::floor(static_cast<double>(kN) / (256.0 * std::log(100.0)) - 1.0));
    constexpr std::size_t kRuns = 300;
    std::size_t ok = 0, min_size = ~std::size_t{0}, single_round = 0;
    for (std::uint64_t i = 0; i < kRuns; ++i) {
      GraphSpec s;
      s.family = Family::gnp;
      s.n = kN;
      s.p = 0.1 / (kN - 1);
      s.seed = 0xc7000 + i * 1000;
      s = resample(s, [&](const WeightedGraph& g) { return g.max_degree() <= regime; });
      const WeightedGraph g = generate(s);
      const Experiment e = run_experiment({s, {}}, g, {AlgorithmKind::boppana, {}, 2.0}, i, congest(), false);
      note(ledger, g, e, i % 100 == 0);
      const std::size_t size = e.outcome.set.size();
      min_size = std::min(min_size, size);
      if (e.outcome.stats.rounds <= 1) ++single_round;
      if (is_independent(g, e.outcome.set.members) &&
          8 * (g.max_degree() + 1) * size >= static_cast<std::size_t>(kN))
        ++ok;
    }
    // Outside the regime, for information only.
    std::size_t dense_ok = 0;
    std::size_t dense_delta = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
      GraphSpec s;
      s.family = Family::gnp;
      s.n = kN;
      s.p = 20.0 / (kN - 1);
      s.seed = 0xc7d00 + i;
      const WeightedGraph g = generate(s);
      const Experiment e = run_experiment({s, {}}, g, {AlgorithmKind::boppana, {}, 2.0}, i, congest(), false);
      note(ledger, g, e, false);
      dense_delta = std::max(dense_delta, g.max_degree());
      if (8 * (g.max_degree() + 1) * e.outcome.set.size() >= static_cast<std::size_t>(kN)) ++dense_ok;
    }
    res.passed = ok * 100 >= 99 * kRuns && single_round == kRuns;
    res.detail = fmt("%zu one-round runs on gnp n=4096 with D <= %zu: bound held in %zu (min |I| = %zu); "
                     "outside the regime (D up to %zu) it held in %zu/20",
                     kRuns, regime, ok, min_size, dense_delta, dense_ok);
  });
}

CheckResult arboricity(Ledger& ledger) {
  return timed(8, "arboricity 8(1+eps) alpha w(I) >= OPT, emptying and halving", 300,
               [&](CheckResult& res) {
    constexpr double kEps[] = {0.25, 0.5, 1.0};
    std::size_t runs = 0, ratio_fail = 0, empty_fail = 0, halving_fail = 0;
    std::string first;
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng = make_stream(0xc8, i);
      GraphSpec s;
      s.n = 2 + static_cast<std::int64_t>(uniform_below(rng, 23));
      s.weights = kModels[i % 3];
      s.seed = 0xc8000 + i;
      switch (i % 6) {
        case 0: s.family = Family::tree; break;
        case 1: s.family = Family::degenerate; s.k = 1 + static_cast<std::int64_t>(uniform_below(rng, 3)); break;
        case 2: s.family = Family::cycle; s.n = std::max<std::int64_t>(s.n, 3); break;
        case 3: s.family = Family::path; break;
        case 4: s.family = Family::star; break;
        default: s.family = Family::gnp; s.p = std::min(1.0, 1.5 / s.n); break;
      }
      const WeightedGraph g = generate(s);
      const std::size_t alpha = std::max<std::size_t>(1, degeneracy(g));
      const double eps = kEps[i % 3];
      AlgorithmSpec spec{AlgorithmKind::arb, eps};
      spec.alpha = alpha;
      const Experiment e = run_experiment({s, {}}, g, spec, i, congest(), false);
      note(ledger, g, e, i % 50 == 0);
      ++runs;
      const Weight opt = brute_force_max_is(g).weight;
      const i128 q = quarters(eps);
      if (!((4 + q) * 8 * static_cast<i128>(alpha) * e.outcome.set.weight >= i128{4} * opt) ||
          !is_independent(g, e.outcome.set.members)) {
        ++ratio_fail;
        if (first.empty()) first = describe(e.record);
      }
      std::size_t phases = 1;
      while ((std::size_t{1} << (phases - 1)) < g.size()) ++phases;
      const auto& sizes = e.outcome.active_sizes;
      if (e.outcome.phases != phases || sizes.size() != phases + 1 || sizes.back() != 0) ++empty_fail;
      for (std::size_t k = 1; k < sizes.size(); ++k)
        if (2 * sizes[k] > sizes[k - 1]) {
          ++halving_fail;
          break;
        }
    }
    res.passed = ratio_fail == 0 && empty_fail == 0 && halving_fail == 0;
    res.detail = fmt("%zu runs (n <= 24, alpha = degeneracy): %zu ratio, %zu emptying, %zu halving violations",
                     runs, ratio_fail, empty_fail, halving_fail);
    if (!first.empty()) res.detail += "; first: " + first;
  });
}

CheckResult reduction_validity() {
  return timed(9, "reduction output is a maximal independent set of the cycle", 180,
               [&](CheckResult& res) {
    std::size_t runs = 0, rejected = 0, valid = 0, failures = 0;
    double worst_gap_ratio = 0;
    for (auto [n0, n1] : {std::pair<std::int64_t, std::size_t>{32, 16}, {64, 8}}) {
      GraphSpec s;
      s.family = Family::cycle;
      s.n = n0;
      const WeightedGraph cycle = generate(s);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ++runs;
        try {
          const RandMisResult r = rand_mis(cycle, sparse_algorithm(SparseParams{}), n1, seed);
          std::vector<NodeIndex> all(cycle.size());
          for (NodeIndex v = 0; v < cycle.size(); ++v) all[v] = v;
          if (verify_mis(cycle, all, r.mis.members)) ++valid;
          else ++failures;
          if (r.r_small > 0) worst_gap_ratio = std::max(worst_gap_ratio, r.max_gap / r.r_small);
        } catch (const InvalidInnerOutput&) {
          ++rejected;
        } catch (const ReductionError&) {
          ++failures;
        }
      }
    }
    res.passed = failures == 0 && valid + rejected == runs && valid > 0;
    res.detail = fmt("%zu runs at (32,16) and (64,8): %zu maximal, %zu failures, %zu with invalid "
                     "inner output; max gap / R_small = %.3f",
                     runs, valid, failures, rejected, worst_gap_ratio);
  });
}

CheckResult stack_property(const Ledger& ledger) {
  return timed(2, "stack property w(I) >= sum of pushed residuals", 0, [&](CheckResult& res) {
    res.passed = ledger.stack_runs > 0 && ledger.stack_failures.empty();
    res.detail = fmt("%zu boost and arb runs, %zu violations", ledger.stack_runs,
                     ledger.stack_failures.size());
    if (!ledger.stack_failures.empty()) res.detail += "; first: " + ledger.stack_failures.front();
  });
}

CheckResult engine_contracts(const Ledger& ledger) {
  return timed(10, "CONGEST budget and replay determinism", 0, [&](CheckResult& res) {
    std::size_t identical = 0, differing = 0, round_trip_fail = 0;
    std::string first;
    for (const ExperimentRecord& r : ledger.replay_pool) {
      const nlohmann::json j = to_json(r);
      if (to_json(record_from_json(nlohmann::json::parse(j.dump()))) != j) ++round_trip_fail;
      const ReplayCheck check = replay(r);
      if (check.identical) {
        ++identical;
      } else {
        ++differing;
        if (first.empty()) first = describe(r) + ": " + check.difference;
      }
    }
    res.passed = ledger.congest_runs > 0 && ledger.congest_violations.empty() && differing == 0 &&
                 round_trip_fail == 0 && identical > 0;
    res.detail = fmt("%zu CONGEST runs, %zu over budget; %zu records replayed, %zu identical, "
                     "%zu JSON round-trip failures",
                     ledger.congest_runs, ledger.congest_violations.size(), identical + differing,
                     identical, round_trip_fail);
    if (!ledger.congest_violations.empty()) res.detail += "; over budget: " + ledger.congest_violations.front();
    if (!first.empty()) res.detail += "; replay mismatch: " + first;
  });
}

}  // namespace

std::vector<CheckResult> run_acceptance(const ResultSink& sink) {
  Ledger ledger;
  std::vector<CheckResult> results;
  auto emit = [&](CheckResult r) {
    if (sink) sink(r);
    results.push_back(std::move(r));
  };
  emit(warmup_guarantee(ledger));
  emit(boosting_ratio(ledger));
  emit(round_accounting(ledger));
  emit(sparsifier_statistics(ledger));
  emit(ranking_equivalence());
  emit(ranking_size(ledger));
  emit(arboricity(ledger));
  emit(reduction_validity());
  emit(stack_property(ledger));
  emit(engine_contracts(ledger));
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return results;
}

std::string format_line(const CheckResult& r, bool with_timing) {
  std::ostringstream out;
  if (r.id > 0) out << "criterion " << r.id << ' ';
  out << (r.passed ? "PASS" : "FAIL") << "  " << r.title << ": " << r.detail;
  if (with_timing) {
    char buf[64];
    if (r.budget_seconds > 0)
      std::snprintf(buf, sizeof buf, " (%.1f s / %.0f s)", r.seconds, r.budget_seconds);
    else
      std::snprintf(buf, sizeof buf, " (%.1f s)", r.seconds);
    out << buf;
  }
  return out.str();
}

nlohmann::json summary_json(const std::vector<CheckResult>& results, bool with_timing) {
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json j{{"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
    if (r.id > 0) j["criterion"] = r.id;
    if (with_timing) {
      j["seconds"] = r.seconds;
      if (r.budget_seconds > 0) j["budget_seconds"] = r.budget_seconds;
    }
    all = all && r.passed;
    list.push_back(std::move(j));
  }
  return {{"passed", all}, {"results", list}};
}

}  // namespace mwis::harness
