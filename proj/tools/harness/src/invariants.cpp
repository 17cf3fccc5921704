#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "mwis/approx.hpp"
#include "mwis/arb.hpp"
#include "mwis/boost.hpp"
#include "mwis/graph_io.hpp"
#include "mwis/harness/battery.hpp"
#include "mwis/harness/corpus.hpp"
#include "mwis/harness/experiment.hpp"
#include "mwis/lowerbound.hpp"
#include "mwis/mis.hpp"
#include "mwis/oracle.hpp"
#include "mwis/ranking.hpp"
#include "mwis/sparsify.hpp"

namespace mwis::harness {
namespace {

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

template <typename F>
CheckResult check(std::string title, F&& body) {
  CheckResult r;
  r.title = std::move(title);
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("aborted: ") + ex.what();
  }
  return r;
}

std::vector<NodeIndex> all_nodes(const WeightedGraph& g) {
  std::vector<NodeIndex> v(g.size());
  std::iota(v.begin(), v.end(), NodeIndex{0});
  return v;
}

/// Small mixed-family graph for the property sweeps.
GraphSpec random_spec(std::uint64_t salt, std::uint64_t i, std::int64_t max_n) {
  constexpr Family kFamilies[] = {Family::cycle, Family::path, Family::clique,
                                  Family::star,  Family::gnp,  Family::tree,
                                  Family::degenerate};
  constexpr WeightModel kModels[] = {WeightModel::unit, WeightModel::uniform_range,
                                     WeightModel::heavy_tail};
  Rng rng = make_stream(salt, i);
  GraphSpec s;
  s.family = kFamilies[i % 7];
  s.n = 3 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 2)));
  if (s.family == Family::clique) s.n = std::min<std::int64_t>(s.n, 40);
  s.p = std::min(1.0, (0.5 + 6 * uniform01(rng)) / static_cast<double>(s.n));
  s.k = 1 + static_cast<std::int64_t>(uniform_below(rng, 3));
  s.weights = kModels[(i / 7) % 3];
  s.seed = salt ^ (i * 0x9e3779b97f4a7c15ULL);
  return s;
}

CheckResult generator_shapes() {
  return check("generators: symmetric adjacency and closed-form edge counts", [](CheckResult& r) {
    std::size_t graphs = 0, bad = 0;
    for (std::int64_t n = 3; n <= 60; ++n) {
      for (Family f : {Family::cycle, Family::path, Family::clique, Family::star, Family::tree}) {
        GraphSpec s;
        s.family = f;
        s.n = n;
        s.seed = static_cast<std::uint64_t>(n);
        const WeightedGraph g = generate(s);
        const std::size_t un = static_cast<std::size_t>(n);
        std::size_t want = un - 1;
        if (f == Family::cycle) want = un;
        if (f == Family::clique) want = un * (un - 1) / 2;
        bool symmetric = true;
        for (NodeIndex v = 0; v < g.size(); ++v)
          for (NodeIndex u : g.neighbors(v)) symmetric = symmetric && g.adjacent(u, v) && u != v;
        ++graphs;
        if (!symmetric || g.edge_count() != want || g.size() != un) ++bad;
      }
    }
    for (std::int64_t n0 = 3; n0 <= 8; ++n0) {
      for (std::int64_t n1 = 1; n1 <= 6; ++n1) {
        GraphSpec s;
        s.family = Family::cycle_of_cliques;
        s.n0 = n0;
        s.n1 = n1;
        const WeightedGraph g = generate(s);
        const auto a = static_cast<std::size_t>(n0), b = static_cast<std::size_t>(n1);
        ++graphs;
        bool degrees = true;
        for (NodeIndex v = 0; v < g.size(); ++v) degrees = degrees && g.degree(v) == 3 * b - 1;
        if (g.edge_count() != a * (b * (b - 1) / 2 + b * b) || !degrees) ++bad;
      }
    }
    r.passed = bad == 0;
    r.detail = fmt("%zu graphs, %zu mismatches", graphs, bad);
  });
}

CheckResult tree_degeneracy() {
  return check("degeneracy of random trees is 1", [](CheckResult& r) {
    std::size_t bad = 0, trees = 0;
    for (std::int64_t n = 2; n <= 1000; n += 7) {
      GraphSpec s;
      s.family = Family::tree;
      s.n = n;
      s.seed = static_cast<std::uint64_t>(n) * 3;
      ++trees;
      if (degeneracy(generate(s)) != 1) ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("%zu trees with 2..1000 nodes, %zu mismatches", trees, bad);
  });
}

CheckResult oracle_dominance() {
  return check("oracle weight dominates every algorithm's output", [](CheckResult& r) {
    std::size_t runs = 0, bad = 0;
    for (std::uint64_t i = 0; i < 80; ++i) {
      const GraphSpec s = random_spec(0x0dd, i, 20);
      const WeightedGraph g = generate(s);
      const Weight opt = brute_force_max_is(g).weight;
      const std::size_t alpha = std::max<std::size_t>(1, degeneracy(g));
      for (AlgorithmKind k : {AlgorithmKind::heavy, AlgorithmKind::sparse, AlgorithmKind::boost_heavy,
                              AlgorithmKind::arb, AlgorithmKind::boppana, AlgorithmKind::luby}) {
        AlgorithmSpec spec{k, 1.0};
        spec.alpha = alpha;
        const Outcome o = run_algorithm(g, spec, i, {});
        ++runs;
        if (o.set.weight > opt || !is_independent(g, o.set.members)) ++bad;
      }
    }
    r.passed = bad == 0;
    r.detail = fmt("%zu runs, %zu exceed OPT or are not independent", runs, bad);
  });
}

CheckResult io_round_trip() {
  return check("save/load round trip", [](CheckResult& r) {
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const WeightedGraph g = generate(random_spec(0x10, i, 60));
      if (!(load(save(g)) == g)) ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("1000 graphs, %zu mismatches", bad);
  });
}

CheckResult simulator_determinism() {
  return check("simulator determinism and schedule independence", [](CheckResult& r) {
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 40; ++i) {
      const WeightedGraph g = generate(random_spec(0x51, i, 150));
      sim::SimOptions seq;
      seq.seed = i;
      sim::SimOptions par = seq;
      par.threads = 4;
      const auto a = sim::run(g, luby_mis_program(), seq);
      const auto b = sim::run(g, luby_mis_program(), seq);
      const auto c = sim::run(g, luby_mis_program(), par);
      const auto d = sim::run(g, local_stats_program(), par);
      const auto e = sim::run(g, local_stats_program(), seq);
      if (a.outputs != b.outputs || !(a.stats == b.stats) || a.outputs != c.outputs ||
          !(a.stats == c.stats) || d.outputs != e.outputs || !(d.stats == e.stats))
        ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("40 graphs, sequential vs repeated vs 4 threads: %zu differences", bad);
  });
}

CheckResult luby_validity() {
  return check("Luby MIS validity and 8 log2 n round bound", [](CheckResult& r) {
    std::size_t invalid = 0, slow = 0;
    constexpr std::size_t kRuns = 1000;
    for (std::uint64_t i = 0; i < kRuns; ++i) {
      const WeightedGraph g = generate(random_spec(0x1b, i, 200));
      sim::SimOptions o;
      o.seed = i;
      const auto run = sim::run(g, luby_mis_program(), o);
      std::vector<NodeIndex> in;
      for (NodeIndex v = 0; v < g.size(); ++v)
        if (run.outputs[v].value_or(false)) in.push_back(v);
      if (!verify_mis(g, all_nodes(g), in)) ++invalid;
      if (static_cast<double>(run.stats.rounds) > 8 * std::log2(static_cast<double>(g.size()))) ++slow;
    }
    r.passed = invalid == 0 && slow * 100 <= kRuns;
    r.detail = fmt("%zu runs, %zu invalid, %zu over the round bound", kRuns, invalid, slow);
  });
}

CheckResult greedy_validity() {
  return check("greedy MIS is maximal", [](CheckResult& r) {
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const WeightedGraph g = generate(random_spec(0x96, i, 200));
      const auto a = greedy_mis(g, GreedyOrder::by_id);
      const auto b = greedy_mis(g, GreedyOrder::by_permutation, i);
      if (!verify_mis(g, all_nodes(g), a.members) || !verify_mis(g, all_nodes(g), b.members)) ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("300 graphs x 2 orders, %zu failures", bad);
  });
}

CheckResult heavy_invariants() {
  return check("good-node algorithm: bound, independence, round count", [](CheckResult& r) {
    std::size_t bad = 0, checked = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const WeightedGraph g = generate(random_spec(0x4e, i, 200));
      const Instance inst = Instance::whole(g);
      const AlgorithmRun run = heavy_mis_approx(inst, i);
      if (!run.mis_valid) continue;
      ++checked;
      const __int128 lhs = __int128{4} * (g.max_degree() + 1) * sum_over(g.weights(), run.members);
      sim::SimOptions o;
      o.seed = derive_seed(i, 2);
      const auto good = good_nodes(inst);
      const auto mis = sim::run_on_subgraph(g, good, luby_mis_program(), o);
      const std::size_t stats_rounds = g.edge_count() > 0 ? 2 : 0;
      if (lhs < g.total_weight() || !is_independent(g, run.members) ||
          run.stats.rounds != stats_rounds + mis.stats.rounds)
        ++bad;
    }
    r.passed = bad == 0 && checked > 0;
    r.detail = fmt("%zu valid runs, %zu failures", checked, bad);
  });
}

CheckResult sampling_clamp() {
  return check("sampling profile matches the sequential formula", [](CheckResult& r) {
    std::size_t bad = 0, nodes = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const WeightedGraph g = generate(random_spec(0x5a, i, 200));
      const Instance inst = Instance::whole(g);
      const SparseParams params{1.0 + static_cast<double>(i % 4), i % 2 ? LogBase::natural : LogBase::two};
      const SamplingProfile a = compute_sampling_profile(inst, params, i);
      const SamplingProfile b = sampling_profile_reference(inst, params);
      for (NodeIndex v = 0; v < g.size(); ++v) {
        ++nodes;
        const auto& x = a.entries[v];
        const auto& y = b.entries[v];
        if (x.delta != y.delta || x.w_max != y.w_max || x.weighted_degree != y.weighted_degree ||
            x.p != y.p || x.p < 0 || x.p > 1)
          ++bad;
      }
    }
    r.passed = bad == 0;
    r.detail = fmt("%zu nodes, %zu mismatches", nodes, bad);
  });
}

CheckResult stack_invariants() {
  return check("boost: stack property, cover fact, distributed pop equals sequential pop",
               [](CheckResult& r) {
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 150; ++i) {
      const WeightedGraph g = generate(random_spec(0x57, i, 60));
      const BoostResult b = boost(g, heavy_algorithm(), {i % 2 ? 0.5 : 1.0, 8.0}, i);
      if (!check_stack_property(g, b.set, b.stack) || !check_stack_cover(g, b.set.members, b.stack) ||
          pop_stack(g, b.stack) != b.set.members || !is_independent(g, b.set.members))
        ++bad;
      for (const auto& frame : b.stack)
        for (Weight w : frame.residual)
          if (w <= 0) ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("150 runs, %zu failures", bad);
  });
}

CheckResult ranking_soundness() {
  return check("Boppana output is independent; 128-bit ranks do not collide", [](CheckResult& r) {
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const WeightedGraph g = generate(random_spec(0xb0, i, 200));
      const Instance inst = Instance::whole(g);
      if (!is_independent(g, boppana_algorithm(1 + i % 4)(inst, i).members)) ++bad;
    }
    Rng rng = make_stream(0xb1, 0);
    const Rank range = rank_range(1u << 20, 4);
    std::size_t collisions = 0;
    for (int k = 0; k < 1000000; ++k)
      if (uniform_rank(rng, range) == uniform_rank(rng, range)) ++collisions;
    r.passed = bad == 0 && collisions == 0;
    r.detail = fmt("300 graphs, %zu dependent outputs; %zu collisions in 10^6 rank pairs", bad, collisions);
  });
}

CheckResult reduction_shapes() {
  return check("cycle of cliques degrees and map-back independence", [](CheckResult& r) {
    std::size_t bad = 0;
    for (std::size_t n0 = 3; n0 <= 12; ++n0) {
      for (std::size_t n1 = 1; n1 <= 8; ++n1) {
        const CliqueCycle cc = build_clique_cycle(n0, n1);
        for (NodeIndex v = 0; v < cc.graph.size(); ++v)
          if (cc.graph.degree(v) != 3 * n1 - 1) ++bad;
        const auto greedy = greedy_mis(cc.graph, GreedyOrder::by_permutation, n0 * 31 + n1);
        const auto hits = map_back(cc, greedy.members);
        for (std::size_t k = 0; k < hits.size(); ++k) {
          const std::size_t next = hits[(k + 1) % hits.size()];
          if (hits.size() > 1 && (next == (hits[k] + 1) % n0)) ++bad;
        }
      }
    }
    r.passed = bad == 0;
    r.detail = fmt("80 constructions, %zu failures", bad);
  });
}

}  // namespace

std::vector<CheckResult> run_invariants(const ResultSink& sink) {
  std::vector<CheckResult> results;
  auto emit = [&](CheckResult r) {
    if (sink) sink(r);
    results.push_back(std::move(r));
  };
  emit(generator_shapes());
  emit(tree_degeneracy());
  emit(oracle_dominance());
  emit(io_round_trip());
  emit(simulator_determinism());
  emit(luby_validity());
  emit(greedy_validity());
  emit(heavy_invariants());
  emit(sampling_clamp());
  emit(stack_invariants());
  emit(ranking_soundness());
  emit(reduction_shapes());
  return results;
}

}  // namespace mwis::harness
