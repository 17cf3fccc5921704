// mwis: command line front end for the generators, algorithms and checks.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwis/graph_io.hpp"
#include "mwis/harness/battery.hpp"
#include "mwis/harness/experiment.hpp"
#include "mwis/lowerbound.hpp"
#include "mwis/oracle.hpp"

namespace {

using namespace mwis;
using namespace mwis::harness;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;
constexpr int kEngine = 4;

std::uint64_t env_seed() {
  const char* s = std::getenv("MWIS_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos, 0);
    if (pos != std::string(s).size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("MWIS_SEED must be an unsigned integer");
  }
}

// "3", "1,5,9" or "0..9" (inclusive).
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [](const std::string& s) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (s.empty() || pos != s.size()) throw UsageError("bad seed '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto lo = number(item.substr(0, dots));
    const auto hi = number(item.substr(dots + 2));
    if (hi < lo || hi - lo > 10'000'000) throw UsageError("bad seed range '" + item + "'");
    for (auto s = lo;; ++s) {
      out.push_back(s);
      if (s == hi) break;
    }
  }
  if (out.empty()) throw UsageError("no seeds given");
  return out;
}

struct GraphOptions {
  std::string file;
  std::string family;
  std::int64_t n = 0;
  double p = 0.0;
  std::int64_t k = 1;
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  std::string weights = "unit";
  Weight weight_lo = 1;
  Weight weight_hi = 100;
  std::optional<std::uint64_t> graph_seed;

  void add(CLI::App* app, bool allow_file) {
    if (allow_file) app->add_option("-g,--graph", file, "Graph file to load");
    app->add_option("--family", family,
                    "cycle|path|clique|star|gnp|tree|degenerate|cycle_of_cliques");
    app->add_option("--n", n, "Number of nodes");
    app->add_option("--p", p, "Edge probability (gnp)");
    app->add_option("--k", k, "Back edges per node (degenerate)");
    app->add_option("--n0", n0, "Cycle length (cycle_of_cliques)");
    app->add_option("--n1", n1, "Clique size (cycle_of_cliques)");
    app->add_option("--weights", weights, "unit|uniform_range|heavy_tail");
    app->add_option("--wlo", weight_lo, "Lowest weight");
    app->add_option("--whi", weight_hi, "Highest weight");
    app->add_option("--graph-seed", graph_seed, "Generator seed (default: the run seed)");
  }

  GraphSpec spec(std::uint64_t seed) const {
    GraphSpec s;
    const auto f = parse_family(family);
    if (!f) throw UsageError("unknown family '" + family + "'");
    const auto m = parse_weight_model(weights);
    if (!m) throw UsageError("unknown weight model '" + weights + "'");
    s.family = *f;
    s.n = n;
    s.p = p;
    s.k = k;
    s.n0 = n0;
    s.n1 = n1;
    s.weights = *m;
    s.weight_lo = weight_lo;
    s.weight_hi = weight_hi;
    s.seed = graph_seed.value_or(seed);
    return s;
  }

  GraphSource source(std::uint64_t seed) const {
    if (!file.empty() && !family.empty()) throw UsageError("give either --graph or --family");
    if (file.empty() && family.empty()) throw UsageError("a graph is required (--graph or --family)");
    GraphSource src;
    if (!file.empty())
      src.file = file;
    else
      src.spec = spec(seed);
    return src;
  }
};

struct AlgOptions {
  std::string alg = "heavy";
  std::optional<double> eps;
  std::optional<double> c;
  double lambda = 4.0;
  std::string log_base = "two";
  std::optional<std::size_t> alpha;

  void add(CLI::App* app) {
    app->add_option("--alg", alg,
                    "heavy|sparse|boost-heavy|boost-sparse|arb|boppana|fastld|luby");
    app->add_option("--eps", eps, "Accuracy parameter");
    app->add_option("--c", c, "Boosting constant, or rank exponent for boppana/fastld");
    app->add_option("--lambda", lambda, "Sampling constant (sparse)");
    app->add_option("--log-base", log_base, "two|natural (sparse)");
    app->add_option("--alpha", alpha, "Arboricity bound (arb)");
  }

  AlgorithmSpec spec() const {
    AlgorithmSpec s;
    const auto kind = parse_algorithm(alg);
    if (!kind) throw UsageError("unknown algorithm '" + alg + "'");
    s.kind = *kind;
    s.eps = eps;
    s.c = c;
    s.lambda = lambda;
    if (log_base == "two")
      s.log_base = LogBase::two;
    else if (log_base == "natural")
      s.log_base = LogBase::natural;
    else
      throw UsageError("--log-base must be two or natural");
    s.alpha = alpha;
    validate(s);
    return s;
  }
};

struct SimCli {
  std::string mode = "congest";
  unsigned c_msg = 32;
  std::optional<std::uint64_t> n_upper;
  std::size_t max_rounds = 100000;
  unsigned threads = 1;

  void add(CLI::App* app) {
    app->add_option("--mode", mode, "congest|local");
    app->add_option("--c-msg", c_msg, "Message budget constant");
    app->add_option("--n-upper", n_upper, "Upper bound on n known to the nodes");
    app->add_option("--max-rounds", max_rounds, "Round limit");
    app->add_option("--threads", threads, "Worker threads per round");
  }

  sim::SimOptions options() const {
    sim::SimOptions o;
    if (mode == "congest")
      o.mode = sim::Mode::congest;
    else if (mode == "local")
      o.mode = sim::Mode::local;
    else
      throw UsageError("--mode must be congest or local");
    if (c_msg == 0) throw UsageError("--c-msg must be positive");
    if (threads == 0) throw UsageError("--threads must be positive");
    o.c_msg = c_msg;
    o.n_upper = n_upper;
    o.max_rounds = max_rounds;
    o.threads = threads;
    return o;
  }
};

// Writes to `path`, or stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::uint64_t> seeds_from(const std::string& seeds, std::optional<std::uint64_t> seed) {
  if (!seeds.empty() && seed) throw UsageError("give either --seed or --seeds");
  if (!seeds.empty()) return parse_seeds(seeds);
  return {seed.value_or(env_seed())};
}

int cmd_gen(const GraphOptions& go, std::optional<std::uint64_t> seed, const std::string& out) {
  if (go.family.empty()) throw UsageError("--family is required");
  const WeightedGraph g = generate(go.spec(seed.value_or(env_seed())));
  Output o(out);
  o.stream() << save(g);
  return kOk;
}

struct RunCli {
  GraphOptions graph;
  AlgOptions alg;
  SimCli sim;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  bool oracle = false;
  std::size_t oracle_cap = 26;
  std::string out;
  std::string csv;
  std::string stack_dump;
};

int cmd_run(const RunCli& rc) {
  const AlgorithmSpec spec = rc.alg.spec();
  const sim::SimOptions opts = rc.sim.options();
  const auto seeds = seeds_from(rc.seeds, rc.seed);

  Output out(rc.out);
  std::optional<Output> csv;
  if (!rc.csv.empty()) {
    csv.emplace(rc.csv);
    csv->stream() << csv_header() << '\n';
  }
  json stacks = json::array();

  // A file graph is loaded once; generated graphs follow the run seed
  // unless --graph-seed pins them.
  std::optional<WeightedGraph> fixed;
  if (!rc.graph.file.empty() || rc.graph.graph_seed) {
    const GraphSource src = rc.graph.source(seeds.front());
    fixed = load_source(src);
  }
  bool all_valid = true;
  for (const std::uint64_t s : seeds) {
    const GraphSource src = rc.graph.source(s);
    const WeightedGraph g = fixed ? *fixed : load_source(src);
    const Experiment e = run_experiment(src, g, spec, s, opts, rc.oracle, rc.oracle_cap);
    out.stream() << to_json(e.record).dump() << '\n';
    if (csv) csv->stream() << to_csv_row(e.record) << '\n';
    if (!rc.stack_dump.empty() && e.outcome.stack)
      stacks.push_back({{"seed", s}, {"frames", stack_to_json(g, *e.outcome.stack)}});
    all_valid = all_valid && e.record.mis_valid && e.record.stack_ok.value_or(true);
  }
  if (!rc.stack_dump.empty()) {
    Output d(rc.stack_dump);
    d.stream() << stacks.dump(1) << '\n';
  }
  if (!all_valid) {
    std::cerr << "mwis: output failed validation (see mis_valid / stack_ok)\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const std::string& graph_file, bool as_json,
               bool timing) {
  if (!graph_file.empty()) {
    const WeightedGraph g = load_file(graph_file);
    std::cout << "graph ok: n=" << g.size() << " m=" << g.edge_count()
              << " total_weight=" << g.total_weight() << '\n';
    if (suite.empty()) return kOk;
  }
  std::vector<CheckResult> results;
  const ResultSink print = [&](const CheckResult& r) {
    if (!as_json) std::cout << format_line(r, timing) << std::endl;
  };
  if (suite == "invariants")
    results = run_invariants(print);
  else if (suite == "acceptance")
    results = run_acceptance(print);
  else
    throw UsageError("verify needs 'invariants', 'acceptance' or --graph");
  if (as_json) std::cout << summary_json(results, timing).dump(1) << '\n';
  for (const auto& r : results)
    if (!r.passed) return kInvariant;
  return kOk;
}

struct ReduceCli {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  AlgOptions alg;
  SimCli sim;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  double approx_c = 1.0;
  std::string out;
};

int cmd_reduce(ReduceCli rc) {
  if (rc.n0 < 3) throw UsageError("--n0 must be at least 3");
  if (rc.n1 < 1) throw UsageError("--n1 must be at least 1");
  if (!(rc.approx_c >= 1)) throw UsageError("--approx-c must be >= 1");
  const AlgorithmSpec spec = rc.alg.spec();
  const Algorithm alg = make_algorithm(spec);
  RandMisParams params;
  params.approx_c = rc.approx_c;
  params.sim = rc.sim.options();

  GraphSpec cs;
  cs.family = Family::cycle;
  cs.n = static_cast<std::int64_t>(rc.n0);
  const WeightedGraph cycle = generate(cs);

  Output out(rc.out);
  int status = kOk;
  for (const std::uint64_t s : seeds_from(rc.seeds, rc.seed)) {
    json j{{"n0", rc.n0}, {"n1", rc.n1}, {"algorithm", std::string(to_string(spec.kind))},
           {"seed", s}};
    try {
      const RandMisResult r = rand_mis(cycle, alg, rc.n1, s, params);
      j["inner_rounds"] = r.inner_stats.rounds;
      j["inner_messages"] = r.inner_stats.messages_sent;
      j["inner_mis_valid"] = r.inner_mis_valid;
      j["mapped_size"] = r.mapped.size();
      j["mis_size"] = r.mis.members.size();
      j["max_gap"] = r.max_gap;
      j["r_large"] = r.r_large;
      j["r_small"] = r.r_small;
      j["valid"] = true;
    } catch (const ReductionError& e) {
      j["valid"] = false;
      j["error"] = e.what();
      status = kInvariant;
    }
    out.stream() << j.dump() << '\n';
  }
  return status;
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  std::size_t mismatches = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError("line " + std::to_string(lineno) + ": " + e.what());
    }
    const ExperimentRecord r = record_from_json(j);
    const ReplayCheck check = replay(r);
    std::cout << "record " << lineno << (check.identical ? " identical" : " DIFFERS");
    if (!check.identical) std::cout << ": " << check.difference;
    std::cout << '\n';
    if (!check.identical) ++mismatches;
  }
  return mismatches == 0 ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed maximum weight independent set toolkit"};
  app.require_subcommand(1);

  GraphOptions gen_graph;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it in the text format");
  gen_graph.add(gen, false);
  gen->add_option("--seed", gen_seed, "Generator seed (default: $MWIS_SEED or 0)");
  gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");

  RunCli run_cli;
  auto* run = app.add_subcommand("run", "Run an algorithm and print one JSON record per seed");
  run_cli.graph.add(run, true);
  run_cli.alg.add(run);
  run_cli.sim.add(run);
  run->add_option("--seed", run_cli.seed, "Run seed (default: $MWIS_SEED or 0)");
  run->add_option("--seeds", run_cli.seeds, "Seed list: 1,2,3 or 0..9");
  run->add_flag("--oracle", run_cli.oracle, "Compute the exact optimum for small graphs");
  run->add_option("--oracle-cap", run_cli.oracle_cap, "Largest n for the oracle");
  run->add_option("-o,--out", run_cli.out, "JSONL output (default: stdout)");
  run->add_option("--csv", run_cli.csv, "Also write a CSV table");
  run->add_option("--stack-dump", run_cli.stack_dump, "Write the phase stacks as JSON");

  std::string verify_suite;
  std::string verify_graph;
  bool verify_json = false;
  bool verify_no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant or acceptance checks");
  verify->add_option("suite", verify_suite, "invariants|acceptance");
  verify->add_option("-g,--graph", verify_graph, "Validate a graph file");
  verify->add_flag("--json", verify_json, "Print a JSON summary");
  verify->add_flag("--no-timing", verify_no_timing, "Omit timings from the report");

  ReduceCli reduce_cli;
  auto* reduce = app.add_subcommand("reduce", "Cycle MIS via a cycle of cliques; prints gap statistics");
  reduce->add_option("--n0", reduce_cli.n0, "Cycle length")->required();
  reduce->add_option("--n1", reduce_cli.n1, "Clique size")->required();
  reduce_cli.alg.add(reduce);
  reduce_cli.sim.add(reduce);
  reduce_cli.sim.mode = "local";
  reduce->add_option("--seed", reduce_cli.seed, "Seed (default: $MWIS_SEED or 0)");
  reduce->add_option("--seeds", reduce_cli.seeds, "Seed list: 1,2,3 or 0..9");
  reduce->add_option("--approx-c", reduce_cli.approx_c, "Approximation constant for the gap bounds");
  reduce->add_option("-o,--out", reduce_cli.out, "JSONL output (default: stdout)");

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run JSONL records and compare");
  replay_cmd->add_option("records", replay_path, "JSONL file from 'run'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_graph, gen_seed, gen_out);
    if (*run) return cmd_run(run_cli);
    if (*verify) return cmd_verify(verify_suite, verify_graph, verify_json, !verify_no_timing);
    if (*reduce) return cmd_reduce(reduce_cli);
    if (*replay_cmd) return cmd_replay(replay_path);
  } catch (const UsageError& e) {
    std::cerr << "mwis: usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "mwis: bad record: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "mwis: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphInvariantError& e) {
    std::cerr << "mwis: graph invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const WeightOverflowError& e) {
    std::cerr << "mwis: graph invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const InnerFailure& e) {
    std::cerr << "mwis: invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const ReductionError& e) {
    std::cerr << "mwis: invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const sim::EngineError& e) {
    std::cerr << "mwis: engine violation: " << e.what() << '\n';
    return kEngine;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mwis: usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "mwis: error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
