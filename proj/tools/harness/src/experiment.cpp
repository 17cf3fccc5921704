#include "mwis/harness/experiment.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mwis/approx.hpp"
#include "mwis/arb.hpp"
#include "mwis/graph_io.hpp"
#include "mwis/mis.hpp"
#include "mwis/oracle.hpp"
#include "mwis/ranking.hpp"

namespace mwis::harness {
namespace {

using nlohmann::json;

constexpr std::array kAlgorithmNames = {
    std::pair{AlgorithmKind::heavy, std::string_view{"heavy"}},
    std::pair{AlgorithmKind::sparse, std::string_view{"sparse"}},
    std::pair{AlgorithmKind::boost_heavy, std::string_view{"boost-heavy"}},
    std::pair{AlgorithmKind::boost_sparse, std::string_view{"boost-sparse"}},
    std::pair{AlgorithmKind::arb, std::string_view{"arb"}},
    std::pair{AlgorithmKind::boppana, std::string_view{"boppana"}},
    std::pair{AlgorithmKind::fastld, std::string_view{"fastld"}},
    std::pair{AlgorithmKind::luby, std::string_view{"luby"}},
};

bool needs_eps(AlgorithmKind k) {
  return k == AlgorithmKind::boost_heavy || k == AlgorithmKind::boost_sparse ||
         k == AlgorithmKind::arb || k == AlgorithmKind::fastld;
}

bool uses_rank_c(AlgorithmKind k) {
  return k == AlgorithmKind::boppana || k == AlgorithmKind::fastld;
}

Outcome from_run(const WeightedGraph& g, AlgorithmRun run) {
  Outcome out;
  out.set = make_set(g, std::move(run.members));
  out.stats = std::move(run.stats);
  out.mis_valid = run.mis_valid;
  out.diagnostics = run.diagnostics;
  return out;
}

Outcome from_boost(BoostResult r) {
  Outcome out;
  out.set = std::move(r.set);
  out.stats = std::move(r.stats);
  out.mis_valid = r.mis_valid;
  out.stack = std::move(r.stack);
  out.phases = r.phases;
  out.max_inner_rounds = r.max_inner_rounds;
  return out;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

json spec_to_json(const GraphSpec& s) {
  return json{{"family", std::string(to_string(s.family))},
              {"n", s.n},
              {"p", s.p},
              {"k", s.k},
              {"n0", s.n0},
              {"n1", s.n1},
              {"weights", std::string(to_string(s.weights))},
              {"weight_lo", s.weight_lo},
              {"weight_hi", s.weight_hi},
              {"seed", s.seed}};
}

GraphSpec spec_from_json(const json& j) {
  GraphSpec s;
  const auto family = parse_family(field<std::string>(j, "family"));
  if (!family) throw SchemaError("unknown graph family");
  s.family = *family;
  s.n = field<std::int64_t>(j, "n");
  s.p = field<double>(j, "p");
  s.k = field<std::int64_t>(j, "k");
  s.n0 = field<std::int64_t>(j, "n0");
  s.n1 = field<std::int64_t>(j, "n1");
  const auto model = parse_weight_model(field<std::string>(j, "weights"));
  if (!model) throw SchemaError("unknown weight model");
  s.weights = *model;
  s.weight_lo = field<Weight>(j, "weight_lo");
  s.weight_hi = field<Weight>(j, "weight_hi");
  s.seed = field<std::uint64_t>(j, "seed");
  return s;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view to_string(AlgorithmKind k) {
  for (const auto& [kind, name] : kAlgorithmNames)
    if (kind == k) return name;
  return "?";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view s) {
  for (const auto& [kind, name] : kAlgorithmNames)
    if (name == s) return kind;
  return std::nullopt;
}

void validate(const AlgorithmSpec& spec) {
  const std::string name(to_string(spec.kind));
  if (needs_eps(spec.kind)) {
    if (!spec.eps) throw UsageError("--eps is required for " + name);
    if (!(*spec.eps > 0) || !std::isfinite(*spec.eps))
      throw UsageError("--eps must be a positive number");
  }
  if (spec.kind == AlgorithmKind::arb) {
    if (!spec.alpha) throw UsageError("--alpha is required for arb");
    if (*spec.alpha < 1) throw UsageError("--alpha must be >= 1");
  }
  if (!(spec.lambda > 0) || !std::isfinite(spec.lambda))
    throw UsageError("--lambda must be a positive number");
  if (spec.c) {
    if (uses_rank_c(spec.kind)) {
      if (*spec.c < 1 || *spec.c > 64 || std::floor(*spec.c) != *spec.c)
        throw UsageError("--c must be an integer in [1, 64] for " + name);
    } else if (!(*spec.c >= 1) || !std::isfinite(*spec.c)) {
      throw UsageError("--c must be >= 1");
    }
  }
  try {
    if (needs_eps(spec.kind)) phase_count(BoostParams{*spec.eps, 8.0});
    if (spec.kind == AlgorithmKind::boost_heavy || spec.kind == AlgorithmKind::boost_sparse)
      phase_count(BoostParams{*spec.eps, effective_c(spec)});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

double effective_c(const AlgorithmSpec& spec) {
  if (uses_rank_c(spec.kind)) return spec.c.value_or(2.0);
  if (spec.kind == AlgorithmKind::boost_heavy || spec.kind == AlgorithmKind::boost_sparse)
    return spec.c.value_or(8.0);
  return spec.c.value_or(0.0);
}

Outcome run_algorithm(const WeightedGraph& g, const AlgorithmSpec& spec, std::uint64_t seed,
                      const sim::SimOptions& opts) {
  validate(spec);
  const Instance inst = Instance::whole(g, opts);
  const SparseParams sparse{spec.lambda, spec.log_base};
  switch (spec.kind) {
    case AlgorithmKind::heavy:
      return from_run(g, heavy_mis_approx(inst, seed));
    case AlgorithmKind::sparse:
      return from_run(g, sparse_approx(inst, sparse, seed));
    case AlgorithmKind::boost_heavy:
      return from_boost(boost(inst, heavy_algorithm(), {*spec.eps, effective_c(spec)}, seed));
    case AlgorithmKind::boost_sparse:
      return from_boost(
          boost(inst, sparse_algorithm(sparse), {*spec.eps, effective_c(spec)}, seed));
    case AlgorithmKind::arb: {
      ArbResult r = arb_approx(g, {*spec.alpha, *spec.eps}, default_arb_inner(*spec.eps), seed, opts);
      Outcome out;
      out.set = std::move(r.set);
      out.stats = std::move(r.stats);
      out.mis_valid = r.mis_valid;
      out.stack = std::move(r.stack);
      out.phases = r.phases;
      out.max_inner_rounds = r.max_inner_rounds;
      out.active_sizes = std::move(r.active_sizes);
      return out;
    }
    case AlgorithmKind::boppana:
      return from_run(g, boppana_algorithm(static_cast<unsigned>(effective_c(spec)))(inst, seed));
    case AlgorithmKind::fastld:
      return from_boost(fast_low_degree_approx(g, *spec.eps,
                                               static_cast<unsigned>(effective_c(spec)), seed, opts));
    case AlgorithmKind::luby: {
      auto run = sim::run(g, luby_mis_program(), inst.options(seed));
      AlgorithmRun r;
      for (NodeIndex v = 0; v < g.size(); ++v)
        if (run.outputs[v].value_or(false)) r.members.push_back(v);
      r.stats = std::move(run.stats);
      r.mis_valid = verify_mis(g, inst.nodes, r.members).ok;
      return from_run(g, std::move(r));
    }
  }
  throw UsageError("unknown algorithm");
}

Algorithm make_algorithm(const AlgorithmSpec& spec) {
  validate(spec);
  return [spec](const Instance& inst, std::uint64_t seed) {
    if (inst.nodes.size() != inst.graph->size())
      throw std::invalid_argument("algorithm handle needs the whole graph");
    Outcome o = run_algorithm(*inst.graph, spec, seed, inst.sim);
    AlgorithmRun run;
    run.members = std::move(o.set.members);
    run.stats = std::move(o.stats);
    run.mis_valid = o.mis_valid;
    run.diagnostics = o.diagnostics;
    return run;
  };
}

json stack_to_json(const WeightedGraph& g, const PhaseStack& stack) {
  json frames = json::array();
  for (const StackFrame& f : stack) {
    json members = json::array();
    for (NodeIndex v : f.members) members.push_back(g.id(v));
    frames.push_back({{"phase", f.phase}, {"members", members}, {"residual", f.residual}});
  }
  return frames;
}

WeightedGraph load_source(const GraphSource& source) {
  if (source.spec) return generate(*source.spec);
  if (source.file) return load_file(*source.file);
  throw UsageError("no graph source given");
}

std::string digest_members(const WeightedGraph& g, std::span<const NodeIndex> members) {
  std::vector<NodeId> ids;
  ids.reserve(members.size());
  for (NodeIndex v : members) ids.push_back(g.id(v));
  std::sort(ids.begin(), ids.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (NodeId id : ids) {
    for (int b = 0; b < 8; ++b) {
      h ^= (id >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const ExperimentRecord& r) {
  json graph = json::object();
  if (r.graph.spec) graph = spec_to_json(*r.graph.spec);
  if (r.graph.file) graph["file"] = *r.graph.file;

  json alg{{"name", std::string(to_string(r.algorithm.kind))},
           {"lambda", r.algorithm.lambda},
           {"log_base", r.algorithm.log_base == LogBase::two ? "two" : "natural"}};
  put_optional(alg, "eps", r.algorithm.eps);
  put_optional(alg, "c", r.algorithm.c);
  put_optional(alg, "alpha", r.algorithm.alpha);

  json sim{{"mode", std::string(sim::to_string(r.mode))},
           {"c_msg", r.c_msg},
           {"max_rounds", r.max_rounds}};
  put_optional(sim, "n_upper", r.n_upper);

  json j{{"graph", graph},
         {"n", r.n},
         {"m", r.m},
         {"max_degree", r.max_degree},
         {"degeneracy", r.degeneracy},
         {"total_weight", r.total_weight},
         {"algorithm", alg},
         {"sim", sim},
         {"seed", r.seed},
         {"weight", r.weight},
         {"size", r.size},
         {"members_digest", r.members_digest},
         {"mis_valid", r.mis_valid},
         {"rounds", r.rounds},
         {"messages", r.messages},
         {"max_message_bits", r.max_message_bits},
         {"budget_bits", r.budget_bits},
         {"phases", r.phases},
         {"wall_ms", r.wall_ms}};
  put_optional(j, "stack_ok", r.stack_ok);
  put_optional(j, "opt", r.opt);
  put_optional(j, "approx_ratio", r.approx_ratio);
  put_optional(j, "oracle_error", r.oracle_error);
  json diag = json::object();
  put_optional(diag, "sampled_max_degree", r.diagnostics.sampled_max_degree);
  put_optional(diag, "sampled_weight", r.diagnostics.sampled_weight);
  put_optional(diag, "sampled_nodes", r.diagnostics.sampled_nodes);
  if (!diag.empty()) j["diagnostics"] = diag;
  return j;
}

ExperimentRecord record_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("record is not an object");
  ExperimentRecord r;
  const json& graph = j.contains("graph") ? j.at("graph") : throw SchemaError("missing field 'graph'");
  if (graph.contains("family")) r.graph.spec = spec_from_json(graph);
  r.graph.file = optional_field<std::string>(graph, "file");
  if (!r.graph.spec && !r.graph.file) throw SchemaError("graph has neither a generator nor a file");

  r.n = field<std::size_t>(j, "n");
  r.m = field<std::size_t>(j, "m");
  r.max_degree = field<std::size_t>(j, "max_degree");
  r.degeneracy = field<std::size_t>(j, "degeneracy");
  r.total_weight = field<Weight>(j, "total_weight");

  const json& alg = j.contains("algorithm") ? j.at("algorithm") : throw SchemaError("missing field 'algorithm'");
  const auto kind = parse_algorithm(field<std::string>(alg, "name"));
  if (!kind) throw SchemaError("unknown algorithm name");
  r.algorithm.kind = *kind;
  r.algorithm.lambda = field<double>(alg, "lambda");
  const auto base = field<std::string>(alg, "log_base");
  if (base != "two" && base != "natural") throw SchemaError("unknown log_base");
  r.algorithm.log_base = base == "two" ? LogBase::two : LogBase::natural;
  r.algorithm.eps = optional_field<double>(alg, "eps");
  r.algorithm.c = optional_field<double>(alg, "c");
  r.algorithm.alpha = optional_field<std::size_t>(alg, "alpha");

  const json& sim = j.contains("sim") ? j.at("sim") : throw SchemaError("missing field 'sim'");
  const auto mode = field<std::string>(sim, "mode");
  if (mode != "congest" && mode != "local") throw SchemaError("unknown mode");
  r.mode = mode == "congest" ? sim::Mode::congest : sim::Mode::local;
  r.c_msg = field<unsigned>(sim, "c_msg");
  r.max_rounds = field<std::size_t>(sim, "max_rounds");
  r.n_upper = optional_field<std::uint64_t>(sim, "n_upper");

  r.seed = field<std::uint64_t>(j, "seed");
  r.weight = field<Weight>(j, "weight");
  r.size = field<std::size_t>(j, "size");
  r.members_digest = field<std::string>(j, "members_digest");
  r.mis_valid = field<bool>(j, "mis_valid");
  r.stack_ok = optional_field<bool>(j, "stack_ok");
  r.opt = optional_field<Weight>(j, "opt");
  r.approx_ratio = optional_field<double>(j, "approx_ratio");
  r.oracle_error = optional_field<std::string>(j, "oracle_error");
  if (r.opt.has_value() != r.approx_ratio.has_value())
    throw SchemaError("ratio fields must be present exactly when opt is");
  r.rounds = field<std::size_t>(j, "rounds");
  r.messages = field<std::uint64_t>(j, "messages");
  r.max_message_bits = field<std::size_t>(j, "max_message_bits");
  r.budget_bits = field<std::size_t>(j, "budget_bits");
  r.phases = field<std::size_t>(j, "phases");
  r.wall_ms = field<double>(j, "wall_ms");
  if (j.contains("diagnostics")) {
    const json& d = j.at("diagnostics");
    r.diagnostics.sampled_max_degree = optional_field<std::size_t>(d, "sampled_max_degree");
    r.diagnostics.sampled_weight = optional_field<Weight>(d, "sampled_weight");
    r.diagnostics.sampled_nodes = optional_field<std::size_t>(d, "sampled_nodes");
  }
  return r;
}

Experiment run_experiment(const GraphSource& source, const WeightedGraph& g,
                          const AlgorithmSpec& spec, std::uint64_t seed,
                          const sim::SimOptions& opts, bool with_oracle, std::size_t oracle_cap) {
  const auto start = std::chrono::steady_clock::now();
  Experiment e;
  e.outcome = run_algorithm(g, spec, seed, opts);
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRecord& r = e.record;
  const Outcome& o = e.outcome;
  r.graph = source;
  r.n = g.size();
  r.m = g.edge_count();
  r.max_degree = g.max_degree();
  r.degeneracy = degeneracy(g);
  r.total_weight = g.total_weight();
  r.algorithm = spec;
  r.mode = opts.mode;
  r.c_msg = opts.c_msg;
  r.n_upper = opts.n_upper;
  r.max_rounds = opts.max_rounds;
  r.seed = seed;
  r.weight = o.set.weight;
  r.size = o.set.size();
  r.members_digest = digest_members(g, o.set.members);
  r.mis_valid = o.mis_valid;
  if (o.stack) r.stack_ok = check_stack_property(g, o.set, *o.stack);
  r.rounds = o.stats.rounds;
  r.messages = o.stats.messages_sent;
  r.max_message_bits = o.stats.max_message_bits;
  r.budget_bits = o.stats.budget_bits;
  r.phases = o.phases;
  r.diagnostics = o.diagnostics;
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (with_oracle) {
    try {
      const IndependentSet best = brute_force_max_is(g, oracle_cap);
      r.opt = best.weight;
      r.approx_ratio = best.weight == 0 ? 1.0
                                        : static_cast<double>(o.set.weight) /
                                              static_cast<double>(best.weight);
    } catch (const OracleCapExceeded& ex) {
      r.oracle_error = ex.what();
    }
  }
  return e;
}

ReplayCheck replay(const ExperimentRecord& r) {
  const WeightedGraph g = load_source(r.graph);
  sim::SimOptions opts;
  opts.mode = r.mode;
  opts.c_msg = r.c_msg;
  opts.n_upper = r.n_upper;
  opts.max_rounds = r.max_rounds;
  const Experiment again =
      run_experiment(r.graph, g, r.algorithm, r.seed, opts, r.opt.has_value() || r.oracle_error.has_value());
  json a = to_json(r);
  json b = to_json(again.record);
  a.erase("wall_ms");
  b.erase("wall_ms");
  if (a == b) return {};
  const json patch = json::diff(a, b);
  return {false, patch.dump()};
}

std::string csv_header() {
  return "family,n,m,max_degree,degeneracy,algorithm,eps,c,lambda,alpha,seed,weight,size,opt,"
         "approx_ratio,rounds,messages,max_message_bits,wall_ms";
}

std::string to_csv_row(const ExperimentRecord& r) {
  std::ostringstream out;
  auto opt_num = [&](const auto& v) {
    if (v) out << *v;
  };
  out << (r.graph.spec ? std::string(to_string(r.graph.spec->family)) : std::string("file")) << ','
      << r.n << ',' << r.m << ',' << r.max_degree << ',' << r.degeneracy << ','
      << to_string(r.algorithm.kind) << ',';
  opt_num(r.algorithm.eps);
  out << ',';
  opt_num(r.algorithm.c);
  out << ',' << format_double(r.algorithm.lambda) << ',';
  opt_num(r.algorithm.alpha);
  out << ',' << r.seed << ',' << r.weight << ',' << r.size << ',';
  opt_num(r.opt);
  out << ',';
  if (r.approx_ratio) out << format_double(*r.approx_ratio);
  out << ',' << r.rounds << ',' << r.messages << ',' << r.max_message_bits << ','
      << format_double(r.wall_ms);
  return out.str();
}

}  // namespace mwis::harness
