#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwis/algorithm.hpp"
#include "mwis/boost.hpp"
#include "mwis/generators.hpp"
#include "mwis/sparsify.hpp"

namespace mwis::harness {

enum class AlgorithmKind { heavy, sparse, boost_heavy, boost_sparse, arb, boppana, fastld, luby };

std::string_view to_string(AlgorithmKind k);
std::optional<AlgorithmKind> parse_algorithm(std::string_view s);

/// Bad or incompatible parameters (maps to exit code 2 in the CLI).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Record that does not match the expected layout.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Algorithm plus its parameters. `c` is the boosting constant for the
/// boost variants and the rank exponent for boppana and fastld.
struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::heavy;
  std::optional<double> eps;
  std::optional<double> c;
  double lambda = 4.0;
  LogBase log_base = LogBase::two;
  std::optional<std::size_t> alpha;

  friend bool operator==(const AlgorithmSpec&, const AlgorithmSpec&) = default;
};

/// Throws UsageError when a required parameter is missing or out of range.
void validate(const AlgorithmSpec& spec);

/// The c a spec runs with once defaults are filled in.
double effective_c(const AlgorithmSpec& spec);

struct Outcome {
  IndependentSet set;
  sim::RoundStats stats;
  bool mis_valid = true;
  Diagnostics diagnostics;
  std::optional<PhaseStack> stack;
  std::size_t phases = 0;
  std::size_t max_inner_rounds = 0;
  std::vector<std::size_t> active_sizes;
};

Outcome run_algorithm(const WeightedGraph& g, const AlgorithmSpec& spec, std::uint64_t seed,
                      const sim::SimOptions& opts);

/// Instance-level handle for `spec`. The instance must cover its whole
/// graph (arb has no subgraph form).
Algorithm make_algorithm(const AlgorithmSpec& spec);

/// Stack frames with node identifiers, for audit dumps.
nlohmann::json stack_to_json(const WeightedGraph& g, const PhaseStack& stack);

/// Where a graph came from: a generator spec or a file.
struct GraphSource {
  std::optional<GraphSpec> spec;
  std::optional<std::string> file;
};

WeightedGraph load_source(const GraphSource& source);

struct ExperimentRecord {
  GraphSource graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t degeneracy = 0;
  Weight total_weight = 0;

  AlgorithmSpec algorithm;
  sim::Mode mode = sim::Mode::congest;
  unsigned c_msg = 32;
  std::optional<std::uint64_t> n_upper;
  std::size_t max_rounds = 100000;
  std::uint64_t seed = 0;

  Weight weight = 0;  // w(I)
  std::size_t size = 0;
  std::string members_digest;
  bool mis_valid = true;
  std::optional<bool> stack_ok;

  std::optional<Weight> opt;
  std::optional<double> approx_ratio;  // w(I) / OPT, 1 when OPT = 0
  std::optional<std::string> oracle_error;

  std::size_t rounds = 0;
  std::uint64_t messages = 0;
  std::size_t max_message_bits = 0;
  std::size_t budget_bits = 0;
  std::size_t phases = 0;
  Diagnostics diagnostics;

  double wall_ms = 0;
};

/// FNV-1a over the sorted member identifiers, as 16 hex digits.
std::string digest_members(const WeightedGraph& g, std::span<const NodeIndex> members);

nlohmann::json to_json(const ExperimentRecord& r);
/// Throws SchemaError if a field is missing or has the wrong type, or if
/// the ratio fields and OPT are not present together.
ExperimentRecord record_from_json(const nlohmann::json& j);

struct Experiment {
  ExperimentRecord record;
  Outcome outcome;
};

/// Runs one algorithm on one graph and builds the record. With
/// `with_oracle`, graphs above `oracle_cap` get an oracle_error entry.
Experiment run_experiment(const GraphSource& source, const WeightedGraph& g,
                          const AlgorithmSpec& spec, std::uint64_t seed,
                          const sim::SimOptions& opts, bool with_oracle,
                          std::size_t oracle_cap = 26);

struct ReplayCheck {
  bool identical = true;
  std::string difference;
};

/// Re-runs a record and compares everything except wall time.
ReplayCheck replay(const ExperimentRecord& r);

/// Flat projection for plotting.
std::string csv_header();
std::string to_csv_row(const ExperimentRecord& r);

}  // namespace mwis::harness
