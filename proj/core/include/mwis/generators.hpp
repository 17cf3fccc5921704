#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mwis/graph.hpp"

namespace mwis {

enum class Family { cycle, path, clique, star, gnp, tree, degenerate, cycle_of_cliques };
enum class WeightModel { unit, uniform_range, heavy_tail };

std::string_view to_string(Family f);
std::string_view to_string(WeightModel m);
std::optional<Family> parse_family(std::string_view s);
std::optional<WeightModel> parse_weight_model(std::string_view s);

/// Generator parameters. Unused fields are ignored by a family:
///   cycle/path/clique/star/tree: n
///   gnp: n, p
///   degenerate: n, k (each new node attaches to up to k earlier nodes)
///   cycle_of_cliques: n0, n1
struct GraphSpec {
  Family family = Family::cycle;
  std::int64_t n = 0;
  double p = 0.0;
  std::int64_t k = 1;
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  WeightModel weights = WeightModel::unit;
  Weight weight_lo = 1;
  Weight weight_hi = 100;
  std::uint64_t seed = 0;
};

/// Deterministic generator: equal specs give equal graphs.
/// Throws std::invalid_argument on invalid parameters.
WeightedGraph generate(const GraphSpec& spec);

/// Draws one weight per node under `model` from `rng`.
/// heavy_tail is a discretised Pareto(1.5) clamped to [1, 10^6].
std::vector<Weight> draw_weights(std::size_t n, WeightModel model, Weight lo, Weight hi,
                                 std::uint64_t seed);

}  // namespace mwis
