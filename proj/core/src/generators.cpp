#include "mwis/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mwis/lowerbound.hpp"
#include "mwis/rng.hpp"

namespace mwis {
namespace {

constexpr std::array kFamilyNames = {
    std::pair{Family::cycle, std::string_view{"cycle"}},
    std::pair{Family::path, std::string_view{"path"}},
    std::pair{Family::clique, std::string_view{"clique"}},
    std::pair{Family::star, std::string_view{"star"}},
    std::pair{Family::gnp, std::string_view{"gnp"}},
    std::pair{Family::tree, std::string_view{"tree"}},
    std::pair{Family::degenerate, std::string_view{"degenerate"}},
    std::pair{Family::cycle_of_cliques, std::string_view{"cycle_of_cliques"}},
};

constexpr std::array kWeightNames = {
    std::pair{WeightModel::unit, std::string_view{"unit"}},
    std::pair{WeightModel::uniform_range, std::string_view{"uniform_range"}},
    std::pair{WeightModel::heavy_tail, std::string_view{"heavy_tail"}},
};

// Stream keys keep topology and weights independent of each other.
constexpr std::uint64_t kTopologyStream = 0x746f706f;
constexpr std::uint64_t kWeightStream = 0x77656967;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<Edge> gnp_edges(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  if (n < 2 || p <= 0.0) return edges;
  if (p >= 1.0) {
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
  }
  // Geometric skipping over the lower-triangular pair sequence.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = uniform01(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeIndex>(w), static_cast<NodeIndex>(v));
  }
  return edges;
}

std::vector<Edge> degenerate_edges(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<NodeIndex> picks;
  for (NodeIndex v = 1; v < n; ++v) {
    const std::size_t want = std::min<std::size_t>(k, v);
    picks.clear();
    while (picks.size() < want) {
      auto u = static_cast<NodeIndex>(uniform_below(rng, v));
      if (std::find(picks.begin(), picks.end(), u) == picks.end()) picks.push_back(u);
    }
    for (NodeIndex u : picks) edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

std::string_view to_string(Family f) {
  for (auto [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

std::string_view to_string(WeightModel m) {
  for (auto [model, name] : kWeightNames)
    if (model == m) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view s) {
  for (auto [family, name] : kFamilyNames)
    if (name == s) return family;
  return std::nullopt;
}

std::optional<WeightModel> parse_weight_model(std::string_view s) {
  for (auto [model, name] : kWeightNames)
    if (name == s) return model;
  return std::nullopt;
}

std::vector<Weight> draw_weights(std::size_t n, WeightModel model, Weight lo, Weight hi,
                                 std::uint64_t seed) {
  std::vector<Weight> weights(n, 1);
  Rng rng = make_stream(seed, kWeightStream);
  switch (model) {
    case WeightModel::unit:
      break;
    case WeightModel::uniform_range: {
      require(lo >= 0 && lo <= hi, "uniform_range needs 0 <= lo <= hi");
      const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
      for (auto& w : weights) w = lo + static_cast<Weight>(uniform_below(rng, span));
      break;
    }
    case WeightModel::heavy_tail:
      for (auto& w : weights) {
        const double u = 1.0 - uniform01(rng);  // (0, 1]
        const double x = std::floor(std::pow(u, -1.0 / 1.5));
        w = static_cast<Weight>(std::clamp(x, 1.0, 1e6));
      }
      break;
  }
  return weights;
}

WeightedGraph generate(const GraphSpec& spec) {
  if (spec.family == Family::cycle_of_cliques) {
    require(spec.n0 >= 3, "cycle_of_cliques needs n0 >= 3");
    require(spec.n1 >= 1, "cycle_of_cliques needs n1 >= 1");
    WeightedGraph topology = build_clique_cycle(static_cast<std::size_t>(spec.n0),
                                                static_cast<std::size_t>(spec.n1))
                                 .graph;
    return topology.with_weights(draw_weights(topology.size(), spec.weights, spec.weight_lo,
                                              spec.weight_hi, spec.seed));
  }

  require(spec.n >= 1, "graph needs n >= 1");
  const auto n = static_cast<std::size_t>(spec.n);
  Rng rng = make_stream(spec.seed, kTopologyStream);
  std::vector<Edge> edges;

  switch (spec.family) {
    case Family::cycle:
      require(n >= 3, "cycle needs n >= 3");
      for (NodeIndex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeIndex>((v + 1) % n));
      break;
    case Family::path:
      for (NodeIndex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::clique:
      for (NodeIndex u = 0; u < n; ++u)
        for (NodeIndex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::star:
      for (NodeIndex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::gnp:
      require(spec.p >= 0.0 && spec.p <= 1.0, "gnp needs 0 <= p <= 1");
      edges = gnp_edges(n, spec.p, rng);
      break;
    case Family::tree:
      edges = degenerate_edges(n, 1, rng);
      break;
    case Family::degenerate:
      require(spec.k >= 1, "degenerate needs k >= 1");
      edges = degenerate_edges(n, static_cast<std::size_t>(spec.k), rng);
      break;
    case Family::cycle_of_cliques:
      break;
  }
  return WeightedGraph::with_default_ids(
      draw_weights(n, spec.weights, spec.weight_lo, spec.weight_hi, spec.seed), edges);
}

}  // namespace mwis
