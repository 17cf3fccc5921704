#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mwis/generators.hpp"

namespace mwis::harness {

/// AHU encoding rooted at the tree's center(s); equal iff isomorphic.
std::string tree_canonical_form(const WeightedGraph& tree);

/// One representative of every unlabeled tree on exactly n vertices
/// (unit weights). Enumerates Pruefer sequences, so keep n small.
std::vector<WeightedGraph> all_trees(std::size_t n);

/// Bumps spec.seed until the generated graph satisfies `accept`.
/// Throws std::runtime_error after `tries` failures.
GraphSpec resample(GraphSpec spec, const std::function<bool(const WeightedGraph&)>& accept,
                   std::size_t tries = 1000);

/// resample() with a connectivity filter.
GraphSpec connected(GraphSpec spec);

}  // namespace mwis::harness
