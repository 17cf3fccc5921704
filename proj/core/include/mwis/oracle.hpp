#pragma once

#include <cstddef>
#include <stdexcept>

#include "mwis/graph.hpp"

namespace mwis {

/// Largest graph the exact oracle accepts by default.
inline constexpr std::size_t kDefaultOracleCap = 26;

class OracleCapExceeded : public std::length_error {
 public:
  OracleCapExceeded(std::size_t n, std::size_t cap);
  std::size_t nodes() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// Exact maximum-weight independent set by branch and bound: branch on a
/// maximum-degree vertex (exclude it, or include it and delete its closed
/// neighborhood), prune on remaining-weight bound, and take every isolated
/// vertex outright. Throws OracleCapExceeded when g.size() > cap (cap <= 64).
IndependentSet brute_force_max_is(const WeightedGraph& g, std::size_t cap = kDefaultOracleCap);

/// Graph degeneracy via minimum-degree peeling (bucket queue, O(n + m)).
std::size_t degeneracy(const WeightedGraph& g);

/// True iff g is connected (the empty graph counts as connected).
bool is_connected(const WeightedGraph& g);

}  // namespace mwis
