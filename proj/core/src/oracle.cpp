#include "mwis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mwis {

OracleCapExceeded::OracleCapExceeded(std::size_t n, std::size_t cap)
    : std::length_error("exact oracle refuses graph with " + std::to_string(n) +
                        " nodes (cap " + std::to_string(cap) + ")"),
      n_(n),
      cap_(cap) {}

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
 public:
  explicit BranchAndBound(const WeightedGraph& g) : weights_(g.weights().begin(), g.weights().end()) {
    adjacency_.assign(g.size(), 0);
    for (NodeIndex v = 0; v < g.size(); ++v)
      for (NodeIndex u : g.neighbors(v)) adjacency_[v] |= Mask{1} << u;
  }

  Mask solve() {
    const Mask all = adjacency_.empty() ? 0 : (~Mask{0} >> (64 - adjacency_.size()));
    search(all, 0, 0);
    return best_set_;
  }

 private:
  Weight weight_of(Mask m) const {
    Weight total = 0;
    for (; m != 0; m &= m - 1) total += weights_[std::countr_zero(m)];
    return total;
  }

  void search(Mask candidates, Mask chosen, Weight value) {
    // Isolated candidates are always worth taking (weights are non-negative).
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask m = candidates; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(adjacency_[v] & candidates);
      if (d == 0) {
        chosen |= Mask{1} << v;
        value += weights_[v];
      } else if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    candidates &= ~chosen;
    if (pivot < 0) {
      record(chosen, value);
      return;
    }
    if (value + weight_of(candidates) <= best_value_) return;

    const Mask bit = Mask{1} << pivot;
    search(candidates & ~bit & ~adjacency_[pivot], chosen | bit, value + weights_[pivot]);
    search(candidates & ~bit, chosen, value);
  }

  void record(Mask chosen, Weight value) {
    if (value > best_value_) {
      best_value_ = value;
      best_set_ = chosen;
    }
  }

  std::vector<Weight> weights_;
  std::vector<Mask> adjacency_;
  Weight best_value_ = -1;
  Mask best_set_ = 0;
};

}  // namespace

IndependentSet brute_force_max_is(const WeightedGraph& g, std::size_t cap) {
  cap = std::min<std::size_t>(cap, 64);
  if (g.size() > cap) throw OracleCapExceeded(g.size(), cap);
  g.total_weight();  // overflow check once; the search then cannot overflow
  const Mask best = BranchAndBound(g).solve();
  std::vector<NodeIndex> members;
  for (Mask m = best; m != 0; m &= m - 1) members.push_back(static_cast<NodeIndex>(std::countr_zero(m)));
  return make_set(g, std::move(members));
}

std::size_t degeneracy(const WeightedGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  std::vector<std::size_t> degree(n);
  std::size_t max_deg = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_deg = std::max(max_deg, degree[v]);
  }
  // Bucket queue keyed by current degree; stale entries are skipped lazily.
  std::vector<std::vector<NodeIndex>> buckets(max_deg + 1);
  for (NodeIndex v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::size_t result = 0;
  std::size_t low = 0;
  for (std::size_t done = 0; done < n;) {
    while (buckets[low].empty()) ++low;
    const NodeIndex v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || degree[v] != low) continue;
    removed[v] = 1;
    ++done;
    result = std::max(result, low);
    for (NodeIndex u : g.neighbors(v)) {
      if (removed[u]) continue;
      --degree[u];
      buckets[degree[u]].push_back(u);
      if (degree[u] < low) low = degree[u];
    }
  }
  return result;
}

bool is_connected(const WeightedGraph& g) {
  if (g.size() == 0) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<NodeIndex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.size();
}

}  // namespace mwis
