#include "mwis/mis.hpp"

#include <algorithm>
#include <numeric>

namespace mwis {
namespace {

constexpr unsigned kValueBits = 62;

class LubyProcess final : public sim::NodeProcess<bool> {
 public:
  explicit LubyProcess(const sim::NodeContext& ctx) : NodeProcess(ctx) {
    if (ctx.degree() == 0) halt(true);
  }

  void send(sim::Outbox& out, Rng& rng) override {
    if (!announce_round_) {
      value_ = rng() >> (64 - kValueBits);
      out.broadcast(sim::MessageWriter().bits(value_, kValueBits).finish());
    } else if (joining_) {
      out.broadcast(sim::MessageWriter().flag(true).finish());
    }
  }

  void receive(const sim::Inbox& in, Rng&) override {
    if (!announce_round_) {
      joining_ = true;
      in.for_each([&](std::size_t slot, const sim::Message& m) {
        const std::uint64_t other = sim::MessageReader(m).bits(kValueBits);
        if (other > value_ || (other == value_ && in.sender(slot) > context().id)) joining_ = false;
      });
      announce_round_ = true;
      return;
    }
    if (joining_) {
      halt(true);
    } else if (in.any()) {
      halt(false);
    } else {
      announce_round_ = false;
    }
  }

 private:
  bool announce_round_ = false;
  bool joining_ = false;
  std::uint64_t value_ = 0;
};

std::vector<NodeIndex> scan_order(const WeightedGraph& g, std::span<const NodeIndex> subset,
                                  GreedyOrder order, std::uint64_t seed) {
  std::vector<NodeIndex> nodes(subset.begin(), subset.end());
  std::sort(nodes.begin(), nodes.end(),
            [&](NodeIndex a, NodeIndex b) { return g.id(a) < g.id(b); });
  if (order == GreedyOrder::by_permutation) {
    Rng rng = make_stream(seed, 0x7065726d);
    for (std::size_t i = nodes.size(); i > 1; --i) {
      std::swap(nodes[i - 1], nodes[uniform_below(rng, i)]);
    }
  }
  return nodes;
}

}  // namespace

std::unique_ptr<sim::NodeProcess<bool>> LubyMisProgram::spawn(const sim::NodeContext& ctx,
                                                              Rng&) const {
  return std::make_unique<LubyProcess>(ctx);
}

const sim::NodeProgram<bool>& luby_mis_program() {
  static const LubyMisProgram program;
  return program;
}

IndependentSet greedy_mis(const WeightedGraph& g, GreedyOrder order, std::uint64_t seed) {
  std::vector<NodeIndex> all(g.size());
  std::iota(all.begin(), all.end(), NodeIndex{0});
  return greedy_mis(g, all, order, seed);
}

IndependentSet greedy_mis(const WeightedGraph& g, std::span<const NodeIndex> subset,
                          GreedyOrder order, std::uint64_t seed) {
  std::vector<char> blocked(g.size(), 1);
  for (NodeIndex v : subset) blocked[v] = 0;
  std::vector<NodeIndex> chosen;
  for (NodeIndex v : scan_order(g, subset, order, seed)) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    blocked[v] = 1;
    for (NodeIndex u : g.neighbors(v)) blocked[u] = 1;
  }
  return make_set(g, std::move(chosen));
}

MisCheck verify_mis(const WeightedGraph& g, std::span<const NodeIndex> subset,
                    std::span<const NodeIndex> candidate) {
  std::vector<char> active(g.size(), 0);
  std::vector<char> in(g.size(), 0);
  for (NodeIndex v : subset) active[v] = 1;
  for (NodeIndex v : candidate) {
    if (!active[v]) return {false, "node " + std::to_string(g.id(v)) + " is outside the subset"};
    in[v] = 1;
  }
  for (NodeIndex v : candidate) {
    for (NodeIndex u : g.neighbors(v)) {
      if (in[u]) {
        return {false, "adjacent members " + std::to_string(g.id(v)) + " and " +
                           std::to_string(g.id(u))};
      }
    }
  }
  for (NodeIndex v : subset) {
    if (in[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeIndex u) { return active[u] && in[u]; })) {
      return {false, "node " + std::to_string(g.id(v)) + " is neither in the set nor covered"};
    }
  }
  return {};
}

}  // namespace mwis
