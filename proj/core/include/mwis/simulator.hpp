#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/message.hpp"
#include "mwis/rng.hpp"

namespace mwis::sim {

enum class Mode { congest, local };

std::string_view to_string(Mode m);

struct SimOptions {
  Mode mode = Mode::congest;
  std::uint64_t seed = 0;
  std::size_t max_rounds = 100000;
  /// Polynomial upper bound on n known to every node; defaults to |V(g)|.
  std::optional<std::uint64_t> n_upper;
  /// CONGEST budget constant: B = c_msg * max(ceil(log2 n_upper), 4).
  unsigned c_msg = 32;
  /// Worker threads for node evaluation within a round (1 = sequential).
  unsigned threads = 1;
};

/// CONGEST per-edge, per-round message budget in bits.
std::size_t message_budget_bits(std::uint64_t n_upper, unsigned c_msg);

/// Complexity ledger of one or more sequentially composed runs.
struct RoundStats {
  std::size_t rounds = 0;
  std::uint64_t messages_sent = 0;
  std::size_t max_message_bits = 0;
  std::uint64_t total_bits = 0;
  std::vector<std::uint64_t> messages_per_round;
  /// Budget that applied (0 in LOCAL mode); the max over composed runs.
  std::size_t budget_bits = 0;

  /// Appends a run that executed after this one.
  void append(const RoundStats& later);

  friend bool operator==(const RoundStats&, const RoundStats&) = default;
};

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CongestViolation : public EngineError {
 public:
  CongestViolation(NodeId sender, NodeId receiver, std::size_t round, std::size_t bits,
                   std::size_t budget);
  NodeId sender() const { return sender_; }
  NodeId receiver() const { return receiver_; }
  std::size_t round() const { return round_; }
  std::size_t bits() const { return bits_; }
  std::size_t budget() const { return budget_; }

 private:
  NodeId sender_;
  NodeId receiver_;
  std::size_t round_;
  std::size_t bits_;
  std::size_t budget_;
};

class RoundLimitExceeded : public EngineError {
 public:
  RoundLimitExceeded(RoundStats partial, std::size_t running);
  const RoundStats& partial_stats() const { return partial_; }
  std::size_t running_nodes() const { return running_; }

 private:
  RoundStats partial_;
  std::size_t running_;
};

/// What a node knows before the first round: its own identifier and weight,
/// the identifiers on its incident (active) edges, and n_upper. Neither n
/// nor the maximum degree is available. `index` is the node's own slot in
/// the host graph and is only meant for looking up per-node inputs.
struct NodeContext {
  NodeId id = 0;
  NodeIndex index = 0;
  Weight weight = 0;
  std::span<const NodeId> neighbor_ids;
  std::uint64_t n_upper = 1;

  std::size_t degree() const { return neighbor_ids.size(); }
};

/// Messages received in one round, one optional slot per incident edge
/// (slot k corresponds to context().neighbor_ids[k]).
class Inbox {
 public:
  Inbox(std::span<const Message* const> slots, std::span<const NodeId> senders)
      : slots_(slots), senders_(senders) {}

  std::size_t slots() const { return slots_.size(); }
  const Message* from(std::size_t slot) const { return slots_[slot]; }
  NodeId sender(std::size_t slot) const { return senders_[slot]; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < slots_.size(); ++k)
      if (slots_[k] != nullptr) f(k, *slots_[k]);
  }

  bool any() const {
    return std::any_of(slots_.begin(), slots_.end(), [](const Message* m) { return m != nullptr; });
  }

 private:
  std::span<const Message* const> slots_;
  std::span<const NodeId> senders_;
};

/// At most one message per incident edge per round.
class Outbox {
 public:
  void send(std::size_t slot, Message m) { direct_.emplace_back(slot, std::move(m)); }
  void broadcast(Message m) { broadcast_ = std::move(m); }

  void clear() {
    direct_.clear();
    broadcast_.reset();
  }
  bool empty() const { return direct_.empty() && !broadcast_; }

  const std::vector<std::pair<std::size_t, Message>>& direct() const { return direct_; }
  const std::optional<Message>& broadcast_message() const { return broadcast_; }

 private:
  std::vector<std::pair<std::size_t, Message>> direct_;
  std::optional<Message> broadcast_;
};

/// Per-node state machine. Each round the engine first calls send() on
/// every running node, then delivers all messages, then calls receive().
/// A process may halt (with its output) in its constructor, in send() or in
/// receive(); halted processes are never called again, and messages they
/// sent in their final round are still delivered.
template <typename Output>
class NodeProcess {
 public:
  explicit NodeProcess(const NodeContext& ctx) : ctx_(ctx) {}
  virtual ~NodeProcess() = default;

  virtual void send(Outbox& out, Rng& rng) = 0;
  virtual void receive(const Inbox& in, Rng& rng) = 0;

  bool halted() const { return output_.has_value(); }
  const std::optional<Output>& output() const { return output_; }

 protected:
  void halt(Output out) { output_ = std::move(out); }
  const NodeContext& context() const { return ctx_; }

 private:
  NodeContext ctx_;
  std::optional<Output> output_;
};

template <typename Output>
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::unique_ptr<NodeProcess<Output>> spawn(const NodeContext& ctx, Rng& rng) const = 0;
};

template <typename Output>
struct RunResult {
  /// Indexed by host-graph NodeIndex; empty for nodes outside the run.
  std::vector<std::optional<Output>> outputs;
  RoundStats stats;
};

namespace detail {

/// Induced topology of the executed node set, with reverse slot indices so
/// a message sent on slot k of u lands in the right slot of its receiver.
struct Topology {
  std::vector<NodeIndex> nodes;           // local -> host index
  std::vector<std::size_t> offsets;       // CSR over local indices
  std::vector<std::uint32_t> targets;     // local neighbor indices
  std::vector<std::uint32_t> reverse;     // slot of this edge at the target
  std::vector<NodeId> neighbor_ids;

  static Topology build(const WeightedGraph& g, std::span<const NodeIndex> subset, bool whole);
};

template <typename F>
void for_each_node(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = count * w / workers;
        const std::size_t hi = count * (w + 1) / workers;
        try {
          for (std::size_t i = lo; i < hi; ++i) f(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  // Lowest chunk first, so the reported error does not depend on timing.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <typename Output>
RunResult<Output> execute(const WeightedGraph& g, const Topology& topo,
                          const NodeProgram<Output>& program, const SimOptions& opts,
                          std::span<const Weight> weights) {
  if (opts.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  if (weights.empty()) weights = g.weights();
  if (weights.size() != g.size()) throw std::invalid_argument("weight override has wrong size");

  const std::size_t count = topo.nodes.size();
  const std::uint64_t n_upper = opts.n_upper.value_or(std::max<std::uint64_t>(g.size(), 1));
  if (n_upper < g.size()) throw std::invalid_argument("n_upper below the number of nodes");
  const std::size_t budget =
      opts.mode == Mode::congest ? message_budget_bits(n_upper, opts.c_msg) : 0;

  RunResult<Output> result;
  result.outputs.resize(g.size());
  result.stats.budget_bits = budget;

  std::vector<NodeContext> contexts(count);
  std::vector<Rng> rngs;
  rngs.reserve(count);
  std::vector<std::unique_ptr<NodeProcess<Output>>> procs(count);
  for (std::size_t i = 0; i < count; ++i) {
    const NodeIndex host = topo.nodes[i];
    contexts[i] = NodeContext{
        g.id(host), host, weights[host],
        std::span<const NodeId>(topo.neighbor_ids.data() + topo.offsets[i],
                                topo.offsets[i + 1] - topo.offsets[i]),
        n_upper};
    rngs.push_back(make_stream(opts.seed, g.id(host)));
  }
  for_each_node(count, opts.threads,
                [&](std::size_t i) { procs[i] = program.spawn(contexts[i], rngs[i]); });

  std::vector<Outbox> outboxes(count);
  std::vector<const Message*> inbox(topo.targets.size(), nullptr);
  auto running = [&] {
    return static_cast<std::size_t>(
        std::count_if(procs.begin(), procs.end(), [](const auto& p) { return !p->halted(); }));
  };

  for (std::size_t live = running(); live > 0; live = running()) {
    if (result.stats.rounds >= opts.max_rounds) throw RoundLimitExceeded(result.stats, live);
    const std::size_t round = ++result.stats.rounds;

    for_each_node(count, opts.threads, [&](std::size_t i) {
      outboxes[i].clear();
      if (!procs[i]->halted()) procs[i]->send(outboxes[i], rngs[i]);
    });

    std::fill(inbox.begin(), inbox.end(), nullptr);
    std::uint64_t sent = 0;
    auto deliver = [&](std::size_t from, std::size_t slot, const Message& m) {
      const std::size_t degree = topo.offsets[from + 1] - topo.offsets[from];
      if (slot >= degree) throw EngineError("message addressed to a non-incident slot");
      const std::size_t edge = topo.offsets[from] + slot;
      const std::uint32_t to = topo.targets[edge];
      if (budget != 0 && m.size_bits() > budget) {
        throw CongestViolation(g.id(topo.nodes[from]), g.id(topo.nodes[to]), round,
                               m.size_bits(), budget);
      }
      const Message*& cell = inbox[topo.offsets[to] + topo.reverse[edge]];
      if (cell != nullptr) throw EngineError("two messages on one edge in one round");
      cell = &m;
      ++sent;
      result.stats.total_bits += m.size_bits();
      result.stats.max_message_bits = std::max(result.stats.max_message_bits, m.size_bits());
    };
    for (std::size_t i = 0; i < count; ++i) {
      const Outbox& out = outboxes[i];
      if (const auto& b = out.broadcast_message()) {
        const std::size_t degree = topo.offsets[i + 1] - topo.offsets[i];
        for (std::size_t k = 0; k < degree; ++k) deliver(i, k, *b);
      }
      for (const auto& [slot, m] : out.direct()) deliver(i, slot, m);
    }
    result.stats.messages_sent += sent;
    result.stats.messages_per_round.push_back(sent);

    for_each_node(count, opts.threads, [&](std::size_t i) {
      if (procs[i]->halted()) return;
      const std::size_t lo = topo.offsets[i];
      const std::size_t degree = topo.offsets[i + 1] - lo;
      Inbox in(std::span<const Message* const>(inbox.data() + lo, degree),
               contexts[i].neighbor_ids);
      procs[i]->receive(in, rngs[i]);
    });
  }

  for (std::size_t i = 0; i < count; ++i) result.outputs[topo.nodes[i]] = procs[i]->output();
  return result;
}

}  // namespace detail

/// Runs `program` on every node of g. `weights`, when non-empty, replaces
/// g's weights in each node's context (used for residual weight functions).
template <typename Output>
RunResult<Output> run(const WeightedGraph& g, const NodeProgram<Output>& program,
                      const SimOptions& opts, std::span<const Weight> weights = {}) {
  const auto topo = detail::Topology::build(g, {}, true);
  return detail::execute(g, topo, program, opts, weights);
}

/// Runs `program` on the subgraph induced by `subset`. Nodes outside the
/// subset are inert; identifiers and n_upper are inherited from g.
template <typename Output>
RunResult<Output> run_on_subgraph(const WeightedGraph& g, std::span<const NodeIndex> subset,
                                  const NodeProgram<Output>& program, const SimOptions& opts,
                                  std::span<const Weight> weights = {}) {
  const auto topo = detail::Topology::build(g, subset, false);
  return detail::execute(g, topo, program, opts, weights);
}

}  // namespace mwis::sim
