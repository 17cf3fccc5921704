#include <gtest/gtest.h>

#include <string>

#include "mwis/generators.hpp"
#include "mwis/message.hpp"
#include "mwis/mis.hpp"
#include "mwis/simulator.hpp"
#include "support.hpp"

namespace mwis {
namespace {

using sim::Inbox;
using sim::Message;
using sim::MessageReader;
using sim::MessageWriter;
using sim::NodeContext;
using sim::NodeProcess;
using sim::NodeProgram;
using sim::Outbox;

// Halts immediately with a fixed output.
class Silent final : public NodeProgram<std::string> {
 public:
  std::unique_ptr<NodeProcess<std::string>> spawn(const NodeContext& ctx, Rng&) const override {
    struct P : NodeProcess<std::string> {
      explicit P(const NodeContext& c) : NodeProcess(c) { halt("x"); }
      void send(Outbox&, Rng&) override {}
      void receive(const Inbox&, Rng&) override {}
    };
    return std::make_unique<P>(ctx);
  }
};

// Sends its id once, then outputs the sum of received ids.
class IdExchange final : public NodeProgram<std::uint64_t> {
 public:
  std::unique_ptr<NodeProcess<std::uint64_t>> spawn(const NodeContext& ctx, Rng&) const override {
    struct P : NodeProcess<std::uint64_t> {
      using NodeProcess::NodeProcess;
      void send(Outbox& out, Rng&) override { out.broadcast(MessageWriter().uint(context().id).finish()); }
      void receive(const Inbox& in, Rng&) override {
        std::uint64_t sum = 0;
        in.for_each([&](std::size_t, const Message& m) { sum += MessageReader(m).uint(); });
        halt(sum);
      }
    };
    return std::make_unique<P>(ctx);
  }
};

// Sends `bits` raw bits and halts.
class Payload final : public NodeProgram<bool> {
 public:
  explicit Payload(std::size_t bits) : bits_(bits) {}
  std::unique_ptr<NodeProcess<bool>> spawn(const NodeContext& ctx, Rng&) const override {
    struct P : NodeProcess<bool> {
      P(const NodeContext& c, std::size_t b) : NodeProcess(c), bits(b) {}
      void send(Outbox& out, Rng&) override {
        MessageWriter w;
        for (std::size_t i = 0; i < bits; ++i) w.flag(true);
        out.broadcast(w.finish());
      }
      void receive(const Inbox&, Rng&) override { halt(true); }
      std::size_t bits;
    };
    return std::make_unique<P>(ctx, bits_);
  }

 private:
  std::size_t bits_;
};

// Never halts.
class Forever final : public NodeProgram<bool> {
 public:
  std::unique_ptr<NodeProcess<bool>> spawn(const NodeContext& ctx, Rng&) const override {
    struct P : NodeProcess<bool> {
      using NodeProcess::NodeProcess;
      void send(Outbox& out, Rng&) override { out.broadcast(MessageWriter().flag(true).finish()); }
      void receive(const Inbox&, Rng&) override {}
    };
    return std::make_unique<P>(ctx);
  }
};

// Draws random values for a few rounds and outputs their xor with everything heard.
class Chatter final : public NodeProgram<std::uint64_t> {
 public:
  std::unique_ptr<NodeProcess<std::uint64_t>> spawn(const NodeContext& ctx, Rng&) const override {
    struct P : NodeProcess<std::uint64_t> {
      using NodeProcess::NodeProcess;
      void send(Outbox& out, Rng& rng) override {
        mine = rng() >> 8;
        out.broadcast(MessageWriter().uint(mine).finish());
      }
      void receive(const Inbox& in, Rng&) override {
        acc ^= mine;
        in.for_each([&](std::size_t k, const Message& m) { acc ^= MessageReader(m).uint() * (k + 1); });
        if (++round == 5) halt(acc);
      }
      std::uint64_t mine = 0, acc = 0;
      int round = 0;
    };
    return std::make_unique<P>(ctx);
  }
};

TEST(Message, FieldsRoundTrip) {
  MessageWriter w;
  w.flag(true).uint(0).uint(12345).sint(-7).sint(9).bits(5, 3).u128(~static_cast<unsigned __int128>(0));
  const Message m = w.finish();
  MessageReader r(m);
  EXPECT_TRUE(r.flag());
  EXPECT_EQ(r.uint(), 0u);
  EXPECT_EQ(r.uint(), 12345u);
  EXPECT_EQ(r.sint(), -7);
  EXPECT_EQ(r.sint(), 9);
  EXPECT_EQ(r.bits(3), 5u);
  EXPECT_TRUE(r.u128() == ~static_cast<unsigned __int128>(0));
  EXPECT_TRUE(r.exhausted());
  EXPECT_THROW(r.flag(), std::out_of_range);
}

TEST(Message, SizesAreChargedByMagnitude) {
  EXPECT_EQ(MessageWriter().flag(false).finish().size_bits(), 1u);
  EXPECT_EQ(MessageWriter().uint(0).finish().size_bits(), 7u);
  EXPECT_EQ(MessageWriter().uint(255).finish().size_bits(), 7u + 8u);
  EXPECT_EQ(MessageWriter().sint(-1).finish().size_bits(), 7u + 1u);
  EXPECT_EQ(MessageWriter().u128(1).finish().size_bits(), 8u + 1u);
}

TEST(Budget, FormulaWithFloor) {
  EXPECT_EQ(sim::message_budget_bits(1000, 32), 32u * 10u);
  EXPECT_EQ(sim::message_budget_bits(1024, 32), 32u * 10u);
  EXPECT_EQ(sim::message_budget_bits(1025, 32), 32u * 11u);
  EXPECT_EQ(sim::message_budget_bits(2, 32), 32u * 4u);
}

TEST(Run, SingleNodeHaltingAtSpawn) {
  const auto g = WeightedGraph::with_default_ids({1}, {});
  const auto r = sim::run(g, Silent{}, {});
  EXPECT_EQ(r.stats.rounds, 0u);
  ASSERT_TRUE(r.outputs[0].has_value());
  EXPECT_EQ(*r.outputs[0], "x");
}

TEST(Run, SingleExchangeOnAnEdge) {
  const auto g = WeightedGraph({10, 20}, {1, 1}, std::vector<Edge>{{0, 1}});
  const auto r = sim::run(g, IdExchange{}, {});
  EXPECT_EQ(r.stats.rounds, 1u);
  EXPECT_EQ(r.stats.messages_sent, 2u);
  EXPECT_EQ(*r.outputs[0], 20u);
  EXPECT_EQ(*r.outputs[1], 10u);
}

TEST(Run, CongestViolationNamesTheEdge) {
  const auto g = test::path({1, 1});
  const std::size_t budget = sim::message_budget_bits(2, 32);
  EXPECT_NO_THROW(sim::run(g, Payload(budget), {}));
  try {
    sim::run(g, Payload(budget + 1), {});
    FAIL() << "expected a violation";
  } catch (const sim::CongestViolation& e) {
    EXPECT_EQ(e.round(), 1u);
    EXPECT_EQ(e.bits(), budget + 1);
    EXPECT_EQ(e.budget(), budget);
    EXPECT_EQ(e.sender(), 0u);
    EXPECT_EQ(e.receiver(), 1u);
  }
  sim::SimOptions local;
  local.mode = sim::Mode::local;
  EXPECT_NO_THROW(sim::run(g, Payload(budget + 1), local));
}

TEST(Run, RoundLimitCarriesPartialStats) {
  const auto g = test::path({1, 1, 1});
  sim::SimOptions o;
  o.max_rounds = 4;
  try {
    sim::run(g, Forever{}, o);
    FAIL() << "expected a timeout";
  } catch (const sim::RoundLimitExceeded& e) {
    EXPECT_EQ(e.partial_stats().rounds, 4u);
    EXPECT_EQ(e.partial_stats().messages_sent, 16u);
    EXPECT_EQ(e.running_nodes(), 3u);
  }
  o.max_rounds = 0;
  EXPECT_THROW(sim::run(g, Forever{}, o), std::invalid_argument);
}

TEST(Run, NUpperRaisesTheBudget) {
  const auto g = test::path({1, 1});
  sim::SimOptions o;
  o.n_upper = 1u << 20;
  const auto r = sim::run(g, IdExchange{}, o);
  EXPECT_EQ(r.stats.budget_bits, 32u * 20u);
  o.n_upper = 1;
  EXPECT_THROW(sim::run(g, IdExchange{}, o), std::invalid_argument);
}

TEST(Run, DeterministicAndScheduleIndependent) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 150;
  s.p = 0.05;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    s.seed = seed;
    const auto g = generate(s);
    sim::SimOptions o;
    o.seed = seed;
    const auto a = sim::run(g, Chatter{}, o);
    const auto b = sim::run(g, Chatter{}, o);
    o.threads = 4;
    const auto c = sim::run(g, Chatter{}, o);
    EXPECT_EQ(a.outputs, b.outputs);
    EXPECT_EQ(a.stats, b.stats);
    EXPECT_EQ(a.outputs, c.outputs);
    EXPECT_EQ(a.stats, c.stats);
    EXPECT_LE(a.stats.max_message_bits, a.stats.budget_bits);
  }
}

TEST(RunOnSubgraph, EmptySubset) {
  const auto g = test::cycle({1, 1, 1, 1});
  const auto r = sim::run_on_subgraph(g, std::vector<NodeIndex>{}, IdExchange{}, {});
  EXPECT_EQ(r.stats.rounds, 0u);
  for (const auto& out : r.outputs) EXPECT_FALSE(out.has_value());
}

TEST(RunOnSubgraph, FullSubsetMatchesRun) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = 60;
  s.p = 0.1;
  s.seed = 3;
  const auto g = generate(s);
  sim::SimOptions o;
  o.seed = 17;
  const auto a = sim::run(g, Chatter{}, o);
  const auto b = sim::run_on_subgraph(g, test::all_nodes(g), Chatter{}, o);
  EXPECT_EQ(a.outputs, b.outputs);
  EXPECT_EQ(a.stats, b.stats);
}

TEST(RunOnSubgraph, OneTriangleNodeJoinsLubyAlone) {
  const auto g = test::cycle({1, 1, 1});
  const std::vector<NodeIndex> one{1};
  const auto r = sim::run_on_subgraph(g, one, luby_mis_program(), {});
  EXPECT_FALSE(r.outputs[0].has_value());
  ASSERT_TRUE(r.outputs[1].has_value());
  EXPECT_TRUE(*r.outputs[1]);
  EXPECT_LE(r.stats.rounds, 2u);
}

TEST(RunOnSubgraph, InheritsIdsAndNUpper) {
  const auto g = WeightedGraph({100, 200, 300}, {1, 1, 1}, std::vector<Edge>{{0, 1}, {1, 2}});
  const std::vector<NodeIndex> sub{1, 2};
  const auto r = sim::run_on_subgraph(g, sub, IdExchange{}, {});
  EXPECT_EQ(*r.outputs[1], 300u);
  EXPECT_EQ(*r.outputs[2], 200u);
  EXPECT_EQ(r.stats.budget_bits, sim::message_budget_bits(3, 32));
}

TEST(RoundStats, AppendComposesSequentially) {
  sim::RoundStats a;
  a.rounds = 2;
  a.messages_sent = 5;
  a.max_message_bits = 10;
  a.total_bits = 40;
  a.messages_per_round = {3, 2};
  a.budget_bits = 128;
  sim::RoundStats b;
  b.rounds = 1;
  b.messages_sent = 1;
  b.max_message_bits = 30;
  b.total_bits = 30;
  b.messages_per_round = {1};
  b.budget_bits = 160;
  a.append(b);
  EXPECT_EQ(a.rounds, 3u);
  EXPECT_EQ(a.messages_sent, 6u);
  EXPECT_EQ(a.max_message_bits, 30u);
  EXPECT_EQ(a.total_bits, 70u);
  EXPECT_EQ(a.messages_per_round, (std::vector<std::uint64_t>{3, 2, 1}));
  EXPECT_EQ(a.budget_bits, 160u);
}

TEST(Rng, StreamsDependOnlyOnSeedAndKey) {
  auto a = make_stream(5, 9);
  auto b = make_stream(5, 9);
  auto c = make_stream(5, 10);
  EXPECT_EQ(a(), b());
  EXPECT_NE(make_stream(5, 9)(), c());
  Rng r = make_stream(1, 1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_below(r, 7);
    EXPECT_LT(x, 7u);
    const double u = uniform01(r);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const auto rank = uniform_rank(r, 3);
    EXPECT_TRUE(rank >= 1 && rank <= 3);
  }
}

}  // namespace
}  // namespace mwis
