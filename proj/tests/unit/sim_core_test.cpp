#include <gtest/gtest.h>

#include "support.hpp"
#include "tasim/prim/primitives.hpp"

namespace tasim {
namespace {

using sim::EventKind;
using testing::machines_of;
using testing::run_fixed;

sim::Task<Outcome> empty_body(sim::Proc&) { co_return Outcome::win; }

sim::Task<Outcome> spin(sim::Proc& p) {
  for (;;) co_await p.read(0);
}

TEST(RegisterBank, ReadsLatestWriteOrInitial) {
  sim::RegisterBank bank;
  const auto a = bank.allocate("a", 2, 7);
  const auto b = bank.allocate("b", 1);
  EXPECT_EQ(a, 0u);
  EXPECT_EQ(b, 2u);
  EXPECT_EQ(bank.size(), 3u);
  EXPECT_EQ(bank.read(a + 1), 7);
  bank.write(a + 1, -3);
  EXPECT_EQ(bank.read(a + 1), -3);
  EXPECT_EQ(bank.initial(a + 1), 7);
  ASSERT_EQ(bank.allocations().size(), 2u);
  EXPECT_EQ(bank.allocations()[1].owner, "b");
  EXPECT_EQ(bank.allocations()[1].count, 1u);
}

TEST(Engine, EmptyProgramTakesNoSteps) {
  sim::RegisterBank bank;
  auto m = machines_of(1, empty_body);
  const auto e = run_fixed(m, bank, {0, 0, 0});
  EXPECT_TRUE(e.events.empty());
  EXPECT_EQ(e.status, sim::RunStatus::completed);
  EXPECT_EQ(e.processes[0].outcome, Outcome::win);
}

TEST(Engine, SoloDoorway) {
  sim::RegisterBank bank;
  sim::Journal j;
  prim::Doorway door(bank, j);
  auto m = machines_of(1, [&](sim::Proc& p) {
    return tas::as_outcome(door.enter(p), Outcome::pass, Outcome::deflect);
  });
  auto adv = adv::oblivious_from_schedule({0});
  sim::SplitCoins coins(3, 0);
  const auto e = sim::run(m, bank, *adv, coins);
  ASSERT_EQ(e.events.size(), 4u);
  EXPECT_EQ(e.events[0].kind, EventKind::coin);
  EXPECT_EQ(e.events[1].kind, EventKind::read);
  EXPECT_EQ(e.events[1].reg, door.reg());
  EXPECT_EQ(e.events[1].value, 0);
  EXPECT_EQ(e.events[2].kind, EventKind::coin);
  EXPECT_EQ(e.events[3].kind, EventKind::write);
  EXPECT_EQ(e.events[3].value, 1);
  EXPECT_EQ(e.processes[0].outcome, Outcome::pass);
  EXPECT_EQ(e.processes[0].invocation, 1u);
  EXPECT_EQ(e.processes[0].response, 4u);
  EXPECT_EQ(e.processes[0].shared_steps, 2u);
  EXPECT_EQ(bank.size(), 1u);
}

TEST(Engine, StepIndicesAreContiguousAndCoinsAlternate) {
  sim::RegisterBank bank;
  sim::Journal j;
  tas::RatRace race(bank, j, 8, true);
  auto m = machines_of(8, [&](sim::Proc& p) { return tas::as_outcome(race.tas(p)); });
  auto adv = adv::make_adversary("oblivious:random", {8, 5, 0, nullptr});
  sim::SplitCoins coins(5, 0);
  const auto e = sim::run(m, bank, *adv, coins);
  ASSERT_TRUE(e.all_finished());
  std::vector<int> expect_coin(8, 1);
  for (std::size_t i = 0; i < e.events.size(); ++i) {
    const auto& ev = e.events[i];
    EXPECT_EQ(ev.index, i + 1);
    EXPECT_EQ(ev.kind == EventKind::coin, expect_coin[ev.pid] == 1) << "step " << ev.index;
    expect_coin[ev.pid] ^= 1;
  }
  for (const auto& r : e.processes) EXPECT_EQ(r.coin_steps, r.shared_steps);
}

TEST(Engine, RunIsDeterministic) {
  auto once = [] {
    sim::RegisterBank bank;
    sim::Journal j;
    tas::GeTas g(bank, j, 16, tas::GeKind::locobl);
    auto m = machines_of(16, [&](sim::Proc& p) { return tas::as_outcome(g.tas(p)); });
    auto adv = adv::make_adversary("strong:full:random", {16, 9, 4, nullptr});
    sim::SplitCoins coins(9, 4);
    return sim::run(m, bank, *adv, coins);
  };
  const auto a = once();
  const auto b = once();
  EXPECT_EQ(a.events, b.events);
  EXPECT_EQ(a.noops, b.noops);
  EXPECT_EQ(a.processes, b.processes);
  EXPECT_EQ(a.to_jsonl(), b.to_jsonl());
}

TEST(Engine, FinishedProcessGetsNoopsOnly) {
  sim::RegisterBank bank;
  sim::Journal j;
  prim::Doorway door(bank, j);
  auto m = machines_of(2, [&](sim::Proc& p) {
    return tas::as_outcome(door.enter(p), Outcome::pass, Outcome::deflect);
  });
  const auto e = run_fixed(m, bank, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
  // the deflected caller reads B once and leaves
  EXPECT_EQ(e.events.size(), 6u);
  ASSERT_EQ(e.noops.size(), 2u);
  EXPECT_EQ(e.noops[0], (sim::NoopMarker{4, 0}));
  EXPECT_EQ(e.noops[1], (sim::NoopMarker{4, 0}));
  EXPECT_EQ(e.sigma(), (std::vector<Pid>{0, 0, 0, 0, 1, 1}));
  EXPECT_EQ(e.slots(), (std::vector<Pid>{0, 0, 0, 0, 0, 0, 1, 1}));
  EXPECT_EQ(e.processes[0].outcome, Outcome::pass);
  EXPECT_EQ(e.processes[1].outcome, Outcome::deflect);
  EXPECT_EQ(e.events[4].index, 5u);
}

TEST(Engine, StepLimitIsAStatusNotACrash) {
  sim::RegisterBank bank;
  bank.allocate("r", 1);
  auto m = machines_of(1, spin);
  auto adv = adv::make_adversary("oblivious:roundrobin", {1, 0, 0, nullptr});
  sim::SplitCoins coins(0, 0);
  const auto e = sim::run(m, bank, *adv, coins, {.step_limit = 100});
  EXPECT_EQ(e.status, sim::RunStatus::step_limit_exceeded);
  EXPECT_EQ(e.events.size(), 100u);
}

TEST(Engine, MachineErrorStopsTheRun) {
  sim::RegisterBank bank;
  sim::Journal j;
  prim::Tas2 t(bank, j);
  auto m = machines_of(2, [&](sim::Proc& p) -> sim::Task<Outcome> {
    co_await p.read(0);
    co_return co_await tas::as_outcome(t.tas(p, 1));
  });
  const auto e = run_fixed(m, bank, {0, 0, 1, 1});
  EXPECT_EQ(e.status, sim::RunStatus::protocol_error);
  EXPECT_NE(e.error.find("used twice"), std::string::npos) << e.error;
  EXPECT_EQ(e.events.size(), 4u);
}

TEST(Replay, SoloDoorwayWithFullCoinVector) {
  sim::RegisterBank bank;
  sim::Journal j;
  prim::Doorway door(bank, j);
  auto m = machines_of(1, [&](sim::Proc& p) {
    return tas::as_outcome(door.enter(p), Outcome::pass, Outcome::deflect);
  });
  const std::vector<Pid> s{0, 0, 0, 0};
  const auto e = sim::replay(s, {{11, 12}}, m, bank);
  EXPECT_EQ(e.processes[0].outcome, Outcome::pass);
  EXPECT_EQ(testing::shared_events(e).size(), 2u);
  EXPECT_EQ(e.events[0].coin, 11u);
  EXPECT_EQ(e.events[2].coin, 12u);
}

TEST(Replay, ExhaustedCoinVectorThrows) {
  sim::RegisterBank bank;
  sim::Journal j;
  prim::Doorway door(bank, j);
  auto m = machines_of(1, [&](sim::Proc& p) {
    return tas::as_outcome(door.enter(p), Outcome::pass, Outcome::deflect);
  });
  const std::vector<Pid> s{0, 0, 0, 0};
  EXPECT_THROW(sim::replay(s, {{11}}, m, bank), sim::CoinVectorExhausted);
}

TEST(Replay, ShortScheduleLeavesProcessesRunning) {
  sim::RegisterBank bank;
  sim::Journal j;
  prim::Tas2 t(bank, j);
  auto m = machines_of(2, [&](sim::Proc& p) { return tas::as_outcome(t.tas(p, p.pid() + 1)); });
  const std::vector<Pid> s{0, 0};
  const auto e = sim::replay(s, {{0}, {}}, m, bank);
  EXPECT_EQ(e.status, sim::RunStatus::schedule_exhausted);
  EXPECT_EQ(e.processes[0].shared_steps, 1u);
  EXPECT_EQ(e.processes[1].status, sim::ProcessStatus::not_started);
}

TEST(Replay, RoundTripsSigmaAndOmega) {
  sim::RegisterBank bank;
  sim::Journal j;
  tas::GeTas g(bank, j, 8, tas::GeKind::rwobl);
  auto m = machines_of(8, [&](sim::Proc& p) { return tas::as_outcome(g.tas(p)); });
  auto adv = adv::make_adversary("rwobl:laggard", {8, 2, 0, nullptr});
  sim::SplitCoins coins(2, 0);
  const auto e = sim::run(m, bank, *adv, coins);

  sim::RegisterBank bank2;
  sim::Journal j2;
  tas::GeTas g2(bank2, j2, 8, tas::GeKind::rwobl);
  auto m2 = machines_of(8, [&](sim::Proc& p) { return tas::as_outcome(g2.tas(p)); });
  const auto sigma = e.sigma();
  const auto r = sim::replay(sigma, e.omega(), m2, bank2);
  EXPECT_EQ(r.events, e.events);
  EXPECT_EQ(r.processes, e.processes);
  EXPECT_EQ(r.to_jsonl(false), e.to_jsonl(false));
}

TEST(Jsonl, FixedFieldOrder) {
  sim::Execution e;
  e.processes.resize(2);
  e.events.push_back({1, 0, EventKind::coin, 0, 0, 0xabcULL});
  e.events.push_back({2, 0, EventKind::write, 3, 1, 0});
  e.events.push_back({3, 1, EventKind::coin, 0, 0, 0});
  e.events.push_back({4, 1, EventKind::read, 3, 1, 0});
  e.noops.push_back({2, 0});
  const std::string want =
      "{\"i\":1,\"p\":0,\"op\":\"c\",\"reg\":null,\"val\":null,\"coin\":\"0x0000000000000abc\"}\n"
      "{\"i\":2,\"p\":0,\"op\":\"w\",\"reg\":3,\"val\":1,\"coin\":null}\n"
      "{\"i\":null,\"p\":0,\"op\":\"n\",\"reg\":null,\"val\":null,\"coin\":null}\n"
      "{\"i\":3,\"p\":1,\"op\":\"c\",\"reg\":null,\"val\":null,\"coin\":\"0x0000000000000000\"}\n"
      "{\"i\":4,\"p\":1,\"op\":\"r\",\"reg\":3,\"val\":1,\"coin\":null}\n";
  EXPECT_EQ(e.to_jsonl(), want);
  EXPECT_EQ(e.slots(), (std::vector<Pid>{0, 0, 0, 1, 1}));
}

TEST(Coins, SplitIsCounterBased) {
  sim::SplitCoins c(42, 7);
  EXPECT_EQ(c.draw(3, 5), sim::hash_key(42, 7, 3, 5));
  EXPECT_NE(c.draw(3, 5), c.draw(5, 3));
  EXPECT_NE(c.draw(3, 5), sim::SplitCoins(42, 8).draw(3, 5));
  // splitmix64 reference output for state 0.
  EXPECT_EQ(sim::splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Coins, WordsDoNotDependOnSchedule) {
  auto coins_of = [](const char* adversary) {
    sim::RegisterBank bank;
    sim::Journal j;
    tas::RatRace race(bank, j, 4, true);
    auto m = machines_of(4, [&](sim::Proc& p) { return tas::as_outcome(race.tas(p)); });
    auto adv = adv::make_adversary(adversary, {4, 1, 0, nullptr});
    sim::SplitCoins coins(77, 0);
    return sim::run(m, bank, *adv, coins).omega();
  };
  const auto a = coins_of("oblivious:roundrobin");
  const auto b = coins_of("oblivious:sequential");
  for (Pid p = 0; p < 4; ++p) {
    const auto n = std::min(a[p].size(), b[p].size());
    ASSERT_GT(n, 0u);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(a[p][i], b[p][i]);
  }
}

}  // namespace
}  // namespace tasim
