#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tasim/ge/group_election.hpp"
#include "tasim/harness/trials.hpp"
#include "tasim/util/iterated_log.hpp"

namespace tasim {
namespace {

using ge::LocOblElection;
using ge::RwOblElection;

TEST(LocObl, EllAndSpace) {
  EXPECT_EQ(LocOblElection::ell_for(1), 1u);
  EXPECT_EQ(LocOblElection::ell_for(2), 1u);
  EXPECT_EQ(LocOblElection::ell_for(16), 4u);
  EXPECT_EQ(LocOblElection::ell_for(17), 5u);
  EXPECT_EQ(LocOblElection::ell_for(1024), 10u);
  sim::RegisterBank bank;
  sim::Journal j;
  LocOblElection g(bank, j, 16);
  EXPECT_EQ(g.register_count(), 5u);
  EXPECT_EQ(bank.size(), 5u);
}

TEST(LocObl, LevelThresholds) {
  constexpr CoinWord top = CoinWord{1} << 63;
  EXPECT_EQ(LocOblElection::level(0, 4), 1u);
  EXPECT_EQ(LocOblElection::level(top - 1, 4), 1u);
  EXPECT_EQ(LocOblElection::level(top, 4), 2u);
  EXPECT_EQ(LocOblElection::level(top + (top >> 1) - 1, 4), 2u);
  EXPECT_EQ(LocOblElection::level(top + (top >> 1), 4), 3u);
  EXPECT_EQ(LocOblElection::level(~CoinWord{0} - (top >> 2), 4), 3u);
  EXPECT_EQ(LocOblElection::level(~CoinWord{0} - (top >> 2) + 1, 4), 4u);
  EXPECT_EQ(LocOblElection::level(~CoinWord{0}, 4), 4u);
  EXPECT_EQ(LocOblElection::level(~CoinWord{0}, 1), 1u);
}

TEST(LocObl, Distribution) {
  EXPECT_DOUBLE_EQ(LocOblElection::probability(1, 4), 0.5);
  EXPECT_DOUBLE_EQ(LocOblElection::probability(2, 4), 0.25);
  EXPECT_DOUBLE_EQ(LocOblElection::probability(3, 4), 0.125);
  EXPECT_DOUBLE_EQ(LocOblElection::probability(4, 4), 0.125);
  for (std::uint32_t ell : {1u, 2u, 7u, 10u}) {
    double sum = 0;
    for (std::uint32_t i = 1; i <= ell; ++i) sum += LocOblElection::probability(i, ell);
    EXPECT_DOUBLE_EQ(sum, 1.0);
  }
  std::array<int, 5> seen{};
  const int n = 100000;
  for (int t = 0; t < n; ++t) ++seen[LocOblElection::level(sim::hash_key(1, t), 4)];
  EXPECT_NEAR(seen[1] / double(n), 0.5, 0.01);
  EXPECT_NEAR(seen[2] / double(n), 0.25, 0.01);
  EXPECT_NEAR(seen[3] / double(n), 0.125, 0.01);
  EXPECT_NEAR(seen[4] / double(n), 0.125, 0.01);
}

TEST(LocObl, SoloWinsInTwoSteps) {
  harness::TrialConfig c{"ge:locobl", "oblivious:roundrobin", 16, 1, 200, 0};
  const auto a = harness::run_trials(c);
  EXPECT_EQ(a.violations, 0u);
  EXPECT_EQ(a.elected->mean, 1.0);
  EXPECT_EQ(a.max_step.max, 2.0);
  EXPECT_EQ(a.max_step.mean, 2.0);
}

TEST(LocObl, TwoStepsUnderEveryAdversary) {
  for (const auto& adv : adv::valid_adversary_ids()) {
    if (adv == "strong:ascending") continue;
    harness::TrialConfig c{"ge:locobl", adv, 0, 8, 200, 4};
    const auto a = harness::run_trials(c);
    EXPECT_EQ(a.violations, 0u) << adv;
    EXPECT_EQ(a.max_step.max, 2.0) << adv;
    EXPECT_EQ(a.max_step.mean, 2.0) << adv;
  }
}

TEST(LocObl, EffectivenessAtK256) {
  harness::TrialConfig c{"ge:locobl", "oblivious:roundrobin", 0, 256, 2000, 1};
  const auto a = harness::run_trials(c);
  EXPECT_LE(a.elected->upper(), 2 * 8 + 4);
}

TEST(RwObl, EllAndQ) {
  EXPECT_EQ(RwOblElection::ell_for(2), 1u);
  EXPECT_EQ(RwOblElection::ell_for(3), 1u);
  // ceil(ln(log2 n) / ln 1.5), evaluated by hand.
  EXPECT_EQ(RwOblElection::ell_for(4), 2u);     // 1.71
  EXPECT_EQ(RwOblElection::ell_for(16), 4u);    // 3.42
  EXPECT_EQ(RwOblElection::ell_for(256), 6u);   // 5.13
  EXPECT_EQ(RwOblElection::ell_for(1024), 6u);  // 5.68
  EXPECT_DOUBLE_EQ(RwOblElection::q(1), 0.5);
  EXPECT_NEAR(RwOblElection::q(2), 0.353553, 1e-6);
  EXPECT_NEAR(RwOblElection::q(3), 0.210224, 1e-6);
  for (std::uint32_t i = 1; i < 6; ++i)
    EXPECT_NEAR(RwOblElection::q(i + 1), std::pow(RwOblElection::q(i), 1.5), 1e-15);
  EXPECT_TRUE(RwOblElection::heads(0, 0.5));
  EXPECT_FALSE(RwOblElection::heads(CoinWord{1} << 63, 0.5));
  EXPECT_TRUE(RwOblElection::heads((CoinWord{1} << 63) - 1, 0.5));
}

TEST(RwObl, Space) {
  for (std::uint32_t n : {2u, 16u, 256u}) {
    sim::RegisterBank bank;
    sim::Journal j;
    RwOblElection g(bank, j, n);
    EXPECT_EQ(bank.size(), 2 * RwOblElection::ell_for(n) - 1);
    EXPECT_EQ(g.register_count(), bank.size());
  }
}

TEST(RwObl, SoloWins) {
  harness::TrialConfig c{"ge:rwobl", "oblivious:roundrobin", 256, 1, 500, 0};
  const auto a = harness::run_trials(c);
  EXPECT_EQ(a.violations, 0u);
  EXPECT_EQ(a.elected->mean, 1.0);
}

TEST(Trivial, EveryoneWinsWithoutSteps) {
  harness::TrialConfig c{"ge:trivial", "oblivious:random", 8, 5, 10, 0};
  const auto a = harness::run_trials(c);
  EXPECT_EQ(a.elected->mean, 5.0);
  EXPECT_EQ(a.max_step.max, 0.0);
  EXPECT_EQ(a.registers, 0u);
}

// (GR) is audited in every trial; any violation would be counted.
TEST(GroupElection, SomeoneIsElectedUnderEveryAdversary) {
  for (const char* alg : {"ge:locobl", "ge:rwobl", "ge:trivial"}) {
    for (const auto& adv : adv::valid_adversary_ids()) {
      if (adv == "strong:ascending" && std::string(alg) != "ge:locobl") continue;
      harness::TrialConfig c{alg, adv, 0, 5, 300, 8};
      const auto a = harness::run_trials(c);
      EXPECT_EQ(a.violations, 0u) << alg << " " << adv;
      for (const auto& m : a.per_trial) ASSERT_GE(*m.elected, 1u) << alg << " " << adv;
    }
  }
}

TEST(IteratedLog, Values) {
  EXPECT_EQ(log_star(1), 0u);
  EXPECT_EQ(log_star(2), 1u);
  EXPECT_EQ(log_star(16), 3u);
  EXPECT_EQ(log_star(65536), 4u);
  EXPECT_EQ(g_star(1), 0u);
  EXPECT_EQ(g_star(2), 1u);
  EXPECT_DOUBLE_EQ(g_step(2), 1.0);
  // 1024 -> 24 -> 13.17 -> 11.44 -> 10.44 -> 9.44 -> ... -> 0.44.
  EXPECT_EQ(g_star(1024), 14u);
  EXPECT_EQ(g_star(4), 3u);
}

}  // namespace
}  // namespace tasim
