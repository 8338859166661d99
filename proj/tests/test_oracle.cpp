#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "swapreach/generators.hpp"
#include "swapreach/io.hpp"
#include "swapreach/oracle.hpp"

using namespace swapreach;

TEST(Oracle, IntroCycleTwoSwaps) {
  Instance inst = load_instance(SWAPREACH_DATA_DIR "/intro_cycle.txt");
  Decision d = oracle_decide(inst);
  ASSERT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.certificate.size(), 2u);
  EXPECT_TRUE(verify_certificate(inst, d.certificate).valid);
  EXPECT_GT(d.counters.states, 0u);
}

TEST(Oracle, ShortListsCycleIsYes) {
  Instance inst = load_instance(SWAPREACH_DATA_DIR "/short_lists_cycle.txt");
  Decision d = oracle_decide(inst);
  ASSERT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.certificate.size(), 6u);
  EXPECT_TRUE(verify_certificate(inst, d.certificate).valid);
}

TEST(Oracle, ExhaustedSearchIsNo) {
  // agent 2 would hand x on only for a, which agent 1 never gives up
  Instance inst = parse_instance_string(
      "agents: 3\nobjects: a b x\ngraph: path\nassign: 1=a 2=b 3=x\n"
      "pref 1: x a\npref 2: x b\npref 3: a x\ntarget: agent=1 object=x\n");
  Decision d = oracle_decide(inst);
  EXPECT_EQ(d.verdict, Verdict::no);
  EXPECT_TRUE(d.certificate.empty());
}

TEST(Oracle, BudgetGivesUnknown) {
  Instance inst = load_instance(SWAPREACH_DATA_DIR "/intro_cycle.txt");
  OracleOptions tiny;
  tiny.max_states = 1;
  EXPECT_EQ(oracle_decide(inst, tiny).verdict, Verdict::unknown);
  tiny.max_states = 0;
  EXPECT_THROW(oracle_decide(inst, tiny), InputError);
}

TEST(Oracle, EnvironmentOverridesBudget) {
  ::setenv("SWAPREACH_MAX_STATES", "123", 1);
  EXPECT_EQ(default_max_states(), 123u);
  ::setenv("SWAPREACH_MAX_STATES", "junk", 1);
  EXPECT_EQ(default_max_states(), kDefaultMaxStates);
  ::unsetenv("SWAPREACH_MAX_STATES");
  EXPECT_EQ(default_max_states(), kDefaultMaxStates);
}

TEST(Oracle, TargetAlreadyHoldingXNeedsNoSwaps) {
  Instance inst = parse_instance_string(
      "agents: 2\nobjects: a b\ngraph: path\nassign: 1=a 2=b\ntarget: agent=1 object=a\n");
  Decision d = oracle_decide(inst);
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_TRUE(d.certificate.empty());
}

TEST(Oracle, ReachableSetOfTwoAgents) {
  Instance inst = parse_instance_string(
      "agents: 2\nobjects: a b\ngraph: path\nassign: 1=a 2=b\npref 1: b a\npref 2: a b\n"
      "target: agent=1 object=b\n");
  auto rs = reachable_set(inst, 100);
  EXPECT_TRUE(rs.complete);
  EXPECT_EQ(rs.assignments.size(), 2u);
  for (const auto& a : rs.assignments) EXPECT_TRUE(a.is_bijection_for(inst));
}

TEST(Oracle, ReachableSetsAreClosedUnderSwaps) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = gen_random(GraphKind::random, 5, seed, 4);
    auto rs = reachable_set(inst, 1'000'000);
    ASSERT_TRUE(rs.complete);
    auto known = [&](const Assignment& a) {
      return std::find(rs.assignments.begin(), rs.assignments.end(), a) != rs.assignments.end();
    };
    for (const auto& a : rs.assignments)
      for (auto [u, v] : inst.edges())
        if (admits_swap(inst, a, u, v)) {
          EXPECT_TRUE(known(apply_swap(inst, a, u, v)));
        }
  }
}

TEST(Oracle, CertificatesAlwaysVerify) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto kind = static_cast<GraphKind>(seed % 4);
    Instance inst = gen_random(kind, 3 + seed % 5, seed, 4);
    Decision d = oracle_decide(inst);
    ASSERT_NE(d.verdict, Verdict::unknown);
    if (d.verdict == Verdict::yes) {
      EXPECT_TRUE(verify_certificate(inst, d.certificate).valid) << seed;
    }
  }
}
