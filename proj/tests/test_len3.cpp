#include <gtest/gtest.h>

#include "swapreach/generators.hpp"
#include "swapreach/io.hpp"
#include "swapreach/len3.hpp"
#include "swapreach/oracle.hpp"
#include "swapreach/solve.hpp"

using namespace swapreach;

namespace {

Digraph chain(std::size_t n, std::vector<std::pair<int, int>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(agent_at(static_cast<std::size_t>(u)), agent_at(static_cast<std::size_t>(v)));
  return d;
}

std::string inline_swaps(const SwapSequence& seq) {
  std::string s;
  for (auto [i, j] : seq) s += std::to_string(idx(i) + 1) + "-" + std::to_string(idx(j) + 1) + " ";
  return s;
}

}  // namespace

TEST(Len3, ShortListsCycleGivesKnownSequence) {
  Instance inst = load_instance(SWAPREACH_DATA_DIR "/short_lists_cycle.txt");
  Decision d = solve_len3(inst);
  ASSERT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(inline_swaps(d.certificate), "4-3 3-2 2-1 4-5 5-6 6-1 ");
  EXPECT_TRUE(verify_certificate(inst, d.certificate).valid);
  EXPECT_EQ(d.algorithm, "len3");
}

TEST(Len3, LongListsAreACapabilityError) {
  Instance inst = load_instance(SWAPREACH_DATA_DIR "/intro_cycle.txt");
  EXPECT_THROW(solve_len3(inst), CapabilityError);
  EXPECT_FALSE(effective_lists_within(inst, 3));
  EXPECT_EQ(choose_algorithm(inst), Algorithm::oracle);
}

TEST(Len3, CarrierDigraphOfShortListsCycle) {
  Instance inst = load_instance(SWAPREACH_DATA_DIR "/short_lists_cycle.txt");
  Canonical c = canonicalize(inst);
  Digraph D = build_D(c.instance);
  // canonical: target first, holder of x last
  Agent N = c.instance.initial_holder(c.instance.target_object());
  EXPECT_EQ(D.in_degree(N), 0u);
  EXPECT_LE(D.out_degree(N), 2u);
  EXPECT_GT(D.arc_count(), 0u);
}

TEST(Len3, ConstrainedPathHonorsFirstArc) {
  // 0 -> 1 -> 3, 0 -> 2 -> 3
  Digraph d = chain(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  auto any = constrained_path(d, agent_at(0), agent_at(3));
  ASSERT_TRUE(any);
  EXPECT_EQ(any->size(), 3u);
  auto via2 = constrained_path(d, agent_at(0), agent_at(3), FirstArc::required(agent_at(0), agent_at(2)));
  ASSERT_TRUE(via2);
  EXPECT_EQ((*via2)[1], agent_at(2));
  auto not1 = constrained_path(d, agent_at(0), agent_at(3), FirstArc::forbidden(agent_at(0), agent_at(1)));
  ASSERT_TRUE(not1);
  EXPECT_EQ((*not1)[1], agent_at(2));
  Digraph single = chain(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(constrained_path(single, agent_at(0), agent_at(2), FirstArc::forbidden(agent_at(0), agent_at(1))));
  auto self = constrained_path(single, agent_at(1), agent_at(1));
  ASSERT_TRUE(self);
  EXPECT_EQ(self->size(), 1u);
}

TEST(Len3, DigraphDeletion) {
  Digraph d = chain(3, {{0, 1}, {1, 2}});
  Digraph e = d.without({agent_at(1)});
  EXPECT_TRUE(e.deleted(agent_at(1)));
  EXPECT_FALSE(constrained_path(e, agent_at(0), agent_at(2)));
  EXPECT_TRUE(d.has_arc(agent_at(0), agent_at(1)));
  EXPECT_EQ(d.in_degree(agent_at(2)), 1u);
}

TEST(Len3, AgreesWithOracleOnSmallRandomGraphs) {
  int yes = 0;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    auto kind = static_cast<GraphKind>(seed % 4);
    Instance inst = gen_random(kind, 3 + seed % 5, seed, 3);
    Decision a = solve_len3(inst);
    Decision b = oracle_decide(inst);
    ASSERT_EQ(a.verdict, b.verdict) << serialize_instance(inst);
    if (a.verdict == Verdict::yes) {
      ++yes;
      EXPECT_TRUE(verify_certificate(inst, a.certificate).valid);
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(Len3, TrivialCases) {
  Instance holds = parse_instance_string("agents: 2\nobjects: a b\ngraph: path\nassign: 1=a 2=b\n"
                                         "target: agent=1 object=a\n");
  Decision d = solve_len3(holds);
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_TRUE(d.certificate.empty());
}
