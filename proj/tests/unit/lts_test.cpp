#include <gtest/gtest.h>

#include "mpst/lts.hpp"
#include "mpst/parser.hpp"

namespace mpst {
namespace {

const char* const kSplit = "p->q{l1; r->s:l3, l2; r->s:l3}";
const char* const kSkewed = "p->q{l1; end, l2; r->s:l3}";
const char* const kNet = "p::q!{l1, l2} | q::p?{l1, l2} | r::s!l3 | s::r?l3";

Communication c(const char* s) { return parse_communication(s); }

TEST(StepNetwork, Comm) {
  const auto n = step_network(parse_network(kNet), c("p q l1"));
  ASSERT_TRUE(n);
  EXPECT_EQ(*n, parse_network("p::0 | q::0 | r::s!l3 | s::r?l3"));
}

TEST(StepNetwork, NoRedex) {
  EXPECT_FALSE(step_network(parse_network("p::0 | q::0"), c("p q l")));
  EXPECT_FALSE(step_network(parse_network("p::q!l1 | q::p?l2"), c("p q l1")));
  // The receiver must be listening to the sender.
  EXPECT_FALSE(step_network(parse_network("p::q!l | q::r?l | r::0"), c("p q l")));
  // Unbound participants behave as 0.
  EXPECT_FALSE(step_network(parse_network("p::q!l"), c("p q l")));
}

TEST(StepNetwork, UnfoldsRecursion) {
  const Network n = parse_network("p::rec Y. q!a.Y | q::rec Z. p?a.Z");
  const auto m = step_network(n, c("p q a"));
  ASSERT_TRUE(m);
  EXPECT_EQ(state_key(*m), state_key(n));
}

TEST(StepGlobal, IcommAcrossBranches) {
  const auto g = step_global(parse_global(kSplit), c("r s l3"));
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, parse_global("p->q{l1; end, l2; end}"));
}

TEST(StepGlobal, IcommNeedsEveryBranch) {
  EXPECT_FALSE(step_global(parse_global(kSkewed), c("r s l3")));
}

TEST(StepGlobal, Ecomm) {
  EXPECT_EQ(*step_global(parse_global("p->q:l.end"), c("p q l")), GlobalType::end());
  EXPECT_FALSE(step_global(parse_global("p->q:l.end"), c("p q m")));
  EXPECT_FALSE(step_global(parse_global("p->q:l.end"), c("q p l")));
  EXPECT_FALSE(step_global(GlobalType::end(), c("p q l")));
}

TEST(StepGlobal, OverlappingParticipantsOnlyEcomm) {
  // q is shared with the head, so q->r may not overtake p->q.
  EXPECT_FALSE(step_global(parse_global("p->q:a.q->r:b"), c("q r b")));
}

TEST(StepGlobal, IcommUnderRecursion) {
  const GlobalType g = parse_global("rec X. p->q{a; r->s:m.X, b; r->s:m.end}");
  const auto h = step_global(g, c("r s m"));
  ASSERT_TRUE(h);
  EXPECT_TRUE(step_global(*h, c("p q a")));
  // After the loop is entered again r->s is pending once more.
  EXPECT_TRUE(step_global(*step_global(*h, c("p q a")), c("r s m")));
  EXPECT_FALSE(step_global(parse_global("rec X. p->q{a; X, b; r->s:m}"), c("r s m")));
}

TEST(Transitions, Lists) {
  const auto tg = transitions(parse_global(kSplit));
  EXPECT_EQ(tg.size(), 3u);
  EXPECT_EQ(transitions(parse_network(kNet)).size(), 3u);
  EXPECT_TRUE(transitions(parse_network("p::0")).empty());
}

TEST(TracesOf, Cases) {
  EXPECT_EQ(traces_of(parse_global(kSplit), 2),
            (std::set<Trace>{parse_trace("p q l1"), parse_trace("p q l2"), parse_trace("r s l3"),
                             parse_trace("p q l1 . r s l3"), parse_trace("p q l2 . r s l3"),
                             parse_trace("r s l3 . p q l1"), parse_trace("r s l3 . p q l2")}));
  EXPECT_TRUE(traces_of(parse_network("p::0"), 4).empty());
  EXPECT_EQ(traces_of(parse_global("p->q:l.end"), 5), (std::set<Trace>{parse_trace("p q l")}));
}

TEST(TraceEquivalent, Cases) {
  EXPECT_TRUE(trace_equivalent(parse_global(kSplit), parse_network(kNet), 3).equivalent);
  const auto r = trace_equivalent(parse_global(kSkewed), parse_network(kNet), 3);
  EXPECT_FALSE(r.equivalent);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, parse_trace("p q l1 . r s l3"));
  EXPECT_FALSE(r.witness_in_global);
  EXPECT_TRUE(trace_equivalent(GlobalType::end(), parse_network("p::0"), 1).equivalent);
}

TEST(TraceEquivalent, WitnessOnGlobalSide) {
  const auto r = trace_equivalent(parse_global("p->q:a"), parse_network("p::0 | q::0"), 2);
  EXPECT_FALSE(r.equivalent);
  EXPECT_TRUE(r.witness_in_global);
  EXPECT_EQ(*r.witness, parse_trace("p q a"));
}

TEST(Determinism, Cases) {
  EXPECT_TRUE(lts_deterministic(parse_global(kSplit), 4));
  EXPECT_TRUE(lts_deterministic(parse_network("p::0"), 1));
  EXPECT_TRUE(lts_deterministic(parse_network("p::q!l | q::p?l | r::s!m | s::r?m"), 2));
  EXPECT_TRUE(lts_deterministic(parse_global("rec X. p->q{a; r->s:m.X, b; r->s:m}"), 6));
}

TEST(StateKey, EqualForEqualStates) {
  EXPECT_EQ(state_key(parse_global("rec X. p->q:a.X")),
            state_key(*step_global(parse_global("rec X. p->q:a.X"), c("p q a"))));
  EXPECT_NE(state_key(parse_global("p->q:a")), state_key(parse_global("p->q:b")));
}

}  // namespace
}  // namespace mpst
