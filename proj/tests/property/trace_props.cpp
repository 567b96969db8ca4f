#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "mpst/event_structure.hpp"
#include "mpst/semantic_wf.hpp"
#include "mpst/traces.hpp"
#include "oracles.hpp"

namespace mpst {
namespace {

constexpr int kInstances = 500;

Trace shuffled(Trace t, std::mt19937& rng) {
  std::shuffle(t.begin(), t.end(), rng);
  return t;
}

TEST(TraceProps, NormalFormIsClassInvariant) {
  std::mt19937 rng(31);
  for (int i = 0; i < kInstances; ++i) {
    const Trace s = testing::random_trace(rng, i % 7);
    const Trace nf = trace_normal_form(s);
    EXPECT_EQ(nf, testing::brute_normal_form(s)) << to_string(s);
    for (const auto& t : testing::swap_class(s)) EXPECT_EQ(trace_normal_form(t), nf);
  }
}

TEST(TraceProps, EquivalenceMatchesSwapClosure) {
  std::mt19937 rng(32);
  for (int i = 0; i < kInstances; ++i) {
    const Trace s = testing::random_trace(rng, i % 7, 4, 1);
    const Trace t = shuffled(s, rng);
    EXPECT_EQ(trace_equivalent(s, t), testing::brute_equivalent(s, t)) << to_string(s) << " / " << to_string(t);
  }
}

TEST(TraceProps, PointednessAndLastPreserved) {
  std::mt19937 rng(33);
  int pointed = 0;
  for (int i = 0; i < kInstances || pointed < kInstances; ++i) {
    const Trace s = testing::random_trace(rng, 1 + i % 6, 3);
    const bool pt = is_pointed(s);
    EXPECT_EQ(pt, testing::brute_pointed(s)) << to_string(s);
    if (!pt) continue;
    ++pointed;
    for (const auto& t : testing::swap_class(s)) {
      EXPECT_TRUE(is_pointed(t)) << to_string(t);
      EXPECT_EQ(t.back(), s.back()) << to_string(t);
    }
  }
}

TEST(TraceProps, PrefixMatchesOracle) {
  std::mt19937 rng(34);
  for (int i = 0; i < kInstances; ++i) {
    const Trace w = testing::random_trace(rng, i % 7, 4, 1);
    Trace u(w.begin(), w.begin() + static_cast<long>(w.empty() ? 0 : i % (w.size() + 1)));
    if (i % 2) u = testing::random_trace(rng, i % 4, 4, 1);
    u = shuffled(u, rng);
    EXPECT_EQ(trace_prefix(u, w), testing::brute_leq(u, w)) << to_string(u) << " / " << to_string(w);
  }
}

TEST(TraceProps, EventRelationsMatchOracles) {
  std::mt19937 rng(35);
  for (int i = 0; i < kInstances; ++i) {
    const Trace base = testing::random_trace(rng, i % 4, 4, 2);
    Trace a = base, b = base;
    for (const auto& c : testing::random_trace(rng, 1 + i % 3, 4, 2)) a.push_back(c);
    for (const auto& c : testing::random_trace(rng, 1 + i % 2, 4, 2)) b.push_back(c);
    const GEvent ea = event_of(a), eb = event_of(b);
    EXPECT_EQ(event_leq(ea, eb), testing::brute_leq(ea.trace(), eb.trace()));
    EXPECT_EQ(event_conflict(ea, eb), testing::brute_conflict(ea.trace(), eb.trace()))
        << ea.str() << " / " << eb.str();
    EXPECT_EQ(initial_conflict(ea, eb), testing::brute_initial_conflict(ea.trace(), eb.trace()));
  }
}

TEST(TraceProps, EventOfMatchesOracle) {
  std::mt19937 rng(36);
  for (int i = 0; i < kInstances; ++i) {
    const Trace s = testing::random_trace(rng, 1 + i % 6);
    EXPECT_EQ(event_of(s).trace(), testing::brute_event(s)) << to_string(s);
  }
}

TEST(TraceProps, CausalPrefixExtensionLaw) {
  std::mt19937 rng(37);
  for (int i = 0; i < kInstances; ++i) {
    const GEvent e = event_of(testing::random_trace(rng, 1 + i % 4));
    const Trace s1 = testing::random_trace(rng, i % 3), s2 = testing::random_trace(rng, i % 4);
    Trace both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    EXPECT_EQ(causal_prefix(both, e), causal_prefix(s1, causal_prefix(s2, e)));
    // ev(s.a) = s o [a]
    Trace sa = s2;
    sa.push_back(e.cm());
    EXPECT_EQ(event_of(sa), causal_prefix(s2, GEvent::of({e.cm()})));
  }
}

TEST(TraceProps, SiblingEvents) {
  std::mt19937 rng(38);
  for (int i = 0; i < kInstances; ++i) {
    const Trace s = testing::random_trace(rng, i % 6);
    const Communication a1 = testing::random_trace(rng, 1)[0];
    // Same participants, possibly the other direction and another label.
    Communication a2 = a1;
    if (i % 2) std::swap(a2.sender, a2.receiver);
    a2.label = i % 3 ? "l2" : "l1";
    Trace s1 = s, s2 = s;
    s1.push_back(a1);
    s2.push_back(a2);
    Trace expect = event_of(s1).history();
    expect.push_back(a2);
    EXPECT_EQ(event_of(s2), GEvent::of(expect)) << to_string(s) << " / " << a1.str();
  }
}

TEST(TraceProps, SemDepthMatchesOracle) {
  std::mt19937 rng(39);
  for (int i = 0; i < kInstances; ++i) {
    const Trace s = testing::random_trace(rng, 1 + i % 6, 3);
    for (const char* p : {"p", "q"})
      for (std::size_t k = 1; k <= 3; ++k)
        EXPECT_EQ(sem_depth_k(p, s, k), testing::brute_sem_depth(p, s, k)) << to_string(s) << " " << p << k;
  }
}

}  // namespace
}  // namespace mpst
