#include <gtest/gtest.h>

#include "mpst/parser.hpp"
#include "mpst/regular.hpp"
#include "mpst/syntax.hpp"

namespace mpst {
namespace {

const char* const kSplit = "p->q{l1; r->s:l3.end, l2; r->s:l3.end}";

TEST(ParseGlobal, TwoBranchChoice) {
  const GlobalType g = parse_global(kSplit);
  ASSERT_TRUE(g.is_choice());
  EXPECT_EQ(g.sender(), "p");
  EXPECT_EQ(g.receiver(), "q");
  ASSERT_EQ(g.branches().size(), 2u);
  EXPECT_EQ(g.branches()[0].label, "l1");
  EXPECT_EQ(g.branches()[1].label, "l2");
  for (const auto& b : g.branches()) {
    ASSERT_TRUE(b.cont.is_choice());
    EXPECT_EQ(b.cont.sender(), "r");
    EXPECT_EQ(b.cont.receiver(), "s");
    ASSERT_EQ(b.cont.branches().size(), 1u);
    EXPECT_EQ(b.cont.branches()[0].label, "l3");
    EXPECT_TRUE(b.cont.branches()[0].cont.is_end());
  }
}

TEST(ParseGlobal, End) { EXPECT_TRUE(parse_global("end").is_end()); }

TEST(ParseGlobal, MinimalRecursion) {
  const GlobalType g = parse_global("rec X. p->q:l . X");
  ASSERT_EQ(g.kind(), GlobalType::Kind::Rec);
  EXPECT_EQ(g.var_name(), "X");
  ASSERT_TRUE(g.body().is_choice());
  EXPECT_EQ(g.body().branches()[0].cont.kind(), GlobalType::Kind::Var);
  EXPECT_EQ(g.body().branches()[0].cont.var_name(), "X");
}

TEST(ParseGlobal, OmittedContinuationsAreEnd) {
  EXPECT_EQ(parse_global("p->q:a"), parse_global("p->q:a.end"));
  EXPECT_EQ(parse_global("p->q{a, b; r->s:c}"), parse_global("p->q{a; end, b; r->s:c.end}"));
}

TEST(ParseGlobal, Errors) {
  EXPECT_THROW(parse_global("p->q{"), ParseError);
  EXPECT_THROW(parse_global("p->q{a; end, a; end}"), ParseError);
  EXPECT_THROW(parse_global("p->p:a"), ParseError);
  EXPECT_THROW(parse_global("p->q:a.X"), ParseError);
  EXPECT_THROW(parse_global("rec X. X"), ParseError);
  EXPECT_THROW(parse_global("rec X. rec Y. X"), ParseError);
  EXPECT_THROW(parse_global("end end"), ParseError);
  EXPECT_THROW(parse_global(""), ParseError);
}

TEST(ParseGlobal, ErrorPosition) {
  try {
    parse_global("p->q:a.\n  r->r:b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GE(e.column(), 3u);
  }
}

TEST(ParseProcess, Forms) {
  const Process p = parse_process("q!{l1; 0, l2; 0}");
  EXPECT_EQ(p.kind(), Process::Kind::Out);
  EXPECT_EQ(p.partner(), "q");
  EXPECT_EQ(p.branches().size(), 2u);
  EXPECT_EQ(parse_process("p?a").kind(), Process::Kind::In);
  EXPECT_TRUE(parse_process("0").is_zero());
  EXPECT_EQ(parse_process("rec Y. p!a.Y").kind(), Process::Kind::Rec);
  EXPECT_THROW(parse_process("p!{a, a}"), ParseError);
  EXPECT_THROW(parse_process("rec Y. Y"), ParseError);
}

TEST(ParseNetwork, Bindings) {
  const Network n = parse_network("p::q!{l1, l2} | q::p?{l1, l2} | r::s!l3 | s::r?l3");
  EXPECT_EQ(n.domain(), (std::set<Participant>{"p", "q", "r", "s"}));
  EXPECT_EQ(*n.at("r"), parse_process("s!l3.0"));
  EXPECT_TRUE(n.process_of("t").is_zero());
  EXPECT_THROW(parse_network("p::0 | p::0"), ParseError);
}

TEST(ParseTrace, BothNotations) {
  const Trace t = parse_trace("p q l1 . r->s:l3");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (Communication{"p", "q", "l1"}));
  EXPECT_EQ(t[1], (Communication{"r", "s", "l3"}));
  EXPECT_TRUE(parse_trace("  ").empty());
  EXPECT_THROW(parse_trace("p p l"), ParseError);
  EXPECT_EQ(to_string(t), "p q l1 . r s l3");
}

TEST(Printing, RoundTrip) {
  for (const char* s : {kSplit, "end", "rec X. p->q{a; X, b; q->r:c.end}",
                        "p->q:a.rec Y. r->s{x; Y, y; end}"}) {
    const GlobalType g = parse_global(s);
    EXPECT_EQ(parse_global(g.str()), g) << s;
  }
  const Process p = parse_process("rec Y. q?{a; Y, b; r!c.0}");
  EXPECT_EQ(parse_process(p.str()), p);
}

TEST(Construction, Validation) {
  EXPECT_THROW(GlobalType::choice("p", "p", {{"a", GlobalType::end()}}), std::invalid_argument);
  EXPECT_THROW(GlobalType::choice("p", "q", {}), std::invalid_argument);
  EXPECT_THROW(GlobalType::choice("p", "q", {{"a", GlobalType::end()}, {"a", GlobalType::end()}}),
               std::invalid_argument);
  const GlobalType m = GlobalType::message("p", "q", "a", GlobalType::end());
  ASSERT_NE(m.branch("a"), nullptr);
  EXPECT_EQ(m.branch("b"), nullptr);
}

TEST(Unfold, Cases) {
  EXPECT_TRUE(unfold(GlobalType::end()).is_end());
  const GlobalType r = parse_global("rec X. p->q:l . X");
  const GlobalType u = unfold(r);
  ASSERT_TRUE(u.is_choice());
  EXPECT_EQ(u.branches()[0].cont, r);
  const GlobalType c = parse_global(kSplit);
  EXPECT_EQ(unfold(c), c);
  EXPECT_THROW(unfold(GlobalType::var("X")), std::invalid_argument);
  EXPECT_EQ(unfold(parse_process("rec Y. p!a.Y")).kind(), Process::Kind::Out);
}

TEST(Substitute, CaptureFree) {
  const GlobalType body = parse_global("rec X. p->q:a.X").body();
  const GlobalType inner = parse_global("rec X. p->q{a; X, b; rec X. r->s:c.X}");
  const GlobalType replacement = parse_global("end");
  // Bound occurrences are left untouched.
  EXPECT_EQ(substitute(inner, "X", replacement), inner);
  EXPECT_EQ(substitute(body, "X", replacement), parse_global("p->q:a.end"));
}

TEST(Participants, Cases) {
  EXPECT_EQ(participants_of(parse_global(kSplit)), (std::set<Participant>{"p", "q", "r", "s"}));
  EXPECT_TRUE(participants_of(GlobalType::end()).empty());
  EXPECT_EQ(participants_of(parse_global("rec X. p->q:l . X")), (std::set<Participant>{"p", "q"}));
}

TEST(Paths, ToDepth) {
  EXPECT_EQ(paths_to_depth(parse_global(kSplit), 2),
            (std::set<Trace>{parse_trace("p q l1"), parse_trace("p q l2"),
                             parse_trace("p q l1 . r s l3"), parse_trace("p q l2 . r s l3")}));
  EXPECT_TRUE(paths_to_depth(GlobalType::end(), 5).empty());
  EXPECT_EQ(paths_to_depth(parse_global("rec X. p->q:l . X"), 3),
            (std::set<Trace>{parse_trace("p q l"), parse_trace("p q l . p q l"),
                             parse_trace("p q l . p q l . p q l")}));
}

TEST(SubtermAfter, Cases) {
  const GlobalType g = parse_global(kSplit);
  EXPECT_EQ(subterm_after(g, parse_trace("p q l1")), parse_global("r->s:l3"));
  EXPECT_EQ(subterm_after(g, {}), g);
  const GlobalType r = parse_global("rec X. p->q:l . X");
  const GlobalType after = subterm_after(r, parse_trace("p q l . p q l"));
  EXPECT_TRUE(regular_equal(after, r));
  EXPECT_THROW(subterm_after(g, parse_trace("r s l3")), std::invalid_argument);
  EXPECT_THROW(subterm_after(g, parse_trace("p q l1 . r s l3 . p q l1")), std::invalid_argument);
}

TEST(RegularEqual, Cases) {
  EXPECT_TRUE(regular_equal(parse_global("rec X. p->q:l.X"),
                            parse_global("rec Y. p->q:l . p->q:l . Y")));
  EXPECT_TRUE(regular_equal(GlobalType::end(), GlobalType::end()));
  EXPECT_FALSE(regular_equal(parse_global("p->q:l1.end"), parse_global("p->q:l2.end")));
  EXPECT_TRUE(regular_equal(parse_global("p->q{a; end, b; end}"), parse_global("p->q{b; end, a; end}")));
  EXPECT_TRUE(regular_equal(parse_process("rec Y. p!a.Y"), parse_process("p!a. rec Z. p!a.Z")));
  EXPECT_FALSE(regular_equal(parse_process("p!a.0"), parse_process("p?a.0")));
}

TEST(GlobalGraph, BreadthFirstNumbering) {
  const GlobalGraph gg = GlobalGraph::from(parse_global(kSplit));
  ASSERT_FALSE(gg.nodes[0].end);
  EXPECT_EQ(gg.nodes[0].sender, "p");
  EXPECT_TRUE(is_path(gg, parse_trace("p q l2 . r s l3")));
  EXPECT_FALSE(is_path(gg, parse_trace("r s l3")));
  EXPECT_TRUE(is_path(gg, {}));
  EXPECT_TRUE(regular_equal(gg.term(), parse_global(kSplit)));
}

}  // namespace
}  // namespace mpst
