#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mpst/cli.hpp"

namespace mpst {
namespace {

const char* const kSplit = "p->q{l1; r->s:l3, l2; r->s:l3}";
const char* const kSkewed = "p->q{l1; end, l2; r->s:l3}";
const char* const kNet = "p::q!{l1, l2} | q::p?{l1, l2} | r::s!l3 | s::r?l3";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CheckWellFormed) {
  const Result r = run({"check", kSplit});
  EXPECT_EQ(r.code, kPass) << r.out << r.err;
  EXPECT_NE(r.out.find("well-formed; PES semantically projectable at horizon 8"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CheckNotProjectable) {
  const Result r = run({"check", kSkewed});
  EXPECT_EQ(r.code, kPropertyFailure);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("not projectable (witness: r at root)"), std::string::npos);
}

TEST(Cli, CheckJson) {
  const Result r = run({"check", "--format", "json", kSplit});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["events"], 3);
  EXPECT_EQ(j["syntactic"]["projectable"], true);
}

TEST(Cli, InputErrors) {
  const Result a = run({"check", "p->q:"});
  EXPECT_EQ(a.code, kInputError);
  EXPECT_EQ(a.err, "error: 1:6: expected label, found end of input\n");
  EXPECT_EQ(run({}).code, kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run({"check"}).code, kInputError);
  EXPECT_EQ(run({"check", "--horizon", "0", kSplit}).code, kInputError);
  EXPECT_EQ(run({"check", "--format", "dot", kSplit}).code, kInputError);
  EXPECT_EQ(run({"check", "--file", "/nonexistent/g.mpst"}).code, kInputError);
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("typecheck"), std::string::npos);
}

TEST(Cli, PesDot) {
  const Result r = run({"pes", "--format", "dot", kSplit});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("e0 -> e1 [style=dashed, dir=none];"), std::string::npos);
}

TEST(Cli, PesText) {
  const Result r = run({"pes", kSplit});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("3 events at horizon 8"), std::string::npos);
  EXPECT_NE(r.out.find("e0#e1"), std::string::npos);
}

TEST(Cli, Compare) {
  EXPECT_EQ(run({"compare", kSplit, kSkewed}).out, "identical\n");
  const Result d = run({"compare", "p->q:l1", "p->q:l2"});
  EXPECT_EQ(d.code, kPropertyFailure);
  EXPECT_EQ(d.out.rfind("different", 0), 0u);
}

TEST(Cli, Typecheck) {
  EXPECT_EQ(run({"typecheck", kNet, kSplit}).out, "typable\n");
  const Result r = run({"typecheck", kNet, kSkewed});
  EXPECT_EQ(r.code, kPropertyFailure);
  EXPECT_EQ(r.out,
            "not typable: global type not projectable: branch projections on 'r' differ at p->q\n");
}

TEST(Cli, Project) {
  const Result r = run({"project", "--participant", "q", "p->q:a"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "q: p?a.0\n");
  EXPECT_EQ(run({"project", kSkewed}).code, kPropertyFailure);
}

TEST(Cli, TraceAndEquiv) {
  const Result t = run({"trace", "--horizon", "2", "p->q:a.q->r:b"});
  EXPECT_EQ(t.out, "p q a\np q a . q r b\n");
  EXPECT_EQ(run({"equiv", "--horizon", "3", kNet, kSplit}).code, kPass);
  const Result e = run({"equiv", "--horizon", "3", kNet, kSkewed});
  EXPECT_EQ(e.code, kPropertyFailure);
  EXPECT_EQ(e.out, "not equivalent at depth 3: p q l1 . r s l3 only in the network\n");
}

TEST(Cli, Depth) {
  const Result r = run({"depth", kSplit});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("depth r: 2"), std::string::npos);
  EXPECT_EQ(run({"depth", "rec X. q->r{l1; X, l2; q->p:m}"}).code, kPropertyFailure);
}

TEST(Cli, FileInput) {
  const std::string path = ::testing::TempDir() + "mpst_cli_input.txt";
  std::ofstream(path) << kSplit;
  EXPECT_EQ(run({"check", "--file", path}).code, kPass);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace mpst
