#include <gtest/gtest.h>

#include <sstream>

#include "toric/cli.hpp"

using toric::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ReferenceExamplesPass) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"paper", "hugeK1", "--window", "2"},
                                                                 {"example", "huge", "--window", "2"},
                                                                 {"example", "k0", "--window", "1"},
                                                                 {"example", "identities", "--window", "1"}}) {
    auto r = call(args);
    EXPECT_EQ(r.code, 0) << args[1] << "\n" << r.out << r.err;
    EXPECT_TRUE(has(r.out, "# verdict\tpass"));
    EXPECT_TRUE(has(r.out, "# box\tradius"));
  }
}

TEST(Cli, ProjectiveLineFormsInTopDegree) {
  auto r = call({"cech", "cohomology", "--fixture", "p1", "--sheaf", "tilde:1", "--weight", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "(0)\t0\t1\n")) << r.out;
}

TEST(Cli, ResolveTauGivesTrail) {
  auto r = call({"fan", "resolve", "--fixture", "tau"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "1\t(1,1,0)\n")) << r.out;
}

TEST(Cli, OutputIsDeterministicAndIndependentOfThreads) {
  const std::vector<std::string> args{"forms", "table", "--fixture", "tau", "--p", "2", "--window", "2"};
  auto a = call(args), b = call(args);
  auto with_threads = args;
  with_threads.push_back("--parallel");
  auto c = call(with_threads);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  auto s1 = call({"example", "huge", "--window", "1", "--format", "structured"});
  auto s2 = call({"example", "huge", "--window", "1", "--format", "structured", "--parallel"});
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_TRUE(has(s1.out, "\"verdict\": \"pass\""));
}

TEST(Cli, FailedCheckExitsOne) {
  // A single step is too short for the chain at (1,0,0) to repeat the tilde piece.
  auto r = call({"dilate", "trace", "--fixture", "tau", "--weight", "1,0,0", "--seq", "2"});
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(has(r.out, "FAIL\timage chain reaches tilde"));
}

TEST(Cli, InputErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus", "x"},
           {"cone", "bogus"},
           {"cone", "dual", "--rays", "1,a"},
           {"cone", "dual"},
           {"cech", "cohomology", "--fixture", "nope"},
           {"cech", "cohomology", "--fixture", "p1", "--sheaf", "forms:1"},
           {"cech", "cohomology", "--fixture", "huge", "--weight", "1,0"},
           {"dilate", "trace", "--fixture", "tau", "--weight", "1,0,0", "--seq", "1"},
           {"dilate", "trace", "--fixture", "tau", "--weight", "-1,0,0"},
           {"forms", "table", "--fixture", "tau", "--format", "xml"},
           {"fan", "validate", "--fan", "/nonexistent/fan.json"},
       }) {
    auto r = call(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]) << " " << r.out;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, DispatchRejectsUnknownCommands) {
  toric::cli::Invocation inv;
  inv.group = "plot";
  try {
    toric::cli::dispatch(inv);
    FAIL();
  } catch (const toric::Error& e) {
    EXPECT_EQ(e.kind(), toric::ErrorKind::UnknownCommand);
  }
}
