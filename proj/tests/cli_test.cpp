#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdt/cli/run.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mdt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ArithEval) {
  auto r = run({"arith", "eval", "(add (lit 2) (lit 3))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(val 5)\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, FlatCommandNames) {
  EXPECT_EQ(run({"eval-arith", "(add (lit 2) (lit 3))"}).out, "(val 5)\n");
  EXPECT_EQ(run({"typecheck", "--env", "()", "(con c (ty a))"}).out, "(ty a)\n");
  EXPECT_EQ(run({"trace", "(con c (ty a))"}).out, run({"lang", "trace", "(con c (ty a))"}).out);
  EXPECT_EQ(run({"derive", "(lit 1)"}).out, run({"arith", "derive", "(lit 1)"}).out);
  EXPECT_EQ(run({"fuzz-preservation", "--count", "0"}).code, 0);
}

TEST(Cli, ArithDeriveIsJson) {
  auto r = run({"arith", "derive", "(add (lit 1) (lit 2))"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rule"], "ev2");
  EXPECT_EQ(j["index"]["val"], 3);
}

TEST(Cli, ArithPreserve) {
  for (std::vector<std::string> args : {std::vector<std::string>{"arith", "preserve", "(add (lit 1) (lit 2))"},
                                        std::vector<std::string>{"arith", "preserve", "--via-istrm", "(add (lit 1) (lit 2))"}}) {
    auto r = run(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["index"]["trm"], "(lit 3)");
  }
}

TEST(Cli, Typecheck) {
  auto r = run({"lang", "typecheck", "--env", "()", "(con c (ty a))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(ty a)\n");
}

TEST(Cli, TypecheckDerivation) {
  auto r = run({"lang", "typecheck", "--env", "((x (ty a)))", "--derivation", "(var x)"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rule"], "T-VAR");
}

TEST(Cli, UntypableIsDomainFailure) {
  auto r = run({"lang", "typecheck", "(var x)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err, "");
}

TEST(Cli, ParseErrorIsUsageError) {
  auto r = run({"lang", "typecheck", "(var"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(run({"arith", "eval", "(lit x)"}).code, 2);
}

TEST(Cli, UnknownCommandIsUsageError) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"laws"}).code, 2);
  EXPECT_EQ(run({"laws", "--suite", "nope"}).code, 2);
}

TEST(Cli, ParsePrintRoundTrip) {
  const std::string src = "(scope (join (env ()) (match (pvar x (ty a)) (con c (ty a)))) (var x))";
  auto parsed = run({"lang", "parse", src});
  ASSERT_EQ(parsed.code, 0);
  auto printed = run({"lang", "print", parsed.out});
  ASSERT_EQ(printed.code, 0);
  EXPECT_EQ(printed.out, src + "\n");
}

TEST(Cli, Step) {
  auto r = run({"lang", "step", "--env", "((x (con c (ty a))))", "(var x)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "E-VAR (con c (ty a))\n");
  EXPECT_EQ(run({"lang", "step", "(con c (ty a))"}).out, "value\n");
}

TEST(Cli, TraceValueTakesZeroSteps) {
  auto r = run({"lang", "trace", "(con c (ty a))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 (con c (ty a))\nvalue after 0 steps\n");
}

TEST(Cli, TraceBeta) {
  auto r = run({"lang", "trace", "--env", "()", "(app (clos () (pvar x (ty a)) (var x)) (con c (ty a)))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "0 (app (clos () (pvar x (ty a)) (var x)) (con c (ty a)))\n"
            "1 E-BETA (scope (env ((x (con c (ty a))))) (var x))\n"
            "2 E-SCOPE2 (scope (env ((x (con c (ty a))))) (con c (ty a)))\n"
            "3 E-SCOPE3 (con c (ty a))\n"
            "value after 3 steps\n");
}

TEST(Cli, TraceEmitsDerivations) {
  auto r = run({"lang", "trace", "--emit-derivations", "(app (clos () (pvar x (ty a)) (var x)) (con c (ty a)))"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  std::getline(lines, line);
  EXPECT_EQ(nlohmann::json::parse(line)["rule"], "E-BETA");
}

TEST(Cli, TraceStuckOnMatchFailure) {
  auto r = run({"lang", "trace", "(app (clos () (pcon d (ty a)) (var x)) (con c (ty a)))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("stuck: pattern matching failure"), std::string::npos);
}

TEST(Cli, TraceFuel) {
  auto r = run({"lang", "trace", "--fuel", "1", "(app (clos () (pvar x (ty a)) (var x)) (con c (ty a)))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("out of fuel after 1 steps"), std::string::npos);
  EXPECT_EQ(run({"lang", "trace", "--fuel", "-1", "(var x)"}).code, 2);
}

TEST(Cli, TraceEnvFile) {
  auto path = std::filesystem::temp_directory_path() / "mdt_cli_test_env.sexp";
  {
    std::ofstream f(path);
    f << "((x (con c (ty a))))\n";
  }
  auto r = run({"lang", "trace", "--env-file", path.string(), "(var x)"});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 E-VAR (con c (ty a))"), std::string::npos);
  EXPECT_EQ(run({"lang", "trace", "--env-file", "/nonexistent/env", "(var x)"}).code, 2);
}

TEST(Cli, Laws) {
  auto r = run({"laws", "--suite", "mutual"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "mutual");
  EXPECT_EQ(j["failed"], 0);
}

TEST(Cli, FuzzAndReplay) {
  auto dir = std::filesystem::temp_directory_path() / "mdt_cli_test_fuzz";
  std::filesystem::remove_all(dir);
  auto ok = run({"fuzz", "--seed", "42", "--count", "100"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(run({"fuzz", "--count", "0"}).code, 0);

  auto bad = run({"fuzz", "--seed", "42", "--count", "100", "--bias", "left", "--dump-dir", dir.string()});
  EXPECT_EQ(bad.code, 1);
  std::vector<std::filesystem::path> dumped;
  for (const auto& e : std::filesystem::directory_iterator(dir)) dumped.push_back(e.path());
  ASSERT_FALSE(dumped.empty());
  auto again = run({"fuzz", "--replay", dumped.front().string()});
  EXPECT_EQ(again.code, 1);
  EXPECT_EQ(again.out.rfind("reproduced: ", 0), 0u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, FuelFromEnvironment) {
  ::setenv("MDT_FUEL", "1", 1);
  auto r = run({"lang", "trace", "(app (clos () (pvar x (ty a)) (var x)) (con c (ty a)))"});
  ::setenv("MDT_FUEL", "zz", 1);
  auto bad = run({"lang", "trace", "(con c (ty a))"});
  ::unsetenv("MDT_FUEL");
  EXPECT_NE(r.out.find("out of fuel after 1 steps"), std::string::npos);
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Dump) {
  auto r = run({"dump", "--signature", "Trm_G"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["constructors"][0]["name"], "lit");
  EXPECT_EQ(j["constructors"][1]["name"], "add");
  EXPECT_EQ(run({"dump", "--signature", "Nope"}).code, 2);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"fuzz", "--seed", "9", "--count", "50", "--bias", "left"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

}  // namespace
