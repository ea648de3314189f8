#include <gtest/gtest.h>

#include <set>

#include "mdt/arith/syntax.hpp"
#include "mdt/lang/print.hpp"
#include "mdt/testkit/enumerate.hpp"
#include "mdt/testkit/fuzz.hpp"
#include "mdt/testkit/generate.hpp"
#include "mdt/testkit/laws.hpp"
#include "mdt/testkit/oracle.hpp"

namespace {

using namespace mdt;
using namespace mdt::testkit;

TEST(Enumerate, ArithDepth1) {
  auto ts = enumerate_terms(arith_spec(1));
  ASSERT_EQ(ts.size(), 5u);
  for (std::int64_t i = 0; i < 5; ++i) EXPECT_EQ(ts[i], arith::lit(i - 2));
}

TEST(Enumerate, ArithCounts) {
  EXPECT_EQ(enumerate_terms(arith_spec(2)).size(), 5u + 25u);
  EXPECT_EQ(enumerate_terms(arith_spec(3)).size(), 905u);
}

TEST(Enumerate, StreamingMatchesMaterialized) {
  auto all = enumerate_terms(arith_spec(3));
  std::vector<kernel::Term> streamed;
  for_each_term(arith_spec(3), [&](const kernel::Term& t) { streamed.push_back(t); });
  EXPECT_EQ(streamed, all);
}

TEST(Enumerate, NoDuplicates) {
  std::set<std::string> seen;
  for (const auto& t : enumerate_terms(arith_spec(3))) EXPECT_TRUE(seen.insert(arith::to_sexpr(t)).second);
}

// Pools: identifier x, type (ty a), pattern (pvar x (ty a)), env keys {} or {x}.
// Depth 1: Exp var, con; Dec env().
// Depth 2: Exp 2 + clos 2 (no keys) + clos 4 (key x) + app 4 + scope 2 = 14;
//          Dec env() 1 + env x 2 + match 2 + join 1 = 6.
TEST(Enumerate, LangDepth1And2) {
  auto d1 = enumerate_biterms(lang_spec(1));
  EXPECT_EQ(d1.first.size(), 1u);
  EXPECT_EQ(d1.second.size(), 2u);
  auto d2 = enumerate_biterms(lang_spec(2));
  EXPECT_EQ(d2.first.size(), 6u);
  EXPECT_EQ(d2.second.size(), 14u);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_eval(arith::lit(3)), arith::Val{3});
  EXPECT_EQ(oracle_eval(arith::add(arith::lit(2), arith::lit(3))), arith::Val{5});
}

TEST(Generate, WellTypedConfigValidates) {
  auto c = gen_well_typed_config({.seed = 1});
  ASSERT_TRUE(c.envd);
  EXPECT_TRUE(indexed::validate(*c.envd));
  EXPECT_EQ(c.envd->conclusion().rho, c.rho);
  EXPECT_EQ(c.envd->conclusion().gamma, c.gamma);
  ASSERT_TRUE(c.exp_typing || c.dec_typing);
  if (c.exp_typing) {
    EXPECT_TRUE(mutual::validate(*c.exp_typing));
    EXPECT_EQ(c.exp_typing->conclusion().e, c.term);
  } else {
    EXPECT_TRUE(mutual::validate(*c.dec_typing));
    EXPECT_EQ(c.dec_typing->conclusion().d, c.term);
  }
}

TEST(Generate, Deterministic) {
  GenConfig cfg{.seed = 7, .count = 20};
  auto a = gen_corpus(cfg);
  auto b = gen_corpus(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].term, b[i].term);
}

TEST(Generate, SeedsDiffer) {
  auto a = gen_corpus({.seed = 1, .count = 10});
  auto b = gen_corpus({.seed = 2, .count = 10});
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i].term == b[i].term;
  EXPECT_LT(same, a.size());
  for (const auto& c : b) EXPECT_TRUE(c.exp_typing || c.dec_typing);
}

TEST(Generate, ModeOffSkipsTyping) {
  auto c = gen_config({.seed = 3, .well_typed = false}, 0);
  EXPECT_FALSE(c.exp_typing);
  EXPECT_FALSE(c.dec_typing);
}

TEST(Laws, KernelSuitePasses) {
  LawOptions o;
  o.arith_depth = 3;
  auto r = law_suite(Suite::Kernel, o);
  EXPECT_TRUE(r.ok()) << to_text(r);
}

TEST(Laws, SwappedSlotsAreCaught) {
  LawOptions o;
  o.arith_depth = 3;
  o.swap_fmap_slots = true;
  auto r = law_suite(Suite::Kernel, o);
  const auto* c = r.find("fmap composition");
  ASSERT_NE(c, nullptr);
  EXPECT_GT(c->failed, 0u);
  EXPECT_FALSE(c->witnesses.empty());
}

TEST(Laws, DroppedSumIsCaught) {
  LawOptions o;
  o.arith_depth = 3;
  o.eval_sig = without_side_conditions(arith::eval_sig(), "ev2");
  auto r = law_suite(Suite::Arith, o);
  EXPECT_FALSE(r.ok());
}

TEST(Laws, ReportIsDeterministic) {
  LawOptions o;
  o.lang_depth = 2;
  o.fuzz_count = 20;
  EXPECT_EQ(to_text(law_suite(Suite::Mutual, o)), to_text(law_suite(Suite::Mutual, o)));
}

TEST(Laws, SuiteNames) {
  for (auto s : {Suite::Kernel, Suite::Indexed, Suite::Mutual, Suite::Arith, Suite::Lang})
    EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_FALSE(parse_suite("nope"));
}

TEST(Fuzz, RightBiasHasNoCounterexamples) {
  auto r = fuzz_preservation({.seed = 42, .count = 200, .workers = 1});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.configs, 200u);
  EXPECT_EQ(r.values + r.stuck + r.out_of_fuel, 200u);
}

TEST(Fuzz, EmptyRunIsVacuous) {
  auto r = fuzz_preservation({.count = 0});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.configs, 0u);
}

TEST(Fuzz, WorkerCountDoesNotChangeResult) {
  auto one = fuzz_preservation({.seed = 5, .count = 100, .bias = lang::Bias::Left, .workers = 1});
  auto four = fuzz_preservation({.seed = 5, .count = 100, .bias = lang::Bias::Left, .workers = 4});
  EXPECT_EQ(to_json(one), to_json(four));
}

TEST(Fuzz, LeftBiasIsCaughtAndReplays) {
  auto r = fuzz_preservation({.seed = 42, .count = 200, .bias = lang::Bias::Left, .workers = 1});
  ASSERT_FALSE(r.counterexamples.empty());
  const auto& c = r.counterexamples.front();
  auto back = counterexample_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  auto again = replay(back);
  ASSERT_TRUE(again);
  EXPECT_EQ(*again, c.message);
}

}  // namespace
