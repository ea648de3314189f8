#include <gtest/gtest.h>

#include "mdt/lang/step.hpp"
#include "mdt/mutual/json.hpp"
#include "mdt/testkit/enumerate.hpp"

namespace {

using namespace mdt;
using namespace mdt::lang;
using mutual::BiTerm;
using mutual::Component;

using IntNode = mutual::BiNode<std::int64_t, std::int64_t>;

IntNode int_node(const BiTerm& t) {
  return mutual::bifmap([](const BiTerm& d) { return static_cast<std::int64_t>(mutual::size(d)); },
                        [](const BiTerm& e) { return static_cast<std::int64_t>(mutual::size(e)) * 100; }, mutual::bout(t));
}

mutual::BiMendlerAlgebra<std::int64_t, std::int64_t> size_bialgebra() {
  using Alg = mutual::BiMendlerAlgebra<std::int64_t, std::int64_t>;
  auto step = [](const Alg::Rec1& r1, const Alg::Rec2& r2, const Alg::HandleNode& n) {
    std::int64_t s = 1;
    for (const auto& h : n.first) s += r1(h);
    for (const auto& h : n.second) s += r2(h);
    return s;
  };
  return {step, step};
}

const BiTerm sample_scope = scope(join(env({}), match(pvar("x", ty("a")), con("c", ty("a")))), var("x"));

TEST(Bifmap, Identity) {
  auto n = int_node(sample_scope);
  auto id = [](std::int64_t x) { return x; };
  EXPECT_EQ(mutual::bifmap(id, id, n), n);
}

TEST(Bifmap, Composition) {
  auto n = int_node(sample_scope);
  auto f1 = [](std::int64_t x) { return x + 1; };
  auto g1 = [](std::int64_t x) { return x * 2; };
  auto f2 = [](std::int64_t x) { return x - 3; };
  auto g2 = [](std::int64_t x) { return -x; };
  EXPECT_EQ(mutual::bifmap([&](std::int64_t x) { return g1(f1(x)); }, [&](std::int64_t x) { return g2(f2(x)); }, n),
            mutual::bifmap(g1, g2, mutual::bifmap(f1, f2, n)));
}

TEST(Bifmap, JoinMapsBothFirstSlots) {
  auto n = int_node(join(env({}), env({})));
  auto m = mutual::bifmap([](std::int64_t x) { return x + 40; }, [](std::int64_t x) { return x; }, n);
  EXPECT_EQ(m.first, (std::vector<std::int64_t>{41, 41}));
  EXPECT_TRUE(m.second.empty());
}

TEST(BinBout, RoundTrip) {
  auto terms = testkit::enumerate_biterms(testkit::lang_spec(2));
  for (const auto* set : {&terms.first, &terms.second})
    for (const auto& t : *set) {
      EXPECT_EQ(mutual::bin(mutual::bout(t)), t);
      EXPECT_EQ(mutual::bout(mutual::bin(t.node())), t.node());
    }
}

TEST(Bifold, SizeOfVariable) { EXPECT_EQ(mutual::bifold_2(size_bialgebra(), var("x")), 1); }

TEST(Bifold, JoinStepSeesTwoFirstHandles) {
  using Alg = mutual::BiMendlerAlgebra<std::string, std::string>;
  Alg alg{[](const Alg::Rec1& r1, const Alg::Rec2&, const Alg::HandleNode& n) -> std::string {
            if (n.name() == "join") return "join(" + std::to_string(n.first.size()) + "," + r1(n.first[0]) + "," + r1(n.first[1]) + ")";
            return n.name();
          },
          [](const Alg::Rec1&, const Alg::Rec2&, const Alg::HandleNode& n) -> std::string { return n.name(); }};
  EXPECT_EQ(mutual::bifold_1(alg, join(env({}), env({}))), "join(2,env,env)");
}

TEST(Bifold, RebuildSweep) {
  const auto rebuild = mutual::rebuild_bialgebra();
  auto terms = testkit::enumerate_biterms(testkit::lang_spec(2));
  for (const auto& d : terms.first) EXPECT_EQ(mutual::bifold_1(rebuild, d), d);
  for (const auto& e : terms.second) EXPECT_EQ(mutual::bifold_2(rebuild, e), e);
}

TEST(Bifold, WrongComponent) {
  EXPECT_THROW(mutual::bifold_1(size_bialgebra(), var("x")), mutual::WrongComponent);
  EXPECT_THROW(mutual::bifold_2(size_bialgebra(), env({})), mutual::WrongComponent);
}

TEST(Bifold, EnvSlotsRecurseIntoValues) {
  auto e = scope(env({{id("x"), con("c", ty("a"))}, {id("y"), con("d", ty("b"))}}), var("x"));
  EXPECT_EQ(mutual::bifold_2(size_bialgebra(), e), 5);
}

using DepthAlg = mutual::IndexedBiMendlerAlgebra<StepTraits, std::int64_t, std::int64_t>;

DepthAlg depth_alg() {
  auto step = [](const DepthAlg::Rec1& r1, const DepthAlg::Rec2& r2, const auto&, const auto& n) {
    std::int64_t d = 0;
    for (const auto& p : n.first) d = std::max(d, r1(p.index, p.witness));
    for (const auto& p : n.second) d = std::max(d, r2(p.index, p.witness));
    return d + 1;
  };
  return {step, step};
}

TEST(Hfold, AxiomHasDepthOne) {
  EnvE rho{{id("x"), con("c", ty("a"))}};
  auto s = step_exp(rho, var("x"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->second.rule_name(), "E-VAR");
  EXPECT_EQ(mutual::hfold_2(depth_alg(), s->second.conclusion(), s->second), 1);
}

TEST(Hfold, CrossesFamilies) {
  auto e = scope(match(pvar("x", ty("a")), app(clos({}, pvar("y", ty("a")), var("y")), con("c", ty("a")))), var("x"));
  auto s = step_exp({}, e);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->second.rule_name(), "E-SCOPE1");
  EXPECT_EQ(mutual::hfold_2(depth_alg(), s->second.conclusion(), s->second), 3);
}

TEST(Hfold, PreservesIndex) {
  using IdxAlg = mutual::IndexedBiMendlerAlgebra<StepTraits, DecStepIndex, ExpStepIndex>;
  IdxAlg alg{[](const auto&, const auto&, const DecStepIndex& w, const auto&) { return w; },
             [](const auto&, const auto&, const ExpStepIndex& w, const auto&) { return w; }};
  auto s = step_dec({}, join(env({}), env({})));
  ASSERT_TRUE(s);
  EXPECT_EQ(mutual::hfold_1(alg, s->second.conclusion(), s->second), s->second.conclusion());
}

TEST(Hfold, WrongIndex) {
  auto s = step_exp({{id("x"), con("c", ty("a"))}}, var("x"));
  ASSERT_TRUE(s);
  ExpStepIndex other{{}, var("x"), con("c", ty("a"))};
  EXPECT_THROW(mutual::hfold_2(depth_alg(), other, s->second), indexed::WrongIndex);
}

TEST(HinHout, RoundTrip) {
  auto s = step_exp({}, app(clos({}, pvar("x", ty("a")), var("x")), con("c", ty("a"))));
  ASSERT_TRUE(s);
  auto n = mutual::hout(s->second);
  EXPECT_EQ((mutual::hin<StepTraits, 1>(n)), s->second);
}

TEST(Json, BiTermRoundTrip) {
  auto j = mutual::to_json(sample_scope);
  EXPECT_EQ(j["component"], "Exp");
  EXPECT_EQ(mutual::biterm_from_json(syntax_sig(), j), sample_scope);
}

}  // namespace
