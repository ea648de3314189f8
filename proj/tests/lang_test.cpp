#include <gtest/gtest.h>

#include "mdt/lang/preservation.hpp"
#include "mdt/lang/print.hpp"
#include "mdt/lang/step.hpp"
#include "mdt/lang/values.hpp"
#include "mdt/sexpr.hpp"

namespace {

using namespace mdt;
using namespace mdt::lang;

const Typ a = ty("a");
const Typ b = ty("b");

TEST(Patmatch, Variable) {
  auto m = patmatch(pvar("x", a), con("c", a));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (EnvE{{id("x"), con("c", a)}}));
}

TEST(Patmatch, Constructor) {
  auto t = arrow(a, b);
  EXPECT_EQ(patmatch(pcon("c", t), con("c", t)), EnvE{});
  EXPECT_FALSE(patmatch(pcon("c", t), con("d", t)));
}

TEST(Patmatch, Application) {
  auto v = app(con("c", arrow(a, b)), con("d", a));
  auto m = patmatch(papp(pcon("c", arrow(a, b)), pvar("y", a)), v);
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (EnvE{{id("y"), con("d", a)}}));
}

TEST(Patmatch, NonValue) { EXPECT_THROW(patmatch(pvar("x", a), var("y")), NotAValue); }

TEST(Bindings, Examples) {
  EXPECT_EQ(bindings(pvar("x", a)), (EnvT{{id("x"), a}}));
  EXPECT_EQ(bindings(pcon("c", a)), EnvT{});
  EXPECT_EQ(bindings(papp(pvar("x", a), pvar("y", b))), (EnvT{{id("x"), a}, {id("y"), b}}));
}

TEST(Values, Classification) {
  EXPECT_TRUE(is_value(con("c", a)));
  EXPECT_TRUE(is_value(clos({}, pvar("x", a), var("x"))));
  EXPECT_TRUE(is_value(app(con("c", arrow(a, b)), con("d", a))));
  EXPECT_FALSE(is_value(var("x")));
  EXPECT_FALSE(is_value(app(clos({}, pvar("x", a), var("x")), con("c", a))));
}

TEST(Merge, Bias) {
  EnvT l{{id("x"), a}};
  EnvT r{{id("x"), b}};
  EXPECT_EQ(merge(l, r).at(id("x")), b);
  EXPECT_EQ(merge(l, r, Bias::Left).at(id("x")), a);
}

TEST(StepExp, Var) {
  EnvE rho{{id("x"), con("c", a)}};
  auto s = step_exp(rho, var("x"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, con("c", a));
  EXPECT_EQ(s->second.rule_name(), "E-VAR");
  EXPECT_TRUE(mutual::validate(s->second));
}

TEST(StepExp, Beta) {
  auto s = step_exp({}, app(clos({}, pvar("x", a), var("x")), con("c", a)));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, scope(env({{id("x"), con("c", a)}}), var("x")));
  EXPECT_EQ(s->second.rule_name(), "E-BETA");
}

TEST(StepExp, ValuesAndStuckTermsDoNotStep) {
  EXPECT_FALSE(step_exp({}, con("c", a)));
  EXPECT_FALSE(step_exp({}, var("x")));
  EXPECT_FALSE(step_exp({}, app(clos({}, pcon("d", a), var("x")), con("c", a))));
}

TEST(StepDec, Match) {
  auto s = step_dec({}, match(pcon("c", a), con("c", a)));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, env({}));
  EXPECT_EQ(s->second.rule_name(), "D-MATCH");
}

TEST(StepDec, JoinIsRightBiased) {
  EnvE r1{{id("x"), con("c", a)}};
  EnvE r2{{id("x"), con("d", a)}};
  auto s = step_dec({}, join(env(r1), env(r2)));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, env(r2));
  EXPECT_EQ(s->second.rule_name(), "D-JOIN3");
}

TEST(StepDec, EnvIsTerminal) { EXPECT_FALSE(step_dec({}, env({}))); }

TEST(StepDec, JoinRightUnderLeftBindings) {
  auto d = join(env({{id("x"), con("c", a)}}), match(pvar("y", a), var("x")));
  auto s = step_dec({}, d);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->second.rule_name(), "D-JOIN2");
  EXPECT_EQ(s->first, join(env({{id("x"), con("c", a)}}), match(pvar("y", a), con("c", a))));
}

TEST(Typecheck, Var) {
  auto r = typecheck_exp({{id("x"), a}}, var("x"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.derivation->conclusion().t, a);
  EXPECT_EQ(r.derivation->rule_name(), "T-VAR");
}

TEST(Typecheck, ConReadsAnnotation) {
  auto r = typecheck_exp({}, con("c", arrow(a, b)));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.derivation->conclusion().t, arrow(a, b));
}

TEST(Typecheck, Unbound) {
  auto r = typecheck_exp({}, var("x"));
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.error.message.empty());
}

TEST(Typecheck, ClosureAndApplication) {
  auto f = clos({}, pvar("x", a), var("x"));
  auto r = typecheck_exp({}, app(f, con("c", a)));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.derivation->conclusion().t, a);
  EXPECT_FALSE(typecheck_exp({}, app(f, con("c", b))));
}

TEST(Typecheck, ErrorPathPointsIntoTerm) {
  auto r = typecheck_exp({}, app(con("c", arrow(a, b)), var("z")));
  ASSERT_FALSE(r);
  ASSERT_FALSE(r.error.path.empty());
}

TEST(Typecheck, DecTypeIsTypeEnvironment) {
  auto r = typecheck_dec({}, match(pvar("x", a), con("c", a)));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.derivation->conclusion().t, tenv({{id("x"), a}}));
}

TEST(Typecheck, PatternsMustBeLinear) {
  EXPECT_FALSE(typecheck_pat(papp(papp(pcon("c", arrow(a, arrow(a, b))), pvar("x", a)), pvar("x", a))));
  EXPECT_TRUE(typecheck_pat(papp(papp(pcon("c", arrow(a, arrow(a, b))), pvar("x", a)), pvar("y", a))));
}

TEST(TypecheckEnv, Examples) {
  auto empty = typecheck_env({});
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty.derivation->conclusion().gamma, EnvT{});
  auto one = typecheck_env({{id("x"), con("c", a)}});
  ASSERT_TRUE(one);
  EXPECT_EQ(one.derivation->conclusion().gamma, (EnvT{{id("x"), a}}));
  EXPECT_THROW(typecheck_env({{id("x"), var("y")}}), NotAValue);
}

TEST(SubjectReduction, Var) {
  EnvE rho{{id("x"), con("c", a)}};
  auto envd = *typecheck_env(rho).derivation;
  auto typd = *typecheck_exp(envd.conclusion().gamma, var("x")).derivation;
  auto s = step_exp(rho, var("x"));
  auto out = subject_reduction(s->second, envd, typd);
  EXPECT_EQ(out.conclusion().e, con("c", a));
  EXPECT_EQ(out.conclusion().t, a);
  EXPECT_TRUE(mutual::validate(out));
}

TEST(SubjectReduction, Join3) {
  EnvE r1{{id("x"), con("c", a)}};
  EnvE r2{{id("y"), con("d", b)}};
  auto d = join(env(r1), env(r2));
  auto envd = *typecheck_env({}).derivation;
  auto typd = *typecheck_dec({}, d).derivation;
  auto s = step_dec({}, d);
  auto out = subject_reduction(s->second, envd, typd);
  EXPECT_EQ(out.conclusion().d, env(merge(r1, r2)));
  EXPECT_EQ(out.conclusion().t, tenv({{id("x"), a}, {id("y"), b}}));
  EXPECT_TRUE(mutual::validate(out));
}

TEST(SubjectReduction, Beta) {
  auto e = app(clos({}, pvar("x", a), var("x")), con("c", a));
  auto envd = *typecheck_env({}).derivation;
  auto typd = *typecheck_exp({}, e).derivation;
  auto s = step_exp({}, e);
  auto out = subject_reduction(s->second, envd, typd);
  EXPECT_EQ(out.conclusion().e, s->first);
  EXPECT_TRUE(mutual::validate(out));
}

TEST(SubjectReduction, IncoherentInputs) {
  EnvE rho{{id("x"), con("c", a)}};
  auto envd = *typecheck_env(rho).derivation;
  auto other = *typecheck_exp({{id("x"), a}}, con("d", a)).derivation;
  auto s = step_exp(rho, var("x"));
  EXPECT_THROW(subject_reduction(s->second, envd, other), IncoherentIndices);
}

TEST(Print, RoundTrip) {
  std::vector<mutual::BiTerm> terms{
      var("x"), con("c", arrow(a, tenv({{id("x"), b}}))),
      clos({{id("z"), con("c", a)}}, papp(pcon("k", arrow(a, b)), pvar("x", a)), var("x")),
      scope(join(env({}), match(pvar("x", a), con("c", a))), app(var("f"), var("x")))};
  for (const auto& t : terms) EXPECT_EQ(parse_term(to_sexpr(t)), t);
  EXPECT_EQ(to_sexpr(con("c", a)), "(con c (ty a))");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_term("(var)"), sexpr::ParseError);
  EXPECT_THROW(parse_term("(app (var x))"), sexpr::ParseError);
  EXPECT_THROW(parse_term("(var x) trailing"), sexpr::ParseError);
  EXPECT_THROW(parse_term("(env ((x (con c (ty a))) (x (con d (ty a)))))"), std::exception);
}

}  // namespace
