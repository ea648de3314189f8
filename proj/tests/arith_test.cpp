#include <gtest/gtest.h>

#include <limits>

#include "mdt/arith/preservation.hpp"
#include "mdt/testkit/enumerate.hpp"
#include "mdt/testkit/oracle.hpp"

namespace {

using namespace mdt;
using arith::add;
using arith::lit;
using arith::Val;

TEST(Eval, Examples) {
  EXPECT_EQ(arith::eval(lit(3)), Val{3});
  EXPECT_EQ(arith::eval(add(lit(2), lit(3))), Val{5});
  EXPECT_EQ(arith::eval(add(add(lit(1), lit(1)), lit(2))), Val{4});
}

TEST(Eval, OverflowIsAnError) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(arith::eval(add(lit(big), lit(1))), std::overflow_error);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(testkit::oracle_eval(lit(3)), Val{3});
  EXPECT_EQ(testkit::oracle_eval(add(lit(2), lit(3))), Val{5});
}

TEST(Oracle, MatchesEvalDepth3) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) EXPECT_EQ(arith::eval(t), testkit::oracle_eval(t));
}

TEST(Syntax, ParsePrint) {
  auto t = arith::parse_trm("(add (lit -2) (add (lit 0) (lit 7)))");
  EXPECT_EQ(t, add(lit(-2), add(lit(0), lit(7))));
  EXPECT_EQ(arith::to_sexpr(t), "(add (lit -2) (add (lit 0) (lit 7)))");
  EXPECT_EQ(arith::to_sexpr(Val{5}), "(val 5)");
  EXPECT_THROW(arith::parse_trm("(lit)"), std::exception);
  EXPECT_THROW(arith::parse_trm("(mul (lit 1) (lit 2))"), std::exception);
}

TEST(BuildEval, Literal) {
  auto d = arith::build_eval_derivation(lit(3));
  EXPECT_EQ(d.rule_name(), "ev1");
  EXPECT_EQ(d.conclusion(), (arith::EvalIndex{lit(3), Val{3}}));
}

TEST(BuildEval, Sum) {
  auto d = arith::build_eval_derivation(add(lit(1), lit(2)));
  EXPECT_EQ(d.rule_name(), "ev2");
  EXPECT_EQ(d.child(0).rule_name(), "ev1");
  EXPECT_EQ(d.child(1).rule_name(), "ev1");
  EXPECT_EQ(d.conclusion().val, Val{3});
  EXPECT_TRUE(indexed::validate(d));
}

TEST(EvalOfDerivation, Agreement) {
  EXPECT_TRUE(arith::eval_of_derivation(arith::build_eval_derivation(lit(5))));
  EXPECT_TRUE(arith::eval_of_derivation(arith::build_eval_derivation(add(lit(5), add(lit(-1), lit(2))))));
}

TEST(EvalOfDerivation, ForgedIsRejected) {
  auto forged = arith::EvalDerivation::forge({arith::eval_sig(), 0, arith::Ev1{1}, {}, arith::EvalIndex{lit(1), Val{2}}});
  EXPECT_THROW(arith::eval_of_derivation(forged), indexed::InvalidDerivation);
}

TEST(BuildTypOf, Shapes) {
  EXPECT_EQ(arith::build_typof_derivation(lit(0)).rule_name(), "tof1");
  auto d = arith::build_typof_derivation(add(lit(1), lit(2)));
  EXPECT_EQ(d.rule_name(), "tof2");
  EXPECT_EQ(d.child(0).rule_name(), "tof1");
  EXPECT_EQ(d.child(1).rule_name(), "tof1");
  EXPECT_TRUE(indexed::validate(d));
}

TEST(BuildIsTrm, Shapes) {
  EXPECT_EQ(arith::build_istrm(lit(1)).rule_name(), "isLit");
  auto w = arith::build_istrm(add(lit(1), lit(2)));
  EXPECT_EQ(w.rule_name(), "isAdd");
  EXPECT_EQ(w.node().premises.size(), 2u);
  EXPECT_TRUE(indexed::validate(w));
}

TEST(Preservation, Axiom) {
  auto out = arith::preservation(arith::build_eval_derivation(lit(3)), arith::build_typof_derivation(lit(3)));
  EXPECT_EQ(out.rule_name(), "tof1");
  EXPECT_EQ(out.conclusion().trm, lit(3));
}

TEST(Preservation, Sum) {
  auto e = add(lit(1), lit(2));
  auto out = arith::preservation(arith::build_eval_derivation(e), arith::build_typof_derivation(e));
  EXPECT_EQ(out.conclusion().trm, lit(3));
  EXPECT_TRUE(indexed::validate(out));
  auto via = arith::preservation_via_istrm(arith::build_istrm(e), arith::build_typof_derivation(e));
  EXPECT_EQ(via.conclusion(), out.conclusion());
}

TEST(Preservation, MismatchedInputs) {
  EXPECT_THROW(arith::preservation(arith::build_eval_derivation(lit(1)), arith::build_typof_derivation(lit(2))),
               indexed::WrongIndex);
  EXPECT_THROW(arith::preservation_via_istrm(arith::build_istrm(lit(1)), arith::build_typof_derivation(lit(2))),
               indexed::WrongIndex);
}

TEST(Preservation, ForgedInputIsRejected) {
  auto forged = arith::EvalDerivation::forge({arith::eval_sig(), 0, arith::Ev1{1}, {}, arith::EvalIndex{lit(1), Val{2}}});
  EXPECT_THROW(arith::preservation(forged, arith::build_typof_derivation(lit(1))), indexed::InvalidDerivation);
}

TEST(Preservation, SweepDepth3) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) {
    auto td = arith::build_typof_derivation(t);
    auto a = arith::preservation(arith::build_eval_derivation(t), td);
    auto b = arith::preservation_via_istrm(arith::build_istrm(t), td);
    EXPECT_TRUE(indexed::validate(a));
    EXPECT_EQ(a.conclusion(), b.conclusion());
    EXPECT_EQ(a.conclusion().trm, lit(testkit::oracle_eval(t).vv));
  }
}

}  // namespace
