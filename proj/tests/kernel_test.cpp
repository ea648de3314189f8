#include <gtest/gtest.h>

#include "mdt/arith/syntax.hpp"
#include "mdt/kernel/fold_term.hpp"
#include "mdt/kernel/json.hpp"
#include "mdt/testkit/enumerate.hpp"
#include "mdt/testkit/oracle.hpp"

namespace {

using namespace mdt;
using arith::add;
using arith::lit;
using kernel::Node;
using kernel::Term;

const kernel::SignatureRef& trm() { return arith::trm_sig().sum(); }

Node<std::int64_t> int_add(std::int64_t a, std::int64_t b) { return kernel::make_node<std::int64_t>(trm(), "add", {a, b}); }

kernel::CAlgebra<std::int64_t> size_alg() {
  return {[](const Node<std::int64_t>& n) {
    std::int64_t s = 1;
    for (auto c : n.rec) s += c;
    return s;
  }};
}

TEST(Fmap, Identity) {
  auto n = int_add(2, 3);
  EXPECT_EQ(kernel::fmap([](std::int64_t x) { return x; }, n), n);
}

TEST(Fmap, Composition) {
  auto n = int_add(1, 2);
  auto f = [](std::int64_t x) { return x * 3; };
  auto g = [](std::int64_t x) { return x - 7; };
  EXPECT_EQ(kernel::fmap([&](std::int64_t x) { return g(f(x)); }, n), kernel::fmap(g, kernel::fmap(f, n)));
}

TEST(Fmap, Negate) {
  EXPECT_EQ(kernel::fmap([](std::int64_t x) { return -x; }, int_add(2, 3)), int_add(-2, -3));
}

TEST(Fmap, LeavesPayloadAlone) {
  auto n = kernel::make_node<std::int64_t>(trm(), "lit", {}, {std::int64_t{4}});
  EXPECT_EQ(kernel::fmap([](std::int64_t x) { return x + 1; }, n).payload, n.payload);
}

TEST(InOut, Literal) {
  auto t = lit(3);
  EXPECT_EQ(t.ctor_name(), "lit");
  EXPECT_EQ(kernel::out_(t).payload.at(0), kernel::Payload{std::int64_t{3}});
  EXPECT_EQ(kernel::in_(kernel::out_(t)), t);
}

TEST(InOut, OutOfIn) {
  auto n = kernel::make_node<Term>(trm(), "add", {lit(1), lit(2)});
  EXPECT_EQ(kernel::out_(kernel::in_(n)), n);
}

TEST(InOut, RoundTripDepth3) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) EXPECT_EQ(kernel::in_(kernel::out_(t)), t);
}

TEST(InOut, RejectsMalformedNodes) {
  EXPECT_THROW(kernel::in_(Node<Term>{trm(), 1, {lit(1)}, {}}), kernel::MalformedNode);
  EXPECT_THROW(kernel::in_(Node<Term>{trm(), 0, {}, {}}), kernel::MalformedNode);
  EXPECT_THROW(kernel::make_node<Term>(trm(), "mul", {}), kernel::MalformedNode);
}

TEST(FoldC, Eval) {
  EXPECT_EQ(kernel::fold_c(arith::eval_g(), lit(3)), arith::Val{3});
  EXPECT_EQ(kernel::fold_c(arith::eval_g(), add(lit(2), lit(3))), arith::Val{5});
}

TEST(FoldC, ComputationRuleForSize) {
  const auto alg = size_alg();
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) {
    auto rhs = alg.apply(kernel::fmap([&](const Term& c) { return kernel::fold_c(alg, c); }, kernel::out_(t)));
    EXPECT_EQ(kernel::fold_c(alg, t), rhs);
    EXPECT_EQ(kernel::fold_c(alg, t), static_cast<std::int64_t>(kernel::size(t)));
  }
}

TEST(Mfold, LiftedEval) {
  EXPECT_EQ(kernel::mfold(kernel::lift(arith::eval_g()), add(lit(2), lit(3))), arith::Val{5});
  EXPECT_EQ(kernel::mfold(kernel::lift(arith::eval_g()), lit(0)), arith::Val{0});
}

TEST(Mfold, LeafStepSeesNoHandles) {
  kernel::MendlerAlgebra<std::int64_t> m{[](const auto&, const Node<kernel::Handle>& n) {
    return static_cast<std::int64_t>(n.rec.size()) * 100 + std::get<std::int64_t>(n.payload.at(0));
  }};
  EXPECT_EQ(kernel::mfold(m, lit(7)), 7);
}

TEST(Mfold, AgreesWithOracle) {
  const auto m = kernel::lift(arith::eval_g());
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) EXPECT_EQ(kernel::mfold(m, t), testkit::oracle_eval(t));
}

TEST(Lift, RebuildIsIdentity) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3)))
    EXPECT_EQ(kernel::mfold(kernel::lift(kernel::rebuild_algebra()), t), t);
}

TEST(Mfold, StepMayUseRecLater) {
  using Thunk = std::function<std::int64_t()>;
  kernel::MendlerAlgebra<Thunk> m{[](const kernel::MendlerAlgebra<Thunk>::Rec& rec, const Node<kernel::Handle>& n) -> Thunk {
    if (n.rec.empty()) return [x = std::get<std::int64_t>(n.payload[0])] { return x; };
    return [rec, a = n.rec[0], b = n.rec[1]] { return rec(a)() + rec(b)(); };
  }};
  auto thunk = kernel::mfold(m, add(lit(4), add(lit(5), lit(6))));
  EXPECT_EQ(thunk(), 15);
}

TEST(Handles, CrossStepUseIsRejected) {
  auto stash = std::make_shared<std::optional<kernel::Handle>>();
  kernel::MendlerAlgebra<std::int64_t> leaky{[stash](const auto& rec, const Node<kernel::Handle>& n) -> std::int64_t {
    if (n.rec.empty()) return 0;
    if (*stash) return rec(**stash);
    *stash = n.rec[0];
    return rec(n.rec[0]);
  }};
  EXPECT_THROW(kernel::mfold(leaky, add(add(lit(1), lit(2)), lit(3))), kernel::HandleMisuse);
}

TEST(PreIn, Identity) {
  auto n = kernel::out_(lit(3));
  EXPECT_EQ(kernel::pre_in([](const Term& t) { return t; }, n), lit(3));
}

TEST(PreIn, Constant) {
  auto n = int_add(8, 9);
  EXPECT_EQ(kernel::pre_in([](std::int64_t) { return lit(0); }, n), add(lit(0), lit(0)));
}

TEST(Uniqueness, FoldItself) {
  const auto m = kernel::lift(arith::eval_g());
  auto samples = testkit::enumerate_terms(testkit::arith_spec(3));
  auto v = kernel::check_uniqueness(m, [&](const Term& t) { return kernel::mfold(m, t); }, samples);
  EXPECT_EQ(v.status, kernel::UniquenessStatus::Ok);
  EXPECT_EQ(v.checked, samples.size());
}

TEST(Uniqueness, Oracle) {
  auto samples = testkit::enumerate_terms(testkit::arith_spec(3));
  auto v = kernel::check_uniqueness(kernel::lift(arith::eval_g()), testkit::oracle_eval, samples);
  EXPECT_TRUE(v.ok());
}

TEST(Uniqueness, ConstantBreaksHypothesis) {
  std::vector<Term> samples{lit(0), lit(1), add(lit(1), lit(1))};
  auto v = kernel::check_uniqueness(kernel::lift(arith::eval_g()), [](const Term&) { return arith::Val{0}; }, samples);
  EXPECT_EQ(v.status, kernel::UniquenessStatus::HypothesisViolation);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, lit(1));
}

TEST(Uniqueness, UnsupportedCarrier) {
  kernel::MendlerAlgebra<std::function<int()>> m{[](const auto&, const auto&) { return std::function<int()>([] { return 0; }); }};
  std::vector<Term> samples{lit(0)};
  auto v = kernel::check_uniqueness(m, [](const Term&) { return std::function<int()>(); }, samples);
  EXPECT_EQ(v.status, kernel::UniquenessStatus::UnsupportedCarrier);
}

TEST(Coproduct, InjectProject) {
  const auto& sig = arith::trm_sig();
  auto left = kernel::make_node<Term>(arith::trm_g1(), "lit", {}, {std::int64_t{3}});
  auto summed = sig.inject_left(left);
  ASSERT_TRUE(sig.project_left(summed));
  EXPECT_EQ(*sig.project_left(summed), left);
  EXPECT_FALSE(sig.project_right(summed));

  auto right = kernel::make_node<Term>(arith::trm_g2(), "add", {lit(1), lit(2)});
  EXPECT_FALSE(sig.project_left(sig.inject_right(right)));
  EXPECT_THROW(sig.inject_left(right), kernel::MalformedNode);
}

TEST(Coproduct, AlgebraDispatches) {
  const auto& sig = arith::trm_sig();
  kernel::CAlgebra<std::string> on_left{[](const Node<std::string>&) { return std::string("L"); }};
  kernel::CAlgebra<std::string> on_right{[](const Node<std::string>& n) { return "R(" + n.rec[0] + n.rec[1] + ")"; }};
  EXPECT_EQ(kernel::fold_c(sig.algebra(on_left, on_right), add(lit(1), add(lit(2), lit(3)))), "R(LR(LL))");
}

TEST(FoldTerm, RoundTrip) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) {
    auto ft = kernel::reflect(t);
    EXPECT_EQ(kernel::reify(ft), t);
    EXPECT_EQ(kernel::mfold(kernel::lift(arith::eval_g()), ft), arith::eval(t));
  }
}

TEST(FoldTerm, OutLayer) {
  auto ft = kernel::reflect(add(lit(1), lit(2)));
  auto layer = kernel::fold_out(ft);
  ASSERT_EQ(layer.rec.size(), 2u);
  EXPECT_EQ(kernel::reify(layer.rec[0]), lit(1));
  EXPECT_EQ(kernel::reify(kernel::fold_in(layer)), add(lit(1), lit(2)));
}

TEST(Json, TermRoundTrip) {
  auto t = add(lit(-1), lit(2));
  auto j = kernel::to_json(t);
  EXPECT_EQ(j["ctor"], "add");
  EXPECT_EQ(kernel::term_from_json(trm(), j), t);
}

}  // namespace
