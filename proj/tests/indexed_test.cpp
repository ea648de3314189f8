#include <gtest/gtest.h>

#include "mdt/arith/preservation.hpp"
#include "mdt/indexed/json.hpp"
#include "mdt/testkit/enumerate.hpp"

namespace {

using namespace mdt;
using arith::add;
using arith::EvalDerivation;
using arith::EvalIndex;
using arith::EvalParams;
using arith::lit;
using arith::Val;

using IntNode = indexed::DNode<EvalIndex, EvalParams, std::int64_t>;

EvalDerivation ev1(std::int64_t x) { return indexed::derive(arith::eval_sig(), "ev1", EvalParams{arith::Ev1{x}}); }

EvalDerivation ev2(EvalDerivation a, EvalDerivation b) {
  auto p = arith::Ev2{a.conclusion().trm, b.conclusion().trm, a.conclusion().val, b.conclusion().val,
                      Val{a.conclusion().val.vv + b.conclusion().val.vv}};
  return indexed::derive(arith::eval_sig(), "ev2", EvalParams{p}, {std::move(a), std::move(b)});
}

IntNode as_ints(const EvalDerivation& d) {
  return indexed::ifmap([](const EvalIndex& w, const EvalDerivation&) { return w.val.vv; }, d.node());
}

indexed::MendlerAlgebra<EvalIndex, EvalParams, std::int64_t> depth_alg() {
  using Alg = indexed::MendlerAlgebra<EvalIndex, EvalParams, std::int64_t>;
  return {[](const Alg::Rec& rec, const EvalIndex&, const indexed::DNode<EvalIndex, EvalParams, kernel::Handle>& n) {
    std::int64_t d = 0;
    for (const auto& p : n.premises) d = std::max(d, rec(p.index, p.witness));
    return d + 1;
  }};
}

TEST(Ifmap, Identity) {
  auto n = as_ints(ev2(ev1(1), ev1(2)));
  EXPECT_EQ(indexed::ifmap([](const EvalIndex&, std::int64_t x) { return x; }, n), n);
}

TEST(Ifmap, MapsBothPremises) {
  auto n = as_ints(ev2(ev1(1), ev1(2)));
  auto m = indexed::ifmap([](const EvalIndex&, std::int64_t x) { return x * 10; }, n);
  ASSERT_EQ(m.premises.size(), 2u);
  EXPECT_EQ(m.premises[0].witness, 10);
  EXPECT_EQ(m.premises[1].witness, 20);
  EXPECT_EQ(m.premises[0].index, n.premises[0].index);
  EXPECT_EQ(m.conclusion, n.conclusion);
}

TEST(Ifmap, Composition) {
  auto n = as_ints(ev2(ev2(ev1(1), ev1(-1)), ev1(2)));
  auto f = [](const EvalIndex& w, std::int64_t x) { return x + w.val.vv; };
  auto g = [](const EvalIndex&, std::int64_t x) { return x * x; };
  EXPECT_EQ(indexed::ifmap([&](const EvalIndex& w, std::int64_t x) { return g(w, f(w, x)); }, n),
            indexed::ifmap(g, indexed::ifmap(f, n)));
}

TEST(Din, Ev1) {
  auto d = ev1(3);
  EXPECT_EQ(d.conclusion(), (EvalIndex{lit(3), Val{3}}));
  EXPECT_EQ(d.rule_name(), "ev1");
  EXPECT_TRUE(indexed::validate(d));
}

TEST(Din, RejectsWrongSum) {
  auto a = ev1(1);
  auto b = ev1(2);
  indexed::DNode<EvalIndex, EvalParams, EvalDerivation> n{
      arith::eval_sig(), 1, arith::Ev2{lit(1), lit(2), Val{1}, Val{2}, Val{4}},
      {{a.conclusion(), a}, {b.conclusion(), b}}, EvalIndex{add(lit(1), lit(2)), Val{4}}};
  EXPECT_THROW(indexed::din(n), indexed::InvalidDerivation);
}

TEST(Din, RejectsPremiseAtWrongIndex) {
  auto a = ev1(1);
  auto b = ev1(2);
  indexed::DNode<EvalIndex, EvalParams, EvalDerivation> n{
      arith::eval_sig(), 1, arith::Ev2{lit(1), lit(2), Val{1}, Val{2}, Val{3}},
      {{a.conclusion(), b}, {b.conclusion(), a}}, EvalIndex{add(lit(1), lit(2)), Val{3}}};
  EXPECT_THROW(indexed::din(n), indexed::InvalidDerivation);
}

TEST(Din, RoundTripDepth3) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) {
    auto d = arith::build_eval_derivation(t);
    EXPECT_EQ(indexed::din(indexed::dout(d)), d);
    EXPECT_EQ(indexed::dout(indexed::din(d.node())), d.node());
  }
}

TEST(Ifold, Depth) {
  EXPECT_EQ(indexed::ifold(depth_alg(), ev1(5).conclusion(), ev1(5)), 1);
  auto d = ev2(ev2(ev1(1), ev1(1)), ev1(0));
  EXPECT_EQ(indexed::ifold(depth_alg(), d.conclusion(), d), 3);
}

TEST(Ifold, ConclusionExtractor) {
  using Alg = indexed::MendlerAlgebra<EvalIndex, EvalParams, EvalIndex>;
  Alg alg{[](const Alg::Rec&, const EvalIndex& w, const auto&) { return w; }};
  auto d = ev2(ev1(4), ev1(5));
  EXPECT_EQ(indexed::ifold(alg, d.conclusion(), d), d.conclusion());
}

TEST(Ifold, WrongIndex) {
  auto d = ev1(1);
  EXPECT_THROW(indexed::ifold(depth_alg(), EvalIndex{lit(2), Val{2}}, d), indexed::WrongIndex);
}

TEST(Ifold, RecAtOtherIndexIsRejected) {
  using Alg = indexed::MendlerAlgebra<EvalIndex, EvalParams, std::int64_t>;
  Alg alg{[](const Alg::Rec& rec, const EvalIndex& w, const indexed::DNode<EvalIndex, EvalParams, kernel::Handle>& n) -> std::int64_t {
    if (n.premises.empty()) return w.val.vv;
    return rec(n.premises[1].index, n.premises[0].witness);
  }};
  auto d = ev2(ev1(1), ev1(2));
  EXPECT_THROW(indexed::ifold(alg, d.conclusion(), d), indexed::WrongIndex);
}

TEST(Ifold, PreservationAlgebra) {
  auto d = ev2(ev1(1), ev1(2));
  auto td = arith::build_typof_derivation(add(lit(1), lit(2)));
  auto out = indexed::ifold(arith::preservation_algebra(), d.conclusion(), d)(td);
  EXPECT_EQ(out.conclusion(), (arith::TypOfIndex{lit(3), {}}));
  EXPECT_TRUE(indexed::validate(out));
}

TEST(Validate, ForgedWrongSumFailsAtRoot) {
  auto a = ev1(1);
  auto b = ev1(2);
  auto forged = EvalDerivation::forge({arith::eval_sig(), 1, arith::Ev2{lit(1), lit(2), Val{1}, Val{2}, Val{4}},
                                       {{a.conclusion(), a}, {b.conclusion(), b}}, EvalIndex{add(lit(1), lit(2)), Val{4}}});
  auto v = indexed::validate(forged);
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(v.path.empty());
  EXPECT_EQ(v.rule, "ev2");
  EXPECT_FALSE(forged.certified());
}

TEST(Validate, ReportsPathToFailingNode) {
  auto bad = EvalDerivation::forge({arith::eval_sig(), 0, arith::Ev1{1}, {}, EvalIndex{lit(1), Val{2}}});
  auto good = ev1(3);
  auto top = EvalDerivation::forge({arith::eval_sig(), 1, arith::Ev2{lit(3), lit(1), Val{3}, Val{2}, Val{5}},
                                    {{good.conclusion(), good}, {bad.conclusion(), bad}}, EvalIndex{add(lit(3), lit(1)), Val{5}}});
  auto v = indexed::validate(top);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.path, std::vector<std::size_t>{1});
  EXPECT_EQ(v.rule, "ev1");
}

TEST(Validate, BuiltDerivationsDepth3) {
  for (const auto& t : testkit::enumerate_terms(testkit::arith_spec(3))) {
    auto d = arith::build_eval_derivation(t);
    EXPECT_TRUE(indexed::validate(d));
    EXPECT_TRUE(d.certified());
  }
}

TEST(Json, DerivationShape) {
  auto j = indexed::to_json(ev2(ev1(1), ev1(2)));
  EXPECT_EQ(j["rule"], "ev2");
  EXPECT_EQ(j["premises"].size(), 2u);
  EXPECT_EQ(j["premises"][0]["rule"], "ev1");
  EXPECT_EQ(j["index"]["val"], 3);
}

}  // namespace
