#include "mdt/arith/syntax.hpp"

#include <stdexcept>

#include "mdt/sexpr.hpp"

namespace mdt::arith {

using kernel::Constructor;
using kernel::Node;
using kernel::PayloadKind;
using kernel::Slot;

const kernel::SignatureRef& trm_g1() {
  static const auto sig = kernel::Signature::make("Trm_G1", {Constructor{"lit", {Slot::of(PayloadKind::Int)}}});
  return sig;
}

const kernel::SignatureRef& trm_g2() {
  static const auto sig = kernel::Signature::make("Trm_G2", {Constructor{"add", {Slot::rec(), Slot::rec()}}});
  return sig;
}

const kernel::CoproductSignature& trm_sig() {
  static const kernel::CoproductSignature sig(trm_g1(), trm_g2(), "Trm_G");
  return sig;
}

Term lit(std::int64_t x) {
  return kernel::in_(trm_sig().inject_left(Node<Term>{trm_g1(), 0, {}, {x}}));
}

Term add(Term lhs, Term rhs) {
  return kernel::in_(trm_sig().inject_right(Node<Term>{trm_g2(), 0, {std::move(lhs), std::move(rhs)}, {}}));
}

bool is_lit(const Term& t) { return t.node().sig == trm_sig().sum() && t.ctor() == 0; }

std::int64_t lit_value(const Term& t) {
  if (!is_lit(t)) throw std::invalid_argument("not a literal: " + to_sexpr(t));
  return std::get<std::int64_t>(t.node().payload[0]);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

kernel::CAlgebra<Val> eval_g1() {
  return {[](const Node<Val>& n) { return Val{std::get<std::int64_t>(n.payload.at(0))}; }};
}

kernel::CAlgebra<Val> eval_g2() {
  return {[](const Node<Val>& n) { return Val{checked_add(n.rec.at(0).vv, n.rec.at(1).vv)}; }};
}

kernel::CAlgebra<Val> eval_g() { return trm_sig().algebra(eval_g1(), eval_g2()); }

Val eval(const Term& t) {
  static const auto alg = eval_g();
  return kernel::fold_c(alg, t);
}

std::string to_sexpr(const Term& t) {
  if (is_lit(t)) return "(lit " + std::to_string(lit_value(t)) + ")";
  const auto& n = t.node();
  return "(add " + to_sexpr(n.rec.at(0)) + " " + to_sexpr(n.rec.at(1)) + ")";
}

std::string to_sexpr(const Val& v) { return "(val " + std::to_string(v.vv) + ")"; }

namespace {
Term from_sexp(const sexpr::Sexp& s) {
  auto head = s.head();
  if (head == "lit") {
    sexpr::expect_form(s, "lit", 1);
    return lit(sexpr::expect_int(s.items[1]));
  }
  if (head == "add") {
    sexpr::expect_form(s, "add", 2);
    return add(from_sexp(s.items[1]), from_sexp(s.items[2]));
  }
  throw sexpr::ParseError("expected (lit n) or (add e e), got " + s.to_string());
}
}  // namespace

Term parse_trm(std::string_view text) { return from_sexp(sexpr::parse(text)); }

void to_json(nlohmann::json& j, const Val& v) { j = v.vv; }
void to_json(nlohmann::json& j, const TypN&) { j = "N"; }

}  // namespace mdt::arith
