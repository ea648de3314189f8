#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mdt/kernel/algebra.hpp"
#include "mdt/kernel/coproduct.hpp"

namespace mdt::arith {

using kernel::Term;

/// Trm_G1 = lit(Int)
const kernel::SignatureRef& trm_g1();
/// Trm_G2 = add(rec, rec)
const kernel::SignatureRef& trm_g2();
/// Trm_G = Trm_G1 + Trm_G2
const kernel::CoproductSignature& trm_sig();

Term lit(std::int64_t x);
Term add(Term lhs, Term rhs);

bool is_lit(const Term& t);
std::int64_t lit_value(const Term& t);

struct Val {
  std::int64_t vv = 0;
  friend auto operator<=>(const Val&, const Val&) = default;
};

/// The single arithmetic type N.
struct TypN {
  friend bool operator==(const TypN&, const TypN&) = default;
};

/// Throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

kernel::CAlgebra<Val> eval_g1();
kernel::CAlgebra<Val> eval_g2();
/// Case split on the coproduct: lit nodes to eval_g1, add nodes to eval_g2.
kernel::CAlgebra<Val> eval_g();

Val eval(const Term& t);

std::string to_sexpr(const Term& t);
std::string to_sexpr(const Val& v);
Term parse_trm(std::string_view text);

void to_json(nlohmann::json& j, const Val& v);
void to_json(nlohmann::json& j, const TypN&);

}  // namespace mdt::arith
