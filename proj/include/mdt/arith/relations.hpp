#pragma once

#include <string>
#include <variant>

#include "mdt/arith/syntax.hpp"
#include "mdt/indexed/derivation.hpp"

namespace mdt::arith {

// Eval : Trm * Val -> P, the relational counterpart of eval.
struct EvalIndex {
  Term trm;
  Val val;
  friend bool operator==(const EvalIndex&, const EvalIndex&) = default;
};
struct Ev1 {
  std::int64_t x = 0;
  friend bool operator==(const Ev1&, const Ev1&) = default;
};
/// The claimed sum `v` is checked against x1 + x2 by the "sum" side condition.
struct Ev2 {
  Term e1, e2;
  Val x1, x2, v;
  friend bool operator==(const Ev2&, const Ev2&) = default;
};
using EvalParams = std::variant<Ev1, Ev2>;
using EvalSignature = indexed::SignatureRef<EvalIndex, EvalParams>;
using EvalDerivation = indexed::Derivation<EvalIndex, EvalParams>;

// TypOf : Trm * Typ -> P
struct TypOfIndex {
  Term trm;
  TypN typ;
  friend bool operator==(const TypOfIndex&, const TypOfIndex&) = default;
};
struct Tof1 {
  Val v;
  friend bool operator==(const Tof1&, const Tof1&) = default;
};
struct Tof2 {
  Term e1, e2;
  friend bool operator==(const Tof2&, const Tof2&) = default;
};
using TypOfParams = std::variant<Tof1, Tof2>;
using TypOfSignature = indexed::SignatureRef<TypOfIndex, TypOfParams>;
using TypOfDerivation = indexed::Derivation<TypOfIndex, TypOfParams>;

// IsTrm : Trm -> P, the relational lifting of Trm.
struct IsTrmIndex {
  Term trm;
  friend bool operator==(const IsTrmIndex&, const IsTrmIndex&) = default;
};
struct IsLit {
  std::int64_t x = 0;
  friend bool operator==(const IsLit&, const IsLit&) = default;
};
struct IsAdd {
  Term e1, e2;
  friend bool operator==(const IsAdd&, const IsAdd&) = default;
};
using IsTrmParams = std::variant<IsLit, IsAdd>;
using IsTrmSignature = indexed::SignatureRef<IsTrmIndex, IsTrmParams>;
using IsTrmDerivation = indexed::Derivation<IsTrmIndex, IsTrmParams>;

/// Rules ev1, ev2.
const EvalSignature& eval_sig();
/// Rules tof1, tof2.
const TypOfSignature& typof_sig();
/// Rules isLit, isAdd.
const IsTrmSignature& istrm_sig();

EvalDerivation build_eval_derivation(const Term& t, const EvalSignature& sig = eval_sig());
TypOfDerivation build_typof_derivation(const Term& t, const TypOfSignature& sig = typof_sig());
IsTrmDerivation build_istrm(const Term& t, const IsTrmSignature& sig = istrm_sig());

struct Agreement {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Does a valid Eval derivation agree with eval? Throws InvalidDerivation when
/// `d` does not validate.
Agreement eval_of_derivation(const EvalDerivation& d);

void to_json(nlohmann::json& j, const EvalIndex& w);
void to_json(nlohmann::json& j, const Ev1& p);
void to_json(nlohmann::json& j, const Ev2& p);
void to_json(nlohmann::json& j, const TypOfIndex& w);
void to_json(nlohmann::json& j, const Tof1& p);
void to_json(nlohmann::json& j, const Tof2& p);
void to_json(nlohmann::json& j, const IsTrmIndex& w);
void to_json(nlohmann::json& j, const IsLit& p);
void to_json(nlohmann::json& j, const IsAdd& p);

}  // namespace mdt::arith
