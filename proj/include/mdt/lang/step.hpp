#pragma once

// Small-step semantics of L: DecStep over (rho, d, d') and ExpStep over
// (rho, e, e'), defined mutually. Strategy is left-to-right call-by-value;
// environments extend by right-biased union.

#include <optional>
#include <utility>
#include <variant>

#include "mdt/lang/syntax.hpp"
#include "mdt/mutual/hderivation.hpp"

namespace mdt::lang {

struct DecStepIndex {
  EnvE rho;
  Dec from, to;
  friend bool operator==(const DecStepIndex&, const DecStepIndex&) = default;
};

struct ExpStepIndex {
  EnvE rho;
  Exp from, to;
  friend bool operator==(const ExpStepIndex&, const ExpStepIndex&) = default;
};

namespace rules {

// var x -> rho(x)
struct EVar {
  EnvE rho;
  Ident x;
  friend bool operator==(const EVar&, const EVar&) = default;
};
// app(e1, e2) -> app(e1', e2)
struct EApp1 {
  EnvE rho;
  Exp fn, fn2, arg;
  friend bool operator==(const EApp1&, const EApp1&) = default;
};
// app(v, e2) -> app(v, e2')
struct EApp2 {
  EnvE rho;
  Exp fn, arg, arg2;
  friend bool operator==(const EApp2&, const EApp2&) = default;
};
// app(clos(rho0, p, b), v) -> scope(env(rho0 ⊕ patmatch(p, v)), b)
struct EBeta {
  EnvE rho, rho0;
  Pat p;
  Exp body, arg;
  friend bool operator==(const EBeta&, const EBeta&) = default;
};
// scope(d, e) -> scope(d', e)
struct EScope1 {
  EnvE rho;
  Dec d, d2;
  Exp body;
  friend bool operator==(const EScope1&, const EScope1&) = default;
};
// scope(env rho1, e) -> scope(env rho1, e'), e stepping under rho ⊕ rho1
struct EScope2 {
  EnvE rho, rho1;
  Exp body, body2;
  friend bool operator==(const EScope2&, const EScope2&) = default;
};
// scope(env rho1, v) -> v
struct EScope3 {
  EnvE rho, rho1;
  Exp v;
  friend bool operator==(const EScope3&, const EScope3&) = default;
};

// match(p, e) -> match(p, e')
struct DMatch1 {
  EnvE rho;
  Pat p;
  Exp e, e2;
  friend bool operator==(const DMatch1&, const DMatch1&) = default;
};
// match(p, v) -> env(patmatch(p, v))
struct DMatch {
  EnvE rho;
  Pat p;
  Exp v;
  friend bool operator==(const DMatch&, const DMatch&) = default;
};
// join(d1, d2) -> join(d1', d2)
struct DJoin1 {
  EnvE rho;
  Dec d1, d1b, d2;
  friend bool operator==(const DJoin1&, const DJoin1&) = default;
};
// join(env rho1, d2) -> join(env rho1, d2'), d2 stepping under rho ⊕ rho1
struct DJoin2 {
  EnvE rho, rho1;
  Dec d2, d2b;
  friend bool operator==(const DJoin2&, const DJoin2&) = default;
};
// join(env rho1, env rho2) -> env(rho1 ⊕ rho2)
struct DJoin3 {
  EnvE rho, rho1, rho2;
  friend bool operator==(const DJoin3&, const DJoin3&) = default;
};

}  // namespace rules

using DecStepParams = std::variant<rules::DMatch1, rules::DMatch, rules::DJoin1, rules::DJoin2, rules::DJoin3>;
using ExpStepParams = std::variant<rules::EVar, rules::EApp1, rules::EApp2, rules::EBeta, rules::EScope1,
                                   rules::EScope2, rules::EScope3>;

struct StepTraits {
  using K1 = DecStepIndex;
  using P1 = DecStepParams;
  using K2 = ExpStepIndex;
  using P2 = ExpStepParams;
};

using StepSignature = mutual::IndexedBiSignatureRef<StepTraits>;
using DecStepDerivation = mutual::BiDerivation<StepTraits, 0>;
using ExpStepDerivation = mutual::BiDerivation<StepTraits, 1>;

/// Families "DecStep" and "ExpStep".
const StepSignature& step_sig();

/// The unique successor of `e` under `rho` with its derivation; nothing when
/// `e` is a value or stuck.
std::optional<std::pair<Exp, ExpStepDerivation>> step_exp(const EnvE& rho, const Exp& e);
std::optional<std::pair<Dec, DecStepDerivation>> step_dec(const EnvE& rho, const Dec& d);

}  // namespace mdt::lang
