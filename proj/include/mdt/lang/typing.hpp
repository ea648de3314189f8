#pragma once

// Static semantics of L.
//
// TypODec over (gamma, d, t) and TypOExp over (gamma, e, t) are mutually
// defined; TypOPat over (p, t) and TypOEnv over (rho, gamma) are standalone
// relations. Where a rule needs a TypOPat or TypOEnv fact, the derivation of
// that fact is carried as a rule parameter and checked by a side condition.
//
// The context extension ⊕ used by T-CLOS, T-SCOPE and TD-JOIN is a parameter
// of the system (Bias); stepping always uses the right-biased union.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mdt/indexed/derivation.hpp"
#include "mdt/lang/syntax.hpp"
#include "mdt/mutual/hderivation.hpp"

namespace mdt::lang {

struct DecTyping {
  EnvT gamma;
  Dec d;
  Typ t;
  const Dec& term() const { return d; }
  friend bool operator==(const DecTyping&, const DecTyping&) = default;
};

struct ExpTyping {
  EnvT gamma;
  Exp e;
  Typ t;
  const Exp& term() const { return e; }
  friend bool operator==(const ExpTyping&, const ExpTyping&) = default;
};

struct PatTyping {
  Pat p;
  Typ t;
  friend bool operator==(const PatTyping&, const PatTyping&) = default;
};

struct EnvTyping {
  EnvE rho;
  EnvT gamma;
  friend bool operator==(const EnvTyping&, const EnvTyping&) = default;
};

namespace rules {

struct TPVar {
  Ident x;
  Typ t;
  friend bool operator==(const TPVar&, const TPVar&) = default;
};
struct TPCon {
  Ident c;
  Typ t;
  friend bool operator==(const TPCon&, const TPCon&) = default;
};
/// Head must be constructor-headed and the two sides must bind disjoint
/// variables.
struct TPApp {
  Pat head, arg;
  Typ from, to;
  friend bool operator==(const TPApp&, const TPApp&) = default;
};

struct TVar;
struct TCon;
struct TClos;
struct TApp;
struct TScope;
struct TDEnv;
struct TDMatch;
struct TDJoin;
struct TEEnv;

}  // namespace rules

using PatTypingParams = std::variant<rules::TPVar, rules::TPCon, rules::TPApp>;
using PatTypingSignature = indexed::SignatureRef<PatTyping, PatTypingParams>;
using PatTypingDerivation = indexed::Derivation<PatTyping, PatTypingParams>;

using DecTypingParams = std::variant<rules::TDEnv, rules::TDMatch, rules::TDJoin>;
using ExpTypingParams = std::variant<rules::TVar, rules::TCon, rules::TClos, rules::TApp, rules::TScope>;

struct TypingTraits {
  using K1 = DecTyping;
  using P1 = DecTypingParams;
  using K2 = ExpTyping;
  using P2 = ExpTypingParams;
};

using TypingSignature = mutual::IndexedBiSignatureRef<TypingTraits>;
using DecTypingDerivation = mutual::BiDerivation<TypingTraits, 0>;
using ExpTypingDerivation = mutual::BiDerivation<TypingTraits, 1>;

using EnvTypingParams = std::variant<rules::TEEnv>;
using EnvTypingSignature = indexed::SignatureRef<EnvTyping, EnvTypingParams>;
using EnvTypingDerivation = indexed::Derivation<EnvTyping, EnvTypingParams>;

namespace rules {

/// One closed value typing per binding, in key order.
struct TEEnv {
  std::vector<std::pair<Ident, ExpTypingDerivation>> entries;
  friend bool operator==(const TEEnv&, const TEEnv&) = default;
};

struct TVar {
  EnvT gamma;
  Ident x;
  friend bool operator==(const TVar&, const TVar&) = default;
};
struct TCon {
  EnvT gamma;
  Ident c;
  Typ t;
  friend bool operator==(const TCon&, const TCon&) = default;
};
/// rho0 and gamma0 are read from `envd`, the pattern and its type from `patd`.
struct TClos {
  EnvT gamma;
  EnvTypingDerivation envd;
  PatTypingDerivation patd;
  Exp body;
  Typ to;
  friend bool operator==(const TClos&, const TClos&) = default;
};
struct TApp {
  EnvT gamma;
  Exp fn, arg;
  Typ from, to;
  friend bool operator==(const TApp&, const TApp&) = default;
};
struct TScope {
  EnvT gamma;
  Dec d;
  EnvT gamma1;
  Exp body;
  Typ t;
  friend bool operator==(const TScope&, const TScope&) = default;
};
struct TDEnv {
  EnvT gamma;
  EnvTypingDerivation envd;
  friend bool operator==(const TDEnv&, const TDEnv&) = default;
};
struct TDMatch {
  EnvT gamma;
  PatTypingDerivation patd;
  Exp e;
  friend bool operator==(const TDMatch&, const TDMatch&) = default;
};
struct TDJoin {
  EnvT gamma;
  Dec d1;
  EnvT gamma1;
  Dec d2;
  EnvT gamma2;
  friend bool operator==(const TDJoin&, const TDJoin&) = default;
};

}  // namespace rules

/// Family "TypOPat": TP-VAR, TP-CON, TP-APP.
const PatTypingSignature& pat_typing_sig();
/// Family "TypOEnv": TE-ENV.
const EnvTypingSignature& env_typing_sig();
/// Families "TypODec" and "TypOExp" with the given extension bias.
const TypingSignature& typing_sig(Bias bias = Bias::Right);

struct TypeError {
  /// Positions from the root to the offending subterm, e.g. {"app.fn", "clos.body"}.
  std::vector<std::string> path;
  std::string message;

  std::string to_string() const;
};

template <class D>
struct Checked {
  std::optional<D> derivation;
  TypeError error;

  explicit operator bool() const { return derivation.has_value(); }
};

Checked<ExpTypingDerivation> typecheck_exp(const EnvT& gamma, const Exp& e, Bias bias = Bias::Right);
Checked<DecTypingDerivation> typecheck_dec(const EnvT& gamma, const Dec& d, Bias bias = Bias::Right);
Checked<PatTypingDerivation> typecheck_pat(const Pat& p);
/// Pointwise typing of a runtime environment under the empty context.
/// Throws NotAValue when an entry is not a value.
Checked<EnvTypingDerivation> typecheck_env(const EnvE& rho, Bias bias = Bias::Right);

/// TE-ENV over the given closed value typings; the environment and its
/// typing are read off the entries.
EnvTypingDerivation env_typing(std::vector<std::pair<Ident, ExpTypingDerivation>> entries);

}  // namespace mdt::lang
