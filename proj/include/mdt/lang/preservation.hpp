#pragma once

// Subject reduction for L as a fold over step derivations.
//
// At a DecStep index (rho, d1, d2) the carrier maps TypOEnv(rho, gamma) and
// TypODec(gamma, d1, t) to TypODec(gamma, d2, t); the ExpStep carrier is the
// same over expressions. Both are computed by one indexed bi-algebra.

#include <functional>
#include <stdexcept>

#include "mdt/lang/step.hpp"
#include "mdt/lang/typing.hpp"

namespace mdt::lang {

/// The transformer could not produce a typing for the successor.
class PreservationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inputs of subject_reduction do not talk about the same configuration.
class IncoherentIndices : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using DecTSafe = std::function<DecTypingDerivation(const EnvTypingDerivation&, const DecTypingDerivation&)>;
using ExpTSafe = std::function<ExpTypingDerivation(const EnvTypingDerivation&, const ExpTypingDerivation&)>;
using TPAlgebra = mutual::IndexedBiMendlerAlgebra<StepTraits, DecTSafe, ExpTSafe>;

TPAlgebra tp_algebra(Bias bias = Bias::Right);

ExpTypingDerivation subject_reduction(const ExpStepDerivation& stepd, const EnvTypingDerivation& envd,
                                      const ExpTypingDerivation& typd, Bias bias = Bias::Right);
DecTypingDerivation subject_reduction(const DecStepDerivation& stepd, const EnvTypingDerivation& envd,
                                      const DecTypingDerivation& typd, Bias bias = Bias::Right);

// Lemmas used by the algebra.

/// A value's typing does not depend on its context.
ExpTypingDerivation retype_value(const ExpTypingDerivation& d, const EnvT& gamma, Bias bias = Bias::Right);
/// Moves a typing under `gamma`, which must agree with the original context
/// on all of its keys.
ExpTypingDerivation weaken(const ExpTypingDerivation& d, const EnvT& gamma, Bias bias = Bias::Right);
DecTypingDerivation weaken(const DecTypingDerivation& d, const EnvT& gamma, Bias bias = Bias::Right);
/// TypOEnv(rho1, gamma1) and TypOEnv(rho2, gamma2) give
/// TypOEnv(rho1 ⊕ rho2, gamma1 ⊕ gamma2), right-biased.
EnvTypingDerivation union_env(const EnvTypingDerivation& a, const EnvTypingDerivation& b);
/// From TypOPat(p, t) and a typing of a value v at t, closed typings of the
/// bindings patmatch(p, v) produces.
EnvTypingDerivation match_typing(const PatTypingDerivation& patd, const ExpTypingDerivation& vd);

}  // namespace mdt::lang
