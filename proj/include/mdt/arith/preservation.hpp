#pragma once

#include <functional>

#include "mdt/arith/relations.hpp"

namespace mdt::arith {

/// Carrier of the preservation fold: at (e, v), a map from TypOf(e, t) to
/// TypOf(lit(vv v), t).
using TypOfTransformer = std::function<TypOfDerivation(const TypOfDerivation&)>;

indexed::MendlerAlgebra<EvalIndex, EvalParams, TypOfTransformer> preservation_algebra();
indexed::MendlerAlgebra<IsTrmIndex, IsTrmParams, TypOfTransformer> istrm_preservation_algebra();

/// From Eval(e, v) and TypOf(e, t), a TypOf derivation at (lit(vv v), t).
/// Throws InvalidDerivation on invalid inputs and WrongIndex when the two
/// derivations disagree on e.
TypOfDerivation preservation(const EvalDerivation& d, const TypOfDerivation& td);

/// From IsTrm(e) and TypOf(e, t), a TypOf derivation at (lit(vv(eval e)), t).
TypOfDerivation preservation_via_istrm(const IsTrmDerivation& w, const TypOfDerivation& td);

}  // namespace mdt::arith
