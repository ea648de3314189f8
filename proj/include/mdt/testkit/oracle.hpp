#pragma once

#include "mdt/arith/syntax.hpp"

namespace mdt::testkit {

/// Direct structural recursion over the constructor names, for use as an
/// equivalence oracle against the fold-based evaluator. Throws
/// std::overflow_error on int64 overflow and std::invalid_argument on a
/// foreign constructor.
arith::Val oracle_eval(const kernel::Term& t);

}  // namespace mdt::testkit
