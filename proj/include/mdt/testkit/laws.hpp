#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mdt/arith/relations.hpp"
#include "mdt/lang/syntax.hpp"
#include "mdt/testkit/report.hpp"

namespace mdt::testkit {

enum class Suite { Kernel, Indexed, Mutual, Arith, Lang };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct LawOptions {
  /// Defect injection: the maps under test exchange their first two
  /// recursive positions.
  bool swap_fmap_slots = false;
  /// Eval rules the arith suite checks; defaults to arith::eval_sig().
  std::optional<arith::EvalSignature> eval_sig;
  /// Typing bias the lang suite checks.
  lang::Bias bias = lang::Bias::Right;

  std::uint64_t seed = 42;
  /// Random composites per functor law.
  std::size_t samples = 1000;
  std::size_t arith_depth = 4;
  std::size_t lang_depth = 3;
  /// Generated configurations in the lang suite.
  std::size_t fuzz_count = 200;
};

/// Runs every property of the named module. Check order and witnesses are
/// deterministic for fixed options.
Report law_suite(Suite s, const LawOptions& opts = {});

/// A copy of `sig` whose rule `rule` has no side conditions.
arith::EvalSignature without_side_conditions(const arith::EvalSignature& sig, const std::string& rule);

}  // namespace mdt::testkit
