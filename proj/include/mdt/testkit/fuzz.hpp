#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdt/testkit/generate.hpp"

namespace mdt::testkit {

struct FuzzOptions {
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  std::size_t fuel = 50;
  /// Bias of the typing relation under test; stepping is always right-biased.
  lang::Bias bias = lang::Bias::Right;
  std::size_t max_depth = 5;
  /// 0 picks one worker per hardware thread.
  std::size_t workers = 0;
};

/// Enough to rerun one configuration from scratch.
struct Counterexample {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  lang::Bias bias = lang::Bias::Right;
  std::size_t fuel = 0;
  std::string env;
  std::string term;
  /// 1-based number of the step whose preservation failed.
  std::size_t step = 0;
  std::string message;
};

enum class Ending { Value, Stuck, OutOfFuel, Failed };

struct RunOutcome {
  std::size_t steps = 0;
  Ending ending = Ending::Value;
  std::string message;
};

/// Steps a typed configuration until it is a value, sticks or runs out of
/// fuel, applying subject reduction to every step and re-validating the
/// result.
RunOutcome run_typed(const lang::EnvE& rho, const lang::EnvTypingDerivation& envd, const mutual::BiTerm& term,
                     const std::optional<lang::ExpTypingDerivation>& exp_typing,
                     const std::optional<lang::DecTypingDerivation>& dec_typing, std::size_t fuel, lang::Bias bias);

struct FuzzResult {
  std::size_t configs = 0;
  std::size_t skipped = 0;
  std::size_t steps = 0;
  std::size_t values = 0;
  std::size_t stuck = 0;
  std::size_t out_of_fuel = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty() && skipped == 0; }
};

/// Generates `count` well-typed configurations and runs each. Samples are
/// sharded across workers and merged back in index order.
FuzzResult fuzz_preservation(const FuzzOptions& opts);

/// Reruns a dumped case from its printed environment and term. Returns the
/// failure message, or nothing when the run now succeeds.
std::optional<std::string> replay(const Counterexample& c);

nlohmann::json to_json(const Counterexample& c);
Counterexample counterexample_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FuzzResult& r);

}  // namespace mdt::testkit
