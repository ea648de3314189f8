#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mdt/lang/typing.hpp"

namespace mdt::testkit {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  /// Bound on expression/declaration nesting.
  std::size_t max_depth = 5;
  /// Bound on arrow nesting in generated types.
  std::size_t max_type_depth = 2;
  bool well_typed = true;
  /// Extension bias the generator and typechecker assume.
  lang::Bias bias = lang::Bias::Right;
  std::size_t retry_budget = 1000;
};

/// A runtime environment, its typing, and a term typed under that context.
/// With well_typed off only `rho` and `term` are set.
struct Config {
  std::size_t index = 0;
  lang::EnvE rho;
  lang::EnvT gamma;
  std::optional<lang::EnvTypingDerivation> envd;
  mutual::BiTerm term = lang::env({});
  std::optional<lang::ExpTypingDerivation> exp_typing;
  std::optional<lang::DecTypingDerivation> dec_typing;
  std::size_t retries = 0;
};

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of sample `index` of a corpus; samples are independent of each other.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

/// Sample `index` of the corpus described by `cfg`. Throws
/// GenerationExhausted when the retry budget runs out.
Config gen_config(const GenConfig& cfg, std::size_t index);
Config gen_well_typed_config(const GenConfig& cfg);
/// cfg.count samples in index order.
std::vector<Config> gen_corpus(const GenConfig& cfg);

}  // namespace mdt::testkit
