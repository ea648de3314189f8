#include "mdt/testkit/fuzz.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "mdt/lang/preservation.hpp"
#include "mdt/lang/print.hpp"
#include "mdt/lang/step.hpp"
#include "mdt/lang/values.hpp"

namespace mdt::testkit {

using namespace lang;

namespace {

template <class Typing, class Stepper>
RunOutcome drive(const EnvE& rho, const EnvTypingDerivation& envd, mutual::BiTerm term, Typing typing,
                 std::size_t fuel, Bias bias, Stepper step) {
  RunOutcome out;
  const Typ t = typing.conclusion().t;
  while (out.steps < fuel) {
    auto next = step(rho, term);
    if (!next) {
      out.ending = is_exp(term) && !is_value(term) ? Ending::Stuck : Ending::Value;
      if (is_dec(term)) out.ending = std::holds_alternative<view::EnvD>(view_dec(term)) ? Ending::Value : Ending::Stuck;
      return out;
    }
    ++out.steps;
    try {
      auto typed = subject_reduction(next->second, envd, typing, bias);
      if (!(typed.conclusion().t == t) || !(typed.conclusion().term() == next->first))
        throw PreservationFailure("result concludes at the wrong index");
      if (auto v = mutual::validate(typed); !v.ok) throw PreservationFailure("result does not validate: " + v.reason);
      typing = std::move(typed);
    } catch (const std::exception& e) {
      out.ending = Ending::Failed;
      out.message = to_sexpr(term) + " -> " + to_sexpr(next->first) + ": " + e.what();
      return out;
    }
    term = next->first;
  }
  out.ending = Ending::OutOfFuel;
  return out;
}

struct Sample {
  bool skipped = false;
  RunOutcome outcome;
  Config config;
};

Sample run_sample(const FuzzOptions& opts, std::size_t index) {
  GenConfig g;
  g.seed = opts.seed;
  g.count = opts.count;
  g.max_depth = opts.max_depth;
  g.bias = opts.bias;
  Sample s;
  try {
    s.config = gen_config(g, index);
  } catch (const GenerationExhausted&) {
    s.skipped = true;
    return s;
  }
  const auto& c = s.config;
  s.outcome = run_typed(c.rho, *c.envd, c.term, c.exp_typing, c.dec_typing, opts.fuel, opts.bias);
  return s;
}

const char* bias_name(Bias b) { return b == Bias::Right ? "right" : "left"; }

}  // namespace

RunOutcome run_typed(const EnvE& rho, const EnvTypingDerivation& envd, const mutual::BiTerm& term,
                     const std::optional<ExpTypingDerivation>& exp_typing,
                     const std::optional<DecTypingDerivation>& dec_typing, std::size_t fuel, Bias bias) {
  if (exp_typing) {
    return drive(rho, envd, term, *exp_typing, fuel, bias, [](const EnvE& r, const Exp& e) { return step_exp(r, e); });
  }
  return drive(rho, envd, term, dec_typing.value(), fuel, bias, [](const EnvE& r, const Dec& d) { return step_dec(r, d); });
}

FuzzResult fuzz_preservation(const FuzzOptions& opts) {
  std::vector<Sample> samples(opts.count);
  std::size_t workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, opts.count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < opts.count; ++i) samples[i] = run_sample(opts, i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < opts.count; i += workers) samples[i] = run_sample(opts, i);
      });
    }
    for (auto& t : pool) t.join();
  }

  FuzzResult r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.skipped) {
      ++r.skipped;
      continue;
    }
    ++r.configs;
    r.steps += s.outcome.steps;
    switch (s.outcome.ending) {
      case Ending::Value: ++r.values; break;
      case Ending::Stuck: ++r.stuck; break;
      case Ending::OutOfFuel: ++r.out_of_fuel; break;
      case Ending::Failed:
        r.counterexamples.push_back(Counterexample{opts.seed, i, opts.bias, opts.fuel, to_sexpr(s.config.rho),
                                                   to_sexpr(s.config.term), s.outcome.steps, s.outcome.message});
        break;
    }
  }
  return r;
}

std::optional<std::string> replay(const Counterexample& c) {
  const EnvE rho = parse_env_e(c.env);
  const mutual::BiTerm term = parse_term(c.term);
  auto envd = typecheck_env(rho, c.bias);
  if (!envd) return "environment does not typecheck: " + envd.error.to_string();
  const EnvT& gamma = envd.derivation->conclusion().gamma;
  RunOutcome out;
  if (is_exp(term)) {
    auto typed = typecheck_exp(gamma, term, c.bias);
    if (!typed) return "term does not typecheck: " + typed.error.to_string();
    out = run_typed(rho, *envd.derivation, term, typed.derivation, std::nullopt, c.fuel, c.bias);
  } else {
    auto typed = typecheck_dec(gamma, term, c.bias);
    if (!typed) return "term does not typecheck: " + typed.error.to_string();
    out = run_typed(rho, *envd.derivation, term, std::nullopt, typed.derivation, c.fuel, c.bias);
  }
  if (out.ending == Ending::Failed) return out.message;
  return std::nullopt;
}

nlohmann::json to_json(const Counterexample& c) {
  return {{"seed", c.seed}, {"index", c.index},  {"bias", bias_name(c.bias)}, {"fuel", c.fuel},
          {"env", c.env},   {"term", c.term},    {"step", c.step},            {"message", c.message}};
}

Counterexample counterexample_from_json(const nlohmann::json& j) {
  Counterexample c;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.index = j.at("index").get<std::size_t>();
  const auto bias = j.at("bias").get<std::string>();
  if (bias != "right" && bias != "left") throw std::invalid_argument("bias must be \"right\" or \"left\"");
  c.bias = bias == "left" ? Bias::Left : Bias::Right;
  c.fuel = j.at("fuel").get<std::size_t>();
  c.env = j.at("env").get<std::string>();
  c.term = j.at("term").get<std::string>();
  c.step = j.value("step", std::size_t{0});
  c.message = j.value("message", std::string{});
  return c;
}

nlohmann::json to_json(const FuzzResult& r) {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : r.counterexamples) ces.push_back(to_json(c));
  return {{"configs", r.configs}, {"skipped", r.skipped},         {"steps", r.steps},
          {"values", r.values},   {"stuck", r.stuck},             {"out_of_fuel", r.out_of_fuel},
          {"ok", r.ok()},         {"counterexamples", ces}};
}

}  // namespace mdt::testkit
