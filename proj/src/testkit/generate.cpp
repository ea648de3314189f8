#include "mdt/testkit/generate.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mdt/lang/values.hpp"

namespace mdt::testkit {

using namespace lang;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) { return splitmix64(splitmix64(seed) ^ index); }

namespace {

const std::array<const char*, 3> kVars = {"x", "y", "z"};
const std::array<const char*, 2> kCtors = {"c", "d"};
const std::array<const char*, 2> kBase = {"a", "b"};

class Gen {
 public:
  Gen(const GenConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin(unsigned percent) { return pick(100) < percent; }

  Typ type(std::size_t depth) {
    if (depth == 0 || coin(55)) return ty(kBase[pick(kBase.size())]);
    return arrow(type(depth - 1), type(depth - 1));
  }

  std::string ctor() { return kCtors[pick(kCtors.size())]; }

  /// Closed values with their types.
  std::pair<EnvE, EnvT> runtime_env(std::size_t depth) {
    EnvE rho;
    EnvT gamma;
    for (const char* x : kVars) {
      if (!coin(45)) continue;
      Typ t = type(cfg_.max_type_depth);
      rho.emplace(id(x), value(t, depth));
      gamma.emplace(id(x), t);
    }
    return {rho, gamma};
  }

  Exp data_value(const Typ& t, std::size_t depth) {
    if (depth == 0 || coin(60)) return con(ctor(), t);
    Typ a = type(1);
    return app(data_value(arrow(a, t), depth - 1), value(a, depth - 1));
  }

  Exp value(const Typ& t, std::size_t depth) {
    auto v = view_typ(t);
    if (const auto* ar = std::get_if<view::Arrow>(&v); ar && depth > 0 && coin(60)) {
      auto [rho0, gamma0] = depth > 1 ? runtime_env(depth - 2) : std::pair<EnvE, EnvT>{};
      std::vector<Ident> used;
      Pat p = pattern(ar->from, depth - 1, used);
      return clos(rho0, p, exp(merge(gamma0, bindings(p), cfg_.bias), ar->to, depth - 1));
    }
    return data_value(t, depth);
  }

  Pat pattern(const Typ& t, std::size_t depth, std::vector<Ident>& used) {
    const unsigned roll = static_cast<unsigned>(pick(100));
    if (roll < 65) {
      for (std::size_t tries = 0; tries < kVars.size(); ++tries) {
        Ident x = id(kVars[pick(kVars.size())]);
        if (std::find(used.begin(), used.end(), x) != used.end()) continue;
        used.push_back(x);
        return pvar(x.name, t);
      }
    }
    if (depth == 0 || roll < 85) return pcon(ctor(), t);
    Typ a = type(1);
    Pat head = headed_pattern(arrow(a, t), depth - 1, used);
    return papp(head, pattern(a, depth - 1, used));
  }

  Pat headed_pattern(const Typ& t, std::size_t depth, std::vector<Ident>& used) {
    if (depth == 0 || coin(70)) return pcon(ctor(), t);
    Typ a = type(1);
    Pat head = headed_pattern(arrow(a, t), depth - 1, used);
    return papp(head, pattern(a, depth - 1, used));
  }

  Exp exp(const EnvT& gamma, const Typ& t, std::size_t depth) {
    std::vector<Ident> vars;
    for (const auto& [x, tx] : gamma)
      if (tx == t) vars.push_back(x);
    const unsigned roll = static_cast<unsigned>(pick(100));
    if (!vars.empty() && (depth == 0 || roll < 15)) return var(vars[pick(vars.size())].name);
    if (depth == 0 || roll < 25) return value(t, depth);
    if (roll < 70) {
      Typ a = type(1);
      Exp fn = coin(60) ? value(arrow(a, t), depth - 1) : exp(gamma, arrow(a, t), depth - 1);
      return app(fn, exp(gamma, a, depth - 1));
    }
    auto [d, gamma1] = dec(gamma, depth - 1);
    return scope(d, exp(merge(gamma, gamma1, cfg_.bias), t, depth - 1));
  }

  std::pair<Dec, EnvT> dec(const EnvT& gamma, std::size_t depth) {
    const unsigned roll = static_cast<unsigned>(pick(100));
    if (depth == 0 || roll < 35) {
      auto [rho, gamma1] = runtime_env(depth == 0 ? 0 : depth - 1);
      return {env(rho), gamma1};
    }
    if (roll < 75) {
      Typ t = type(1);
      std::vector<Ident> used;
      Pat p = pattern(t, depth - 1, used);
      return {match(p, exp(gamma, t, depth - 1)), bindings(p)};
    }
    auto [d1, g1] = dec(gamma, depth - 1);
    auto [d2, g2] = dec(merge(gamma, g1, cfg_.bias), depth - 1);
    return {join(d1, d2), merge(g1, g2, cfg_.bias)};
  }

  Exp any_exp(std::size_t depth) {
    const unsigned roll = static_cast<unsigned>(depth == 0 ? pick(40) : pick(100));
    if (roll < 20) return var(kVars[pick(kVars.size())]);
    if (roll < 40) return con(ctor(), type(1));
    if (roll < 55) return clos(any_env(depth - 1), any_pattern(depth - 1), any_exp(depth - 1));
    if (roll < 80) return app(any_exp(depth - 1), any_exp(depth - 1));
    return scope(any_dec(depth - 1), any_exp(depth - 1));
  }

  Dec any_dec(std::size_t depth) {
    const unsigned roll = static_cast<unsigned>(depth == 0 ? pick(35) : pick(100));
    if (roll < 35) return env(any_env(depth == 0 ? 0 : depth - 1));
    if (roll < 70) return match(any_pattern(depth - 1), any_exp(depth - 1));
    return join(any_dec(depth - 1), any_dec(depth - 1));
  }

  EnvE any_env(std::size_t depth) {
    EnvE rho;
    for (const char* x : kVars)
      if (coin(35)) rho.emplace(id(x), depth == 0 ? con(ctor(), type(1)) : any_exp(depth - 1));
    return rho;
  }

  Pat any_pattern(std::size_t depth) {
    const unsigned roll = static_cast<unsigned>(depth == 0 ? pick(70) : pick(100));
    if (roll < 40) return pvar(kVars[pick(kVars.size())], type(1));
    if (roll < 70) return pcon(ctor(), type(1));
    return papp(any_pattern(depth - 1), any_pattern(depth - 1));
  }

 private:
  const GenConfig& cfg_;
  std::mt19937_64 rng_;
};

}  // namespace

Config gen_config(const GenConfig& cfg, std::size_t index) {
  Gen g(cfg, sample_seed(cfg.seed, index));
  Config out;
  out.index = index;
  if (!cfg.well_typed) {
    out.rho = g.any_env(1);
    out.term = g.coin(75) ? g.any_exp(cfg.max_depth) : g.any_dec(cfg.max_depth);
    return out;
  }
  for (std::size_t attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    auto [rho, gamma] = g.runtime_env(2);
    auto envd = typecheck_env(rho, cfg.bias);
    if (!envd) continue;
    out.retries = attempt;
    out.rho = std::move(rho);
    out.gamma = envd.derivation->conclusion().gamma;
    out.envd = std::move(envd.derivation);
    if (g.coin(75)) {
      Typ t = g.type(cfg.max_type_depth);
      Exp e = g.exp(out.gamma, t, cfg.max_depth);
      auto typed = typecheck_exp(out.gamma, e, cfg.bias);
      if (!typed) continue;
      out.term = e;
      out.exp_typing = std::move(typed.derivation);
    } else {
      auto [d, gamma1] = g.dec(out.gamma, cfg.max_depth);
      auto typed = typecheck_dec(out.gamma, d, cfg.bias);
      if (!typed) continue;
      out.term = d;
      out.dec_typing = std::move(typed.derivation);
    }
    return out;
  }
  throw GenerationExhausted("no well-typed sample after " + std::to_string(cfg.retry_budget) + " attempts");
}

Config gen_well_typed_config(const GenConfig& cfg) {
  GenConfig c = cfg;
  c.well_typed = true;
  return gen_config(c, 0);
}

std::vector<Config> gen_corpus(const GenConfig& cfg) {
  std::vector<Config> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(gen_config(cfg, i));
  return out;
}

}  // namespace mdt::testkit
