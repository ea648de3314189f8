#include "mdt/lang/preservation.hpp"

#include <map>

#include "mdt/lang/print.hpp"

namespace mdt::lang {

using namespace rules;

namespace {

template <class Params, class D>
const Params& params_as(const D& d, const char* rule) {
  const auto* p = std::get_if<Params>(&d.params());
  if (!p) throw PreservationFailure(std::string("expected a ") + rule + " typing, got " + d.rule_name());
  return *p;
}

ExpTypingDerivation derive2(Bias bias, const std::string& rule, ExpTypingParams p,
                            std::vector<DecTypingDerivation> first = {}, std::vector<ExpTypingDerivation> second = {}) {
  return mutual::hderive<1>(typing_sig(bias), rule, std::move(p), std::move(first), std::move(second));
}

DecTypingDerivation derive1(Bias bias, const std::string& rule, DecTypingParams p,
                            std::vector<DecTypingDerivation> first = {}, std::vector<ExpTypingDerivation> second = {}) {
  return mutual::hderive<0>(typing_sig(bias), rule, std::move(p), std::move(first), std::move(second));
}

const ExpTypingDerivation& exp_premise(const auto& d, std::size_t i) { return d.node().second.at(i).witness; }
const DecTypingDerivation& dec_premise(const auto& d, std::size_t i) { return d.node().first.at(i).witness; }

void require_extends(const EnvT& wider, const EnvT& narrower) {
  for (const auto& [x, t] : narrower) {
    auto it = wider.find(x);
    if (it == wider.end() || !(it->second == t))
      throw PreservationFailure("context does not extend the typing context at " + x.name);
  }
}

template <class W>
void check_entry(const EnvTypingDerivation& envd, const W& typd, const EnvE& rho, const auto& from) {
  if (!(envd.conclusion().rho == rho)) throw PreservationFailure("environment typing is about another environment");
  if (!(envd.conclusion().gamma == typd.conclusion().gamma))
    throw PreservationFailure("environment typing and term typing use different contexts");
  if (!(typd.conclusion().term() == from)) throw PreservationFailure("typing is about another term");
}

template <class W, class D>
D finish(D out, const W& typd, const auto& to) {
  const auto& c = out.conclusion();
  if (!(c.gamma == typd.conclusion().gamma) || !(c.term() == to) || !(c.t == typd.conclusion().t))
    throw PreservationFailure("transformer produced a typing at " + to_sexpr(c.term()) + " : " + to_sexpr_typ(c.t) +
                              ", expected " + to_sexpr(to) + " : " + to_sexpr_typ(typd.conclusion().t));
  return out;
}

}  // namespace

ExpTypingDerivation retype_value(const ExpTypingDerivation& d, const EnvT& gamma, Bias bias) {
  if (const auto* p = std::get_if<TCon>(&d.params())) return derive2(bias, "T-CON", TCon{gamma, p->c, p->t});
  if (const auto* p = std::get_if<TClos>(&d.params())) {
    TClos q = *p;
    q.gamma = gamma;
    return derive2(bias, "T-CLOS", std::move(q), {}, {exp_premise(d, 0)});
  }
  if (const auto* p = std::get_if<TApp>(&d.params())) {
    TApp q = *p;
    q.gamma = gamma;
    return derive2(bias, "T-APP", std::move(q), {},
                   {retype_value(exp_premise(d, 0), gamma, bias), retype_value(exp_premise(d, 1), gamma, bias)});
  }
  throw PreservationFailure("retyping a non-value typing by " + d.rule_name());
}

ExpTypingDerivation weaken(const ExpTypingDerivation& d, const EnvT& gamma, Bias bias) {
  require_extends(gamma, d.conclusion().gamma);
  if (const auto* p = std::get_if<TVar>(&d.params())) return derive2(bias, "T-VAR", TVar{gamma, p->x});
  if (const auto* p = std::get_if<TScope>(&d.params())) {
    TScope q = *p;
    q.gamma = gamma;
    auto body = weaken(exp_premise(d, 0), merge(gamma, p->gamma1, bias), bias);
    return derive2(bias, "T-SCOPE", std::move(q), {weaken(dec_premise(d, 0), gamma, bias)}, {std::move(body)});
  }
  if (const auto* p = std::get_if<TApp>(&d.params())) {
    TApp q = *p;
    q.gamma = gamma;
    return derive2(bias, "T-APP", std::move(q), {},
                   {weaken(exp_premise(d, 0), gamma, bias), weaken(exp_premise(d, 1), gamma, bias)});
  }
  return retype_value(d, gamma, bias);
}

DecTypingDerivation weaken(const DecTypingDerivation& d, const EnvT& gamma, Bias bias) {
  require_extends(gamma, d.conclusion().gamma);
  if (const auto* p = std::get_if<TDEnv>(&d.params())) return derive1(bias, "TD-ENV", TDEnv{gamma, p->envd});
  if (const auto* p = std::get_if<TDMatch>(&d.params())) {
    return derive1(bias, "TD-MATCH", TDMatch{gamma, p->patd, p->e}, {}, {weaken(exp_premise(d, 0), gamma, bias)});
  }
  const auto& p = std::get<TDJoin>(d.params());
  TDJoin q = p;
  q.gamma = gamma;
  auto right = weaken(dec_premise(d, 1), merge(gamma, p.gamma1, bias), bias);
  return derive1(bias, "TD-JOIN", std::move(q), {weaken(dec_premise(d, 0), gamma, bias), std::move(right)});
}

EnvTypingDerivation union_env(const EnvTypingDerivation& a, const EnvTypingDerivation& b) {
  std::map<Ident, ExpTypingDerivation> entries;
  for (const auto& [x, d] : std::get<TEEnv>(b.params()).entries) entries.emplace(x, d);
  for (const auto& [x, d] : std::get<TEEnv>(a.params()).entries) entries.emplace(x, d);
  return env_typing({entries.begin(), entries.end()});
}

namespace {

void collect_match(const PatTypingDerivation& patd, const ExpTypingDerivation& vd,
                   std::map<Ident, ExpTypingDerivation>& out) {
  if (!(patd.conclusion().t == vd.conclusion().t))
    throw PreservationFailure("pattern of type " + to_sexpr_typ(patd.conclusion().t) + " matched a value of type " +
                              to_sexpr_typ(vd.conclusion().t));
  if (const auto* p = std::get_if<TPVar>(&patd.params())) {
    out.emplace(p->x, retype_value(vd, {}, vd.node().sig == typing_sig(Bias::Left) ? Bias::Left : Bias::Right));
    return;
  }
  if (std::holds_alternative<TPCon>(patd.params())) return;
  if (!std::holds_alternative<TApp>(vd.params()))
    throw PreservationFailure("pattern application matched a value typed by " + vd.rule_name());
  collect_match(patd.child(0), exp_premise(vd, 0), out);
  collect_match(patd.child(1), exp_premise(vd, 1), out);
}

}  // namespace

EnvTypingDerivation match_typing(const PatTypingDerivation& patd, const ExpTypingDerivation& vd) {
  std::map<Ident, ExpTypingDerivation> out;
  collect_match(patd, vd, out);
  return env_typing({out.begin(), out.end()});
}

TPAlgebra tp_algebra(Bias bias) {
  TPAlgebra alg;

  alg.step2 = [bias](const TPAlgebra::Rec1& rec1, const TPAlgebra::Rec2& rec2, const ExpStepIndex& w,
                     const TPAlgebra::HandleNode<1>& n) -> ExpTSafe {
    auto ih1 = n.first.empty() ? DecTSafe{} : rec1(n.first[0].index, n.first[0].witness);
    auto ih2 = n.second.empty() ? ExpTSafe{} : rec2(n.second[0].index, n.second[0].witness);
    return [bias, w, params = n.params, ih1, ih2](const EnvTypingDerivation& envd, const ExpTypingDerivation& typd) {
      check_entry(envd, typd, w.rho, w.from);
      const EnvT& gamma = typd.conclusion().gamma;
      auto out = std::visit(
          [&](const auto& r) -> ExpTypingDerivation {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, EVar>) {
              for (const auto& [x, d] : std::get<TEEnv>(envd.params()).entries)
                if (x == r.x) return retype_value(d, gamma, bias);
              throw PreservationFailure("variable " + r.x.name + " has no typed binding");
            } else if constexpr (std::is_same_v<R, EApp1>) {
              TApp q = params_as<TApp>(typd, "T-APP");
              q.fn = r.fn2;
              return derive2(bias, "T-APP", std::move(q), {}, {ih2(envd, exp_premise(typd, 0)), exp_premise(typd, 1)});
            } else if constexpr (std::is_same_v<R, EApp2>) {
              TApp q = params_as<TApp>(typd, "T-APP");
              q.arg = r.arg2;
              return derive2(bias, "T-APP", std::move(q), {}, {exp_premise(typd, 0), ih2(envd, exp_premise(typd, 1))});
            } else if constexpr (std::is_same_v<R, EBeta>) {
              params_as<TApp>(typd, "T-APP");
              const auto& fd = exp_premise(typd, 0);
              const auto& closure = params_as<TClos>(fd, "T-CLOS");
              auto inner = union_env(closure.envd, match_typing(closure.patd, exp_premise(typd, 1)));
              const EnvT gamma1 = inner.conclusion().gamma;
              auto dd = derive1(bias, "TD-ENV", TDEnv{gamma, std::move(inner)});
              auto body = weaken(exp_premise(fd, 0), merge(gamma, gamma1, bias), bias);
              TScope q{gamma, dd.conclusion().d, gamma1, r.body, body.conclusion().t};
              return derive2(bias, "T-SCOPE", std::move(q), {std::move(dd)}, {std::move(body)});
            } else if constexpr (std::is_same_v<R, EScope1>) {
              TScope q = params_as<TScope>(typd, "T-SCOPE");
              q.d = r.d2;
              return derive2(bias, "T-SCOPE", std::move(q), {ih1(envd, dec_premise(typd, 0))}, {exp_premise(typd, 0)});
            } else if constexpr (std::is_same_v<R, EScope2>) {
              TScope q = params_as<TScope>(typd, "T-SCOPE");
              const auto& dd = dec_premise(typd, 0);
              auto inner = union_env(envd, params_as<TDEnv>(dd, "TD-ENV").envd);
              auto body = ih2(inner, exp_premise(typd, 0));
              q.body = r.body2;
              return derive2(bias, "T-SCOPE", std::move(q), {dd}, {std::move(body)});
            } else {
              params_as<TScope>(typd, "T-SCOPE");
              return retype_value(exp_premise(typd, 0), gamma, bias);
            }
          },
          params);
      return finish(std::move(out), typd, w.to);
    };
  };

  alg.step1 = [bias](const TPAlgebra::Rec1& rec1, const TPAlgebra::Rec2& rec2, const DecStepIndex& w,
                     const TPAlgebra::HandleNode<0>& n) -> DecTSafe {
    auto ih1 = n.first.empty() ? DecTSafe{} : rec1(n.first[0].index, n.first[0].witness);
    auto ih2 = n.second.empty() ? ExpTSafe{} : rec2(n.second[0].index, n.second[0].witness);
    return [bias, w, params = n.params, ih1, ih2](const EnvTypingDerivation& envd, const DecTypingDerivation& typd) {
      check_entry(envd, typd, w.rho, w.from);
      const EnvT& gamma = typd.conclusion().gamma;
      auto out = std::visit(
          [&](const auto& r) -> DecTypingDerivation {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, DMatch1>) {
              TDMatch q = params_as<TDMatch>(typd, "TD-MATCH");
              q.e = r.e2;
              return derive1(bias, "TD-MATCH", std::move(q), {}, {ih2(envd, exp_premise(typd, 0))});
            } else if constexpr (std::is_same_v<R, DMatch>) {
              const auto& q = params_as<TDMatch>(typd, "TD-MATCH");
              return derive1(bias, "TD-ENV", TDEnv{gamma, match_typing(q.patd, exp_premise(typd, 0))});
            } else if constexpr (std::is_same_v<R, DJoin1>) {
              TDJoin q = params_as<TDJoin>(typd, "TD-JOIN");
              q.d1 = r.d1b;
              return derive1(bias, "TD-JOIN", std::move(q), {ih1(envd, dec_premise(typd, 0)), dec_premise(typd, 1)});
            } else if constexpr (std::is_same_v<R, DJoin2>) {
              TDJoin q = params_as<TDJoin>(typd, "TD-JOIN");
              const auto& left = dec_premise(typd, 0);
              auto inner = union_env(envd, params_as<TDEnv>(left, "TD-ENV").envd);
              q.d2 = r.d2b;
              return derive1(bias, "TD-JOIN", std::move(q), {left, ih1(inner, dec_premise(typd, 1))});
            } else {
              params_as<TDJoin>(typd, "TD-JOIN");
              const auto& e1 = params_as<TDEnv>(dec_premise(typd, 0), "TD-ENV").envd;
              const auto& e2 = params_as<TDEnv>(dec_premise(typd, 1), "TD-ENV").envd;
              return derive1(bias, "TD-ENV", TDEnv{gamma, union_env(e1, e2)});
            }
          },
          params);
      return finish(std::move(out), typd, w.to);
    };
  };

  return alg;
}

namespace {

template <class S, class T>
void check_inputs(const S& stepd, const EnvTypingDerivation& envd, const T& typd) {
  if (auto v = mutual::validate(stepd); !v) throw indexed::InvalidDerivation(v.rule, "step input: " + v.reason);
  if (auto v = indexed::validate(envd); !v) throw indexed::InvalidDerivation(v.rule, "environment input: " + v.reason);
  if (auto v = mutual::validate(typd); !v) throw indexed::InvalidDerivation(v.rule, "typing input: " + v.reason);
  if (!(envd.conclusion().rho == stepd.conclusion().rho))
    throw IncoherentIndices("environment typing and step use different environments");
  if (!(envd.conclusion().gamma == typd.conclusion().gamma))
    throw IncoherentIndices("environment typing and term typing use different contexts");
  if (!(typd.conclusion().term() == stepd.conclusion().from))
    throw IncoherentIndices("typing is not about the stepped term");
}

template <class F>
auto run_transformer(F&& f) {
  try {
    return f();
  } catch (const indexed::InvalidDerivation& e) {
    throw PreservationFailure(std::string("transformer built an invalid typing: ") + e.what());
  } catch (const indexed::WrongIndex& e) {
    throw PreservationFailure(std::string("transformer recursed at a wrong index: ") + e.what());
  }
}

template <class D>
D checked_output(D out) {
  if (auto v = mutual::validate(out); !v)
    throw PreservationFailure("output typing does not validate at rule " + v.rule + ": " + v.reason);
  return out;
}

const TPAlgebra& cached_algebra(Bias bias) {
  static const TPAlgebra right = tp_algebra(Bias::Right);
  static const TPAlgebra left = tp_algebra(Bias::Left);
  return bias == Bias::Right ? right : left;
}

}  // namespace

ExpTypingDerivation subject_reduction(const ExpStepDerivation& stepd, const EnvTypingDerivation& envd,
                                      const ExpTypingDerivation& typd, Bias bias) {
  check_inputs(stepd, envd, typd);
  return checked_output(run_transformer([&] {
    return mutual::hfold_2(cached_algebra(bias), stepd.conclusion(), stepd)(envd, typd);
  }));
}

DecTypingDerivation subject_reduction(const DecStepDerivation& stepd, const EnvTypingDerivation& envd,
                                      const DecTypingDerivation& typd, Bias bias) {
  check_inputs(stepd, envd, typd);
  return checked_output(run_transformer([&] {
    return mutual::hfold_1(cached_algebra(bias), stepd.conclusion(), stepd)(envd, typd);
  }));
}

}  // namespace mdt::lang
