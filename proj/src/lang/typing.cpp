#include "mdt/lang/typing.hpp"

#include "mdt/lang/print.hpp"
#include "mdt/lang/values.hpp"

namespace mdt::lang {

using namespace rules;
using indexed::variant_rule;
using mutual::variant_birule;
using K1s = std::vector<DecTyping>;
using K2s = std::vector<ExpTyping>;

namespace {

template <class Alt>
using Side = indexed::SideCondition<Alt>;

bool disjoint(const EnvT& a, const EnvT& b) {
  for (const auto& kv : a)
    if (b.contains(kv.first)) return false;
  return true;
}

const EnvT& gamma_of(const EnvTypingDerivation& d) { return d.conclusion().gamma; }
const EnvE& rho_of(const EnvTypingDerivation& d) { return d.conclusion().rho; }
const Pat& pat_of(const PatTypingDerivation& d) { return d.conclusion().p; }
const Typ& typ_of(const PatTypingDerivation& d) { return d.conclusion().t; }

std::vector<mutual::BiRule<TypingTraits, 1>> exp_rules(Bias bias) {
  return {
      variant_birule<TVar, TypingTraits, 1>(
          "T-VAR", nullptr, nullptr, [](const TVar& p) { return ExpTyping{p.gamma, var(p.x.name), p.gamma.at(p.x)}; },
          {Side<TVar>{"bound", [](const TVar& p) { return p.gamma.contains(p.x); }}}),
      variant_birule<TCon, TypingTraits, 1>(
          "T-CON", nullptr, nullptr, [](const TCon& p) { return ExpTyping{p.gamma, con(p.c.name, p.t), p.t}; }),
      variant_birule<TClos, TypingTraits, 1>(
          "T-CLOS", nullptr,
          [bias](const TClos& p) {
            return K2s{{merge(gamma_of(p.envd), bindings(pat_of(p.patd)), bias), p.body, p.to}};
          },
          [](const TClos& p) {
            return ExpTyping{p.gamma, clos(rho_of(p.envd), pat_of(p.patd), p.body), arrow(typ_of(p.patd), p.to)};
          },
          {Side<TClos>{"environment typing holds", [](const TClos& p) { return bool(indexed::validate(p.envd)); }},
           Side<TClos>{"pattern typing holds", [](const TClos& p) { return bool(indexed::validate(p.patd)); }},
           Side<TClos>{"linear pattern", [](const TClos& p) { return is_linear(pat_of(p.patd)); }}}),
      variant_birule<TApp, TypingTraits, 1>(
          "T-APP", nullptr, [](const TApp& p) { return K2s{{p.gamma, p.fn, arrow(p.from, p.to)}, {p.gamma, p.arg, p.from}}; },
          [](const TApp& p) { return ExpTyping{p.gamma, app(p.fn, p.arg), p.to}; }),
      variant_birule<TScope, TypingTraits, 1>(
          "T-SCOPE", [](const TScope& p) { return K1s{{p.gamma, p.d, tenv(p.gamma1)}}; },
          [bias](const TScope& p) { return K2s{{merge(p.gamma, p.gamma1, bias), p.body, p.t}}; },
          [](const TScope& p) { return ExpTyping{p.gamma, scope(p.d, p.body), p.t}; }),
  };
}

std::vector<mutual::BiRule<TypingTraits, 0>> dec_rules(Bias bias) {
  return {
      variant_birule<TDEnv, TypingTraits, 0>(
          "TD-ENV", nullptr, nullptr,
          [](const TDEnv& p) { return DecTyping{p.gamma, env(rho_of(p.envd)), tenv(gamma_of(p.envd))}; },
          {Side<TDEnv>{"environment typing holds", [](const TDEnv& p) { return bool(indexed::validate(p.envd)); }}}),
      variant_birule<TDMatch, TypingTraits, 0>(
          "TD-MATCH", nullptr, [](const TDMatch& p) { return K2s{{p.gamma, p.e, typ_of(p.patd)}}; },
          [](const TDMatch& p) { return DecTyping{p.gamma, match(pat_of(p.patd), p.e), tenv(bindings(pat_of(p.patd)))}; },
          {Side<TDMatch>{"pattern typing holds", [](const TDMatch& p) { return bool(indexed::validate(p.patd)); }},
           Side<TDMatch>{"linear pattern", [](const TDMatch& p) { return is_linear(pat_of(p.patd)); }}}),
      variant_birule<TDJoin, TypingTraits, 0>(
          "TD-JOIN",
          [bias](const TDJoin& p) {
            return K1s{{p.gamma, p.d1, tenv(p.gamma1)}, {merge(p.gamma, p.gamma1, bias), p.d2, tenv(p.gamma2)}};
          },
          nullptr,
          [bias](const TDJoin& p) { return DecTyping{p.gamma, join(p.d1, p.d2), tenv(merge(p.gamma1, p.gamma2, bias))}; }),
  };
}

}  // namespace

const PatTypingSignature& pat_typing_sig() {
  using R = indexed::Rule<PatTyping, PatTypingParams>;
  static const PatTypingSignature sig = indexed::Signature<PatTyping, PatTypingParams>::make(
      "TypOPat",
      std::vector<R>{
          variant_rule<TPVar, PatTyping, PatTypingParams>(
              "TP-VAR", nullptr, [](const TPVar& p) { return PatTyping{pvar(p.x.name, p.t), p.t}; }),
          variant_rule<TPCon, PatTyping, PatTypingParams>(
              "TP-CON", nullptr, [](const TPCon& p) { return PatTyping{pcon(p.c.name, p.t), p.t}; }),
          variant_rule<TPApp, PatTyping, PatTypingParams>(
              "TP-APP",
              [](const TPApp& p) { return std::vector<PatTyping>{{p.head, arrow(p.from, p.to)}, {p.arg, p.from}}; },
              [](const TPApp& p) { return PatTyping{papp(p.head, p.arg), p.to}; },
              {Side<TPApp>{"constructor-headed", [](const TPApp& p) { return is_constructor_headed(p.head); }},
               Side<TPApp>{"disjoint variables",
                           [](const TPApp& p) {
                             return is_linear(p.head) && is_linear(p.arg) && disjoint(bindings(p.head), bindings(p.arg));
                           }}}),
      });
  return sig;
}

const EnvTypingSignature& env_typing_sig() {
  static const EnvTypingSignature sig = indexed::Signature<EnvTyping, EnvTypingParams>::make(
      "TypOEnv",
      {variant_rule<TEEnv, EnvTyping, EnvTypingParams>(
          "TE-ENV", nullptr,
          [](const TEEnv& p) {
            EnvTyping w;
            for (const auto& [x, d] : p.entries) {
              w.rho.emplace(x, d.conclusion().e);
              w.gamma.emplace(x, d.conclusion().t);
            }
            return w;
          },
          {Side<TEEnv>{"keys ascending",
                       [](const TEEnv& p) {
                         for (std::size_t i = 1; i < p.entries.size(); ++i)
                           if (!(p.entries[i - 1].first < p.entries[i].first)) return false;
                         return true;
                       }},
           Side<TEEnv>{"closed value typings", [](const TEEnv& p) {
                         for (const auto& [x, d] : p.entries) {
                           const auto& w = d.conclusion();
                           if (!w.gamma.empty() || !is_value(w.e) || !mutual::validate(d)) return false;
                         }
                         return true;
                       }}})});
  return sig;
}

const TypingSignature& typing_sig(Bias bias) {
  static const TypingSignature right =
      mutual::IndexedBiSignature<TypingTraits>::make({"TypODec", "TypOExp"}, dec_rules(Bias::Right), exp_rules(Bias::Right));
  static const TypingSignature left =
      mutual::IndexedBiSignature<TypingTraits>::make({"TypODec", "TypOExp"}, dec_rules(Bias::Left), exp_rules(Bias::Left));
  return bias == Bias::Right ? right : left;
}

EnvTypingDerivation env_typing(std::vector<std::pair<Ident, ExpTypingDerivation>> entries) {
  return indexed::derive(env_typing_sig(), "TE-ENV", EnvTypingParams{TEEnv{std::move(entries)}});
}

std::string TypeError::to_string() const {
  std::string out;
  for (const auto& p : path) out += p + ": ";
  return out + message;
}

namespace {

struct Failure {
  TypeError error;
};

[[noreturn]] void fail(std::string message) { throw Failure{{{}, std::move(message)}}; }

template <class F>
auto at(const char* where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (Failure& e) {
    e.error.path.insert(e.error.path.begin(), where);
    throw;
  }
}

class Checker {
 public:
  explicit Checker(Bias bias) : bias_(bias), sig_(typing_sig(bias)) {}

  PatTypingDerivation pat(const Pat& p) const {
    auto v = view_pat(p);
    if (const auto* x = std::get_if<view::PVar>(&v))
      return indexed::derive(pat_typing_sig(), "TP-VAR", PatTypingParams{TPVar{x->x, x->t}});
    if (const auto* c = std::get_if<view::PCon>(&v))
      return indexed::derive(pat_typing_sig(), "TP-CON", PatTypingParams{TPCon{c->c, c->t}});
    const auto& a = std::get<view::PApp>(v);
    if (!is_constructor_headed(a.head)) fail("pattern application needs a constructor head: " + to_sexpr_pat(p));
    if (!is_linear(p)) fail("pattern binds a variable twice: " + to_sexpr_pat(p));
    auto hd = at("papp.head", [&] { return pat(a.head); });
    auto ad = at("papp.arg", [&] { return pat(a.arg); });
    auto hv = view_typ(hd.conclusion().t);
    const auto* fn = std::get_if<view::Arrow>(&hv);
    if (!fn) fail("pattern head has non-function type " + to_sexpr_typ(hd.conclusion().t));
    if (!(fn->from == ad.conclusion().t))
      fail("pattern argument has type " + to_sexpr_typ(ad.conclusion().t) + ", expected " + to_sexpr_typ(fn->from));
    return indexed::derive(pat_typing_sig(), "TP-APP", PatTypingParams{TPApp{a.head, a.arg, fn->from, fn->to}},
                           {std::move(hd), std::move(ad)});
  }

  EnvTypingDerivation environment(const EnvE& rho) const {
    std::vector<std::pair<Ident, ExpTypingDerivation>> entries;
    for (const auto& [x, e] : rho) {
      if (!is_value(e)) throw NotAValue("environment entry " + x.name + " is not a value: " + to_sexpr(e));
      entries.emplace_back(x, at(x.name.c_str(), [&] { return exp({}, e); }));
    }
    return env_typing(std::move(entries));
  }

  EnvTypingDerivation environment_in_term(const EnvE& rho) const {
    try {
      return environment(rho);
    } catch (const NotAValue& e) {
      fail(e.what());
    }
  }

  ExpTypingDerivation exp(const EnvT& gamma, const Exp& e) const {
    auto v = view_exp(e);
    if (const auto* x = std::get_if<view::Var>(&v)) {
      if (!gamma.contains(x->x)) fail("unbound variable " + x->x.name);
      return derive2("T-VAR", TVar{gamma, x->x});
    }
    if (const auto* c = std::get_if<view::Con>(&v)) return derive2("T-CON", TCon{gamma, c->c, c->t});
    if (const auto* c = std::get_if<view::Clos>(&v)) {
      auto envd = at("clos.env", [&] { return environment_in_term(c->rho); });
      auto patd = at("clos.pat", [&] { return pat(c->p); });
      auto inner = merge(envd.conclusion().gamma, bindings(c->p), bias_);
      auto bd = at("clos.body", [&] { return exp(inner, c->body); });
      auto to = bd.conclusion().t;
      return derive2("T-CLOS", TClos{gamma, std::move(envd), std::move(patd), c->body, std::move(to)}, {}, {std::move(bd)});
    }
    if (const auto* a = std::get_if<view::App>(&v)) {
      auto fd = at("app.fn", [&] { return exp(gamma, a->fn); });
      auto ad = at("app.arg", [&] { return exp(gamma, a->arg); });
      auto fv = view_typ(fd.conclusion().t);
      const auto* fn = std::get_if<view::Arrow>(&fv);
      if (!fn) fail("applying a value of non-function type " + to_sexpr_typ(fd.conclusion().t));
      if (!(fn->from == ad.conclusion().t))
        fail("argument has type " + to_sexpr_typ(ad.conclusion().t) + ", expected " + to_sexpr_typ(fn->from));
      return derive2("T-APP", TApp{gamma, a->fn, a->arg, fn->from, fn->to}, {}, {std::move(fd), std::move(ad)});
    }
    const auto& s = std::get<view::Scope>(v);
    auto dd = at("scope.dec", [&] { return dec(gamma, s.d); });
    auto gamma1 = std::get<view::TEnv>(view_typ(dd.conclusion().t)).gamma;
    auto bd = at("scope.body", [&] { return exp(merge(gamma, gamma1, bias_), s.body); });
    auto t = bd.conclusion().t;
    return derive2("T-SCOPE", TScope{gamma, s.d, std::move(gamma1), s.body, std::move(t)}, {std::move(dd)},
                   {std::move(bd)});
  }

  DecTypingDerivation dec(const EnvT& gamma, const Dec& d) const {
    auto v = view_dec(d);
    if (const auto* en = std::get_if<view::EnvD>(&v)) {
      auto envd = at("env", [&] { return environment_in_term(en->rho); });
      return derive1("TD-ENV", TDEnv{gamma, std::move(envd)});
    }
    if (const auto* m = std::get_if<view::Match>(&v)) {
      auto patd = at("match.pat", [&] { return pat(m->p); });
      auto ed = at("match.exp", [&] { return exp(gamma, m->e); });
      if (!(ed.conclusion().t == patd.conclusion().t))
        fail("matched expression has type " + to_sexpr_typ(ed.conclusion().t) + ", pattern expects " +
             to_sexpr_typ(patd.conclusion().t));
      return derive1("TD-MATCH", TDMatch{gamma, std::move(patd), m->e}, {}, {std::move(ed)});
    }
    const auto& j = std::get<view::Join>(v);
    auto d1 = at("join.left", [&] { return dec(gamma, j.d1); });
    auto g1 = std::get<view::TEnv>(view_typ(d1.conclusion().t)).gamma;
    auto d2 = at("join.right", [&] { return dec(merge(gamma, g1, bias_), j.d2); });
    auto g2 = std::get<view::TEnv>(view_typ(d2.conclusion().t)).gamma;
    return derive1("TD-JOIN", TDJoin{gamma, j.d1, std::move(g1), j.d2, std::move(g2)}, {std::move(d1), std::move(d2)});
  }

 private:
  ExpTypingDerivation derive2(const std::string& rule, ExpTypingParams p, std::vector<DecTypingDerivation> first = {},
                              std::vector<ExpTypingDerivation> second = {}) const {
    return mutual::hderive<1>(sig_, rule, std::move(p), std::move(first), std::move(second));
  }
  DecTypingDerivation derive1(const std::string& rule, DecTypingParams p, std::vector<DecTypingDerivation> first = {},
                              std::vector<ExpTypingDerivation> second = {}) const {
    return mutual::hderive<0>(sig_, rule, std::move(p), std::move(first), std::move(second));
  }

  Bias bias_;
  TypingSignature sig_;
};

template <class D, class F>
Checked<D> checked(F&& f) {
  try {
    return {f(), {}};
  } catch (const Failure& e) {
    return {std::nullopt, e.error};
  }
}

}  // namespace

Checked<ExpTypingDerivation> typecheck_exp(const EnvT& gamma, const Exp& e, Bias bias) {
  return checked<ExpTypingDerivation>([&] { return Checker(bias).exp(gamma, e); });
}

Checked<DecTypingDerivation> typecheck_dec(const EnvT& gamma, const Dec& d, Bias bias) {
  return checked<DecTypingDerivation>([&] { return Checker(bias).dec(gamma, d); });
}

Checked<PatTypingDerivation> typecheck_pat(const Pat& p) {
  return checked<PatTypingDerivation>([&] { return Checker(Bias::Right).pat(p); });
}

Checked<EnvTypingDerivation> typecheck_env(const EnvE& rho, Bias bias) {
  return checked<EnvTypingDerivation>([&] { return Checker(bias).environment(rho); });
}

}  // namespace mdt::lang
