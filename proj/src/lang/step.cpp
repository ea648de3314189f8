#include "mdt/lang/step.hpp"

#include "mdt/lang/values.hpp"

namespace mdt::lang {

using namespace rules;
using mutual::variant_birule;
using K1 = DecStepIndex;
using K2 = ExpStepIndex;
using K1s = std::vector<K1>;
using K2s = std::vector<K2>;

namespace {

template <class Alt>
using Side = mutual::SideCondition<Alt>;

bool matches(const Pat& p, const Exp& v) { return is_value(v) && patmatch(p, v).has_value(); }

std::vector<mutual::BiRule<StepTraits, 1>> exp_rules() {
  return {
      variant_birule<EVar, StepTraits, 1>(
          "E-VAR", nullptr, nullptr, [](const EVar& p) { return K2{p.rho, var(p.x.name), p.rho.at(p.x)}; },
          {Side<EVar>{"bound", [](const EVar& p) { return p.rho.contains(p.x); }}}),
      variant_birule<EApp1, StepTraits, 1>(
          "E-APP1", nullptr, [](const EApp1& p) { return K2s{{p.rho, p.fn, p.fn2}}; },
          [](const EApp1& p) { return K2{p.rho, app(p.fn, p.arg), app(p.fn2, p.arg)}; }),
      variant_birule<EApp2, StepTraits, 1>(
          "E-APP2", nullptr, [](const EApp2& p) { return K2s{{p.rho, p.arg, p.arg2}}; },
          [](const EApp2& p) { return K2{p.rho, app(p.fn, p.arg), app(p.fn, p.arg2)}; },
          {Side<EApp2>{"function is a value", [](const EApp2& p) { return is_value(p.fn); }}}),
      variant_birule<EBeta, StepTraits, 1>(
          "E-BETA", nullptr, nullptr,
          [](const EBeta& p) {
            return K2{p.rho, app(clos(p.rho0, p.p, p.body), p.arg),
                      scope(env(merge(p.rho0, *patmatch(p.p, p.arg))), p.body)};
          },
          {Side<EBeta>{"argument matches", [](const EBeta& p) { return matches(p.p, p.arg); }}}),
      variant_birule<EScope1, StepTraits, 1>(
          "E-SCOPE1", [](const EScope1& p) { return K1s{{p.rho, p.d, p.d2}}; }, nullptr,
          [](const EScope1& p) { return K2{p.rho, scope(p.d, p.body), scope(p.d2, p.body)}; }),
      variant_birule<EScope2, StepTraits, 1>(
          "E-SCOPE2", nullptr, [](const EScope2& p) { return K2s{{merge(p.rho, p.rho1), p.body, p.body2}}; },
          [](const EScope2& p) { return K2{p.rho, scope(env(p.rho1), p.body), scope(env(p.rho1), p.body2)}; }),
      variant_birule<EScope3, StepTraits, 1>(
          "E-SCOPE3", nullptr, nullptr, [](const EScope3& p) { return K2{p.rho, scope(env(p.rho1), p.v), p.v}; },
          {Side<EScope3>{"body is a value", [](const EScope3& p) { return is_value(p.v); }}}),
  };
}

std::vector<mutual::BiRule<StepTraits, 0>> dec_rules() {
  return {
      variant_birule<DMatch1, StepTraits, 0>(
          "D-MATCH1", nullptr, [](const DMatch1& p) { return K2s{{p.rho, p.e, p.e2}}; },
          [](const DMatch1& p) { return K1{p.rho, match(p.p, p.e), match(p.p, p.e2)}; }),
      variant_birule<DMatch, StepTraits, 0>(
          "D-MATCH", nullptr, nullptr, [](const DMatch& p) { return K1{p.rho, match(p.p, p.v), env(*patmatch(p.p, p.v))}; },
          {Side<DMatch>{"value matches", [](const DMatch& p) { return matches(p.p, p.v); }}}),
      variant_birule<DJoin1, StepTraits, 0>(
          "D-JOIN1", [](const DJoin1& p) { return K1s{{p.rho, p.d1, p.d1b}}; }, nullptr,
          [](const DJoin1& p) { return K1{p.rho, join(p.d1, p.d2), join(p.d1b, p.d2)}; }),
      variant_birule<DJoin2, StepTraits, 0>(
          "D-JOIN2", [](const DJoin2& p) { return K1s{{merge(p.rho, p.rho1), p.d2, p.d2b}}; }, nullptr,
          [](const DJoin2& p) { return K1{p.rho, join(env(p.rho1), p.d2), join(env(p.rho1), p.d2b)}; }),
      variant_birule<DJoin3, StepTraits, 0>(
          "D-JOIN3", nullptr, nullptr,
          [](const DJoin3& p) { return K1{p.rho, join(env(p.rho1), env(p.rho2)), env(merge(p.rho1, p.rho2))}; }),
  };
}

template <std::size_t F>
auto derive(const std::string& rule, mutual::ParamsOf<StepTraits, F> params, std::vector<DecStepDerivation> first = {},
            std::vector<ExpStepDerivation> second = {}) {
  return mutual::hderive<F>(step_sig(), rule, std::move(params), std::move(first), std::move(second));
}

template <class D>
auto with_successor(D d) {
  auto to = d.conclusion().to;
  return std::make_optional(std::make_pair(std::move(to), std::move(d)));
}

}  // namespace

const StepSignature& step_sig() {
  static const StepSignature sig =
      mutual::IndexedBiSignature<StepTraits>::make({"DecStep", "ExpStep"}, dec_rules(), exp_rules());
  return sig;
}

std::optional<std::pair<Exp, ExpStepDerivation>> step_exp(const EnvE& rho, const Exp& e) {
  auto v = view_exp(e);
  if (const auto* x = std::get_if<view::Var>(&v)) {
    if (!rho.contains(x->x)) return std::nullopt;
    return with_successor(derive<1>("E-VAR", EVar{rho, x->x}));
  }
  if (const auto* a = std::get_if<view::App>(&v)) {
    if (auto s = step_exp(rho, a->fn))
      return with_successor(derive<1>("E-APP1", EApp1{rho, a->fn, s->first, a->arg}, {}, {std::move(s->second)}));
    if (!is_value(a->fn)) return std::nullopt;
    if (auto s = step_exp(rho, a->arg))
      return with_successor(derive<1>("E-APP2", EApp2{rho, a->fn, a->arg, s->first}, {}, {std::move(s->second)}));
    if (!is_value(a->arg)) return std::nullopt;
    auto fv = view_exp(a->fn);
    const auto* c = std::get_if<view::Clos>(&fv);
    if (!c || !patmatch(c->p, a->arg)) return std::nullopt;
    return with_successor(derive<1>("E-BETA", EBeta{rho, c->rho, c->p, c->body, a->arg}));
  }
  if (const auto* s = std::get_if<view::Scope>(&v)) {
    if (auto ds = step_dec(rho, s->d))
      return with_successor(derive<1>("E-SCOPE1", EScope1{rho, s->d, ds->first, s->body}, {std::move(ds->second)}));
    auto dv = view_dec(s->d);
    const auto* en = std::get_if<view::EnvD>(&dv);
    if (!en) return std::nullopt;
    if (auto bs = step_exp(merge(rho, en->rho), s->body))
      return with_successor(derive<1>("E-SCOPE2", EScope2{rho, en->rho, s->body, bs->first}, {}, {std::move(bs->second)}));
    if (!is_value(s->body)) return std::nullopt;
    return with_successor(derive<1>("E-SCOPE3", EScope3{rho, en->rho, s->body}));
  }
  return std::nullopt;
}

std::optional<std::pair<Dec, DecStepDerivation>> step_dec(const EnvE& rho, const Dec& d) {
  auto v = view_dec(d);
  if (const auto* m = std::get_if<view::Match>(&v)) {
    if (auto s = step_exp(rho, m->e))
      return with_successor(derive<0>("D-MATCH1", DMatch1{rho, m->p, m->e, s->first}, {}, {std::move(s->second)}));
    if (!is_value(m->e) || !patmatch(m->p, m->e)) return std::nullopt;
    return with_successor(derive<0>("D-MATCH", DMatch{rho, m->p, m->e}));
  }
  if (const auto* j = std::get_if<view::Join>(&v)) {
    if (auto s = step_dec(rho, j->d1))
      return with_successor(derive<0>("D-JOIN1", DJoin1{rho, j->d1, s->first, j->d2}, {std::move(s->second)}));
    auto lv = view_dec(j->d1);
    const auto* left = std::get_if<view::EnvD>(&lv);
    if (!left) return std::nullopt;
    if (auto s = step_dec(merge(rho, left->rho), j->d2))
      return with_successor(derive<0>("D-JOIN2", DJoin2{rho, left->rho, j->d2, s->first}, {std::move(s->second)}));
    auto rv = view_dec(j->d2);
    const auto* right = std::get_if<view::EnvD>(&rv);
    if (!right) return std::nullopt;
    return with_successor(derive<0>("D-JOIN3", DJoin3{rho, left->rho, right->rho}));
  }
  return std::nullopt;
}

}  // namespace mdt::lang
