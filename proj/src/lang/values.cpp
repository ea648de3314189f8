#include "mdt/lang/values.hpp"

#include "mdt/lang/print.hpp"

namespace mdt::lang {

bool is_data_value(const Exp& e) {
  auto v = view_exp(e);
  if (std::holds_alternative<view::Con>(v)) return true;
  if (const auto* a = std::get_if<view::App>(&v)) return is_data_value(a->fn) && is_value(a->arg);
  return false;
}

bool is_value(const Exp& e) {
  return std::holds_alternative<view::Clos>(view_exp(e)) || is_data_value(e);
}

namespace {

std::optional<EnvE> match_value(const Pat& p, const Exp& v) {
  auto pv = view_pat(p);
  if (const auto* x = std::get_if<view::PVar>(&pv)) return EnvE{{x->x, v}};
  if (const auto* c = std::get_if<view::PCon>(&pv)) {
    auto ev = view_exp(v);
    const auto* k = std::get_if<view::Con>(&ev);
    if (k && k->c == c->c && k->t == c->t) return EnvE{};
    return std::nullopt;
  }
  const auto& pa = std::get<view::PApp>(pv);
  auto ev = view_exp(v);
  const auto* a = std::get_if<view::App>(&ev);
  if (!a || !is_data_value(v)) return std::nullopt;
  auto left = match_value(pa.head, a->fn);
  if (!left) return std::nullopt;
  auto right = match_value(pa.arg, a->arg);
  if (!right) return std::nullopt;
  for (auto& kv : *right)
    if (!left->insert(kv).second) return std::nullopt;
  return left;
}

void collect(const Pat& p, EnvT& out) {
  auto pv = view_pat(p);
  if (const auto* x = std::get_if<view::PVar>(&pv)) {
    if (!out.emplace(x->x, x->t).second) throw DuplicateBinding("pattern binds " + x->x.name + " twice");
  } else if (const auto* a = std::get_if<view::PApp>(&pv)) {
    collect(a->head, out);
    collect(a->arg, out);
  }
}

}  // namespace

std::optional<EnvE> patmatch(const Pat& p, const Exp& v) {
  if (!is_value(v)) throw NotAValue("patmatch on a non-value: " + to_sexpr(v));
  return match_value(p, v);
}

EnvT bindings(const Pat& p) {
  EnvT out;
  collect(p, out);
  return out;
}

bool is_linear(const Pat& p) {
  try {
    bindings(p);
    return true;
  } catch (const DuplicateBinding&) {
    return false;
  }
}

bool is_constructor_headed(const Pat& p) {
  auto pv = view_pat(p);
  if (std::holds_alternative<view::PCon>(pv)) return true;
  if (const auto* a = std::get_if<view::PApp>(&pv)) return is_constructor_headed(a->head);
  return false;
}

}  // namespace mdt::lang
