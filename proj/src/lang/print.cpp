#include "mdt/lang/print.hpp"

namespace mdt::lang {

using sexpr::ParseError;
using sexpr::Sexp;

namespace {

template <class A, class F>
std::string env_sexpr(const Env<A>& env, F&& show) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : env) {
    if (!first) out += ' ';
    first = false;
    out += "(" + k.name + " " + show(v) + ")";
  }
  return out + ")";
}

template <class A, class F>
Env<A> env_from_sexp(const Sexp& s, F&& read) {
  if (!s.is_list) throw ParseError("expected an environment list, got " + s.to_string());
  Env<A> out;
  for (const auto& entry : s.items) {
    if (!entry.is_list || entry.items.size() != 2) throw ParseError("expected (name value), got " + entry.to_string());
    Ident k{sexpr::expect_symbol(entry.items[0], "identifier")};
    if (!out.emplace(k, read(entry.items[1])).second) throw ParseError("duplicate binding for " + k.name);
  }
  return out;
}

Ident ident_of(const Sexp& s) { return Ident{sexpr::expect_symbol(s, "identifier")}; }

Exp exp_of(const Sexp& s) {
  auto t = term_from_sexp(s);
  if (!is_exp(t)) throw ParseError("expected an expression, got " + s.to_string());
  return t;
}

Dec dec_of(const Sexp& s) {
  auto t = term_from_sexp(s);
  if (!is_dec(t)) throw ParseError("expected a declaration, got " + s.to_string());
  return t;
}

}  // namespace

std::string to_sexpr_typ(const Typ& t) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, view::Ty>) return "(ty " + v.a.name + ")";
        else if constexpr (std::is_same_v<V, view::Arrow>) return "(arrow " + to_sexpr_typ(v.from) + " " + to_sexpr_typ(v.to) + ")";
        else return "(tenv " + to_sexpr(v.gamma) + ")";
      },
      view_typ(t));
}

std::string to_sexpr_pat(const Pat& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, view::PVar>) return "(pvar " + v.x.name + " " + to_sexpr_typ(v.t) + ")";
        else if constexpr (std::is_same_v<V, view::PCon>) return "(pcon " + v.c.name + " " + to_sexpr_typ(v.t) + ")";
        else return "(papp " + to_sexpr_pat(v.head) + " " + to_sexpr_pat(v.arg) + ")";
      },
      view_pat(p));
}

std::string to_sexpr(const mutual::BiTerm& t) {
  if (is_dec(t)) {
    return std::visit(
        [](const auto& v) -> std::string {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, view::EnvD>) return "(env " + to_sexpr(v.rho) + ")";
          else if constexpr (std::is_same_v<V, view::Match>) return "(match " + to_sexpr_pat(v.p) + " " + to_sexpr(v.e) + ")";
          else return "(join " + to_sexpr(v.d1) + " " + to_sexpr(v.d2) + ")";
        },
        view_dec(t));
  }
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, view::Var>) return "(var " + v.x.name + ")";
        else if constexpr (std::is_same_v<V, view::Con>) return "(con " + v.c.name + " " + to_sexpr_typ(v.t) + ")";
        else if constexpr (std::is_same_v<V, view::Clos>)
          return "(clos " + to_sexpr(v.rho) + " " + to_sexpr_pat(v.p) + " " + to_sexpr(v.body) + ")";
        else if constexpr (std::is_same_v<V, view::App>) return "(app " + to_sexpr(v.fn) + " " + to_sexpr(v.arg) + ")";
        else return "(scope " + to_sexpr(v.d) + " " + to_sexpr(v.body) + ")";
      },
      view_exp(t));
}

std::string to_sexpr(const EnvT& gamma) { return env_sexpr(gamma, [](const Typ& t) { return to_sexpr_typ(t); }); }
std::string to_sexpr(const EnvE& rho) { return env_sexpr(rho, [](const Exp& e) { return to_sexpr(e); }); }

Typ typ_from_sexp(const Sexp& s) {
  auto head = s.head();
  if (head == "ty") {
    sexpr::expect_form(s, "ty", 1);
    return ty(sexpr::expect_symbol(s.items[1], "type name"));
  }
  if (head == "arrow") {
    sexpr::expect_form(s, "arrow", 2);
    return arrow(typ_from_sexp(s.items[1]), typ_from_sexp(s.items[2]));
  }
  if (head == "tenv") {
    sexpr::expect_form(s, "tenv", 1);
    return tenv(env_from_sexp<Typ>(s.items[1], typ_from_sexp));
  }
  throw ParseError("expected a type, got " + s.to_string());
}

Pat pat_from_sexp(const Sexp& s) {
  auto head = s.head();
  if (head == "pvar" || head == "pcon") {
    sexpr::expect_form(s, *head, 2);
    auto x = sexpr::expect_symbol(s.items[1], "identifier");
    auto t = typ_from_sexp(s.items[2]);
    return head == "pvar" ? pvar(x, t) : pcon(x, t);
  }
  if (head == "papp") {
    sexpr::expect_form(s, "papp", 2);
    return papp(pat_from_sexp(s.items[1]), pat_from_sexp(s.items[2]));
  }
  throw ParseError("expected a pattern, got " + s.to_string());
}

mutual::BiTerm term_from_sexp(const Sexp& s) {
  auto head = s.head();
  if (!head) throw ParseError("expected a term, got " + s.to_string());
  if (*head == "var") {
    sexpr::expect_form(s, "var", 1);
    return var(ident_of(s.items[1]).name);
  }
  if (*head == "con") {
    sexpr::expect_form(s, "con", 2);
    return con(ident_of(s.items[1]).name, typ_from_sexp(s.items[2]));
  }
  if (*head == "clos") {
    sexpr::expect_form(s, "clos", 3);
    return clos(env_from_sexp<Exp>(s.items[1], exp_of), pat_from_sexp(s.items[2]), exp_of(s.items[3]));
  }
  if (*head == "app") {
    sexpr::expect_form(s, "app", 2);
    return app(exp_of(s.items[1]), exp_of(s.items[2]));
  }
  if (*head == "scope") {
    sexpr::expect_form(s, "scope", 2);
    return scope(dec_of(s.items[1]), exp_of(s.items[2]));
  }
  if (*head == "env") {
    sexpr::expect_form(s, "env", 1);
    return env(env_from_sexp<Exp>(s.items[1], exp_of));
  }
  if (*head == "match") {
    sexpr::expect_form(s, "match", 2);
    return match(pat_from_sexp(s.items[1]), exp_of(s.items[2]));
  }
  if (*head == "join") {
    sexpr::expect_form(s, "join", 2);
    return join(dec_of(s.items[1]), dec_of(s.items[2]));
  }
  throw ParseError("unknown form (" + std::string(*head) + " ...)");
}

Typ parse_typ(std::string_view text) { return typ_from_sexp(sexpr::parse(text)); }
Pat parse_pat(std::string_view text) { return pat_from_sexp(sexpr::parse(text)); }
Exp parse_exp(std::string_view text) { return exp_of(sexpr::parse(text)); }
Dec parse_dec(std::string_view text) { return dec_of(sexpr::parse(text)); }
mutual::BiTerm parse_term(std::string_view text) { return term_from_sexp(sexpr::parse(text)); }
EnvT parse_env_t(std::string_view text) { return env_from_sexp<Typ>(sexpr::parse(text), typ_from_sexp); }
EnvE parse_env_e(std::string_view text) { return env_from_sexp<Exp>(sexpr::parse(text), exp_of); }

}  // namespace mdt::lang
