#pragma once

// Abstract syntax of L.
//
//   Typ ::= ty(a) | arrow(Typ, Typ) | tenv(Env^T)
//   Pat ::= pvar(x, Typ) | pcon(c, Typ) | papp(Pat, Pat)
//   Dec ::= env(Env^E) | match(Pat, Exp) | join(Dec, Dec)
//   Exp ::= var(x) | con(c, Typ) | clos(Env^E, Pat, Exp) | app(Exp, Exp) | scope(Dec, Exp)
//
// Typ and Pat are ordinary terms; Dec and Exp are the two sorts of one
// mutual fixpoint. Types and patterns occur in Dec/Exp as term payloads.

#include <map>
#include <string>
#include <variant>

#include "mdt/kernel/term.hpp"
#include "mdt/mutual/biterm.hpp"

namespace mdt::lang {

using kernel::Ident;
using kernel::TypeIdent;

using Typ = kernel::Term;
using Pat = kernel::Term;
using Dec = mutual::BiTerm;
using Exp = mutual::BiTerm;

template <class A>
using Env = std::map<Ident, A>;
using EnvE = Env<Exp>;
using EnvT = Env<Typ>;

const kernel::SignatureRef& typ_sig();
const kernel::SignatureRef& pat_sig();
/// First component Dec, second component Exp.
const mutual::BiSignatureRef& syntax_sig();

Ident id(std::string name);

Typ ty(std::string name);
Typ arrow(Typ from, Typ to);
Typ tenv(const EnvT& gamma);

Pat pvar(std::string x, Typ t);
Pat pcon(std::string c, Typ t);
Pat papp(Pat head, Pat arg);

Exp var(std::string x);
Exp con(std::string c, Typ t);
Exp clos(const EnvE& rho, Pat p, Exp body);
Exp app(Exp fn, Exp arg);
Exp scope(Dec d, Exp body);

Dec env(const EnvE& rho);
Dec match(Pat p, Exp e);
Dec join(Dec d1, Dec d2);

bool is_dec(const mutual::BiTerm& t);
bool is_exp(const mutual::BiTerm& t);

namespace view {

struct Ty { TypeIdent a; };
struct Arrow { Typ from, to; };
struct TEnv { EnvT gamma; };
using TypView = std::variant<Ty, Arrow, TEnv>;

struct PVar { Ident x; Typ t; };
struct PCon { Ident c; Typ t; };
struct PApp { Pat head, arg; };
using PatView = std::variant<PVar, PCon, PApp>;

struct Var { Ident x; };
struct Con { Ident c; Typ t; };
struct Clos { EnvE rho; Pat p; Exp body; };
struct App { Exp fn, arg; };
struct Scope { Dec d; Exp body; };
using ExpView = std::variant<Var, Con, Clos, App, Scope>;

struct EnvD { EnvE rho; };
struct Match { Pat p; Exp e; };
struct Join { Dec d1, d2; };
using DecView = std::variant<EnvD, Match, Join>;

}  // namespace view

view::TypView view_typ(const Typ& t);
view::PatView view_pat(const Pat& p);
view::ExpView view_exp(const Exp& e);
view::DecView view_dec(const Dec& d);

/// Which way ⊕ resolves a key bound on both sides.
enum class Bias { Right, Left };

/// Finite-map union; with Bias::Right the right operand wins on overlap.
template <class A>
Env<A> merge(const Env<A>& a, const Env<A>& b, Bias bias = Bias::Right) {
  Env<A> out = bias == Bias::Right ? b : a;
  for (const auto& kv : bias == Bias::Right ? a : b) out.insert(kv);
  return out;
}

}  // namespace mdt::lang
