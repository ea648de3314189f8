#include "mdt/lang/syntax.hpp"

namespace mdt::lang {

using kernel::Constructor;
using kernel::KeyList;
using kernel::Node;
using kernel::PayloadKind;
using kernel::Slot;
using mutual::Component;

const kernel::SignatureRef& typ_sig() {
  static const auto sig = kernel::Signature::make(
      "Typ", {Constructor{"ty", {Slot::of(PayloadKind::TypeIdent)}}, Constructor{"arrow", {Slot::rec(), Slot::rec()}},
              Constructor{"tenv", {Slot::rec_env()}}});
  return sig;
}

const kernel::SignatureRef& pat_sig() {
  static const auto sig = kernel::Signature::make(
      "Pat", {Constructor{"pvar", {Slot::of(PayloadKind::Ident), Slot::term(typ_sig())}},
              Constructor{"pcon", {Slot::of(PayloadKind::Ident), Slot::term(typ_sig())}},
              Constructor{"papp", {Slot::rec(), Slot::rec()}}});
  return sig;
}

const mutual::BiSignatureRef& syntax_sig() {
  static const auto sig = [] {
    auto dec = kernel::Signature::make(
        "Dec", {Constructor{"env", {Slot::rec_env(1)}},
                Constructor{"match", {Slot::term(pat_sig()), Slot::rec(1)}},
                Constructor{"join", {Slot::rec(0), Slot::rec(0)}}});
    auto exp = kernel::Signature::make(
        "Exp", {Constructor{"var", {Slot::of(PayloadKind::Ident)}},
                Constructor{"con", {Slot::of(PayloadKind::Ident), Slot::term(typ_sig())}},
                Constructor{"clos", {Slot::rec_env(1), Slot::term(pat_sig()), Slot::rec(1)}},
                Constructor{"app", {Slot::rec(1), Slot::rec(1)}},
                Constructor{"scope", {Slot::rec(0), Slot::rec(1)}}});
    return mutual::BiSignature::make(std::move(dec), std::move(exp));
  }();
  return sig;
}

Ident id(std::string name) { return Ident{std::move(name)}; }

namespace {

template <class A>
std::pair<KeyList, std::vector<A>> split_env(const Env<A>& env) {
  std::pair<KeyList, std::vector<A>> out;
  for (const auto& [k, v] : env) {
    out.first.push_back(k);
    out.second.push_back(v);
  }
  return out;
}

template <class A>
Env<A> zip_env(const KeyList& keys, const std::vector<A>& values, std::size_t offset = 0) {
  Env<A> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], values.at(offset + i));
  return out;
}

kernel::Term make(const kernel::SignatureRef& sig, std::string_view ctor, std::vector<kernel::Term> rec,
                  std::vector<kernel::Payload> payload = {}) {
  return kernel::in_(kernel::make_node(sig, ctor, std::move(rec), std::move(payload)));
}

mutual::BiTerm make_bi(Component c, std::string_view ctor, std::vector<mutual::BiTerm> first,
                       std::vector<mutual::BiTerm> second, std::vector<kernel::Payload> payload = {}) {
  return mutual::bin(mutual::make_binode(syntax_sig(), c, ctor, std::move(first), std::move(second), std::move(payload)));
}

}  // namespace

Typ ty(std::string name) { return make(typ_sig(), "ty", {}, {TypeIdent{std::move(name)}}); }
Typ arrow(Typ from, Typ to) { return make(typ_sig(), "arrow", {std::move(from), std::move(to)}); }
Typ tenv(const EnvT& gamma) {
  auto [keys, types] = split_env(gamma);
  return make(typ_sig(), "tenv", std::move(types), {std::move(keys)});
}

Pat pvar(std::string x, Typ t) { return make(pat_sig(), "pvar", {}, {Ident{std::move(x)}, std::move(t)}); }
Pat pcon(std::string c, Typ t) { return make(pat_sig(), "pcon", {}, {Ident{std::move(c)}, std::move(t)}); }
Pat papp(Pat head, Pat arg) { return make(pat_sig(), "papp", {std::move(head), std::move(arg)}); }

Exp var(std::string x) { return make_bi(Component::Second, "var", {}, {}, {Ident{std::move(x)}}); }
Exp con(std::string c, Typ t) { return make_bi(Component::Second, "con", {}, {}, {Ident{std::move(c)}, std::move(t)}); }
Exp clos(const EnvE& rho, Pat p, Exp body) {
  auto [keys, values] = split_env(rho);
  values.push_back(std::move(body));
  return make_bi(Component::Second, "clos", {}, std::move(values), {std::move(keys), std::move(p)});
}
Exp app(Exp fn, Exp arg) { return make_bi(Component::Second, "app", {}, {std::move(fn), std::move(arg)}); }
Exp scope(Dec d, Exp body) { return make_bi(Component::Second, "scope", {std::move(d)}, {std::move(body)}); }

Dec env(const EnvE& rho) {
  auto [keys, values] = split_env(rho);
  return make_bi(Component::First, "env", {}, std::move(values), {std::move(keys)});
}
Dec match(Pat p, Exp e) { return make_bi(Component::First, "match", {}, {std::move(e)}, {std::move(p)}); }
Dec join(Dec d1, Dec d2) { return make_bi(Component::First, "join", {std::move(d1), std::move(d2)}, {}); }

bool is_dec(const mutual::BiTerm& t) { return t.node().sig == syntax_sig() && t.which() == Component::First; }
bool is_exp(const mutual::BiTerm& t) { return t.node().sig == syntax_sig() && t.which() == Component::Second; }

view::TypView view_typ(const Typ& t) {
  const auto& n = t.node();
  if (n.sig != typ_sig()) throw kernel::MalformedNode("not a type");
  switch (n.ctor) {
    case 0: return view::Ty{std::get<TypeIdent>(n.payload[0])};
    case 1: return view::Arrow{n.rec[0], n.rec[1]};
    default: return view::TEnv{zip_env(std::get<KeyList>(n.payload[0]), n.rec)};
  }
}

view::PatView view_pat(const Pat& p) {
  const auto& n = p.node();
  if (n.sig != pat_sig()) throw kernel::MalformedNode("not a pattern");
  switch (n.ctor) {
    case 0: return view::PVar{std::get<Ident>(n.payload[0]), std::get<kernel::Term>(n.payload[1])};
    case 1: return view::PCon{std::get<Ident>(n.payload[0]), std::get<kernel::Term>(n.payload[1])};
    default: return view::PApp{n.rec[0], n.rec[1]};
  }
}

view::ExpView view_exp(const Exp& e) {
  if (!is_exp(e)) throw kernel::MalformedNode("not an expression");
  const auto& n = e.node();
  switch (n.ctor) {
    case 0: return view::Var{std::get<Ident>(n.payload[0])};
    case 1: return view::Con{std::get<Ident>(n.payload[0]), std::get<kernel::Term>(n.payload[1])};
    case 2: {
      const auto& keys = std::get<KeyList>(n.payload[0]);
      return view::Clos{zip_env(keys, n.second), std::get<kernel::Term>(n.payload[1]), n.second.at(keys.size())};
    }
    case 3: return view::App{n.second[0], n.second[1]};
    default: return view::Scope{n.first[0], n.second[0]};
  }
}

view::DecView view_dec(const Dec& d) {
  if (!is_dec(d)) throw kernel::MalformedNode("not a declaration");
  const auto& n = d.node();
  switch (n.ctor) {
    case 0: return view::EnvD{zip_env(std::get<KeyList>(n.payload[0]), n.second)};
    case 1: return view::Match{std::get<kernel::Term>(n.payload[0]), n.second[0]};
    default: return view::Join{n.first[0], n.first[1]};
  }
}

}  // namespace mdt::lang
