#pragma once

#include <string>
#include <string_view>

#include "mdt/lang/syntax.hpp"
#include "mdt/sexpr.hpp"

namespace mdt::lang {

std::string to_sexpr_typ(const Typ& t);
std::string to_sexpr_pat(const Pat& p);
/// Dec or Exp, by component.
std::string to_sexpr(const mutual::BiTerm& t);
/// ((x T) ...)
std::string to_sexpr(const EnvT& gamma);
/// ((x E) ...)
std::string to_sexpr(const EnvE& rho);

Typ parse_typ(std::string_view text);
Pat parse_pat(std::string_view text);
Exp parse_exp(std::string_view text);
Dec parse_dec(std::string_view text);
/// A Dec or an Exp, told apart by the head symbol.
mutual::BiTerm parse_term(std::string_view text);
EnvT parse_env_t(std::string_view text);
EnvE parse_env_e(std::string_view text);

Typ typ_from_sexp(const sexpr::Sexp& s);
Pat pat_from_sexp(const sexpr::Sexp& s);
mutual::BiTerm term_from_sexp(const sexpr::Sexp& s);

}  // namespace mdt::lang
