#pragma once

#include <optional>
#include <stdexcept>

#include "mdt/lang/syntax.hpp"

namespace mdt::lang {

class NotAValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateBinding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// h ::= con(c, t) | app(h, v)
bool is_data_value(const Exp& e);
/// v ::= clos(rho, p, e) | h
bool is_value(const Exp& e);

/// Matches a value against a pattern. Variables bind unconditionally,
/// constructor patterns need the same name and annotation, and papp matches a
/// data application componentwise. Throws NotAValue when `v` is not a value.
std::optional<EnvE> patmatch(const Pat& p, const Exp& v);

/// The typing environment a pattern introduces. Throws DuplicateBinding when
/// a variable occurs twice.
EnvT bindings(const Pat& p);

bool is_linear(const Pat& p);
/// pcon, or papp whose head is constructor-headed.
bool is_constructor_headed(const Pat& p);

}  // namespace mdt::lang
