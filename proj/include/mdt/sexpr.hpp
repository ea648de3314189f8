#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdt::sexpr {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal s-expression: an atom or a parenthesized list.
struct Sexp {
  std::string atom;
  std::vector<Sexp> items;
  bool is_list = false;

  bool is_atom() const { return !is_list; }
  /// Head symbol of a non-empty list whose first item is an atom.
  std::optional<std::string_view> head() const;
  std::optional<std::int64_t> as_int() const;
  bool is_symbol() const;
  std::string to_string() const;
};

/// Parses exactly one s-expression; trailing input is an error.
Sexp parse(std::string_view text);

/// Throws ParseError unless `s` is a list of exactly `arity` items headed by `head`.
void expect_form(const Sexp& s, std::string_view head, std::size_t arity);
const std::string& expect_symbol(const Sexp& s, std::string_view what);
std::int64_t expect_int(const Sexp& s);

}  // namespace mdt::sexpr
