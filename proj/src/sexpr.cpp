#include "mdt/sexpr.hpp"

#include <cctype>
#include <charconv>

namespace mdt::sexpr {

namespace {

bool is_delim(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')'; }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexp read() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')' at offset " + std::to_string(pos_));
    if (c == '(') {
      ++pos_;
      Sexp list;
      list.is_list = true;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unterminated list");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
    Sexp atom;
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<std::string_view> Sexp::head() const {
  if (!is_list || items.empty() || !items.front().is_atom()) return std::nullopt;
  return std::string_view(items.front().atom);
}

std::optional<std::int64_t> Sexp::as_int() const {
  if (is_list || atom.empty()) return std::nullopt;
  std::int64_t v = 0;
  const char* begin = atom.data();
  const char* end = atom.data() + atom.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

bool Sexp::is_symbol() const {
  if (is_list || atom.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(atom[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  for (char c : atom) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_' || u == '\'' || u == '-')) return false;
  }
  return true;
}

std::string Sexp::to_string() const {
  if (!is_list) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].to_string();
  }
  return out + ")";
}

Sexp parse(std::string_view text) {
  Reader r(text);
  Sexp s = r.read();
  r.finish();
  return s;
}

void expect_form(const Sexp& s, std::string_view head, std::size_t arity) {
  if (s.head() != head || s.items.size() != arity + 1)
    throw ParseError("expected (" + std::string(head) + " ...) with " + std::to_string(arity) + " arguments, got " +
                     s.to_string());
}

const std::string& expect_symbol(const Sexp& s, std::string_view what) {
  if (!s.is_symbol()) throw ParseError("expected " + std::string(what) + ", got " + s.to_string());
  return s.atom;
}

std::int64_t expect_int(const Sexp& s) {
  auto v = s.as_int();
  if (!v) throw ParseError("expected integer, got " + s.to_string());
  return *v;
}

}  // namespace mdt::sexpr
