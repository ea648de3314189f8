#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mdt/kernel/signature.hpp"

namespace mdt::kernel {

struct Ident {
  std::string name;
  friend auto operator<=>(const Ident&, const Ident&) = default;
};

struct TypeIdent {
  std::string name;
  friend auto operator<=>(const TypeIdent&, const TypeIdent&) = default;
};

using KeyList = std::vector<Ident>;

template <class A>
struct Node;

/// The recursive closure of a signature. Immutable; copies share structure.
class Term {
 public:
  const Node<Term>& node() const { return *node_; }
  const std::shared_ptr<const Node<Term>>& node_ptr() const { return node_; }
  const Signature& signature() const;
  const std::string& ctor_name() const;
  std::size_t ctor() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const Node<Term>> node) : node_(std::move(node)) {}
  friend Term in_(Node<Term> node);

  std::shared_ptr<const Node<Term>> node_;
};

using Payload = std::variant<std::int64_t, Ident, TypeIdent, KeyList, Term>;

/// One layer of a signature: constructor plus its recursive and payload slots.
///
/// Recursive slots are stored flat in slot order; a RecursiveEnv slot
/// contributes one entry per key of its Keys payload.
template <class A>
struct Node {
  SignatureRef sig;
  std::size_t ctor = 0;
  std::vector<A> rec;
  std::vector<Payload> payload;

  const Constructor& constructor() const { return sig->at(ctor); }
  const std::string& name() const { return constructor().name; }

  friend bool operator==(const Node& a, const Node& b) {
    return a.sig == b.sig && a.ctor == b.ctor && a.rec == b.rec && a.payload == b.payload;
  }
};

/// Throws MalformedNode unless the slot counts and payload kinds match the
/// constructor. `rec_counts[f]` is the number of recursive entries of family f.
void check_shape(const Constructor& ctor, std::span<const std::size_t> rec_counts,
                 std::span<const Payload> payload);

template <class A>
void check_shape(const Node<A>& node) {
  if (!node.sig) throw MalformedNode("node without signature");
  if (node.ctor >= node.sig->size()) throw MalformedNode("constructor index out of range");
  const std::size_t counts[] = {node.rec.size()};
  check_shape(node.constructor(), counts, node.payload);
}

/// Builds a node by constructor name and validates its shape.
template <class A>
Node<A> make_node(const SignatureRef& sig, std::string_view ctor, std::vector<A> rec,
                  std::vector<Payload> payload = {}) {
  auto index = sig->find(ctor);
  if (!index) throw MalformedNode("unknown constructor '" + std::string(ctor) + "' in " + sig->name());
  Node<A> node{sig, *index, std::move(rec), std::move(payload)};
  check_shape(node);
  return node;
}

Term in_(Node<Term> node);
inline const Node<Term>& out_(const Term& t) { return t.node(); }

template <class F, class A>
auto fmap(F&& f, const Node<A>& node) -> Node<std::decay_t<std::invoke_result_t<F&, const A&>>> {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  Node<B> out{node.sig, node.ctor, {}, node.payload};
  out.rec.reserve(node.rec.size());
  for (const auto& a : node.rec) out.rec.push_back(f(a));
  return out;
}

inline const Signature& Term::signature() const { return *node_->sig; }
inline const std::string& Term::ctor_name() const { return node_->name(); }
inline std::size_t Term::ctor() const { return node_->ctor; }

inline bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

/// Number of constructor occurrences, payload terms excluded.
std::size_t size(const Term& t);
/// Height of the tree; a leaf has depth 1.
std::size_t depth(const Term& t);

}  // namespace mdt::kernel
