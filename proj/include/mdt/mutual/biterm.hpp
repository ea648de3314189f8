#pragma once

#include <array>
#include <memory>
#include <string>

#include <json.hpp>

#include "mdt/kernel/handle.hpp"
#include "mdt/kernel/term.hpp"

namespace mdt::mutual {

using kernel::Payload;

enum class Component : std::uint8_t { First = 0, Second = 1 };

class WrongComponent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BiSignature;
using BiSignatureRef = std::shared_ptr<const BiSignature>;

/// Pair of signatures over two recursive sorts. Slot family 0 refers to the
/// first sort, family 1 to the second.
class BiSignature {
 public:
  static BiSignatureRef make(kernel::SignatureRef first, kernel::SignatureRef second);

  const kernel::Signature& component(Component c) const { return *components_[static_cast<int>(c)]; }
  const kernel::SignatureRef& component_ref(Component c) const { return components_[static_cast<int>(c)]; }
  const std::string& component_name(Component c) const { return component(c).name(); }
  std::optional<Component> find_component(std::string_view name) const;

 private:
  explicit BiSignature(std::array<kernel::SignatureRef, 2> components) : components_(std::move(components)) {}
  std::array<kernel::SignatureRef, 2> components_;
};

/// One layer of a two-sorted grammar: recursive positions of the first sort
/// in `first`, of the second sort in `second`, each flat in slot order.
template <class A1, class A2>
struct BiNode {
  BiSignatureRef sig;
  Component component = Component::First;
  std::size_t ctor = 0;
  std::vector<A1> first;
  std::vector<A2> second;
  std::vector<Payload> payload;

  const kernel::Constructor& constructor() const { return sig->component(component).at(ctor); }
  const std::string& name() const { return constructor().name; }

  friend bool operator==(const BiNode& a, const BiNode& b) {
    return a.sig == b.sig && a.component == b.component && a.ctor == b.ctor && a.first == b.first &&
           a.second == b.second && a.payload == b.payload;
  }
};

template <class A1, class A2>
void check_shape(const BiNode<A1, A2>& n) {
  if (!n.sig) throw kernel::MalformedNode("bi-node without signature");
  if (n.ctor >= n.sig->component(n.component).size()) throw kernel::MalformedNode("constructor index out of range");
  const std::size_t counts[] = {n.first.size(), n.second.size()};
  kernel::check_shape(n.constructor(), counts, n.payload);
}

template <class A1, class A2>
BiNode<A1, A2> make_binode(const BiSignatureRef& sig, Component c, std::string_view ctor, std::vector<A1> first,
                           std::vector<A2> second, std::vector<Payload> payload = {}) {
  auto index = sig->component(c).find(ctor);
  if (!index) throw kernel::MalformedNode("unknown constructor '" + std::string(ctor) + "'");
  BiNode<A1, A2> n{sig, c, *index, std::move(first), std::move(second), std::move(payload)};
  check_shape(n);
  return n;
}

/// An element of either sort of the mutual fixpoint.
class BiTerm {
 public:
  using Node = BiNode<BiTerm, BiTerm>;

  Component which() const { return node_->component; }
  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& node_ptr() const { return node_; }
  const std::string& ctor_name() const { return node_->name(); }

  friend bool operator==(const BiTerm& a, const BiTerm& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

 private:
  explicit BiTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend BiTerm bin(Node node);

  std::shared_ptr<const Node> node_;
};

/// in for the component the node belongs to.
BiTerm bin(BiTerm::Node node);
inline const BiTerm::Node& bout(const BiTerm& t) { return t.node(); }

template <class F1, class F2, class A1, class A2>
auto bifmap(F1&& f1, F2&& f2, const BiNode<A1, A2>& n)
    -> BiNode<std::decay_t<std::invoke_result_t<F1&, const A1&>>, std::decay_t<std::invoke_result_t<F2&, const A2&>>> {
  using B1 = std::decay_t<std::invoke_result_t<F1&, const A1&>>;
  using B2 = std::decay_t<std::invoke_result_t<F2&, const A2&>>;
  BiNode<B1, B2> out{n.sig, n.component, n.ctor, {}, {}, n.payload};
  out.first.reserve(n.first.size());
  out.second.reserve(n.second.size());
  for (const auto& a : n.first) out.first.push_back(f1(a));
  for (const auto& a : n.second) out.second.push_back(f2(a));
  return out;
}

std::size_t size(const BiTerm& t);
std::size_t depth(const BiTerm& t);

/// {"component": name, "ctor": ..., "rec": [...], "payload": [...]} with "rec"
/// in declared slot order.
nlohmann::json to_json(const BiTerm& t);
BiTerm biterm_from_json(const BiSignatureRef& sig, const nlohmann::json& j);

}  // namespace mdt::mutual
