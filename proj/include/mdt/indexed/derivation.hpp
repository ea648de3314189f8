#pragma once

// Inductively defined relations as first-class derivation trees.
//
// An indexed signature is a list of rules. A rule is instantiated by a
// parameter value P; from it the rule computes the indices of its recursive
// premises and of its conclusion, and checks its side conditions. A
// derivation node stores the instantiated parameters, its premises (index plus
// witness) and its conclusion index explicitly, so checking a node is local.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "mdt/kernel/handle.hpp"

namespace mdt::indexed {

using kernel::Handle;

class InvalidDerivation : public std::runtime_error {
 public:
  InvalidDerivation(std::string rule, std::string reason)
      : std::runtime_error("invalid derivation at rule " + rule + ": " + reason),
        rule_(std::move(rule)),
        reason_(std::move(reason)) {}

  const std::string& rule() const { return rule_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string rule_;
  std::string reason_;
};

class WrongIndex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class P>
struct SideCondition {
  std::string name;
  std::function<bool(const P&)> holds;
};

template <class K, class P>
struct Rule {
  std::string name;
  /// Parameter schema: does `P` hold the shape this rule expects?
  std::function<bool(const P&)> accepts;
  std::vector<SideCondition<P>> side_conditions;
  /// Indices of the recursive premises, in order. Only called on accepted
  /// parameters whose side conditions hold.
  std::function<std::vector<K>(const P&)> premises;
  std::function<K(const P&)> conclusion;
};

template <class K, class P>
class Signature;

template <class K, class P>
using SignatureRef = std::shared_ptr<const Signature<K, P>>;

template <class K, class P>
class Signature {
 public:
  static SignatureRef<K, P> make(std::string name, std::vector<Rule<K, P>> rules) {
    std::unordered_set<std::string> seen;
    for (const auto& r : rules)
      if (!seen.insert(r.name).second) throw std::invalid_argument(name + ": duplicate rule " + r.name);
    return SignatureRef<K, P>(new Signature(std::move(name), std::move(rules)));
  }

  const std::string& name() const { return name_; }
  const std::vector<Rule<K, P>>& rules() const { return rules_; }
  const Rule<K, P>& rule(std::size_t i) const { return rules_.at(i); }

  std::optional<std::size_t> find(const std::string& rule) const {
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (rules_[i].name == rule) return i;
    return std::nullopt;
  }

 private:
  Signature(std::string name, std::vector<Rule<K, P>> rules) : name_(std::move(name)), rules_(std::move(rules)) {}

  std::string name_;
  std::vector<Rule<K, P>> rules_;
};

template <class K, class A>
struct Premise {
  K index;
  A witness;

  friend bool operator==(const Premise&, const Premise&) = default;
};

/// One rule instance with premises witnessed by A.
template <class K, class P, class A>
struct DNode {
  SignatureRef<K, P> sig;
  std::size_t rule = 0;
  P params;
  std::vector<Premise<K, A>> premises;
  K conclusion;

  const Rule<K, P>& rule_def() const { return sig->rule(rule); }
  const std::string& rule_name() const { return rule_def().name; }

  friend bool operator==(const DNode& a, const DNode& b) {
    return a.sig == b.sig && a.rule == b.rule && a.params == b.params && a.premises == b.premises &&
           a.conclusion == b.conclusion;
  }
};

template <class K, class P>
class Derivation;

template <class K, class P>
Derivation<K, P> din(DNode<K, P, Derivation<K, P>> node);

namespace detail {
struct DerivationAccess;
}

/// A finite derivation tree. Every value obtained from din() has been checked
/// node by node; forge() skips the check and exists to exercise validate().
/// certified() holds when every node of the tree went through a check.
template <class K, class P>
class Derivation {
 public:
  using Node = DNode<K, P, Derivation>;

  const Node& node() const { return *node_; }
  const K& conclusion() const { return node_->conclusion; }
  const std::string& rule_name() const { return node_->rule_name(); }
  const P& params() const { return node_->params; }
  const Derivation& child(std::size_t i) const { return node_->premises.at(i).witness; }
  bool certified() const { return certified_; }

  static Derivation forge(Node node) { return Derivation(std::make_shared<const Node>(std::move(node)), false); }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.node_ == b.node_ || *a.node_ == *b.node_;
  }

 private:
  Derivation(std::shared_ptr<const Node> node, bool checked) : node_(std::move(node)), certified_(checked) {
    for (const auto& p : node_->premises) certified_ = certified_ && p.witness.certified_;
  }
  friend Derivation din<K, P>(Node node);
  friend struct detail::DerivationAccess;

  std::shared_ptr<const Node> node_;
  bool certified_ = false;
};

/// Local validity of one node; the children are taken as given. Returns the
/// failure reason, or nothing when the node is a correct rule instance.
template <class K, class P>
std::optional<std::string> check_node(const DNode<K, P, Derivation<K, P>>& n) {
  if (!n.sig) return "node without signature";
  if (n.rule >= n.sig->rules().size()) return "rule index out of range";
  const auto& rule = n.rule_def();
  try {
    if (rule.accepts && !rule.accepts(n.params)) return "parameters do not fit the rule";
    for (const auto& side : rule.side_conditions)
      if (!side.holds(n.params)) return "side condition '" + side.name + "' fails";
    const std::vector<K> expected = rule.premises ? rule.premises(n.params) : std::vector<K>{};
    if (expected.size() != n.premises.size())
      return "expected " + std::to_string(expected.size()) + " premises, got " + std::to_string(n.premises.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!(n.premises[i].index == expected[i])) return "premise " + std::to_string(i) + " has the wrong index";
      if (!(n.premises[i].witness.conclusion() == expected[i]))
        return "premise " + std::to_string(i) + " is witnessed at a different index";
    }
    if (!(rule.conclusion(n.params) == n.conclusion)) return "conclusion does not match the rule";
  } catch (const std::exception& e) {
    return std::string("rule evaluation failed: ") + e.what();
  }
  return std::nullopt;
}

namespace detail {
struct DerivationAccess {
  template <class D, class N>
  static D adopt(N node) {
    return D(std::make_shared<const N>(std::move(node)), true);
  }
};
}  // namespace detail

template <class K, class P>
Derivation<K, P> din(DNode<K, P, Derivation<K, P>> node) {
  if (auto why = check_node(node)) throw InvalidDerivation(node.sig ? node.rule_name() : "?", *why);
  return Derivation<K, P>(std::make_shared<const DNode<K, P, Derivation<K, P>>>(std::move(node)), true);
}

template <class K, class P>
const DNode<K, P, Derivation<K, P>>& dout(const Derivation<K, P>& d) {
  return d.node();
}

/// Instantiates `rule` at `params` over the given sub-derivations and checks it.
template <class K, class P>
Derivation<K, P> derive(const SignatureRef<K, P>& sig, const std::string& rule, P params,
                        std::vector<Derivation<K, P>> children = {}) {
  auto index = sig->find(rule);
  if (!index) throw InvalidDerivation(rule, "no such rule in " + sig->name());
  const auto& def = sig->rule(*index);
  if (def.accepts && !def.accepts(params)) throw InvalidDerivation(rule, "parameters do not fit the rule");
  for (const auto& side : def.side_conditions)
    if (!side.holds(params)) throw InvalidDerivation(rule, "side condition '" + side.name + "' fails");
  std::vector<K> indices = def.premises ? def.premises(params) : std::vector<K>{};
  if (indices.size() != children.size())
    throw InvalidDerivation(rule, "expected " + std::to_string(indices.size()) + " premises, got " +
                                      std::to_string(children.size()));
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!(children[i].conclusion() == indices[i]))
      throw InvalidDerivation(rule, "premise " + std::to_string(i) + " is witnessed at a different index");
  K conclusion = def.conclusion(params);
  DNode<K, P, Derivation<K, P>> node{sig, *index, std::move(params), {}, std::move(conclusion)};
  node.premises.reserve(children.size());
  for (std::size_t i = 0; i < children.size(); ++i)
    node.premises.push_back({std::move(indices[i]), std::move(children[i])});
  return detail::DerivationAccess::adopt<Derivation<K, P>>(std::move(node));
}

template <class F, class K, class P, class A>
auto ifmap(F&& f, const DNode<K, P, A>& n)
    -> DNode<K, P, std::decay_t<std::invoke_result_t<F&, const K&, const A&>>> {
  using B = std::decay_t<std::invoke_result_t<F&, const K&, const A&>>;
  DNode<K, P, B> out{n.sig, n.rule, n.params, {}, n.conclusion};
  out.premises.reserve(n.premises.size());
  for (const auto& p : n.premises) out.premises.push_back({p.index, f(p.index, p.witness)});
  return out;
}

struct Verdict {
  bool ok = true;
  /// Child positions from the root to the first failing node.
  std::vector<std::size_t> path;
  std::string rule;
  std::string reason;

  explicit operator bool() const { return ok; }
};

namespace detail {
template <class K, class P>
bool validate_into(const Derivation<K, P>& d, Verdict& v) {
  if (auto why = check_node(d.node())) {
    v = {false, v.path, d.rule_name(), *why};
    return false;
  }
  const auto& premises = d.node().premises;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    v.path.push_back(i);
    if (!validate_into(premises[i].witness, v)) return false;
    v.path.pop_back();
  }
  return true;
}
}  // namespace detail

/// Full recursive check; reports the first failing node in pre-order.
template <class K, class P>
Verdict validate(const Derivation<K, P>& d) {
  Verdict v;
  detail::validate_into(d, v);
  return v;
}

template <class K, class P, class C>
struct MendlerAlgebra {
  using Rec = std::function<C(const K&, Handle)>;
  std::function<C(const Rec&, const K&, const DNode<K, P, Handle>&)> step;
};

namespace detail {
template <class K, class P, class C>
C ifold_shared(const std::shared_ptr<const MendlerAlgebra<K, P, C>>& alg, const K& w, const Derivation<K, P>& d) {
  const std::uint64_t brand = kernel::detail::fresh_brand();
  std::uint32_t slot = 0;
  auto handles = ifmap(
      [&](const K&, const Derivation<K, P>&) {
        return kernel::detail::HandleAccess::mint<kernel::DefaultHandleTag>(slot++, brand);
      },
      d.node());
  typename MendlerAlgebra<K, P, C>::Rec rec = [alg, d, brand](const K& w2, Handle h) -> C {
    const auto& premise = d.node().premises.at(kernel::detail::HandleAccess::resolve(h, brand));
    if (!(premise.index == w2)) throw WrongIndex("recursive call at an index other than the premise's");
    return ifold_shared(alg, w2, premise.witness);
  };
  return alg->step(rec, w, handles);
}
}  // namespace detail

/// Indexed Mendler fold: ifold(m, w, din(n)) = m.step(ifold(m, ., .), w, n-with-handles).
template <class K, class P, class C>
C ifold(const MendlerAlgebra<K, P, C>& alg, const K& w, const Derivation<K, P>& d) {
  if (!(d.conclusion() == w)) throw WrongIndex("derivation does not conclude at the requested index");
  return detail::ifold_shared(std::make_shared<const MendlerAlgebra<K, P, C>>(alg), w, d);
}

}  // namespace mdt::indexed

namespace mdt::indexed {

/// Rule whose parameters are the alternative `Alt` of a variant P.
template <class Alt, class K, class P>
Rule<K, P> variant_rule(std::string name, std::function<std::vector<K>(const Alt&)> premises,
                        std::function<K(const Alt&)> conclusion, std::vector<SideCondition<Alt>> sides = {}) {
  Rule<K, P> r;
  r.name = std::move(name);
  r.accepts = [](const P& p) { return std::holds_alternative<Alt>(p); };
  for (auto& s : sides)
    r.side_conditions.push_back({std::move(s.name), [f = std::move(s.holds)](const P& p) { return f(std::get<Alt>(p)); }});
  if (premises) r.premises = [f = std::move(premises)](const P& p) { return f(std::get<Alt>(p)); };
  r.conclusion = [f = std::move(conclusion)](const P& p) { return f(std::get<Alt>(p)); };
  return r;
}

}  // namespace mdt::indexed
