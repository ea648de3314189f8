#pragma once

// Mutually defined relations: two rule families over index types K1 and K2,
// where a rule of either family may have recursive premises in both.
//
// `Traits` supplies the index and parameter types of both families:
//   struct Traits { using K1 = ...; using P1 = ...; using K2 = ...; using P2 = ...; };

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <variant>
#include <vector>

#include "mdt/indexed/derivation.hpp"
#include "mdt/mutual/bifold.hpp"

namespace mdt::mutual {

using indexed::InvalidDerivation;
using indexed::Premise;
using indexed::SideCondition;
using indexed::Verdict;
using indexed::WrongIndex;

template <class T, std::size_t F>
using IndexOf = std::conditional_t<F == 0, typename T::K1, typename T::K2>;
template <class T, std::size_t F>
using ParamsOf = std::conditional_t<F == 0, typename T::P1, typename T::P2>;

template <class T, std::size_t F>
struct BiRule {
  using P = ParamsOf<T, F>;
  std::string name;
  std::function<bool(const P&)> accepts;
  std::vector<SideCondition<P>> side_conditions;
  std::function<std::vector<typename T::K1>(const P&)> premises1;
  std::function<std::vector<typename T::K2>(const P&)> premises2;
  std::function<IndexOf<T, F>(const P&)> conclusion;
};

template <class T>
class IndexedBiSignature;
template <class T>
using IndexedBiSignatureRef = std::shared_ptr<const IndexedBiSignature<T>>;

template <class T>
class IndexedBiSignature {
 public:
  static IndexedBiSignatureRef<T> make(std::array<std::string, 2> family_names, std::vector<BiRule<T, 0>> rules1,
                                       std::vector<BiRule<T, 1>> rules2) {
    std::unordered_set<std::string> seen;
    for (const auto& r : rules1)
      if (!seen.insert(r.name).second) throw std::invalid_argument("duplicate rule " + r.name);
    for (const auto& r : rules2)
      if (!seen.insert(r.name).second) throw std::invalid_argument("duplicate rule " + r.name);
    return IndexedBiSignatureRef<T>(
        new IndexedBiSignature(std::move(family_names), std::move(rules1), std::move(rules2)));
  }

  const std::string& family_name(std::size_t f) const { return names_.at(f); }
  const std::array<std::string, 2>& family_names() const { return names_; }

  template <std::size_t F>
  const std::vector<BiRule<T, F>>& rules() const {
    if constexpr (F == 0) return rules1_; else return rules2_;
  }

  template <std::size_t F>
  std::optional<std::size_t> find(const std::string& rule) const {
    const auto& rs = rules<F>();
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i].name == rule) return i;
    return std::nullopt;
  }

 private:
  IndexedBiSignature(std::array<std::string, 2> names, std::vector<BiRule<T, 0>> r1, std::vector<BiRule<T, 1>> r2)
      : names_(std::move(names)), rules1_(std::move(r1)), rules2_(std::move(r2)) {}

  std::array<std::string, 2> names_;
  std::vector<BiRule<T, 0>> rules1_;
  std::vector<BiRule<T, 1>> rules2_;
};

/// A rule instance of family F with first-family premises witnessed by A1
/// and second-family premises witnessed by A2.
template <class T, std::size_t F, class A1, class A2>
struct BiDNode {
  IndexedBiSignatureRef<T> sig;
  std::size_t rule = 0;
  ParamsOf<T, F> params;
  std::vector<Premise<typename T::K1, A1>> first;
  std::vector<Premise<typename T::K2, A2>> second;
  IndexOf<T, F> conclusion;

  const BiRule<T, F>& rule_def() const { return sig->template rules<F>().at(rule); }
  const std::string& rule_name() const { return rule_def().name; }
  const std::string& family_name() const { return sig->family_name(F); }

  friend bool operator==(const BiDNode& a, const BiDNode& b) {
    return a.sig == b.sig && a.rule == b.rule && a.params == b.params && a.first == b.first &&
           a.second == b.second && a.conclusion == b.conclusion;
  }
};

template <class T, std::size_t F>
class BiDerivation;

namespace detail {
struct BiDerivationAccess {
  template <class D, class N>
  static D adopt(N node) {
    return D(std::make_shared<const N>(std::move(node)));
  }
};
}  // namespace detail

/// Derivation in family F of a mutually defined pair of relations.
template <class T, std::size_t F>
class BiDerivation {
 public:
  using Node = BiDNode<T, F, BiDerivation<T, 0>, BiDerivation<T, 1>>;
  using Index = IndexOf<T, F>;
  using Params = ParamsOf<T, F>;
  static constexpr std::size_t family = F;

  const Node& node() const { return *node_; }
  const Index& conclusion() const { return node_->conclusion; }
  const std::string& rule_name() const { return node_->rule_name(); }
  const Params& params() const { return node_->params; }

  static BiDerivation forge(Node node) { return BiDerivation(std::make_shared<const Node>(std::move(node))); }

  friend bool operator==(const BiDerivation& a, const BiDerivation& b) {
    return a.node_ == b.node_ || *a.node_ == *b.node_;
  }

 private:
  explicit BiDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend struct detail::BiDerivationAccess;

  std::shared_ptr<const Node> node_;
};

template <class T>
using BiDerivation1 = BiDerivation<T, 0>;
template <class T>
using BiDerivation2 = BiDerivation<T, 1>;

namespace detail {
template <class K, class A>
std::optional<std::string> check_premises(const std::vector<K>& expected, const std::vector<Premise<K, A>>& got,
                                          const char* family) {
  if (expected.size() != got.size())
    return std::string("expected ") + std::to_string(expected.size()) + " " + family + " premises, got " +
           std::to_string(got.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(got[i].index == expected[i])) return std::string(family) + " premise " + std::to_string(i) + " has the wrong index";
    if (!(got[i].witness.conclusion() == expected[i]))
      return std::string(family) + " premise " + std::to_string(i) + " is witnessed at a different index";
  }
  return std::nullopt;
}
}  // namespace detail

template <class T, std::size_t F>
std::optional<std::string> check_node(const typename BiDerivation<T, F>::Node& n) {
  if (!n.sig) return "node without signature";
  if (n.rule >= n.sig->template rules<F>().size()) return "rule index out of range";
  const auto& rule = n.rule_def();
  try {
    if (rule.accepts && !rule.accepts(n.params)) return "parameters do not fit the rule";
    for (const auto& side : rule.side_conditions)
      if (!side.holds(n.params)) return "side condition '" + side.name + "' fails";
    auto e1 = rule.premises1 ? rule.premises1(n.params) : std::vector<typename T::K1>{};
    if (auto why = detail::check_premises(e1, n.first, "first-family")) return why;
    auto e2 = rule.premises2 ? rule.premises2(n.params) : std::vector<typename T::K2>{};
    if (auto why = detail::check_premises(e2, n.second, "second-family")) return why;
    if (!(rule.conclusion(n.params) == n.conclusion)) return "conclusion does not match the rule";
  } catch (const std::exception& e) {
    return std::string("rule evaluation failed: ") + e.what();
  }
  return std::nullopt;
}

/// in for family F; checks the node.
template <class T, std::size_t F>
BiDerivation<T, F> hin(typename BiDerivation<T, F>::Node node) {
  if (auto why = check_node<T, F>(node)) throw InvalidDerivation(node.sig ? node.rule_name() : "?", *why);
  return detail::BiDerivationAccess::adopt<BiDerivation<T, F>>(std::move(node));
}

template <class T, std::size_t F>
const typename BiDerivation<T, F>::Node& hout(const BiDerivation<T, F>& d) {
  return d.node();
}

/// Instantiates a rule of family F and checks it.
template <std::size_t F, class T>
BiDerivation<T, F> hderive(const IndexedBiSignatureRef<T>& sig, const std::string& rule, ParamsOf<T, F> params,
                           std::vector<BiDerivation<T, 0>> first = {}, std::vector<BiDerivation<T, 1>> second = {}) {
  auto index = sig->template find<F>(rule);
  if (!index) throw InvalidDerivation(rule, "no such rule in " + sig->family_name(F));
  const auto& def = sig->template rules<F>()[*index];
  if (def.accepts && !def.accepts(params)) throw InvalidDerivation(rule, "parameters do not fit the rule");
  for (const auto& side : def.side_conditions)
    if (!side.holds(params)) throw InvalidDerivation(rule, "side condition '" + side.name + "' fails");
  auto i1 = def.premises1 ? def.premises1(params) : std::vector<typename T::K1>{};
  auto i2 = def.premises2 ? def.premises2(params) : std::vector<typename T::K2>{};
  if (i1.size() != first.size() || i2.size() != second.size())
    throw InvalidDerivation(rule, "wrong number of premises");
  for (std::size_t i = 0; i < first.size(); ++i)
    if (!(first[i].conclusion() == i1[i]))
      throw InvalidDerivation(rule, "first-family premise " + std::to_string(i) + " is witnessed at a different index");
  for (std::size_t i = 0; i < second.size(); ++i)
    if (!(second[i].conclusion() == i2[i]))
      throw InvalidDerivation(rule, "second-family premise " + std::to_string(i) + " is witnessed at a different index");
  auto conclusion = def.conclusion(params);
  typename BiDerivation<T, F>::Node node{sig, *index, std::move(params), {}, {}, std::move(conclusion)};
  node.first.reserve(first.size());
  node.second.reserve(second.size());
  for (std::size_t i = 0; i < first.size(); ++i) node.first.push_back({std::move(i1[i]), std::move(first[i])});
  for (std::size_t i = 0; i < second.size(); ++i) node.second.push_back({std::move(i2[i]), std::move(second[i])});
  return detail::BiDerivationAccess::adopt<BiDerivation<T, F>>(std::move(node));
}

/// Index-respecting map over both premise families.
template <class F1, class F2, class T, std::size_t F, class A1, class A2>
auto hfmap(F1&& f1, F2&& f2, const BiDNode<T, F, A1, A2>& n)
    -> BiDNode<T, F, std::decay_t<std::invoke_result_t<F1&, const typename T::K1&, const A1&>>,
               std::decay_t<std::invoke_result_t<F2&, const typename T::K2&, const A2&>>> {
  using B1 = std::decay_t<std::invoke_result_t<F1&, const typename T::K1&, const A1&>>;
  using B2 = std::decay_t<std::invoke_result_t<F2&, const typename T::K2&, const A2&>>;
  BiDNode<T, F, B1, B2> out{n.sig, n.rule, n.params, {}, {}, n.conclusion};
  out.first.reserve(n.first.size());
  out.second.reserve(n.second.size());
  for (const auto& p : n.first) out.first.push_back({p.index, f1(p.index, p.witness)});
  for (const auto& p : n.second) out.second.push_back({p.index, f2(p.index, p.witness)});
  return out;
}

namespace detail {
template <class T, std::size_t F>
bool validate_into(const BiDerivation<T, F>& d, Verdict& v) {
  if (auto why = check_node<T, F>(d.node())) {
    v = {false, v.path, d.rule_name(), *why};
    return false;
  }
  const auto& n = d.node();
  for (std::size_t i = 0; i < n.first.size(); ++i) {
    v.path.push_back(i);
    if (!validate_into(n.first[i].witness, v)) return false;
    v.path.pop_back();
  }
  for (std::size_t i = 0; i < n.second.size(); ++i) {
    v.path.push_back(n.first.size() + i);
    if (!validate_into(n.second[i].witness, v)) return false;
    v.path.pop_back();
  }
  return true;
}
}  // namespace detail

/// Full recursive check. Paths number first-family premises before
/// second-family ones.
template <class T, std::size_t F>
Verdict validate(const BiDerivation<T, F>& d) {
  Verdict v;
  detail::validate_into(d, v);
  return v;
}

/// Indexed Mendler bi-algebra with carriers C1 (first family) and C2.
template <class T, class C1, class C2>
struct IndexedBiMendlerAlgebra {
  using K1 = typename T::K1;
  using K2 = typename T::K2;
  using Rec1 = std::function<C1(const K1&, Handle1)>;
  using Rec2 = std::function<C2(const K2&, Handle2)>;
  template <std::size_t F>
  using HandleNode = BiDNode<T, F, Handle1, Handle2>;

  std::function<C1(const Rec1&, const Rec2&, const K1&, const HandleNode<0>&)> step1;
  std::function<C2(const Rec1&, const Rec2&, const K2&, const HandleNode<1>&)> step2;
};

namespace detail {

template <class T, class C1, class C2>
struct HFolder {
  using Alg = IndexedBiMendlerAlgebra<T, C1, C2>;
  std::shared_ptr<const Alg> alg;

  template <std::size_t F>
  std::conditional_t<F == 0, C1, C2> run(const IndexOf<T, F>& w, const BiDerivation<T, F>& d) const {
    const std::uint64_t brand = kernel::detail::fresh_brand();
    std::uint32_t s1 = 0, s2 = 0;
    auto handles = hfmap(
        [&](const typename T::K1&, const BiDerivation<T, 0>&) {
          return kernel::detail::HandleAccess::mint<kernel::FirstHandleTag>(s1++, brand);
        },
        [&](const typename T::K2&, const BiDerivation<T, 1>&) {
          return kernel::detail::HandleAccess::mint<kernel::SecondHandleTag>(s2++, brand);
        },
        d.node());
    HFolder self = *this;
    typename Alg::Rec1 rec1 = [self, d, brand](const typename T::K1& w1, Handle1 h) -> C1 {
      const auto& p = d.node().first.at(kernel::detail::HandleAccess::resolve(h, brand));
      if (!(p.index == w1)) throw WrongIndex("recursive call at an index other than the premise's");
      return self.template run<0>(w1, p.witness);
    };
    typename Alg::Rec2 rec2 = [self, d, brand](const typename T::K2& w2, Handle2 h) -> C2 {
      const auto& p = d.node().second.at(kernel::detail::HandleAccess::resolve(h, brand));
      if (!(p.index == w2)) throw WrongIndex("recursive call at an index other than the premise's");
      return self.template run<1>(w2, p.witness);
    };
    if constexpr (F == 0) return alg->step1(rec1, rec2, w, handles);
    else return alg->step2(rec1, rec2, w, handles);
  }
};

}  // namespace detail

template <class T, class C1, class C2>
C1 hfold_1(const IndexedBiMendlerAlgebra<T, C1, C2>& alg, const typename T::K1& w, const BiDerivation<T, 0>& d) {
  if (!(d.conclusion() == w)) throw WrongIndex("derivation does not conclude at the requested index");
  return detail::HFolder<T, C1, C2>{std::make_shared<const IndexedBiMendlerAlgebra<T, C1, C2>>(alg)}.template run<0>(w, d);
}

template <class T, class C1, class C2>
C2 hfold_2(const IndexedBiMendlerAlgebra<T, C1, C2>& alg, const typename T::K2& w, const BiDerivation<T, 1>& d) {
  if (!(d.conclusion() == w)) throw WrongIndex("derivation does not conclude at the requested index");
  return detail::HFolder<T, C1, C2>{std::make_shared<const IndexedBiMendlerAlgebra<T, C1, C2>>(alg)}.template run<1>(w, d);
}

/// Rule of family F whose parameters are the alternative `Alt` of a variant.
template <class Alt, class T, std::size_t F>
BiRule<T, F> variant_birule(std::string name, std::function<std::vector<typename T::K1>(const Alt&)> premises1,
                            std::function<std::vector<typename T::K2>(const Alt&)> premises2,
                            std::function<IndexOf<T, F>(const Alt&)> conclusion,
                            std::vector<SideCondition<Alt>> sides = {}) {
  using P = ParamsOf<T, F>;
  BiRule<T, F> r;
  r.name = std::move(name);
  r.accepts = [](const P& p) { return std::holds_alternative<Alt>(p); };
  for (auto& s : sides)
    r.side_conditions.push_back({std::move(s.name), [f = std::move(s.holds)](const P& p) { return f(std::get<Alt>(p)); }});
  if (premises1) r.premises1 = [f = std::move(premises1)](const P& p) { return f(std::get<Alt>(p)); };
  if (premises2) r.premises2 = [f = std::move(premises2)](const P& p) { return f(std::get<Alt>(p)); };
  r.conclusion = [f = std::move(conclusion)](const P& p) { return f(std::get<Alt>(p)); };
  return r;
}

}  // namespace mdt::mutual
