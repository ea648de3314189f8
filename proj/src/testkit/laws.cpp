#include "mdt/testkit/laws.hpp"

#include <random>
#include <sstream>
#include <unordered_map>

#include "mdt/arith/preservation.hpp"
#include "mdt/kernel/algebra.hpp"
#include "mdt/kernel/fold_term.hpp"
#include "mdt/lang/print.hpp"
#include "mdt/lang/step.hpp"
#include "mdt/lang/typing.hpp"
#include "mdt/lang/values.hpp"
#include "mdt/mutual/bifold.hpp"
#include "mdt/testkit/enumerate.hpp"
#include "mdt/testkit/fuzz.hpp"
#include "mdt/testkit/oracle.hpp"

namespace mdt::testkit {

using kernel::Handle;
using kernel::Node;
using kernel::Term;
using kernel::detail::HandleAccess;

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "kernel") return Suite::Kernel;
  if (name == "indexed") return Suite::Indexed;
  if (name == "mutual") return Suite::Mutual;
  if (name == "arith") return Suite::Arith;
  if (name == "lang") return Suite::Lang;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Kernel: return "kernel";
    case Suite::Indexed: return "indexed";
    case Suite::Mutual: return "mutual";
    case Suite::Arith: return "arith";
    case Suite::Lang: return "lang";
  }
  return "?";
}

arith::EvalSignature without_side_conditions(const arith::EvalSignature& sig, const std::string& rule) {
  auto rules = sig->rules();
  for (auto& r : rules)
    if (r.name == rule) r.side_conditions.clear();
  return indexed::Signature<arith::EvalIndex, arith::EvalParams>::make(sig->name(), std::move(rules));
}

namespace {

using IntFn = std::function<std::int64_t(std::int64_t)>;

const std::vector<std::pair<std::string, IntFn>>& int_fns() {
  static const std::vector<std::pair<std::string, IntFn>> fns = {
      {"x+1", [](std::int64_t x) { return x + 1; }}, {"2x", [](std::int64_t x) { return 2 * x; }},
      {"-x", [](std::int64_t x) { return -x; }},     {"x*x", [](std::int64_t x) { return x * x; }},
      {"x-3", [](std::int64_t x) { return x - 3; }}, {"7", [](std::int64_t) { return std::int64_t{7}; }},
  };
  return fns;
}

struct Affine {
  std::int64_t a, b;
  std::int64_t operator()(std::int64_t x) const { return a * x + b; }
  std::string str() const { return std::to_string(a) + "x+" + std::to_string(b); }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(g_() % n); }
  std::int64_t in(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Affine affine() { return {in(-5, 5), in(-100, 100)}; }

 private:
  std::mt19937_64 g_;
};

template <class V>
void maybe_swap(bool on, std::vector<V>& v) {
  if (on && v.size() >= 2) std::swap(v[0], v[1]);
}

// The maps under test: the library maps, optionally with the slot defect.

template <class F, class A>
auto fmap_ut(const LawOptions& o, F&& f, const Node<A>& n) {
  auto out = kernel::fmap(std::forward<F>(f), n);
  maybe_swap(o.swap_fmap_slots, out.rec);
  return out;
}

template <class F, class K, class P, class A>
auto ifmap_ut(const LawOptions& o, F&& f, const indexed::DNode<K, P, A>& n) {
  auto out = indexed::ifmap(std::forward<F>(f), n);
  maybe_swap(o.swap_fmap_slots, out.premises);
  return out;
}

template <class F1, class F2, class A1, class A2>
auto bifmap_ut(const LawOptions& o, F1&& f1, F2&& f2, const mutual::BiNode<A1, A2>& n) {
  auto out = mutual::bifmap(std::forward<F1>(f1), std::forward<F2>(f2), n);
  maybe_swap(o.swap_fmap_slots, out.first);
  maybe_swap(o.swap_fmap_slots, out.second);
  return out;
}

template <class F1, class F2, class T, std::size_t F, class A1, class A2>
auto hfmap_ut(const LawOptions& o, F1&& f1, F2&& f2, const mutual::BiDNode<T, F, A1, A2>& n) {
  auto out = mutual::hfmap(std::forward<F1>(f1), std::forward<F2>(f2), n);
  maybe_swap(o.swap_fmap_slots, out.first);
  maybe_swap(o.swap_fmap_slots, out.second);
  return out;
}

// Printing for witnesses and string-valued algebras.

std::string term_string(const Term& t);

std::string payload_string(const kernel::Payload& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<V, kernel::Ident> || std::is_same_v<V, kernel::TypeIdent>) return v.name;
        else if constexpr (std::is_same_v<V, kernel::KeyList>) {
          std::string s = "{";
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].name;
          return s + "}";
        } else return term_string(v);
      },
      p);
}

template <class A, class Show>
std::string node_string(const std::string& name, const std::vector<kernel::Payload>& payload,
                        const std::vector<A>& rec, Show show) {
  std::string s = "(" + name;
  for (const auto& p : payload) s += " " + payload_string(p);
  for (const auto& a : rec) s += " " + show(a);
  return s + ")";
}

std::string term_string(const Term& t) {
  return node_string(t.ctor_name(), t.node().payload, t.node().rec, term_string);
}

std::string int_node_string(const Node<std::int64_t>& n) {
  return node_string(n.name(), n.payload, n.rec, [](std::int64_t x) { return std::to_string(x); });
}

kernel::CAlgebra<std::string> string_algebra() {
  return {[](const Node<std::string>& n) { return node_string(n.name(), n.payload, n.rec, [](const std::string& s) { return s; }); }};
}

kernel::MendlerAlgebra<std::string> string_malgebra() {
  return {[](const kernel::MendlerAlgebra<std::string>::Rec& rec, const Node<Handle>& n) {
    return node_string(n.name(), n.payload, n.rec, [&](Handle h) { return rec(h); });
  }};
}

// One-layer nodes over integer carriers.

template <class Emit>
void for_each_tuple(std::size_t arity, const std::vector<std::int64_t>& values, Emit emit) {
  std::vector<std::int64_t> cur;
  std::function<void()> go = [&] {
    if (cur.size() == arity) {
      emit(cur);
      return;
    }
    for (auto v : values) {
      cur.push_back(v);
      go();
      cur.pop_back();
    }
  };
  go();
}

std::vector<Node<std::int64_t>> int_nodes(const kernel::SignatureRef& sig, const Pools& pools,
                                          const std::vector<std::int64_t>& kids) {
  std::vector<Node<std::int64_t>> out;
  for (std::size_t c = 0; c < sig->size(); ++c)
    for (const auto& choice : payload_choices(sig->at(c), pools))
      for_each_tuple(choice.children[0], kids,
                     [&](const std::vector<std::int64_t>& rec) { out.push_back({sig, c, rec, choice.payload}); });
  return out;
}

using IntBiNode = mutual::BiNode<std::int64_t, std::int64_t>;

std::vector<IntBiNode> int_binodes(const mutual::BiSignatureRef& sig, const Pools& pools, const std::vector<std::int64_t>& kids) {
  std::vector<IntBiNode> out;
  for (auto comp : {mutual::Component::First, mutual::Component::Second}) {
    const auto& s = sig->component(comp);
    for (std::size_t c = 0; c < s.size(); ++c)
      for (const auto& choice : payload_choices(s.at(c), pools))
        for_each_tuple(choice.children[0] + choice.children[1], kids, [&](const std::vector<std::int64_t>& rec) {
          IntBiNode n{sig, comp, c, {}, {}, choice.payload};
          n.first.assign(rec.begin(), rec.begin() + static_cast<std::ptrdiff_t>(choice.children[0]));
          n.second.assign(rec.begin() + static_cast<std::ptrdiff_t>(choice.children[0]), rec.end());
          out.push_back(std::move(n));
        });
  }
  return out;
}

std::string int_binode_string(const IntBiNode& n) {
  std::vector<std::int64_t> all = n.first;
  all.push_back(-999);
  all.insert(all.end(), n.second.begin(), n.second.end());
  return node_string(n.name(), n.payload, all, [](std::int64_t x) { return x == -999 ? std::string("|") : std::to_string(x); });
}

Pools kernel_pools() {
  Pools p = arith_spec(1).pools;
  p.idents = {lang::id("x")};
  p.type_idents = {kernel::TypeIdent{"a"}};
  p.key_sets = {{}, {lang::id("x")}};
  p.terms[lang::typ_sig().get()] = {lang::ty("a")};
  return p;
}

// ---------------------------------------------------------------- kernel

template <class C>
C mendler_rhs(const LawOptions& o, const kernel::MendlerAlgebra<C>& alg, const Term& t) {
  const auto brand = kernel::detail::fresh_brand();
  std::uint32_t slot = 0;
  auto handles = fmap_ut(o, [&](const Term&) { return HandleAccess::mint<kernel::DefaultHandleTag>(slot++, brand); }, kernel::out_(t));
  typename kernel::MendlerAlgebra<C>::Rec rec = [&](Handle h) { return kernel::mfold(alg, t.node().rec.at(HandleAccess::resolve(h, brand))); };
  return alg.step(rec, handles);
}

Report kernel_suite(const LawOptions& o) {
  Report r{"kernel", {}};
  const auto& sum = arith::trm_sig();
  const std::vector<kernel::SignatureRef> sigs = {sum.sum(), lang::typ_sig(), lang::pat_sig()};
  const Pools pools = kernel_pools();
  std::vector<Node<std::int64_t>> nodes;
  for (const auto& s : sigs) {
    auto ns = int_nodes(s, pools, {-2, -1, 0, 1, 2});
    nodes.insert(nodes.end(), ns.begin(), ns.end());
  }
  auto random_node = [&](Rng& rng) {
    Node<std::int64_t> n = nodes[rng.pick(nodes.size())];
    for (auto& x : n.rec) x = rng.in(-1000, 1000);
    return n;
  };

  r.checks.push_back(timed_check("fmap identity", [&](Check& c) {
    for (const auto& n : nodes)
      c.expect(fmap_ut(o, [](std::int64_t x) { return x; }, n) == n, [&] { return int_node_string(n); });
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto n = random_node(rng);
      c.expect(fmap_ut(o, [](std::int64_t x) { return x; }, n) == n, [&] { return int_node_string(n); });
    }
  }));

  r.checks.push_back(timed_check("fmap composition", [&](Check& c) {
    for (const auto& n : nodes)
      for (const auto& [fn, f] : int_fns())
        for (const auto& [gn, g] : int_fns()) {
          auto lhs = fmap_ut(o, [&](std::int64_t x) { return g(f(x)); }, n);
          auto rhs = fmap_ut(o, g, fmap_ut(o, f, n));
          c.expect(lhs == rhs, [&] { return "f=" + fn + " g=" + gn + " n=" + int_node_string(n) + " gives " + int_node_string(lhs) + " vs " + int_node_string(rhs); });
        }
    Rng rng(o.seed + 1);
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto n = random_node(rng);
      auto f = rng.affine(), g = rng.affine();
      auto lhs = fmap_ut(o, [&](std::int64_t x) { return g(f(x)); }, n);
      auto rhs = fmap_ut(o, g, fmap_ut(o, f, n));
      c.expect(lhs == rhs, [&] { return "f=" + f.str() + " g=" + g.str() + " n=" + int_node_string(n) + " gives " + int_node_string(lhs) + " vs " + int_node_string(rhs); });
    }
  }));

  r.checks.push_back(timed_check("in/out isomorphism", [&](Check& c) {
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      Node<Term> n = kernel::out_(t);
      c.expect(kernel::in_(kernel::out_(t)) == t && kernel::out_(kernel::in_(n)) == n, [&] { return term_string(t); });
    });
  }));

  const auto eval_alg = arith::eval_g();
  const auto str_alg = string_algebra();
  r.checks.push_back(timed_check("fold_c computation rule", [&](Check& c) {
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      auto lhs = kernel::fold_c(eval_alg, t);
      auto rhs = eval_alg.apply(fmap_ut(o, [&](const Term& u) { return kernel::fold_c(eval_alg, u); }, kernel::out_(t)));
      c.expect(lhs == rhs, [&] { return "eval at " + term_string(t); });
    });
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)))) {
      auto lhs = kernel::fold_c(str_alg, t);
      auto rhs = str_alg.apply(fmap_ut(o, [&](const Term& u) { return kernel::fold_c(str_alg, u); }, kernel::out_(t)));
      c.expect(lhs == rhs, [&] { return "print at " + term_string(t) + ": " + lhs + " vs " + rhs; });
    }
  }));

  const auto eval_m = kernel::lift(eval_alg);
  const auto str_m = string_malgebra();
  r.checks.push_back(timed_check("mfold computation rule", [&](Check& c) {
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      c.expect(kernel::mfold(eval_m, t) == mendler_rhs(o, eval_m, t), [&] { return "eval at " + term_string(t); });
    });
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)))) {
      auto lhs = kernel::mfold(str_m, t);
      auto rhs = mendler_rhs(o, str_m, t);
      c.expect(lhs == rhs, [&] { return "print at " + term_string(t) + ": " + lhs + " vs " + rhs; });
    }
  }));

  r.checks.push_back(timed_check("lifting coherence", [&](Check& c) {
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      c.expect(kernel::mfold(eval_m, t) == kernel::fold_c(eval_alg, t), [&] { return "eval at " + term_string(t); });
    });
    const auto lifted = kernel::lift(str_alg);
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3))))
      c.expect(kernel::mfold(lifted, t) == kernel::fold_c(str_alg, t), [&] { return "print at " + term_string(t); });
  }));

  r.checks.push_back(timed_check("uniqueness sampling", [&](Check& c) {
    std::vector<Term> chunk;
    auto flush = [&] {
      auto v = kernel::check_uniqueness(eval_m, [](const Term& t) { return oracle_eval(t); }, chunk);
      c.checked += chunk.size() - 1;
      c.expect(v.ok(), [&] { return "verdict " + std::to_string(static_cast<int>(v.status)) + (v.witness ? " at " + term_string(*v.witness) : ""); });
      chunk.clear();
    };
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      chunk.push_back(t);
      if (chunk.size() == 8192) flush();
    });
    if (!chunk.empty()) flush();
  }));

  r.checks.push_back(timed_check("broken hypothesis flagged", [&](Check& c) {
    auto broken = [](const Term& t) {
      auto v = oracle_eval(t);
      if (t.ctor_name() == "add") ++v.vv;
      return v;
    };
    auto samples = enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)));
    auto v = kernel::check_uniqueness(eval_m, broken, samples);
    c.expect(v.status == kernel::UniquenessStatus::HypothesisViolation,
             [&] { return "expected a hypothesis violation, got status " + std::to_string(static_cast<int>(v.status)); });
  }));

  r.checks.push_back(timed_check("coproduct injections", [&](Check& c) {
    for (const auto& n : int_nodes(sum.sum(), pools, {-1, 0, 1})) {
      auto l = sum.project_left(n);
      auto rr = sum.project_right(n);
      c.expect(l.has_value() != rr.has_value(), [&] { return "not exactly one summand: " + int_node_string(n); });
      if (l) c.expect(sum.inject_left(*l) == n, [&] { return "inl . project_left: " + int_node_string(n); });
      if (rr) c.expect(sum.inject_right(*rr) == n, [&] { return "inr . project_right: " + int_node_string(n); });
    }
    for (const auto& a : int_nodes(sum.left(), pools, {-1, 0, 1}))
      for (const auto& b : int_nodes(sum.right(), pools, {-1, 0, 1}))
        c.expect(sum.inject_left(a).ctor != sum.inject_right(b).ctor,
                 [&] { return "inl " + int_node_string(a) + " overlaps inr " + int_node_string(b); });
  }));

  r.checks.push_back(timed_check("representation isomorphism", [&](Check& c) {
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      c.expect(kernel::reify(kernel::reflect(t)) == t, [&] { return term_string(t); });
    });
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)))) {
      auto ft = kernel::reflect(t);
      auto back = kernel::reflect(kernel::reify(ft));
      c.expect(kernel::mfold(eval_m, ft) == kernel::fold_c(eval_alg, t), [&] { return "fold disagreement at " + term_string(t); });
      auto layer = kernel::fmap([](const kernel::FoldTerm& u) { return kernel::reify(u); }, kernel::fold_out(ft));
      c.expect(kernel::mfold(str_m, back) == kernel::mfold(str_m, ft) && layer == kernel::out_(t),
               [&] { return "fold-carrying side at " + term_string(t); });
    }
  }));

  r.checks.push_back(timed_check("handle misuse rejected", [&](Check& c) {
    auto stash = std::make_shared<std::optional<Handle>>();
    kernel::MendlerAlgebra<std::int64_t> leaky{[stash](const kernel::MendlerAlgebra<std::int64_t>::Rec& rec, const Node<Handle>& n) -> std::int64_t {
      if (n.rec.empty()) return 0;
      if (*stash) return rec(**stash);
      *stash = n.rec[0];
      return rec(n.rec[0]) + 1;
    }};
    bool thrown = false;
    try {
      kernel::mfold(leaky, arith::add(arith::add(arith::lit(1), arith::lit(2)), arith::lit(3)));
    } catch (const kernel::HandleMisuse&) {
      thrown = true;
    }
    c.expect(thrown, [] { return "a handle from an outer step resolved inside an inner step"; });
  }));

  return r;
}

// ---------------------------------------------------------------- indexed

/// Builds derivations bottom-up alongside the term enumeration, sharing the
/// sub-derivations of shallower terms.
template <class D, class Make, class Visit>
void for_each_derivation(std::size_t max_depth, Make make, Visit visit) {
  std::unordered_map<const void*, D> memo;
  for_each_term(arith_spec(max_depth), [&](const Term& t) {
    std::vector<const D*> kids;
    for (const auto& k : t.node().rec) kids.push_back(&memo.at(k.node_ptr().get()));
    D d = make(t, kids);
    visit(t, d);
    if (kernel::depth(t) < max_depth) memo.emplace(t.node_ptr().get(), std::move(d));
  });
}

auto eval_maker(const arith::EvalSignature& sig) {
  return [sig](const Term& t, const std::vector<const arith::EvalDerivation*>& k) {
    if (k.empty()) return indexed::derive(sig, "ev1", arith::EvalParams{arith::Ev1{arith::lit_value(t)}});
    const auto& a = k[0]->conclusion();
    const auto& b = k[1]->conclusion();
    arith::Ev2 p{a.trm, b.trm, a.val, b.val, arith::Val{arith::checked_add(a.val.vv, b.val.vv)}};
    return indexed::derive(sig, "ev2", arith::EvalParams{std::move(p)}, {*k[0], *k[1]});
  };
}

auto typof_maker() {
  return [](const Term& t, const std::vector<const arith::TypOfDerivation*>& k) {
    if (k.empty()) return indexed::derive(arith::typof_sig(), "tof1", arith::TypOfParams{arith::Tof1{arith::Val{arith::lit_value(t)}}});
    return indexed::derive(arith::typof_sig(), "tof2", arith::TypOfParams{arith::Tof2{t.node().rec[0], t.node().rec[1]}}, {*k[0], *k[1]});
  };
}

auto istrm_maker() {
  return [](const Term& t, const std::vector<const arith::IsTrmDerivation*>& k) {
    if (k.empty()) return indexed::derive(arith::istrm_sig(), "isLit", arith::IsTrmParams{arith::IsLit{arith::lit_value(t)}});
    return indexed::derive(arith::istrm_sig(), "isAdd", arith::IsTrmParams{arith::IsAdd{t.node().rec[0], t.node().rec[1]}}, {*k[0], *k[1]});
  };
}

using EvalIntNode = indexed::DNode<arith::EvalIndex, arith::EvalParams, std::int64_t>;

std::string eval_node_string(const EvalIntNode& n) {
  std::string s = n.rule_name() + " at " + term_string(n.conclusion.trm) + " =>" + std::to_string(n.conclusion.val.vv) + " [";
  for (std::size_t i = 0; i < n.premises.size(); ++i) s += (i ? " " : "") + std::to_string(n.premises[i].witness);
  return s + "]";
}

template <class K, class P, class C>
C ifold_rhs(const LawOptions& o, const indexed::MendlerAlgebra<K, P, C>& alg, const indexed::Derivation<K, P>& d) {
  const auto brand = kernel::detail::fresh_brand();
  std::uint32_t slot = 0;
  auto handles = ifmap_ut(o, [&](const K&, const indexed::Derivation<K, P>&) { return HandleAccess::mint<kernel::DefaultHandleTag>(slot++, brand); }, d.node());
  typename indexed::MendlerAlgebra<K, P, C>::Rec rec = [&](const K& w, Handle h) {
    const auto& p = d.node().premises.at(HandleAccess::resolve(h, brand));
    if (!(p.index == w)) throw indexed::WrongIndex("recursive call at an index other than the premise's");
    return indexed::ifold(alg, w, p.witness);
  };
  return alg.step(rec, d.conclusion(), handles);
}

/// 3 * first premise + second premise: sensitive to premise order.
indexed::MendlerAlgebra<arith::EvalIndex, arith::EvalParams, std::int64_t> weighted_algebra() {
  using Alg = indexed::MendlerAlgebra<arith::EvalIndex, arith::EvalParams, std::int64_t>;
  return {[](const Alg::Rec& rec, const arith::EvalIndex& w, const indexed::DNode<arith::EvalIndex, arith::EvalParams, Handle>& n) -> std::int64_t {
    if (n.premises.empty()) return w.val.vv;
    return 3 * rec(n.premises[0].index, n.premises[0].witness) + rec(n.premises[1].index, n.premises[1].witness);
  }};
}

Report indexed_suite(const LawOptions& o) {
  Report r{"indexed", {}};
  const auto& sig = arith::eval_sig();

  std::vector<arith::EvalDerivation> shallow;
  for_each_derivation<arith::EvalDerivation>(std::min<std::size_t>(o.arith_depth, 3), eval_maker(sig),
                                             [&](const Term&, const arith::EvalDerivation& d) { shallow.push_back(d); });
  auto as_int = [](const arith::EvalDerivation& d) {
    return indexed::ifmap([](const arith::EvalIndex&, const arith::EvalDerivation& e) { return e.conclusion().val.vv; }, d.node());
  };
  std::vector<EvalIntNode> nodes;
  for (const auto& d : shallow)
    if (kernel::depth(d.conclusion().trm) <= 2) nodes.push_back(as_int(d));

  using IntIFn = std::function<std::int64_t(const arith::EvalIndex&, std::int64_t)>;
  std::vector<std::pair<std::string, IntIFn>> ifns;
  for (const auto& [name, f] : int_fns()) ifns.push_back({name, [f](const arith::EvalIndex&, std::int64_t x) { return f(x); }});
  ifns.push_back({"x+w", [](const arith::EvalIndex& w, std::int64_t x) { return x + w.val.vv; }});

  auto random_node = [&](Rng& rng) {
    auto n = as_int(shallow[rng.pick(shallow.size())]);
    for (auto& p : n.premises) p.witness = rng.in(-1000, 1000);
    return n;
  };
  const auto id = [](const arith::EvalIndex&, std::int64_t x) { return x; };

  r.checks.push_back(timed_check("ifmap identity", [&](Check& c) {
    for (const auto& n : nodes) c.expect(ifmap_ut(o, id, n) == n, [&] { return eval_node_string(n); });
    Rng rng(o.seed + 2);
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto n = random_node(rng);
      c.expect(ifmap_ut(o, id, n) == n, [&] { return eval_node_string(n); });
    }
  }));

  r.checks.push_back(timed_check("ifmap composition", [&](Check& c) {
    for (const auto& n : nodes)
      for (const auto& [fn, f] : ifns)
        for (const auto& [gn, g] : ifns) {
          auto lhs = ifmap_ut(o, [&](const arith::EvalIndex& w, std::int64_t x) { return g(w, f(w, x)); }, n);
          auto rhs = ifmap_ut(o, g, ifmap_ut(o, f, n));
          c.expect(lhs == rhs, [&] { return "f=" + fn + " g=" + gn + " n=" + eval_node_string(n) + " gives " + eval_node_string(lhs) + " vs " + eval_node_string(rhs); });
        }
    Rng rng(o.seed + 3);
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto n = random_node(rng);
      auto f = rng.affine(), g = rng.affine();
      auto lhs = ifmap_ut(o, [&](const arith::EvalIndex&, std::int64_t x) { return g(f(x)); }, n);
      auto rhs = ifmap_ut(o, [&](const arith::EvalIndex&, std::int64_t x) { return g(x); },
                          ifmap_ut(o, [&](const arith::EvalIndex&, std::int64_t x) { return f(x); }, n));
      c.expect(lhs == rhs, [&] { return "f=" + f.str() + " g=" + g.str() + " n=" + eval_node_string(n); });
    }
  }));

  r.checks.push_back(timed_check("din/dout isomorphism", [&](Check& c) {
    auto roundtrip = [&](const Term& t, const auto& d) {
      auto n = indexed::dout(d);
      c.expect(indexed::din(indexed::dout(d)) == d && indexed::dout(indexed::din(n)) == n, [&] { return d.node().sig->name() + " at " + term_string(t); });
    };
    for_each_derivation<arith::EvalDerivation>(o.arith_depth, eval_maker(sig), roundtrip);
    for_each_derivation<arith::TypOfDerivation>(std::min<std::size_t>(o.arith_depth, 3), typof_maker(), roundtrip);
    for_each_derivation<arith::IsTrmDerivation>(std::min<std::size_t>(o.arith_depth, 3), istrm_maker(), roundtrip);
  }));

  r.checks.push_back(timed_check("ifold computation rule", [&](Check& c) {
    const auto weighted = weighted_algebra();
    for_each_derivation<arith::EvalDerivation>(o.arith_depth, eval_maker(sig), [&](const Term& t, const arith::EvalDerivation& d) {
      auto lhs = indexed::ifold(weighted, d.conclusion(), d);
      auto rhs = ifold_rhs(o, weighted, d);
      c.expect(lhs == rhs, [&] { return "weighted at " + term_string(t) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs); });
    });
    const auto pres = arith::preservation_algebra();
    const auto pres_w = arith::istrm_preservation_algebra();
    for (const auto& d : shallow) {
      const auto td = arith::build_typof_derivation(d.conclusion().trm);
      c.expect(indexed::ifold(pres, d.conclusion(), d)(td) == ifold_rhs(o, pres, d)(td),
               [&] { return "preservation at " + term_string(d.conclusion().trm); });
    }
    for_each_derivation<arith::IsTrmDerivation>(std::min<std::size_t>(o.arith_depth, 3), istrm_maker(), [&](const Term& t, const arith::IsTrmDerivation& w) {
      const auto td = arith::build_typof_derivation(t);
      c.expect(indexed::ifold(pres_w, w.conclusion(), w)(td) == ifold_rhs(o, pres_w, w)(td),
               [&] { return "IsTrm preservation at " + term_string(t); });
    });
  }));

  r.checks.push_back(timed_check("din soundness", [&](Check& c) {
    for (const auto& d : shallow) {
      if (kernel::depth(d.conclusion().trm) > 2) continue;
      for (std::int64_t delta : {-1, 0, 1}) {
        auto n = d.node();
        n.conclusion.val.vv += delta;
        if (auto* p = std::get_if<arith::Ev2>(&n.params)) p->v.vv += delta;
        try {
          auto made = indexed::din(n);
          auto v = indexed::validate(made);
          c.expect(v.ok, [&] { return "din accepted an invalid node at " + term_string(n.conclusion.trm) + ": " + v.reason; });
        } catch (const indexed::InvalidDerivation&) {
          ++c.checked;
        }
      }
    }
  }));

  r.checks.push_back(timed_check("index coherence", [&](Check& c) {
    const auto weighted = weighted_algebra();
    for (const auto& d : shallow) {
      const auto& def = d.node().rule_def();
      c.expect(def.conclusion(d.params()) == d.conclusion(), [&] { return "conclusion differs from the rule's at " + term_string(d.conclusion().trm); });
      bool wrong = false;
      try {
        indexed::ifold(weighted, arith::EvalIndex{d.conclusion().trm, arith::Val{d.conclusion().val.vv + 1}}, d);
      } catch (const indexed::WrongIndex&) {
        wrong = true;
      }
      c.expect(wrong, [&] { return "ifold accepted a foreign index at " + term_string(d.conclusion().trm); });
      auto out = arith::preservation(d, arith::build_typof_derivation(d.conclusion().trm));
      c.expect(out.conclusion() == arith::TypOfIndex{arith::lit(d.conclusion().val.vv), {}},
               [&] { return "preservation concluded elsewhere at " + term_string(d.conclusion().trm); });
    }
  }));

  return r;
}

// ---------------------------------------------------------------- mutual

std::string biterm_string(const mutual::BiTerm& t) { return lang::to_sexpr(t); }

using StrBiAlg = mutual::BiMendlerAlgebra<std::string, std::string>;

StrBiAlg string_bialgebra() {
  auto show = [](const StrBiAlg::Rec1& r1, const StrBiAlg::Rec2& r2, const StrBiAlg::HandleNode& n) {
    std::string s = "(" + n.name();
    for (const auto& p : n.payload) s += " " + payload_string(p);
    for (auto h : n.first) s += " " + r1(h);
    s += " |";
    for (auto h : n.second) s += " " + r2(h);
    return s + ")";
  };
  return {show, show};
}

template <class C1, class C2>
std::variant<C1, C2> bifold_rhs(const LawOptions& o, const mutual::BiMendlerAlgebra<C1, C2>& alg, const mutual::BiTerm& t) {
  const auto brand = kernel::detail::fresh_brand();
  std::uint32_t s1 = 0, s2 = 0;
  auto handles = bifmap_ut(
      o, [&](const mutual::BiTerm&) { return HandleAccess::mint<kernel::FirstHandleTag>(s1++, brand); },
      [&](const mutual::BiTerm&) { return HandleAccess::mint<kernel::SecondHandleTag>(s2++, brand); }, t.node());
  typename mutual::BiMendlerAlgebra<C1, C2>::Rec1 rec1 = [&](mutual::Handle1 h) {
    return mutual::bifold_1(alg, t.node().first.at(HandleAccess::resolve(h, brand)));
  };
  typename mutual::BiMendlerAlgebra<C1, C2>::Rec2 rec2 = [&](mutual::Handle2 h) {
    return mutual::bifold_2(alg, t.node().second.at(HandleAccess::resolve(h, brand)));
  };
  if (t.which() == mutual::Component::First) return std::variant<C1, C2>(std::in_place_index<0>, alg.step1(rec1, rec2, handles));
  return std::variant<C1, C2>(std::in_place_index<1>, alg.step2(rec1, rec2, handles));
}

template <class C1, class C2>
std::variant<C1, C2> bifold_lhs(const mutual::BiMendlerAlgebra<C1, C2>& alg, const mutual::BiTerm& t) {
  if (t.which() == mutual::Component::First) return std::variant<C1, C2>(std::in_place_index<0>, mutual::bifold_1(alg, t));
  return std::variant<C1, C2>(std::in_place_index<1>, mutual::bifold_2(alg, t));
}

/// Rule names in pre-order with premise structure, from a Mendler
/// bi-algebra over any indexed bi-signature.
template <class T>
mutual::IndexedBiMendlerAlgebra<T, std::string, std::string> rule_tree_algebra() {
  using Alg = mutual::IndexedBiMendlerAlgebra<T, std::string, std::string>;
  auto body = [](const typename Alg::Rec1& r1, const typename Alg::Rec2& r2, const auto& n) {
    std::string s = n.rule_name() + "[";
    for (const auto& p : n.first) s += " " + r1(p.index, p.witness);
    s += " |";
    for (const auto& p : n.second) s += " " + r2(p.index, p.witness);
    return s + "]";
  };
  Alg a;
  a.step1 = [body](const typename Alg::Rec1& r1, const typename Alg::Rec2& r2, const typename T::K1&, const typename Alg::template HandleNode<0>& n) { return body(r1, r2, n); };
  a.step2 = [body](const typename Alg::Rec1& r1, const typename Alg::Rec2& r2, const typename T::K2&, const typename Alg::template HandleNode<1>& n) { return body(r1, r2, n); };
  return a;
}

template <class T, std::size_t F, class C1, class C2>
auto hfold_rhs(const LawOptions& o, const mutual::IndexedBiMendlerAlgebra<T, C1, C2>& alg, const mutual::BiDerivation<T, F>& d) {
  using Alg = mutual::IndexedBiMendlerAlgebra<T, C1, C2>;
  const auto brand = kernel::detail::fresh_brand();
  std::uint32_t s1 = 0, s2 = 0;
  auto handles = hfmap_ut(
      o, [&](const typename T::K1&, const mutual::BiDerivation<T, 0>&) { return HandleAccess::mint<kernel::FirstHandleTag>(s1++, brand); },
      [&](const typename T::K2&, const mutual::BiDerivation<T, 1>&) { return HandleAccess::mint<kernel::SecondHandleTag>(s2++, brand); }, d.node());
  typename Alg::Rec1 rec1 = [&](const typename T::K1& w, mutual::Handle1 h) {
    const auto& p = d.node().first.at(HandleAccess::resolve(h, brand));
    if (!(p.index == w)) throw indexed::WrongIndex("recursive call at an index other than the premise's");
    return mutual::hfold_1(alg, w, p.witness);
  };
  typename Alg::Rec2 rec2 = [&](const typename T::K2& w, mutual::Handle2 h) {
    const auto& p = d.node().second.at(HandleAccess::resolve(h, brand));
    if (!(p.index == w)) throw indexed::WrongIndex("recursive call at an index other than the premise's");
    return mutual::hfold_2(alg, w, p.witness);
  };
  if constexpr (F == 0) return alg.step1(rec1, rec2, d.conclusion(), handles);
  else return alg.step2(rec1, rec2, d.conclusion(), handles);
}

template <class T, std::size_t F, class C1, class C2>
auto hfold_lhs(const mutual::IndexedBiMendlerAlgebra<T, C1, C2>& alg, const mutual::BiDerivation<T, F>& d) {
  if constexpr (F == 0) return mutual::hfold_1(alg, d.conclusion(), d);
  else return mutual::hfold_2(alg, d.conclusion(), d);
}

/// Typing and step derivations of every enumerated term under small
/// environments.
struct LangDerivations {
  std::vector<lang::DecTypingDerivation> dec_typing;
  std::vector<lang::ExpTypingDerivation> exp_typing;
  std::vector<lang::DecStepDerivation> dec_step;
  std::vector<lang::ExpStepDerivation> exp_step;
};

std::vector<std::pair<lang::EnvE, lang::EnvT>> small_envs() {
  const lang::Typ a = lang::ty("a");
  return {{{}, {}}, {{{lang::id("x"), lang::con("c", a)}}, {{lang::id("x"), a}}}};
}

LangDerivations lang_derivations(const BiEnumeration& terms, lang::Bias bias) {
  LangDerivations out;
  for (const auto& [rho, gamma] : small_envs()) {
    for (const auto& d : terms.first) {
      if (auto t = lang::typecheck_dec(gamma, d, bias)) out.dec_typing.push_back(*t.derivation);
      if (auto s = lang::step_dec(rho, d)) out.dec_step.push_back(s->second);
    }
    for (const auto& e : terms.second) {
      if (auto t = lang::typecheck_exp(gamma, e, bias)) out.exp_typing.push_back(*t.derivation);
      if (auto s = lang::step_exp(rho, e)) out.exp_step.push_back(s->second);
    }
  }
  return out;
}

Report mutual_suite(const LawOptions& o) {
  Report r{"mutual", {}};
  const auto spec = lang_spec(o.lang_depth);
  const auto nodes = int_binodes(lang::syntax_sig(), spec.pools, {-1, 0, 1});
  const auto id = [](std::int64_t x) { return x; };
  auto random_node = [&](Rng& rng) {
    IntBiNode n = nodes[rng.pick(nodes.size())];
    for (auto& x : n.first) x = rng.in(-1000, 1000);
    for (auto& x : n.second) x = rng.in(-1000, 1000);
    return n;
  };

  r.checks.push_back(timed_check("bifmap identity", [&](Check& c) {
    for (const auto& n : nodes) c.expect(bifmap_ut(o, id, id, n) == n, [&] { return int_binode_string(n); });
    Rng rng(o.seed + 4);
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto n = random_node(rng);
      c.expect(bifmap_ut(o, id, id, n) == n, [&] { return int_binode_string(n); });
    }
  }));

  r.checks.push_back(timed_check("bifmap composition", [&](Check& c) {
    const auto& fns = int_fns();
    for (const auto& n : nodes)
      for (std::size_t i = 0; i < fns.size(); ++i)
        for (std::size_t j = 0; j < fns.size(); ++j) {
          const auto& f1 = fns[i].second;
          const auto& g1 = fns[j].second;
          const auto& f2 = fns[j].second;
          const auto& g2 = fns[i].second;
          auto lhs = bifmap_ut(o, [&](std::int64_t x) { return g1(f1(x)); }, [&](std::int64_t x) { return g2(f2(x)); }, n);
          auto rhs = bifmap_ut(o, g1, g2, bifmap_ut(o, f1, f2, n));
          c.expect(lhs == rhs, [&] { return "f=(" + fns[i].first + "," + fns[j].first + ") n=" + int_binode_string(n) + " gives " + int_binode_string(lhs) + " vs " + int_binode_string(rhs); });
        }
    Rng rng(o.seed + 5);
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto n = random_node(rng);
      auto f1 = rng.affine(), g1 = rng.affine(), f2 = rng.affine(), g2 = rng.affine();
      auto lhs = bifmap_ut(o, [&](std::int64_t x) { return g1(f1(x)); }, [&](std::int64_t x) { return g2(f2(x)); }, n);
      auto rhs = bifmap_ut(o, g1, g2, bifmap_ut(o, f1, f2, n));
      c.expect(lhs == rhs, [&] { return "n=" + int_binode_string(n) + " gives " + int_binode_string(lhs) + " vs " + int_binode_string(rhs); });
    }
  }));

  const auto terms = enumerate_biterms(spec);
  auto each_term = [&](const auto& f) {
    for (const auto& t : terms.first) f(t);
    for (const auto& t : terms.second) f(t);
  };

  r.checks.push_back(timed_check("bin/bout isomorphism", [&](Check& c) {
    each_term([&](const mutual::BiTerm& t) {
      auto n = mutual::bout(t);
      c.expect(mutual::bin(mutual::bout(t)) == t && mutual::bout(mutual::bin(n)) == n, [&] { return biterm_string(t); });
    });
  }));

  r.checks.push_back(timed_check("bifold computation rules", [&](Check& c) {
    const auto show = string_bialgebra();
    const auto rebuild = mutual::rebuild_bialgebra();
    each_term([&](const mutual::BiTerm& t) {
      auto lhs = bifold_lhs(show, t);
      auto rhs = bifold_rhs(o, show, t);
      c.expect(lhs == rhs, [&] {
        auto str = [](const std::variant<std::string, std::string>& v) { return v.index() == 0 ? std::get<0>(v) : std::get<1>(v); };
        return "print at " + biterm_string(t) + ": " + str(lhs) + " vs " + str(rhs);
      });
      c.expect(bifold_lhs(rebuild, t) == bifold_rhs(o, rebuild, t), [&] { return "rebuild at " + biterm_string(t); });
    });
  }));

  r.checks.push_back(timed_check("rebuild identity", [&](Check& c) {
    const auto rebuild = mutual::rebuild_bialgebra();
    each_term([&](const mutual::BiTerm& t) {
      auto back = t.which() == mutual::Component::First ? mutual::bifold_1(rebuild, t) : mutual::bifold_2(rebuild, t);
      c.expect(back == t, [&] { return biterm_string(t); });
    });
  }));

  const auto ds = lang_derivations(terms, lang::Bias::Right);

  r.checks.push_back(timed_check("hin/hout isomorphism", [&](Check& c) {
    auto roundtrip = [&](const auto& d) {
      using D = std::decay_t<decltype(d)>;
      using T = std::conditional_t<std::is_same_v<D, lang::DecTypingDerivation> || std::is_same_v<D, lang::ExpTypingDerivation>, lang::TypingTraits, lang::StepTraits>;
      constexpr std::size_t F = std::is_same_v<D, lang::DecTypingDerivation> || std::is_same_v<D, lang::DecStepDerivation> ? 0 : 1;
      auto n = mutual::hout(d);
      c.expect(mutual::hin<T, F>(mutual::hout(d)) == d && mutual::hout(mutual::hin<T, F>(n)) == n,
               [&] { return d.node().family_name() + "/" + d.rule_name(); });
    };
    for (const auto& d : ds.dec_typing) roundtrip(d);
    for (const auto& d : ds.exp_typing) roundtrip(d);
    for (const auto& d : ds.dec_step) roundtrip(d);
    for (const auto& d : ds.exp_step) roundtrip(d);
  }));

  r.checks.push_back(timed_check("hfold computation rules", [&](Check& c) {
    const auto typ_alg = rule_tree_algebra<lang::TypingTraits>();
    const auto step_alg = rule_tree_algebra<lang::StepTraits>();
    auto check = [&](const auto& alg, const auto& d) {
      auto lhs = hfold_lhs(alg, d);
      auto rhs = hfold_rhs(o, alg, d);
      c.expect(lhs == rhs, [&] { return d.node().family_name() + ": " + lhs + " vs " + rhs; });
    };
    for (const auto& d : ds.dec_typing) check(typ_alg, d);
    for (const auto& d : ds.exp_typing) check(typ_alg, d);
    for (const auto& d : ds.dec_step) check(step_alg, d);
    for (const auto& d : ds.exp_step) check(step_alg, d);
  }));

  return r;
}

// ---------------------------------------------------------------- arith

Report arith_suite(const LawOptions& o) {
  Report r{"arith", {}};
  const arith::EvalSignature sig = o.eval_sig.value_or(arith::eval_sig());

  r.checks.push_back(timed_check("oracle equivalence", [&](Check& c) {
    for_each_term(arith_spec(o.arith_depth), [&](const Term& t) {
      c.expect(arith::eval(t) == oracle_eval(t), [&] { return term_string(t); });
    });
  }));

  r.checks.push_back(timed_check("agreement (built derivations)", [&](Check& c) {
    for_each_derivation<arith::EvalDerivation>(o.arith_depth, eval_maker(sig), [&](const Term& t, const arith::EvalDerivation& d) {
      c.expect(d.conclusion() == arith::EvalIndex{t, arith::eval(t)} && indexed::check_node(d.node()) == std::nullopt,
               [&] { return term_string(t); });
    });
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)))) {
      auto d = arith::build_eval_derivation(t, sig);
      auto v = indexed::validate(d);
      c.expect(v.ok && d.conclusion() == arith::EvalIndex{t, arith::eval(t)}, [&] { return "builder at " + term_string(t) + " " + v.reason; });
    }
  }));

  r.checks.push_back(timed_check("agreement (validating derivations)", [&](Check& c) {
    // Every one-step variation of a built derivation's claimed value: the
    // ones that still validate must conclude at eval.
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)))) {
      if (t.ctor_name() != "add") continue;
      const auto& kids = t.node().rec;
      auto d1 = arith::build_eval_derivation(kids[0], sig);
      auto d2 = arith::build_eval_derivation(kids[1], sig);
      const std::int64_t truth = arith::eval(t).vv;
      for (std::int64_t claim = truth - 2; claim <= truth + 2; ++claim) {
        arith::Ev2 p{kids[0], kids[1], d1.conclusion().val, d2.conclusion().val, arith::Val{claim}};
        std::optional<arith::EvalDerivation> d;
        try {
          d = indexed::derive(sig, "ev2", arith::EvalParams{p}, {d1, d2});
        } catch (const indexed::InvalidDerivation&) {
          ++c.checked;
          continue;
        }
        if (!indexed::validate(*d)) {
          ++c.checked;
          continue;
        }
        auto agreement = arith::eval_of_derivation(*d);
        c.expect(agreement.ok, [&] { return term_string(t) + ": " + agreement.reason; });
      }
    }
  }));

  r.checks.push_back(timed_check("preservation", [&](Check& c) {
    struct Inputs {
      arith::EvalDerivation eval;
      arith::TypOfDerivation typing;
      arith::IsTrmDerivation witness;
    };
    auto make = [ev = eval_maker(arith::eval_sig()), tf = typof_maker(), is = istrm_maker()](const Term& t, const std::vector<const Inputs*>& k) {
      std::vector<const arith::EvalDerivation*> e;
      std::vector<const arith::TypOfDerivation*> f;
      std::vector<const arith::IsTrmDerivation*> w;
      for (const auto* i : k) {
        e.push_back(&i->eval);
        f.push_back(&i->typing);
        w.push_back(&i->witness);
      }
      return Inputs{ev(t, e), tf(t, f), is(t, w)};
    };
    for_each_derivation<Inputs>(o.arith_depth, make, [&](const Term& t, const Inputs& in) {
      const auto& td = in.typing;
      auto a = arith::preservation(in.eval, td);
      auto b = arith::preservation_via_istrm(in.witness, td);
      const arith::TypOfIndex goal{arith::lit(arith::eval(t).vv), {}};
      c.expect(indexed::validate(a).ok && indexed::validate(b).ok && a.conclusion() == goal && b.conclusion() == goal,
               [&] { return term_string(t); });
    });
  }));

  r.checks.push_back(timed_check("eval_of_derivation", [&](Check& c) {
    for (const auto& t : enumerate_terms(arith_spec(std::min<std::size_t>(o.arith_depth, 3)))) {
      auto ag = arith::eval_of_derivation(arith::build_eval_derivation(t, sig));
      c.expect(ag.ok, [&] { return term_string(t) + ": " + ag.reason; });
    }
    auto bogus = indexed::Derivation<arith::EvalIndex, arith::EvalParams>::forge(
        {sig, 0, arith::Ev1{1}, {}, arith::EvalIndex{arith::lit(1), arith::Val{2}}});
    bool rejected = false;
    try {
      arith::eval_of_derivation(bogus);
    } catch (const indexed::InvalidDerivation&) {
      rejected = true;
    }
    c.expect(rejected, [] { return "a forged ev1 concluding (lit 1, val 2) was accepted"; });
  }));

  return r;
}

// ---------------------------------------------------------------- lang

Report lang_suite(const LawOptions& o) {
  Report r{"lang", {}};
  const auto terms = enumerate_biterms(lang_spec(o.lang_depth));
  GenConfig g;
  g.seed = o.seed;
  g.count = o.fuzz_count;
  g.bias = o.bias;
  const auto corpus = gen_corpus(g);

  r.checks.push_back(timed_check("step determinism", [&](Check& c) {
    for (const auto& [rho, gamma] : small_envs()) {
      for (const auto& e : terms.second) {
        auto a = lang::step_exp(rho, e), b = lang::step_exp(rho, e);
        c.expect(a.has_value() == b.has_value() && (!a || (a->first == b->first && a->second == b->second)), [&] { return lang::to_sexpr(e); });
      }
      for (const auto& d : terms.first) {
        auto a = lang::step_dec(rho, d), b = lang::step_dec(rho, d);
        c.expect(a.has_value() == b.has_value() && (!a || (a->first == b->first && a->second == b->second)), [&] { return lang::to_sexpr(d); });
      }
    }
  }));

  r.checks.push_back(timed_check("value preservation", [&](Check& c) {
    for (const auto& [rho, gamma] : small_envs())
      for (const auto& e : terms.second)
        if (lang::is_value(e)) c.expect(!lang::step_exp(rho, e), [&] { return lang::to_sexpr(e); });
  }));

  r.checks.push_back(timed_check("derivation soundness", [&](Check& c) {
    const auto ds = lang_derivations(terms, o.bias);
    auto ok = [&](const auto& d) { c.expect(mutual::validate(d).ok, [&] { return d.node().family_name() + "/" + d.rule_name(); }); };
    for (const auto& d : ds.dec_typing) ok(d);
    for (const auto& d : ds.exp_typing) ok(d);
    for (const auto& d : ds.dec_step) ok(d);
    for (const auto& d : ds.exp_step) ok(d);
    for (const auto& cfg : corpus) {
      c.expect(indexed::validate(*cfg.envd).ok, [&] { return "environment typing of sample " + std::to_string(cfg.index); });
      if (cfg.exp_typing) ok(*cfg.exp_typing);
      if (cfg.dec_typing) ok(*cfg.dec_typing);
    }
  }));

  r.checks.push_back(timed_check("typing determinism", [&](Check& c) {
    for (const auto& [rho, gamma] : small_envs()) {
      for (const auto& e : terms.second) {
        auto a = lang::typecheck_exp(gamma, e, o.bias), b = lang::typecheck_exp(gamma, e, o.bias);
        c.expect(a.derivation == b.derivation && a.error.message == b.error.message, [&] { return lang::to_sexpr(e); });
      }
      for (const auto& d : terms.first) {
        auto a = lang::typecheck_dec(gamma, d, o.bias), b = lang::typecheck_dec(gamma, d, o.bias);
        c.expect(a.derivation == b.derivation && a.error.message == b.error.message, [&] { return lang::to_sexpr(d); });
      }
    }
  }));

  r.checks.push_back(timed_check("subject reduction (enumerated)", [&](Check& c) {
    for (const auto& [rho, gamma] : small_envs()) {
      auto envd = lang::typecheck_env(rho, o.bias);
      if (!envd) {
        c.fail("environment " + lang::to_sexpr(rho) + " does not typecheck");
        continue;
      }
      for (const auto& e : terms.second) {
        auto t = lang::typecheck_exp(gamma, e, o.bias);
        if (!t) continue;
        auto out = run_typed(rho, *envd.derivation, e, t.derivation, std::nullopt, 10, o.bias);
        c.expect(out.ending != Ending::Failed, [&] { return out.message; });
      }
      for (const auto& d : terms.first) {
        auto t = lang::typecheck_dec(gamma, d, o.bias);
        if (!t) continue;
        auto out = run_typed(rho, *envd.derivation, d, std::nullopt, t.derivation, 10, o.bias);
        c.expect(out.ending != Ending::Failed, [&] { return out.message; });
      }
    }
  }));

  r.checks.push_back(timed_check("subject reduction (generated)", [&](Check& c) {
    FuzzOptions f;
    f.seed = o.seed;
    f.count = o.fuzz_count;
    f.bias = o.bias;
    f.workers = 1;
    auto res = fuzz_preservation(f);
    c.checked += res.configs - res.counterexamples.size();
    for (const auto& ce : res.counterexamples) c.fail("sample " + std::to_string(ce.index) + ": " + ce.message);
    if (res.skipped) c.fail(std::to_string(res.skipped) + " samples could not be generated");
  }));

  r.checks.push_back(timed_check("parse/print round trip", [&](Check& c) {
    auto rt = [&](const mutual::BiTerm& t) {
      const auto s = lang::to_sexpr(t);
      c.expect(lang::parse_term(s) == t, [&] { return s; });
    };
    for (const auto& t : terms.first) rt(t);
    for (const auto& t : terms.second) rt(t);
    for (const auto& cfg : corpus) {
      rt(cfg.term);
      const auto s = lang::to_sexpr(cfg.rho);
      c.expect(lang::parse_env_e(s) == cfg.rho, [&] { return s; });
      const auto g = lang::to_sexpr(cfg.gamma);
      c.expect(lang::parse_env_t(g) == cfg.gamma, [&] { return g; });
    }
  }));

  return r;
}

}  // namespace

Report law_suite(Suite s, const LawOptions& opts) {
  switch (s) {
    case Suite::Kernel: return kernel_suite(opts);
    case Suite::Indexed: return indexed_suite(opts);
    case Suite::Mutual: return mutual_suite(opts);
    case Suite::Arith: return arith_suite(opts);
    case Suite::Lang: return lang_suite(opts);
  }
  return {};
}

}  // namespace mdt::testkit
