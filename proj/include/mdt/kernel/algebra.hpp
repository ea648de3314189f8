#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>

#include "mdt/kernel/handle.hpp"
#include "mdt/kernel/term.hpp"

namespace mdt::kernel {

/// Conventional algebra: a structure map F C -> C.
template <class C>
struct CAlgebra {
  std::function<C(const Node<C>&)> apply;
};

/// Mendler algebra: the step sees recursive positions only as opaque handles
/// and obtains their results through `rec`.
template <class C>
struct MendlerAlgebra {
  using Rec = std::function<C(Handle)>;
  std::function<C(const Rec&, const Node<Handle>&)> step;
};

/// Runs one Mendler step over `node`, resolving handles through `recurse`.
///
/// The recursion procedure handed to the step owns everything it needs, so a
/// step may return a closure that calls it later.
template <class C, class X, class F>
C mendler_step(const MendlerAlgebra<C>& alg, std::shared_ptr<const Node<X>> node, F recurse) {
  const std::uint64_t brand = detail::fresh_brand();
  Node<Handle> handles{node->sig, node->ctor, {}, node->payload};
  handles.rec.reserve(node->rec.size());
  for (std::size_t i = 0; i < node->rec.size(); ++i)
    handles.rec.push_back(detail::HandleAccess::mint<DefaultHandleTag>(static_cast<std::uint32_t>(i), brand));
  typename MendlerAlgebra<C>::Rec rec = [node = std::move(node), recurse = std::move(recurse), brand](Handle h) -> C {
    return recurse(node->rec.at(detail::HandleAccess::resolve(h, brand)));
  };
  return alg.step(rec, handles);
}

/// Catamorphism: fold_c(alg, in_(n)) = alg.apply(fmap(fold_c(alg, .), n)).
template <class C>
C fold_c(const CAlgebra<C>& alg, const Term& t) {
  return alg.apply(fmap([&alg](const Term& child) { return fold_c(alg, child); }, out_(t)));
}

namespace detail {
template <class C>
C mfold_shared(const std::shared_ptr<const MendlerAlgebra<C>>& alg, const Term& t) {
  return mendler_step(*alg, t.node_ptr(), [alg](const Term& child) { return mfold_shared(alg, child); });
}
}  // namespace detail

/// Mendler iteration: mfold(m, in_(n)) = m.step(mfold(m, .), n-with-handles).
template <class C>
C mfold(const MendlerAlgebra<C>& alg, const Term& t) {
  return detail::mfold_shared(std::make_shared<const MendlerAlgebra<C>>(alg), t);
}

/// The canonical Mendler algebra of a conventional one: apply after mapping rec.
template <class C>
MendlerAlgebra<C> lift(CAlgebra<C> alg) {
  return {[alg = std::move(alg)](const typename MendlerAlgebra<C>::Rec& rec, const Node<Handle>& node) {
    return alg.apply(fmap(rec, node));
  }};
}

/// in_ . fmap(m); pre_in(identity, .) is in_.
template <class C, class M>
Term pre_in(M&& m, const Node<C>& node) {
  return in_(fmap(std::forward<M>(m), node));
}

/// Algebra whose fold rebuilds its input.
inline CAlgebra<Term> rebuild_algebra() {
  return {[](const Node<Term>& n) { return in_(n); }};
}

enum class UniquenessStatus { Ok, HypothesisViolation, UniquenessViolation, UnsupportedCarrier };

struct UniquenessVerdict {
  UniquenessStatus status = UniquenessStatus::Ok;
  std::size_t checked = 0;
  std::optional<Term> witness;

  bool ok() const { return status == UniquenessStatus::Ok; }
};

/// Sampled uniqueness: if `h` satisfies h(in_ n) = alg.step(h, n) on every
/// sample, it must agree with mfold(alg, .) there.
template <class C, class H>
UniquenessVerdict check_uniqueness(const MendlerAlgebra<C>& alg, H h, std::span<const Term> samples) {
  if constexpr (!std::equality_comparable<C>) {
    return {UniquenessStatus::UnsupportedCarrier, 0, std::nullopt};
  } else {
    auto hyp = std::make_shared<H>(std::move(h));
    for (const auto& t : samples) {
      C unfolded = mendler_step(alg, t.node_ptr(), [hyp](const Term& child) -> C { return (*hyp)(child); });
      if (!((*hyp)(t) == unfolded)) return {UniquenessStatus::HypothesisViolation, 0, t};
    }
    UniquenessVerdict verdict;
    for (const auto& t : samples) {
      if (!((*hyp)(t) == mfold(alg, t))) return {UniquenessStatus::UniquenessViolation, verdict.checked, t};
      ++verdict.checked;
    }
    return verdict;
  }
}

}  // namespace mdt::kernel
