#pragma once

#include <functional>
#include <memory>

#include "mdt/mutual/biterm.hpp"

namespace mdt::mutual {

using Handle1 = kernel::BasicHandle<kernel::FirstHandleTag>;
using Handle2 = kernel::BasicHandle<kernel::SecondHandleTag>;

/// Mendler bi-algebra: one step per sort, both receiving both recursion
/// procedures. A single value carries the pair.
template <class C1, class C2>
struct BiMendlerAlgebra {
  using Rec1 = std::function<C1(Handle1)>;
  using Rec2 = std::function<C2(Handle2)>;
  using HandleNode = BiNode<Handle1, Handle2>;

  std::function<C1(const Rec1&, const Rec2&, const HandleNode&)> step1;
  std::function<C2(const Rec1&, const Rec2&, const HandleNode&)> step2;
};

namespace detail {

template <class C1, class C2>
struct BiFolder {
  std::shared_ptr<const BiMendlerAlgebra<C1, C2>> alg;

  template <class R>
  R run(const BiTerm& t) const {
    using Alg = BiMendlerAlgebra<C1, C2>;
    const std::uint64_t brand = kernel::detail::fresh_brand();
    std::uint32_t s1 = 0, s2 = 0;
    auto handles = bifmap([&](const BiTerm&) { return kernel::detail::HandleAccess::mint<kernel::FirstHandleTag>(s1++, brand); },
                          [&](const BiTerm&) { return kernel::detail::HandleAccess::mint<kernel::SecondHandleTag>(s2++, brand); },
                          t.node());
    BiFolder self = *this;
    typename Alg::Rec1 rec1 = [self, t, brand](Handle1 h) {
      return self.template run<C1>(t.node().first.at(kernel::detail::HandleAccess::resolve(h, brand)));
    };
    typename Alg::Rec2 rec2 = [self, t, brand](Handle2 h) {
      return self.template run<C2>(t.node().second.at(kernel::detail::HandleAccess::resolve(h, brand)));
    };
    if constexpr (std::is_same_v<R, C1> && std::is_same_v<R, C2>) {
      return t.which() == Component::First ? alg->step1(rec1, rec2, handles) : alg->step2(rec1, rec2, handles);
    } else if constexpr (std::is_same_v<R, C1>) {
      return alg->step1(rec1, rec2, handles);
    } else {
      return alg->step2(rec1, rec2, handles);
    }
  }
};

}  // namespace detail

/// Fold entered at the first sort.
template <class C1, class C2>
C1 bifold_1(const BiMendlerAlgebra<C1, C2>& alg, const BiTerm& t) {
  if (t.which() != Component::First) throw WrongComponent("bifold_1 applied to a second-sort term");
  return detail::BiFolder<C1, C2>{std::make_shared<const BiMendlerAlgebra<C1, C2>>(alg)}.template run<C1>(t);
}

/// Fold entered at the second sort.
template <class C1, class C2>
C2 bifold_2(const BiMendlerAlgebra<C1, C2>& alg, const BiTerm& t) {
  if (t.which() != Component::Second) throw WrongComponent("bifold_2 applied to a first-sort term");
  return detail::BiFolder<C1, C2>{std::make_shared<const BiMendlerAlgebra<C1, C2>>(alg)}.template run<C2>(t);
}

/// Bi-algebra whose folds rebuild their input.
inline BiMendlerAlgebra<BiTerm, BiTerm> rebuild_bialgebra() {
  using Alg = BiMendlerAlgebra<BiTerm, BiTerm>;
  auto rebuild = [](const Alg::Rec1& r1, const Alg::Rec2& r2, const Alg::HandleNode& n) {
    return bin(bifmap(r1, r2, n));
  };
  return {rebuild, rebuild};
}

}  // namespace mdt::mutual
