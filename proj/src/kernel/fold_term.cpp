#include "mdt/kernel/fold_term.hpp"

namespace mdt::kernel {

FoldTerm fold_in(Node<FoldTerm> node) {
  check_shape(node);
  auto shared = std::make_shared<const Node<FoldTerm>>(std::move(node));
  return FoldTerm([shared](const std::shared_ptr<const FoldTerm::ErasedAlgebra>& alg) -> std::any {
    return mendler_step(*alg, shared, [alg](const FoldTerm& child) { return child.run_erased(alg); });
  });
}

Node<FoldTerm> fold_out(const FoldTerm& t) {
  MendlerAlgebra<Node<FoldTerm>> out_alg{
      [](const MendlerAlgebra<Node<FoldTerm>>::Rec& rec, const Node<Handle>& node) {
        return fmap([&rec](Handle h) { return fold_in(rec(h)); }, node);
      }};
  return mfold(out_alg, t);
}

Term reify(const FoldTerm& t) {
  return mfold(lift(rebuild_algebra()), t);
}

FoldTerm reflect(const Term& t) {
  return fold_c(CAlgebra<FoldTerm>{[](const Node<FoldTerm>& n) { return fold_in(n); }}, t);
}

}  // namespace mdt::kernel
