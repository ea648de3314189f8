#pragma once

#include <any>
#include <functional>
#include <memory>

#include "mdt/kernel/algebra.hpp"

namespace mdt::kernel {

/// Fold-carrying term: a term *is* the procedure that runs a Mendler algebra
/// over it. Carriers are erased to std::any so one value can serve every
/// carrier type.
class FoldTerm {
 public:
  using ErasedAlgebra = MendlerAlgebra<std::any>;
  using Runner = std::function<std::any(const std::shared_ptr<const ErasedAlgebra>&)>;

  explicit FoldTerm(Runner run) : run_(std::move(run)) {}

  std::any run_erased(const std::shared_ptr<const ErasedAlgebra>& alg) const { return run_(alg); }

 private:
  Runner run_;
};

template <class C>
FoldTerm::ErasedAlgebra erase(MendlerAlgebra<C> alg) {
  return {[alg = std::move(alg)](const FoldTerm::ErasedAlgebra::Rec& rec, const Node<Handle>& node) -> std::any {
    return alg.step([rec](Handle h) -> C { return std::any_cast<C>(rec(h)); }, node);
  }};
}

/// in for the fold-carrying representation: run the algebra's step with the
/// children as recursive positions.
FoldTerm fold_in(Node<FoldTerm> node);

template <class C>
C mfold(const MendlerAlgebra<C>& alg, const FoldTerm& t) {
  auto erased = std::make_shared<const FoldTerm::ErasedAlgebra>(erase(alg));
  return std::any_cast<C>(t.run_erased(erased));
}

/// out for the fold-carrying representation, itself a fold.
Node<FoldTerm> fold_out(const FoldTerm& t);

/// Fold-carrying term to tree term.
Term reify(const FoldTerm& t);
/// Tree term to fold-carrying term.
FoldTerm reflect(const Term& t);

}  // namespace mdt::kernel
