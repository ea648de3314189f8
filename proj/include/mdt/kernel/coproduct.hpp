#pragma once

#include <optional>

#include "mdt/kernel/algebra.hpp"

namespace mdt::kernel {

/// Tagged union F1 + F2 of two signatures.
///
/// The summed signature lists the left constructors first, then the right
/// ones; constructor names must be disjoint so smart constructors can find
/// them by name.
class CoproductSignature {
 public:
  CoproductSignature(SignatureRef left, SignatureRef right, std::string name = {});

  const SignatureRef& left() const { return left_; }
  const SignatureRef& right() const { return right_; }
  const SignatureRef& sum() const { return sum_; }

  template <class A>
  Node<A> inject_left(Node<A> n) const {
    if (n.sig != left_) throw MalformedNode("inject_left: node is not over the left summand");
    n.sig = sum_;
    return n;
  }

  template <class A>
  Node<A> inject_right(Node<A> n) const {
    if (n.sig != right_) throw MalformedNode("inject_right: node is not over the right summand");
    n.sig = sum_;
    n.ctor += left_->size();
    return n;
  }

  template <class A>
  std::optional<Node<A>> project_left(Node<A> n) const {
    if (n.sig != sum_ || n.ctor >= left_->size()) return std::nullopt;
    n.sig = left_;
    return n;
  }

  template <class A>
  std::optional<Node<A>> project_right(Node<A> n) const {
    if (n.sig != sum_ || n.ctor < left_->size()) return std::nullopt;
    n.sig = right_;
    n.ctor -= left_->size();
    return n;
  }

  /// Case analysis on the summand: inl e goes to `on_left`, inr e to `on_right`.
  template <class C>
  CAlgebra<C> algebra(CAlgebra<C> on_left, CAlgebra<C> on_right) const {
    return {[self = *this, l = std::move(on_left), r = std::move(on_right)](const Node<C>& n) -> C {
      if (auto left = self.project_left(n)) return l.apply(*left);
      if (auto right = self.project_right(n)) return r.apply(*right);
      throw MalformedNode("coproduct algebra applied to a foreign node");
    }};
  }

 private:
  SignatureRef left_;
  SignatureRef right_;
  SignatureRef sum_;
};

}  // namespace mdt::kernel
