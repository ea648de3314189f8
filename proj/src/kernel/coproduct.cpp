#include "mdt/kernel/coproduct.hpp"

namespace mdt::kernel {

CoproductSignature::CoproductSignature(SignatureRef left, SignatureRef right, std::string name)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!left_ || !right_) throw MalformedSignature("coproduct of a null signature");
  std::vector<Constructor> ctors(left_->constructors().begin(), left_->constructors().end());
  ctors.insert(ctors.end(), right_->constructors().begin(), right_->constructors().end());
  if (name.empty()) name = left_->name() + "+" + right_->name();
  sum_ = Signature::make(std::move(name), std::move(ctors));
}

}  // namespace mdt::kernel
