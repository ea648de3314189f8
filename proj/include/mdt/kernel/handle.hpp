#pragma once

#include <cstdint>
#include <stdexcept>

namespace mdt::kernel {

namespace detail {
struct HandleAccess;
}

/// Opaque stand-in for a recursive position inside a Mendler step.
///
/// A handle has no observers: the only thing a step can do with one is hand
/// it back to the recursion procedure it was issued with. Every handle is
/// branded with the nonce of the step invocation that minted it, so passing
/// it to any other step's recursion fails fast.
template <class Tag>
class BasicHandle {
 public:
  BasicHandle(const BasicHandle&) = default;
  BasicHandle& operator=(const BasicHandle&) = default;

 private:
  friend struct detail::HandleAccess;
  BasicHandle(std::uint32_t slot, std::uint64_t brand) : slot_(slot), brand_(brand) {}

  std::uint32_t slot_;
  std::uint64_t brand_;
};

struct DefaultHandleTag;
struct FirstHandleTag;
struct SecondHandleTag;

using Handle = BasicHandle<DefaultHandleTag>;

class HandleMisuse : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

std::uint64_t fresh_brand();

struct HandleAccess {
  template <class Tag>
  static BasicHandle<Tag> mint(std::uint32_t slot, std::uint64_t brand) {
    return BasicHandle<Tag>(slot, brand);
  }

  template <class Tag>
  static std::uint32_t resolve(const BasicHandle<Tag>& h, std::uint64_t brand) {
    if (h.brand_ != brand) throw HandleMisuse("handle used outside the step that received it");
    return h.slot_;
  }
};

}  // namespace detail
}  // namespace mdt::kernel
