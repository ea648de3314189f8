#include "mdt/kernel/handle.hpp"

#include <atomic>

namespace mdt::kernel::detail {

std::uint64_t fresh_brand() {
  static std::atomic<std::uint64_t> next{1};
  return next.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace mdt::kernel::detail
