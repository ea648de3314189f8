#include "mdt/testkit/oracle.hpp"

#include <stdexcept>

namespace mdt::testkit {

namespace {

std::int64_t value(const kernel::Term& t) {
  const auto& n = t.node();
  if (n.name() == "lit") return std::get<std::int64_t>(n.payload.at(0));
  if (n.name() == "add") {
    std::int64_t out = 0;
    if (__builtin_add_overflow(value(n.rec.at(0)), value(n.rec.at(1)), &out)) throw std::overflow_error("oracle_eval overflow");
    return out;
  }
  throw std::invalid_argument("oracle_eval: unexpected constructor " + n.name());
}

}  // namespace

arith::Val oracle_eval(const kernel::Term& t) { return arith::Val{value(t)}; }

}  // namespace mdt::testkit
