#include "mdt/arith/preservation.hpp"

#include <unordered_map>

namespace mdt::arith {

namespace {

std::int64_t literal_of(const TypOfDerivation& d) { return lit_value(d.conclusion().trm); }

TypOfDerivation literal_typing(std::int64_t x) {
  thread_local std::unordered_map<std::int64_t, TypOfDerivation> cache;
  if (auto it = cache.find(x); it != cache.end()) return it->second;
  auto d = indexed::derive(typof_sig(), "tof1", TypOfParams{Tof1{Val{x}}});
  if (cache.size() < 4096) cache.emplace(x, d);
  return d;
}

void require_valid(const auto& d, const char* what) {
  if (d.certified()) return;
  if (auto v = indexed::validate(d); !v) throw indexed::InvalidDerivation(v.rule, std::string(what) + ": " + v.reason);
}

}  // namespace

indexed::MendlerAlgebra<EvalIndex, EvalParams, TypOfTransformer> preservation_algebra() {
  using Alg = indexed::MendlerAlgebra<EvalIndex, EvalParams, TypOfTransformer>;
  return {[](const Alg::Rec& rec, const EvalIndex& w,
             const indexed::DNode<EvalIndex, EvalParams, kernel::Handle>& n) -> TypOfTransformer {
    if (std::holds_alternative<Ev1>(n.params)) {
      return [w](const TypOfDerivation& td) {
        if (!(td.conclusion().trm == w.trm)) throw indexed::WrongIndex("typing is not about the evaluated term");
        return literal_typing(w.val.vv);
      };
    }
    auto ih1 = rec(n.premises.at(0).index, n.premises[0].witness);
    auto ih2 = rec(n.premises.at(1).index, n.premises[1].witness);
    return [w, ih1 = std::move(ih1), ih2 = std::move(ih2)](const TypOfDerivation& td) {
      if (!(td.conclusion().trm == w.trm) || td.rule_name() != "tof2")
        throw indexed::WrongIndex("typing is not about the evaluated term");
      const std::int64_t x1 = literal_of(ih1(td.child(0)));
      const std::int64_t x2 = literal_of(ih2(td.child(1)));
      return literal_typing(checked_add(x1, x2));
    };
  }};
}

indexed::MendlerAlgebra<IsTrmIndex, IsTrmParams, TypOfTransformer> istrm_preservation_algebra() {
  using Alg = indexed::MendlerAlgebra<IsTrmIndex, IsTrmParams, TypOfTransformer>;
  return {[](const Alg::Rec& rec, const IsTrmIndex& w,
             const indexed::DNode<IsTrmIndex, IsTrmParams, kernel::Handle>& n) -> TypOfTransformer {
    if (const auto* p = std::get_if<IsLit>(&n.params)) {
      return [w, x = p->x](const TypOfDerivation& td) {
        if (!(td.conclusion().trm == w.trm)) throw indexed::WrongIndex("typing is not about the lifted term");
        return literal_typing(x);
      };
    }
    auto ih1 = rec(n.premises.at(0).index, n.premises[0].witness);
    auto ih2 = rec(n.premises.at(1).index, n.premises[1].witness);
    return [w, ih1 = std::move(ih1), ih2 = std::move(ih2)](const TypOfDerivation& td) {
      if (!(td.conclusion().trm == w.trm) || td.rule_name() != "tof2")
        throw indexed::WrongIndex("typing is not about the lifted term");
      return literal_typing(checked_add(literal_of(ih1(td.child(0))), literal_of(ih2(td.child(1)))));
    };
  }};
}

TypOfDerivation preservation(const EvalDerivation& d, const TypOfDerivation& td) {
  require_valid(d, "Eval input");
  require_valid(td, "TypOf input");
  if (!(d.conclusion().trm == td.conclusion().trm)) throw indexed::WrongIndex("Eval and TypOf inputs are about different terms");
  static const auto alg = preservation_algebra();
  return indexed::ifold(alg, d.conclusion(), d)(td);
}

TypOfDerivation preservation_via_istrm(const IsTrmDerivation& w, const TypOfDerivation& td) {
  require_valid(w, "IsTrm input");
  require_valid(td, "TypOf input");
  if (!(w.conclusion().trm == td.conclusion().trm)) throw indexed::WrongIndex("IsTrm and TypOf inputs are about different terms");
  static const auto alg = istrm_preservation_algebra();
  return indexed::ifold(alg, w.conclusion(), w)(td);
}

}  // namespace mdt::arith
