#include "mdt/arith/relations.hpp"

#include "mdt/indexed/json.hpp"

namespace mdt::arith {

using indexed::SideCondition;
using indexed::variant_rule;

const EvalSignature& eval_sig() {
  static const EvalSignature sig = indexed::Signature<EvalIndex, EvalParams>::make(
      "Eval",
      {variant_rule<Ev1, EvalIndex, EvalParams>(
           "ev1", nullptr, [](const Ev1& p) { return EvalIndex{lit(p.x), Val{p.x}}; }),
       variant_rule<Ev2, EvalIndex, EvalParams>(
           "ev2",
           [](const Ev2& p) { return std::vector<EvalIndex>{{p.e1, p.x1}, {p.e2, p.x2}}; },
           [](const Ev2& p) { return EvalIndex{add(p.e1, p.e2), p.v}; },
           {SideCondition<Ev2>{"sum", [](const Ev2& p) {
                                 std::int64_t r = 0;
                                 return !__builtin_add_overflow(p.x1.vv, p.x2.vv, &r) && r == p.v.vv;
                               }}})});
  return sig;
}

const TypOfSignature& typof_sig() {
  static const TypOfSignature sig = indexed::Signature<TypOfIndex, TypOfParams>::make(
      "TypOf",
      {variant_rule<Tof1, TypOfIndex, TypOfParams>(
           "tof1", nullptr, [](const Tof1& p) { return TypOfIndex{lit(p.v.vv), TypN{}}; }),
       variant_rule<Tof2, TypOfIndex, TypOfParams>(
           "tof2",
           [](const Tof2& p) { return std::vector<TypOfIndex>{{p.e1, TypN{}}, {p.e2, TypN{}}}; },
           [](const Tof2& p) { return TypOfIndex{add(p.e1, p.e2), TypN{}}; })});
  return sig;
}

const IsTrmSignature& istrm_sig() {
  static const IsTrmSignature sig = indexed::Signature<IsTrmIndex, IsTrmParams>::make(
      "IsTrm",
      {variant_rule<IsLit, IsTrmIndex, IsTrmParams>("isLit", nullptr,
                                                    [](const IsLit& p) { return IsTrmIndex{lit(p.x)}; }),
       variant_rule<IsAdd, IsTrmIndex, IsTrmParams>(
           "isAdd", [](const IsAdd& p) { return std::vector<IsTrmIndex>{{p.e1}, {p.e2}}; },
           [](const IsAdd& p) { return IsTrmIndex{add(p.e1, p.e2)}; })});
  return sig;
}

EvalDerivation build_eval_derivation(const Term& t, const EvalSignature& sig) {
  if (is_lit(t)) return indexed::derive(sig, "ev1", EvalParams{Ev1{lit_value(t)}});
  const auto& kids = t.node().rec;
  auto d1 = build_eval_derivation(kids.at(0), sig);
  auto d2 = build_eval_derivation(kids.at(1), sig);
  Ev2 p{kids[0], kids[1], d1.conclusion().val, d2.conclusion().val,
        Val{checked_add(d1.conclusion().val.vv, d2.conclusion().val.vv)}};
  return indexed::derive(sig, "ev2", EvalParams{std::move(p)}, {std::move(d1), std::move(d2)});
}

TypOfDerivation build_typof_derivation(const Term& t, const TypOfSignature& sig) {
  if (is_lit(t)) return indexed::derive(sig, "tof1", TypOfParams{Tof1{Val{lit_value(t)}}});
  const auto& kids = t.node().rec;
  return indexed::derive(sig, "tof2", TypOfParams{Tof2{kids.at(0), kids.at(1)}},
                         {build_typof_derivation(kids[0], sig), build_typof_derivation(kids[1], sig)});
}

IsTrmDerivation build_istrm(const Term& t, const IsTrmSignature& sig) {
  if (is_lit(t)) return indexed::derive(sig, "isLit", IsTrmParams{IsLit{lit_value(t)}});
  const auto& kids = t.node().rec;
  return indexed::derive(sig, "isAdd", IsTrmParams{IsAdd{kids.at(0), kids.at(1)}},
                         {build_istrm(kids[0], sig), build_istrm(kids[1], sig)});
}

Agreement eval_of_derivation(const EvalDerivation& d) {
  if (auto v = indexed::validate(d); !v)
    throw indexed::InvalidDerivation(v.rule, v.reason);
  const auto& w = d.conclusion();
  const Val expected = eval(w.trm);
  if (expected == w.val) return {true, {}};
  return {false, "derivation concludes " + to_sexpr(w.val) + " but eval gives " + to_sexpr(expected)};
}

void to_json(nlohmann::json& j, const EvalIndex& w) { j = {{"trm", to_sexpr(w.trm)}, {"val", w.val.vv}}; }
void to_json(nlohmann::json& j, const Ev1& p) { j = {{"x", p.x}}; }
void to_json(nlohmann::json& j, const Ev2& p) {
  j = {{"e1", to_sexpr(p.e1)}, {"e2", to_sexpr(p.e2)}, {"x1", p.x1.vv}, {"x2", p.x2.vv}, {"v", p.v.vv}};
}
void to_json(nlohmann::json& j, const TypOfIndex& w) { j = {{"trm", to_sexpr(w.trm)}, {"typ", "N"}}; }
void to_json(nlohmann::json& j, const Tof1& p) { j = {{"v", p.v.vv}}; }
void to_json(nlohmann::json& j, const Tof2& p) { j = {{"e1", to_sexpr(p.e1)}, {"e2", to_sexpr(p.e2)}}; }
void to_json(nlohmann::json& j, const IsTrmIndex& w) { j = to_sexpr(w.trm); }
void to_json(nlohmann::json& j, const IsLit& p) { j = {{"x", p.x}}; }
void to_json(nlohmann::json& j, const IsAdd& p) { j = {{"e1", to_sexpr(p.e1)}, {"e2", to_sexpr(p.e2)}}; }

}  // namespace mdt::arith
