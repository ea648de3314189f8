#include "mdt/lang/json.hpp"

#include "mdt/lang/print.hpp"

namespace mdt::lang {

using nlohmann::json;

json env_json(const EnvE& rho) {
  json j = json::object();
  for (const auto& [x, e] : rho) j[x.name] = to_sexpr(e);
  return j;
}

json env_json(const EnvT& gamma) {
  json j = json::object();
  for (const auto& [x, t] : gamma) j[x.name] = to_sexpr_typ(t);
  return j;
}

void to_json(json& j, const DecStepIndex& w) {
  j = {{"env", env_json(w.rho)}, {"from", to_sexpr(w.from)}, {"to", to_sexpr(w.to)}};
}
void to_json(json& j, const ExpStepIndex& w) {
  j = {{"env", env_json(w.rho)}, {"from", to_sexpr(w.from)}, {"to", to_sexpr(w.to)}};
}
void to_json(json& j, const DecTyping& w) {
  j = {{"context", env_json(w.gamma)}, {"term", to_sexpr(w.d)}, {"type", to_sexpr_typ(w.t)}};
}
void to_json(json& j, const ExpTyping& w) {
  j = {{"context", env_json(w.gamma)}, {"term", to_sexpr(w.e)}, {"type", to_sexpr_typ(w.t)}};
}
void to_json(json& j, const PatTyping& w) { j = {{"pattern", to_sexpr_pat(w.p)}, {"type", to_sexpr_typ(w.t)}}; }
void to_json(json& j, const EnvTyping& w) { j = {{"env", env_json(w.rho)}, {"context", env_json(w.gamma)}}; }

namespace rules {

void to_json(json& j, const EVar& p) { j = {{"env", env_json(p.rho)}, {"x", p.x.name}}; }
void to_json(json& j, const EApp1& p) {
  j = {{"env", env_json(p.rho)}, {"fn", to_sexpr(p.fn)}, {"fn'", to_sexpr(p.fn2)}, {"arg", to_sexpr(p.arg)}};
}
void to_json(json& j, const EApp2& p) {
  j = {{"env", env_json(p.rho)}, {"fn", to_sexpr(p.fn)}, {"arg", to_sexpr(p.arg)}, {"arg'", to_sexpr(p.arg2)}};
}
void to_json(json& j, const EBeta& p) {
  j = {{"env", env_json(p.rho)}, {"closure_env", env_json(p.rho0)}, {"pattern", to_sexpr_pat(p.p)},
       {"body", to_sexpr(p.body)}, {"arg", to_sexpr(p.arg)}};
}
void to_json(json& j, const EScope1& p) {
  j = {{"env", env_json(p.rho)}, {"dec", to_sexpr(p.d)}, {"dec'", to_sexpr(p.d2)}, {"body", to_sexpr(p.body)}};
}
void to_json(json& j, const EScope2& p) {
  j = {{"env", env_json(p.rho)}, {"local", env_json(p.rho1)}, {"body", to_sexpr(p.body)}, {"body'", to_sexpr(p.body2)}};
}
void to_json(json& j, const EScope3& p) {
  j = {{"env", env_json(p.rho)}, {"local", env_json(p.rho1)}, {"value", to_sexpr(p.v)}};
}
void to_json(json& j, const DMatch1& p) {
  j = {{"env", env_json(p.rho)}, {"pattern", to_sexpr_pat(p.p)}, {"exp", to_sexpr(p.e)}, {"exp'", to_sexpr(p.e2)}};
}
void to_json(json& j, const DMatch& p) {
  j = {{"env", env_json(p.rho)}, {"pattern", to_sexpr_pat(p.p)}, {"value", to_sexpr(p.v)}};
}
void to_json(json& j, const DJoin1& p) {
  j = {{"env", env_json(p.rho)}, {"left", to_sexpr(p.d1)}, {"left'", to_sexpr(p.d1b)}, {"right", to_sexpr(p.d2)}};
}
void to_json(json& j, const DJoin2& p) {
  j = {{"env", env_json(p.rho)}, {"left_env", env_json(p.rho1)}, {"right", to_sexpr(p.d2)}, {"right'", to_sexpr(p.d2b)}};
}
void to_json(json& j, const DJoin3& p) {
  j = {{"env", env_json(p.rho)}, {"left_env", env_json(p.rho1)}, {"right_env", env_json(p.rho2)}};
}
void to_json(json& j, const TPVar& p) { j = {{"x", p.x.name}, {"type", to_sexpr_typ(p.t)}}; }
void to_json(json& j, const TPCon& p) { j = {{"c", p.c.name}, {"type", to_sexpr_typ(p.t)}}; }
void to_json(json& j, const TPApp& p) {
  j = {{"head", to_sexpr_pat(p.head)}, {"arg", to_sexpr_pat(p.arg)}, {"from", to_sexpr_typ(p.from)}, {"to", to_sexpr_typ(p.to)}};
}
void to_json(json& j, const TEEnv& p) {
  j = json::object();
  for (const auto& [x, d] : p.entries) j[x.name] = mutual::to_json(d);
}
void to_json(json& j, const TVar& p) { j = {{"context", env_json(p.gamma)}, {"x", p.x.name}}; }
void to_json(json& j, const TCon& p) { j = {{"context", env_json(p.gamma)}, {"c", p.c.name}, {"type", to_sexpr_typ(p.t)}}; }
void to_json(json& j, const TClos& p) {
  j = {{"context", env_json(p.gamma)}, {"env_typing", indexed::to_json(p.envd)},
       {"pattern_typing", indexed::to_json(p.patd)}, {"body", to_sexpr(p.body)}, {"to", to_sexpr_typ(p.to)}};
}
void to_json(json& j, const TApp& p) {
  j = {{"context", env_json(p.gamma)}, {"fn", to_sexpr(p.fn)}, {"arg", to_sexpr(p.arg)},
       {"from", to_sexpr_typ(p.from)}, {"to", to_sexpr_typ(p.to)}};
}
void to_json(json& j, const TScope& p) {
  j = {{"context", env_json(p.gamma)}, {"dec", to_sexpr(p.d)}, {"local", env_json(p.gamma1)},
       {"body", to_sexpr(p.body)}, {"type", to_sexpr_typ(p.t)}};
}
void to_json(json& j, const TDEnv& p) { j = {{"context", env_json(p.gamma)}, {"env_typing", indexed::to_json(p.envd)}}; }
void to_json(json& j, const TDMatch& p) {
  j = {{"context", env_json(p.gamma)}, {"pattern_typing", indexed::to_json(p.patd)}, {"exp", to_sexpr(p.e)}};
}
void to_json(json& j, const TDJoin& p) {
  j = {{"context", env_json(p.gamma)}, {"left", to_sexpr(p.d1)}, {"left_context", env_json(p.gamma1)},
       {"right", to_sexpr(p.d2)}, {"right_context", env_json(p.gamma2)}};
}

}  // namespace rules

}  // namespace mdt::lang
