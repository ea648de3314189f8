#pragma once

// JSON renderings of L's judgment indices and rule parameters. Terms, types
// and patterns appear in their s-expression form.

#include <json.hpp>

#include "mdt/lang/step.hpp"
#include "mdt/lang/typing.hpp"
#include "mdt/mutual/json.hpp"

namespace mdt::lang {

nlohmann::json env_json(const EnvE& rho);
nlohmann::json env_json(const EnvT& gamma);

void to_json(nlohmann::json& j, const DecStepIndex& w);
void to_json(nlohmann::json& j, const ExpStepIndex& w);
void to_json(nlohmann::json& j, const DecTyping& w);
void to_json(nlohmann::json& j, const ExpTyping& w);
void to_json(nlohmann::json& j, const PatTyping& w);
void to_json(nlohmann::json& j, const EnvTyping& w);

namespace rules {
void to_json(nlohmann::json& j, const EVar& p);
void to_json(nlohmann::json& j, const EApp1& p);
void to_json(nlohmann::json& j, const EApp2& p);
void to_json(nlohmann::json& j, const EBeta& p);
void to_json(nlohmann::json& j, const EScope1& p);
void to_json(nlohmann::json& j, const EScope2& p);
void to_json(nlohmann::json& j, const EScope3& p);
void to_json(nlohmann::json& j, const DMatch1& p);
void to_json(nlohmann::json& j, const DMatch& p);
void to_json(nlohmann::json& j, const DJoin1& p);
void to_json(nlohmann::json& j, const DJoin2& p);
void to_json(nlohmann::json& j, const DJoin3& p);
void to_json(nlohmann::json& j, const TPVar& p);
void to_json(nlohmann::json& j, const TPCon& p);
void to_json(nlohmann::json& j, const TPApp& p);
void to_json(nlohmann::json& j, const TEEnv& p);
void to_json(nlohmann::json& j, const TVar& p);
void to_json(nlohmann::json& j, const TCon& p);
void to_json(nlohmann::json& j, const TClos& p);
void to_json(nlohmann::json& j, const TApp& p);
void to_json(nlohmann::json& j, const TScope& p);
void to_json(nlohmann::json& j, const TDEnv& p);
void to_json(nlohmann::json& j, const TDMatch& p);
void to_json(nlohmann::json& j, const TDJoin& p);
}  // namespace rules

}  // namespace mdt::lang
