#pragma once

#include <json.hpp>

#include "mdt/indexed/json.hpp"
#include "mdt/mutual/hderivation.hpp"

namespace mdt::mutual {

/// {"family", "rule", "index", "params", "premises": [...]}, first-family
/// premises before second-family ones.
template <class T, std::size_t F>
nlohmann::json to_json(const BiDerivation<T, F>& d) {
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : d.node().first) premises.push_back(to_json(p.witness));
  for (const auto& p : d.node().second) premises.push_back(to_json(p.witness));
  return {{"family", d.node().family_name()},
          {"rule", d.rule_name()},
          {"index", indexed::value_json(d.conclusion())},
          {"params", indexed::value_json(d.params())},
          {"premises", std::move(premises)}};
}

}  // namespace mdt::mutual
