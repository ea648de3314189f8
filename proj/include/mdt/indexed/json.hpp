#pragma once

#include <variant>

#include <json.hpp>

#include "mdt/indexed/derivation.hpp"

namespace mdt::indexed {

namespace detail {
template <class T>
struct is_variant : std::false_type {};
template <class... Ts>
struct is_variant<std::variant<Ts...>> : std::true_type {};
}  // namespace detail

/// JSON of an index or parameter value through its ADL to_json; variants are
/// written as their active alternative.
template <class T>
nlohmann::json value_json(const T& value) {
  if constexpr (detail::is_variant<T>::value) {
    return std::visit([](const auto& alt) { return nlohmann::json(alt); }, value);
  } else {
    return nlohmann::json(value);
  }
}

/// {"family", "rule", "index", "params", "premises": [...]}.
template <class K, class P>
nlohmann::json to_json(const Derivation<K, P>& d) {
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : d.node().premises) premises.push_back(to_json(p.witness));
  return {{"family", d.node().sig->name()},
          {"rule", d.rule_name()},
          {"index", value_json(d.conclusion())},
          {"params", value_json(d.params())},
          {"premises", std::move(premises)}};
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"ok", v.ok}};
  if (!v.ok) {
    j["path"] = v.path;
    j["rule"] = v.rule;
    j["reason"] = v.reason;
  }
  return j;
}

}  // namespace mdt::indexed
