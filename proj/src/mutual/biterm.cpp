#include "mdt/mutual/biterm.hpp"

#include "mdt/kernel/json.hpp"

namespace mdt::mutual {

using nlohmann::json;

BiSignatureRef BiSignature::make(kernel::SignatureRef first, kernel::SignatureRef second) {
  if (!first || !second) throw kernel::MalformedSignature("bi-signature with a null component");
  if (first->name() == second->name()) throw kernel::MalformedSignature("bi-signature components need distinct names");
  return BiSignatureRef(new BiSignature({std::move(first), std::move(second)}));
}

std::optional<Component> BiSignature::find_component(std::string_view name) const {
  if (components_[0]->name() == name) return Component::First;
  if (components_[1]->name() == name) return Component::Second;
  return std::nullopt;
}

BiTerm bin(BiTerm::Node node) {
  check_shape(node);
  for (const auto& c : node.first)
    if (c.which() != Component::First || c.node().sig != node.sig)
      throw kernel::MalformedNode(node.name() + ": first-sort slot holds a foreign term");
  for (const auto& c : node.second)
    if (c.which() != Component::Second || c.node().sig != node.sig)
      throw kernel::MalformedNode(node.name() + ": second-sort slot holds a foreign term");
  return BiTerm(std::make_shared<const BiTerm::Node>(std::move(node)));
}

std::size_t size(const BiTerm& t) {
  std::size_t n = 1;
  for (const auto& c : t.node().first) n += size(c);
  for (const auto& c : t.node().second) n += size(c);
  return n;
}

std::size_t depth(const BiTerm& t) {
  std::size_t d = 0;
  for (const auto& c : t.node().first) d = std::max(d, depth(c));
  for (const auto& c : t.node().second) d = std::max(d, depth(c));
  return d + 1;
}

json to_json(const BiTerm& t) {
  const auto& n = t.node();
  json rec = json::array();
  json payload = json::array();
  std::size_t i1 = 0, i2 = 0, p = 0;
  auto take = [&](std::uint8_t family) {
    rec.push_back(family == 0 ? to_json(n.first.at(i1++)) : to_json(n.second.at(i2++)));
  };
  for (const auto& slot : n.constructor().slots) {
    switch (slot.kind) {
      case kernel::SlotKind::Recursive:
        take(slot.family);
        break;
      case kernel::SlotKind::RecursiveEnv: {
        const auto& keys = std::get<kernel::KeyList>(n.payload.at(p));
        payload.push_back(kernel::payload_to_json(n.payload[p++]));
        for (std::size_t k = 0; k < keys.size(); ++k) take(slot.family);
        break;
      }
      case kernel::SlotKind::Payload:
        payload.push_back(kernel::payload_to_json(n.payload.at(p++)));
        break;
    }
  }
  return json{{"component", n.sig->component_name(n.component)},
              {"ctor", n.name()},
              {"rec", std::move(rec)},
              {"payload", std::move(payload)}};
}

BiTerm biterm_from_json(const BiSignatureRef& sig, const json& j) {
  if (!j.is_object() || !j.contains("component") || !j.contains("ctor"))
    throw kernel::MalformedNode("bi-term JSON needs \"component\" and \"ctor\"");
  auto component = sig->find_component(j["component"].get<std::string>());
  if (!component) throw kernel::MalformedNode("unknown component " + j["component"].dump());
  auto index = sig->component(*component).find(j["ctor"].get<std::string>());
  if (!index) throw kernel::MalformedNode("unknown constructor " + j["ctor"].dump());
  const json empty = json::array();
  const json& rec = j.contains("rec") ? j["rec"] : empty;
  const json& payload = j.contains("payload") ? j["payload"] : empty;
  if (!rec.is_array() || !payload.is_array()) throw kernel::MalformedNode("\"rec\" and \"payload\" must be arrays");

  BiTerm::Node node{sig, *component, *index, {}, {}, {}};
  std::size_t r = 0, p = 0;
  auto take = [&](std::uint8_t family) {
    if (r >= rec.size()) throw kernel::MalformedNode(node.name() + ": missing recursive argument");
    BiTerm child = biterm_from_json(sig, rec[r++]);
    (family == 0 ? node.first : node.second).push_back(std::move(child));
  };
  for (const auto& slot : node.constructor().slots) {
    switch (slot.kind) {
      case kernel::SlotKind::Recursive:
        take(slot.family);
        break;
      case kernel::SlotKind::RecursiveEnv: {
        if (p >= payload.size()) throw kernel::MalformedNode(node.name() + ": missing environment keys");
        node.payload.push_back(kernel::payload_from_json(slot, payload[p++]));
        const auto n = std::get<kernel::KeyList>(node.payload.back()).size();
        for (std::size_t k = 0; k < n; ++k) take(slot.family);
        break;
      }
      case kernel::SlotKind::Payload:
        if (p >= payload.size()) throw kernel::MalformedNode(node.name() + ": missing payload");
        node.payload.push_back(kernel::payload_from_json(slot, payload[p++]));
        break;
    }
  }
  if (r != rec.size()) throw kernel::MalformedNode(node.name() + ": too many recursive arguments");
  return bin(std::move(node));
}

}  // namespace mdt::mutual
