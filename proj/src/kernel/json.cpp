#include "mdt/kernel/json.hpp"

namespace mdt::kernel {

using nlohmann::json;

json payload_to_json(const Payload& p) {
  return std::visit(
      [](const auto& v) -> json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) {
          return v;
        } else if constexpr (std::is_same_v<V, Ident> || std::is_same_v<V, TypeIdent>) {
          return v.name;
        } else if constexpr (std::is_same_v<V, KeyList>) {
          json arr = json::array();
          for (const auto& k : v) arr.push_back(k.name);
          return arr;
        } else {
          return to_json(v);
        }
      },
      p);
}

Payload payload_from_json(const Slot& slot, const json& j) {
  switch (slot.payload) {
    case PayloadKind::Int:
      if (!j.is_number_integer()) throw MalformedNode("expected integer payload");
      return j.get<std::int64_t>();
    case PayloadKind::Ident:
      if (!j.is_string()) throw MalformedNode("expected identifier payload");
      return Ident{j.get<std::string>()};
    case PayloadKind::TypeIdent:
      if (!j.is_string()) throw MalformedNode("expected type identifier payload");
      return TypeIdent{j.get<std::string>()};
    case PayloadKind::Keys: {
      if (!j.is_array()) throw MalformedNode("expected key list payload");
      KeyList keys;
      for (const auto& k : j) {
        if (!k.is_string()) throw MalformedNode("expected identifier in key list");
        keys.push_back(Ident{k.get<std::string>()});
      }
      return keys;
    }
    case PayloadKind::Term:
      return term_from_json(slot.term_sig, j);
  }
  throw MalformedNode("unknown payload kind");
}

json to_json(const Term& t) {
  const auto& n = t.node();
  json rec = json::array();
  for (const auto& c : n.rec) rec.push_back(to_json(c));
  json payload = json::array();
  for (const auto& p : n.payload) payload.push_back(payload_to_json(p));
  return json{{"ctor", n.name()}, {"rec", std::move(rec)}, {"payload", std::move(payload)}};
}

Term term_from_json(const SignatureRef& sig, const json& j) {
  if (!j.is_object() || !j.contains("ctor") || !j["ctor"].is_string())
    throw MalformedNode("term JSON must be an object with a string \"ctor\"");
  auto index = sig->find(j["ctor"].get<std::string>());
  if (!index) throw MalformedNode("unknown constructor '" + j["ctor"].get<std::string>() + "' in " + sig->name());
  const json empty = json::array();
  const json& rec = j.contains("rec") ? j["rec"] : empty;
  const json& payload = j.contains("payload") ? j["payload"] : empty;
  if (!rec.is_array() || !payload.is_array()) throw MalformedNode("\"rec\" and \"payload\" must be arrays");

  Node<Term> node{sig, *index, {}, {}};
  std::size_t p = 0;
  for (const auto& slot : node.constructor().slots) {
    if (slot.kind == SlotKind::Recursive) continue;
    if (p >= payload.size()) throw MalformedNode(node.name() + ": missing payload");
    node.payload.push_back(payload_from_json(slot, payload[p++]));
  }
  for (const auto& c : rec) node.rec.push_back(term_from_json(sig, c));
  return in_(std::move(node));
}

json signature_to_json(const Signature& sig) {
  json ctors = json::array();
  for (const auto& c : sig.constructors()) {
    json slots = json::array();
    for (const auto& s : c.slots) {
      json slot;
      switch (s.kind) {
        case SlotKind::Recursive: slot["kind"] = "rec"; break;
        case SlotKind::RecursiveEnv: slot["kind"] = "rec_env"; break;
        case SlotKind::Payload:
          slot["kind"] = "payload";
          slot["type"] = std::string(to_string(s.payload));
          if (s.term_sig) slot["signature"] = s.term_sig->name();
          break;
      }
      if (s.family != 0) slot["family"] = s.family;
      slots.push_back(std::move(slot));
    }
    ctors.push_back(json{{"name", c.name}, {"slots", std::move(slots)}});
  }
  return json{{"name", sig.name()}, {"constructors", std::move(ctors)}};
}

}  // namespace mdt::kernel
