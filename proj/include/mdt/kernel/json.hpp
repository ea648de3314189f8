#pragma once

#include <json.hpp>

#include "mdt/kernel/term.hpp"

namespace mdt::kernel {

/// Canonical form: {"ctor": name, "rec": [...], "payload": [...]}.
nlohmann::json to_json(const Term& t);
Term term_from_json(const SignatureRef& sig, const nlohmann::json& j);

nlohmann::json payload_to_json(const Payload& p);
/// Reads a payload of the kind declared by `slot`. Throws MalformedNode.
Payload payload_from_json(const Slot& slot, const nlohmann::json& j);

nlohmann::json signature_to_json(const Signature& sig);

}  // namespace mdt::kernel
