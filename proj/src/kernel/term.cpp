#include "mdt/kernel/term.hpp"

#include <algorithm>
#include <unordered_set>

namespace mdt::kernel {

std::string_view to_string(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::Int: return "int";
    case PayloadKind::Ident: return "ident";
    case PayloadKind::TypeIdent: return "type-ident";
    case PayloadKind::Keys: return "keys";
    case PayloadKind::Term: return "term";
  }
  return "?";
}

SignatureRef Signature::make(std::string name, std::vector<Constructor> constructors) {
  std::unordered_set<std::string> seen;
  for (const auto& c : constructors) {
    if (c.name.empty()) throw MalformedSignature(name + ": empty constructor name");
    if (!seen.insert(c.name).second) throw MalformedSignature(name + ": duplicate constructor '" + c.name + "'");
    for (const auto& s : c.slots) {
      if (s.kind == SlotKind::Payload && s.payload == PayloadKind::Term && !s.term_sig)
        throw MalformedSignature(name + "." + c.name + ": term payload without signature");
      if (s.family > 1) throw MalformedSignature(name + "." + c.name + ": slot family out of range");
    }
  }
  return SignatureRef(new Signature(std::move(name), std::move(constructors)));
}

std::optional<std::size_t> Signature::find(std::string_view ctor) const {
  for (std::size_t i = 0; i < constructors_.size(); ++i)
    if (constructors_[i].name == ctor) return i;
  return std::nullopt;
}

namespace {

bool payload_matches(const Slot& slot, const Payload& p) {
  switch (slot.payload) {
    case PayloadKind::Int: return std::holds_alternative<std::int64_t>(p);
    case PayloadKind::Ident: return std::holds_alternative<Ident>(p);
    case PayloadKind::TypeIdent: return std::holds_alternative<TypeIdent>(p);
    case PayloadKind::Keys: return std::holds_alternative<KeyList>(p);
    case PayloadKind::Term: {
      const auto* t = std::get_if<Term>(&p);
      return t && t->node().sig == slot.term_sig;
    }
  }
  return false;
}

}  // namespace

void check_shape(const Constructor& ctor, std::span<const std::size_t> rec_counts,
                 std::span<const Payload> payload) {
  std::vector<std::size_t> expected(rec_counts.size(), 0);
  std::size_t p = 0;
  auto fail = [&](const std::string& why) { throw MalformedNode(ctor.name + ": " + why); };
  for (const auto& slot : ctor.slots) {
    if (slot.family >= expected.size()) fail("slot family not available in this node");
    switch (slot.kind) {
      case SlotKind::Recursive:
        ++expected[slot.family];
        break;
      case SlotKind::RecursiveEnv: {
        if (p >= payload.size()) fail("missing environment keys");
        const auto* keys = std::get_if<KeyList>(&payload[p]);
        if (!keys) fail("environment slot without key list");
        if (!std::is_sorted(keys->begin(), keys->end()) ||
            std::adjacent_find(keys->begin(), keys->end()) != keys->end())
          fail("environment keys must be sorted and unique");
        expected[slot.family] += keys->size();
        ++p;
        break;
      }
      case SlotKind::Payload:
        if (p >= payload.size()) fail("missing payload");
        if (!payload_matches(slot, payload[p]))
          fail("payload " + std::to_string(p) + " is not of kind " + std::string(to_string(slot.payload)));
        ++p;
        break;
    }
  }
  if (p != payload.size()) fail("expected " + std::to_string(p) + " payloads, got " + std::to_string(payload.size()));
  for (std::size_t f = 0; f < expected.size(); ++f)
    if (expected[f] != rec_counts[f])
      fail("expected " + std::to_string(expected[f]) + " recursive slots, got " + std::to_string(rec_counts[f]));
}

Term in_(Node<Term> node) {
  check_shape(node);
  return Term(std::make_shared<const Node<Term>>(std::move(node)));
}

std::size_t size(const Term& t) {
  std::size_t n = 1;
  for (const auto& c : t.node().rec) n += size(c);
  return n;
}

std::size_t depth(const Term& t) {
  std::size_t d = 0;
  for (const auto& c : t.node().rec) d = std::max(d, depth(c));
  return d + 1;
}

}  // namespace mdt::kernel
