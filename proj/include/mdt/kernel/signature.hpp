#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdt::kernel {

class Signature;
using SignatureRef = std::shared_ptr<const Signature>;

/// Closed registry of payload types a constructor slot may carry.
enum class PayloadKind : std::uint8_t {
  Int,        // bounded machine integer
  Ident,      // object-level identifier
  TypeIdent,  // type-level identifier
  Keys,       // sorted identifier list; the key set of an environment slot
  Term,       // a closed term over another signature
};

std::string_view to_string(PayloadKind kind);

enum class SlotKind : std::uint8_t {
  Recursive,     // exactly one recursive position
  RecursiveEnv,  // finite map Id -> recursive position; keys live in a Keys payload
  Payload,
};

/// One declared argument position of a constructor.
///
/// `family` selects the recursive sort for two-sorted (mutual) signatures and
/// is always 0 for ordinary signatures. `term_sig` is set iff the slot carries
/// a Term payload.
struct Slot {
  SlotKind kind = SlotKind::Recursive;
  PayloadKind payload = PayloadKind::Int;
  SignatureRef term_sig;
  std::uint8_t family = 0;

  static Slot rec(std::uint8_t family = 0) { return {SlotKind::Recursive, PayloadKind::Int, nullptr, family}; }
  static Slot rec_env(std::uint8_t family = 0) { return {SlotKind::RecursiveEnv, PayloadKind::Keys, nullptr, family}; }
  static Slot of(PayloadKind kind) { return {SlotKind::Payload, kind, nullptr, 0}; }
  static Slot term(SignatureRef sig) { return {SlotKind::Payload, PayloadKind::Term, std::move(sig), 0}; }
};

struct Constructor {
  std::string name;
  std::vector<Slot> slots;
};

class MalformedNode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedSignature : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A one-layer grammar shape: named constructors with declared slots.
class Signature {
 public:
  static SignatureRef make(std::string name, std::vector<Constructor> constructors);

  const std::string& name() const { return name_; }
  std::span<const Constructor> constructors() const { return constructors_; }
  const Constructor& at(std::size_t index) const { return constructors_.at(index); }
  std::size_t size() const { return constructors_.size(); }
  std::optional<std::size_t> find(std::string_view ctor) const;

 private:
  Signature(std::string name, std::vector<Constructor> constructors)
      : name_(std::move(name)), constructors_(std::move(constructors)) {}

  std::string name_;
  std::vector<Constructor> constructors_;
};

}  // namespace mdt::kernel
