#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mdt/kernel/term.hpp"
#include "mdt/mutual/biterm.hpp"

namespace mdt::testkit {

/// Payload pools for exhaustive enumeration. A Term payload slot draws from
/// `terms[slot signature]`.
struct Pools {
  std::vector<std::int64_t> ints;
  std::vector<kernel::Ident> idents;
  std::vector<kernel::TypeIdent> type_idents;
  std::vector<kernel::KeyList> key_sets;
  std::map<const kernel::Signature*, std::vector<kernel::Term>> terms;
};

/// One payload tuple of a constructor with the number of recursive children
/// per family it implies.
struct PayloadChoice {
  std::vector<kernel::Payload> payload;
  std::size_t children[2] = {0, 0};
};

std::vector<PayloadChoice> payload_choices(const kernel::Constructor& ctor, const Pools& pools);

struct EnumSpec {
  kernel::SignatureRef sig;
  std::size_t max_depth = 1;
  Pools pools;
};

struct BiEnumSpec {
  mutual::BiSignatureRef sig;
  /// Depth counted across both sorts.
  std::size_t max_depth = 1;
  Pools pools;
};

/// All terms of depth <= max_depth without duplicates, in order of depth,
/// then constructor declaration order, then payload pool order, then
/// subterms lexicographically by their own position in the enumeration.
std::vector<kernel::Term> enumerate_terms(const EnumSpec& spec);

/// Same order as enumerate_terms, without materializing the deepest level.
void for_each_term(const EnumSpec& spec, const std::function<void(const kernel::Term&)>& visit);

struct BiEnumeration {
  std::vector<mutual::BiTerm> first;
  std::vector<mutual::BiTerm> second;
};

/// Both sorts of a mutual signature up to a shared depth bound.
BiEnumeration enumerate_biterms(const BiEnumSpec& spec);

/// The arithmetic terms with literals -2..2.
EnumSpec arith_spec(std::size_t max_depth);
/// Dec/Exp with identifiers {x}, type (ty a), pattern (pvar x (ty a)) and
/// environment key sets {}, {x}.
BiEnumSpec lang_spec(std::size_t max_depth);

}  // namespace mdt::testkit
