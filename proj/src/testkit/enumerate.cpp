#include "mdt/testkit/enumerate.hpp"

#include "mdt/arith/syntax.hpp"
#include "mdt/lang/syntax.hpp"

namespace mdt::testkit {

using kernel::Payload;
using kernel::PayloadKind;
using kernel::SlotKind;

std::vector<PayloadChoice> payload_choices(const kernel::Constructor& ctor, const Pools& pools) {
  std::vector<PayloadChoice> out{PayloadChoice{}};
  for (const auto& slot : ctor.slots) {
    if (slot.kind == SlotKind::Recursive) {
      for (auto& c : out) ++c.children[slot.family];
      continue;
    }
    std::vector<Payload> options;
    if (slot.kind == SlotKind::RecursiveEnv) {
      for (const auto& k : pools.key_sets) options.emplace_back(k);
    } else {
      switch (slot.payload) {
        case PayloadKind::Int: for (auto v : pools.ints) options.emplace_back(v); break;
        case PayloadKind::Ident: for (const auto& v : pools.idents) options.emplace_back(v); break;
        case PayloadKind::TypeIdent: for (const auto& v : pools.type_idents) options.emplace_back(v); break;
        case PayloadKind::Keys: for (const auto& v : pools.key_sets) options.emplace_back(v); break;
        case PayloadKind::Term: {
          auto it = pools.terms.find(slot.term_sig.get());
          if (it != pools.terms.end())
            for (const auto& v : it->second) options.emplace_back(v);
          break;
        }
      }
    }
    std::vector<PayloadChoice> next;
    for (const auto& c : out) {
      for (const auto& o : options) {
        PayloadChoice d = c;
        d.payload.push_back(o);
        if (slot.kind == SlotKind::RecursiveEnv) d.children[slot.family] += std::get<kernel::KeyList>(o).size();
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

/// Calls `emit` with every index tuple of length `arity` over [0, n) that
/// contains at least one index >= `fresh_from`, in lexicographic order.
template <class F>
void tuples(std::size_t arity, std::size_t n, std::size_t fresh_from, F&& emit) {
  std::vector<std::size_t> idx(arity, 0);
  if (arity == 0) return;
  if (n == 0) return;
  for (;;) {
    bool fresh = false;
    for (auto i : idx) fresh = fresh || i >= fresh_from;
    if (fresh) emit(idx);
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++idx[k] < n) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

void level(const EnumSpec& spec, const std::vector<kernel::Term>& below, std::size_t fresh_from, bool leaves_only,
           const std::function<void(kernel::Term)>& emit) {
  for (std::size_t c = 0; c < spec.sig->size(); ++c) {
    for (const auto& choice : payload_choices(spec.sig->at(c), spec.pools)) {
      const std::size_t arity = choice.children[0];
      if (leaves_only) {
        if (arity == 0) emit(kernel::in_(kernel::Node<kernel::Term>{spec.sig, c, {}, choice.payload}));
        continue;
      }
      tuples(arity, below.size(), fresh_from, [&](const std::vector<std::size_t>& idx) {
        kernel::Node<kernel::Term> n{spec.sig, c, {}, choice.payload};
        n.rec.reserve(arity);
        for (auto i : idx) n.rec.push_back(below[i]);
        emit(kernel::in_(std::move(n)));
      });
    }
  }
}

}  // namespace

void for_each_term(const EnumSpec& spec, const std::function<void(const kernel::Term&)>& visit) {
  std::vector<kernel::Term> all;
  std::size_t prev_start = 0;
  for (std::size_t d = 1; d <= spec.max_depth; ++d) {
    const bool last = d == spec.max_depth;
    const std::size_t start = all.size();
    std::vector<kernel::Term> fresh;
    level(spec, all, prev_start, d == 1, [&](kernel::Term t) {
      visit(t);
      if (!last) fresh.push_back(std::move(t));
    });
    prev_start = start;
    for (auto& t : fresh) all.push_back(std::move(t));
  }
}

std::vector<kernel::Term> enumerate_terms(const EnumSpec& spec) {
  std::vector<kernel::Term> out;
  for_each_term(spec, [&](const kernel::Term& t) { out.push_back(t); });
  return out;
}

BiEnumeration enumerate_biterms(const BiEnumSpec& spec) {
  BiEnumeration all;
  std::size_t prev[2] = {0, 0};
  for (std::size_t d = 1; d <= spec.max_depth; ++d) {
    BiEnumeration fresh;
    const std::size_t start[2] = {all.first.size(), all.second.size()};
    for (auto comp : {mutual::Component::First, mutual::Component::Second}) {
      const auto& sig = spec.sig->component(comp);
      for (std::size_t c = 0; c < sig.size(); ++c) {
        for (const auto& choice : payload_choices(sig.at(c), spec.pools)) {
          const std::size_t a1 = choice.children[0], a2 = choice.children[1];
          auto build = [&](const std::vector<std::size_t>& i1, const std::vector<std::size_t>& i2) {
            mutual::BiTerm::Node n{spec.sig, comp, c, {}, {}, choice.payload};
            for (auto i : i1) n.first.push_back(all.first[i]);
            for (auto i : i2) n.second.push_back(all.second[i]);
            auto t = mutual::bin(std::move(n));
            (comp == mutual::Component::First ? fresh.first : fresh.second).push_back(std::move(t));
          };
          if (a1 + a2 == 0) {
            if (d == 1) build({}, {});
            continue;
          }
          if (d == 1) continue;
          // Children from depth <= d-1 with at least one at exactly d-1. The
          // combined tuple is enumerated first-family indices first.
          const std::size_t n1 = all.first.size(), n2 = all.second.size();
          std::vector<std::size_t> idx(a1 + a2, 0);
          auto limit = [&](std::size_t k) { return k < a1 ? n1 : n2; };
          bool empty = false;
          for (std::size_t k = 0; k < idx.size(); ++k) empty = empty || limit(k) == 0;
          if (empty) continue;
          for (;;) {
            bool is_fresh = false;
            for (std::size_t k = 0; k < idx.size(); ++k) is_fresh = is_fresh || idx[k] >= prev[k < a1 ? 0 : 1];
            if (is_fresh) {
              build(std::vector<std::size_t>(idx.begin(), idx.begin() + a1),
                    std::vector<std::size_t>(idx.begin() + a1, idx.end()));
            }
            std::size_t k = idx.size();
            bool done = true;
            while (k > 0) {
              --k;
              if (++idx[k] < limit(k)) {
                done = false;
                break;
              }
              idx[k] = 0;
            }
            if (done) break;
          }
        }
      }
    }
    prev[0] = start[0];
    prev[1] = start[1];
    for (auto& t : fresh.first) all.first.push_back(std::move(t));
    for (auto& t : fresh.second) all.second.push_back(std::move(t));
  }
  return all;
}

EnumSpec arith_spec(std::size_t max_depth) {
  EnumSpec spec{arith::trm_sig().sum(), max_depth, {}};
  spec.pools.ints = {-2, -1, 0, 1, 2};
  return spec;
}

BiEnumSpec lang_spec(std::size_t max_depth) {
  BiEnumSpec spec{lang::syntax_sig(), max_depth, {}};
  spec.pools.idents = {lang::id("x")};
  spec.pools.key_sets = {{}, {lang::id("x")}};
  spec.pools.terms[lang::typ_sig().get()] = {lang::ty("a")};
  spec.pools.terms[lang::pat_sig().get()] = {lang::pvar("x", lang::ty("a"))};
  return spec;
}

}  // namespace mdt::testkit
