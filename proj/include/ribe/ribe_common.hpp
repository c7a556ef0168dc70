#pragma once

#include <optional>

#include "ribe/dpvs.hpp"
#include "ribe/revtree.hpp"

namespace ribe {

// One (node, key-vector) pair of a private key or key update.
template <class GV>
struct NodeKey {
  NodeId node;
  GV k;
  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

// First common node between private-key entries (path order, leaf first,
// i.e. deepest first) and key-update entries. Shared by both schemes: the
// revocation decision is scheme-independent.
template <class GV>
std::optional<std::pair<size_t, size_t>> match_decryption_node(
    const std::vector<NodeKey<GV>>& sk_entries,
    const std::vector<NodeKey<GV>>& ku_entries) {
  for (size_t i = 0; i < sk_entries.size(); i++) {
    for (size_t j = 0; j < ku_entries.size(); j++) {
      if (sk_entries[i].node == ku_entries[j].node) return {{i, j}};
    }
  }
  return std::nullopt;
}

// Epoch and identity embeddings into Z_q live here, and only here.
template <class E>
typename E::Scalar epoch_scalar(const E& eng, uint64_t t) {
  return eng.scalar_from_u64(t);
}

template <class E>
typename E::Scalar identity_scalar_from_string(const E& eng,
                                               std::string_view raw) {
  Sha256 h;
  h.update("RIBE:id:v1");
  h.update(raw);
  auto d0 = h.final();
  Bytes wide(d0.begin(), d0.end());
  Sha256 h2;
  h2.update(ByteSpan(d0.data(), d0.size()));
  h2.update("RIBE:id:v1:ext");
  auto d1 = h2.final();
  wide.insert(wide.end(), d1.begin(), d1.end());
  return eng.scalar_from_wide(wide);
}

template <class E>
Bytes scalar_bytes_of(const E& eng, const typename E::Scalar& s) {
  Bytes out(eng.scalar_bytes());
  eng.encode_scalar(s, out);
  return out;
}

}  // namespace ribe
