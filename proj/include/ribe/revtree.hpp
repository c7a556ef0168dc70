#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "ribe/common.hpp"
#include "ribe/hash.hpp"
#include "ribe/rng.hpp"

namespace ribe {

// Heap-indexed node id: root = 1, children of k are 2k and 2k+1, leaves of a
// depth-d tree occupy [2^d, 2^{d+1}).
using NodeId = uint32_t;

enum class SchemeVariant : uint8_t { kSxdh = 0x01, kDlin = 0x02 };

// Per-node master-key shares: alpha1 + alpha2 = alpha; alpha3 only exists
// for the two-layer (DLIN) scheme and is reused with opposite signs by
// private keys and key updates.
template <class S>
struct ShareSet {
  S alpha1;
  S alpha2;
  std::optional<S> alpha3;
};

enum class RevokeStatus { kRevoked, kUnknownIdentity };

struct RevocationList {
  // (leaf, revocation epoch); a leaf may appear at several epochs.
  std::set<std::pair<NodeId, uint64_t>> entries;
  // max epoch for which an update was published
  std::optional<uint64_t> high_water_update_time;
  // max epoch seen by any update/revocation query (non-decreasing rule)
  std::optional<uint64_t> high_water_query_time;

  bool revoked_at(NodeId leaf, uint64_t t) const {
    for (const auto& [v, tr] : entries)
      if (v == leaf && tr <= t) return true;
    return false;
  }

  void note_update(uint64_t t) {
    if (high_water_query_time && t < *high_water_query_time)
      throw TimeOrderError("update time precedes an earlier query");
    high_water_query_time = t;
    if (!high_water_update_time || t > *high_water_update_time)
      high_water_update_time = t;
  }
};

// Binary-tree state: leaf->identity assignments (identities are opaque byte
// strings, typically encoded Z_q values) plus lazily created node shares.
// Shares are write-once; with a PRF seed they are derived deterministically
// instead of sampled.
template <class S>
class TreeState {
 public:
  TreeState() = default;

  static TreeState create(uint32_t n_max) {
    if (n_max == 0) throw Error("N_max must be >= 1");
    TreeState t;
    t.n_max_ = n_max;
    t.depth_ = 0;
    while ((uint32_t(1) << t.depth_) < n_max) t.depth_++;
    return t;
  }

  static TreeState create_prf(uint32_t n_max, Bytes prf_seed) {
    TreeState t = create(n_max);
    t.prf_seed_ = std::move(prf_seed);
    return t;
  }

  uint32_t depth() const { return depth_; }
  uint32_t n_max() const { return n_max_; }
  NodeId root() const { return 1; }
  NodeId first_leaf() const { return NodeId(1) << depth_; }
  NodeId last_leaf() const { return (NodeId(2) << depth_) - 1; }
  uint32_t node_count() const { return (uint32_t(2) << depth_) - 1; }
  bool is_leaf(NodeId n) const { return n >= first_leaf() && n <= last_leaf(); }
  bool contains(NodeId n) const { return n >= 1 && n <= last_leaf(); }
  bool prf_mode() const { return !prf_seed_.empty(); }

  size_t assigned_count() const { return leaf_assignments_.size(); }
  const std::map<NodeId, Bytes>& leaf_assignments() const {
    return leaf_assignments_;
  }
  const std::map<NodeId, ShareSet<S>>& node_shares() const {
    return node_shares_;
  }

  NodeId assign_leaf(const Bytes& identity) {
    if (assigned_count() >= n_max_)
      throw CapacityError("all N_max leaves assigned");
    NodeId leaf = first_leaf() + next_leaf_;
    next_leaf_++;
    leaf_assignments_.emplace(leaf, identity);
    return leaf;
  }

  std::vector<NodeId> leaves_of(const Bytes& identity) const {
    std::vector<NodeId> out;
    for (const auto& [leaf, id] : leaf_assignments_)
      if (id == identity) out.push_back(leaf);
    return out;
  }

  // [leaf, parent, ..., root]
  std::vector<NodeId> path(NodeId leaf) const {
    if (!is_leaf(leaf)) throw Error("path() requires a leaf node");
    std::vector<NodeId> out;
    for (NodeId n = leaf; n >= 1; n /= 2) out.push_back(n);
    return out;
  }

  template <class E>
  const ShareSet<S>& get_or_create_shares(const E& eng, NodeId node,
                                          const S& master_alpha,
                                          SchemeVariant variant,
                                          HashDrbg& rng) {
    if (!contains(node)) throw Error("node outside tree");
    auto it = node_shares_.find(node);
    if (it != node_shares_.end()) {
      bool has3 = it->second.alpha3.has_value();
      if (has3 != (variant == SchemeVariant::kDlin))
        throw StateError("node shares created for the other scheme variant");
      return it->second;
    }
    ShareSet<S> sh;
    if (prf_mode()) {
      sh.alpha1 = prf_scalar(eng, node, 1);
      if (variant == SchemeVariant::kDlin) sh.alpha3 = prf_scalar(eng, node, 3);
    } else {
      sh.alpha1 = eng.random_scalar(rng);
      if (variant == SchemeVariant::kDlin) sh.alpha3 = eng.random_scalar(rng);
    }
    sh.alpha2 = master_alpha - sh.alpha1;
    return node_shares_.emplace(node, std::move(sh)).first->second;
  }

  // serialization hooks (formats live in artifacts.hpp)
  const Bytes& prf_seed() const { return prf_seed_; }
  uint32_t next_leaf_offset() const { return next_leaf_; }
  void restore(uint32_t depth, uint32_t n_max, uint32_t next_leaf,
               Bytes prf_seed, std::map<NodeId, Bytes> assignments,
               std::map<NodeId, ShareSet<S>> shares) {
    depth_ = depth;
    n_max_ = n_max;
    next_leaf_ = next_leaf;
    prf_seed_ = std::move(prf_seed);
    leaf_assignments_ = std::move(assignments);
    node_shares_ = std::move(shares);
  }

 private:
  uint32_t depth_ = 0;
  uint32_t n_max_ = 1;
  uint32_t next_leaf_ = 0;  // leftmost-unassigned policy
  Bytes prf_seed_;
  std::map<NodeId, Bytes> leaf_assignments_;
  std::map<NodeId, ShareSet<S>> node_shares_;

  template <class E>
  S prf_scalar(const E& eng, NodeId node, uint8_t slot) const {
    uint8_t msg[14 + 8 + 1];
    std::memcpy(msg, "RIBE:share:v1", 14);
    for (int i = 0; i < 8; i++) msg[14 + i] = uint8_t(uint64_t(node) >> (8 * i));
    msg[22] = slot;
    Bytes wide;
    for (uint8_t block = 0; block < 2; block++) {
      Bytes m(msg, msg + sizeof(msg));
      m.push_back(block);
      auto d = hmac_sha256(prf_seed_, m);
      wide.insert(wide.end(), d.begin(), d.end());
    }
    return eng.scalar_from_wide(wide);
  }
};

template <class S>
TreeState<S> new_tree(uint32_t n_max) {
  return TreeState<S>::create(n_max);
}

// KUNodes(BT, RL, t): X is the union of root paths of leaves revoked at or
// before t; Y collects children of X-nodes not in X. With no effective
// revocations the cover is just {root}. When every leaf is revoked X closes
// under children and the cover is empty (publishing the root there would
// hand revoked users a usable update; see the cover-correctness tests).
template <class S>
std::vector<NodeId> ku_nodes(const TreeState<S>& tree,
                             const RevocationList& rl, uint64_t t) {
  std::set<NodeId> x;
  for (const auto& [leaf, ti] : rl.entries) {
    if (ti > t) continue;
    for (NodeId n : tree.path(leaf)) x.insert(n);
  }
  std::set<NodeId> y;
  for (NodeId n : x) {
    if (tree.is_leaf(n)) continue;
    for (NodeId child : {2 * n, 2 * n + 1})
      if (!x.count(child)) y.insert(child);
  }
  if (x.empty()) y.insert(tree.root());
  return {y.begin(), y.end()};  // std::set iterates ascending
}

// KeyRev: adds (leaf, t) for every leaf bound to the identity. Enforces the
// non-decreasing time rule and rejects revocation at an epoch whose update
// was already published.
template <class S>
RevokeStatus revoke(RevocationList& rl, const TreeState<S>& tree,
                    const Bytes& identity, uint64_t t) {
  if (rl.high_water_query_time && t < *rl.high_water_query_time)
    throw TimeOrderError("revocation time precedes an earlier query");
  if (rl.high_water_update_time && t == *rl.high_water_update_time)
    throw TimeOrderError("cannot revoke at an epoch already published");
  auto leaves = tree.leaves_of(identity);
  if (leaves.empty()) return RevokeStatus::kUnknownIdentity;
  for (NodeId leaf : leaves) rl.entries.emplace(leaf, t);
  rl.high_water_query_time = t;
  return RevokeStatus::kRevoked;
}

}  // namespace ribe
