#pragma once

#include <set>

#include "ribe/artifacts.hpp"
#include "ribe/engine/bls12_381.hpp"
#include "ribe/engine/mock.hpp"
#include "ribe/engine/symmetric.hpp"

namespace ribe::testutil {

inline MockEngine mock101() { return MockEngine(101); }

// d_i . d_j* == psi * delta_ij, checked in exponent arithmetic.
template <class S>
bool dual_pattern_holds(const DualBases<S>& b) {
  for (size_t i = 0; i < b.dim; i++) {
    for (size_t j = 0; j < b.dim; j++) {
      S got = b.d[i].dot(b.dstar[j]);
      if (i == j) {
        if (!(got - b.psi).is_zero()) return false;
      } else if (!got.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

// Brute-force revocation oracle: a leaf is revoked at t iff some RL entry
// for it has t_i <= t. Independent of ku_nodes.
inline bool leaf_revoked_at(const RevocationList& rl, NodeId leaf, uint64_t t) {
  for (const auto& [v, ti] : rl.entries)
    if (v == leaf && ti <= t) return true;
  return false;
}

// Cover-correctness check for one tree/RL/time: every unrevoked leaf has
// exactly one path node in the cover, every revoked leaf none.
template <class S>
bool cover_correct(const TreeState<S>& tree, const RevocationList& rl,
                   uint64_t t) {
  auto cover = ku_nodes(tree, rl, t);
  std::set<NodeId> cov(cover.begin(), cover.end());
  for (NodeId leaf = tree.first_leaf(); leaf <= tree.last_leaf(); leaf++) {
    int hits = 0;
    for (NodeId n : tree.path(leaf)) hits += cov.count(n);
    if (leaf_revoked_at(rl, leaf, t)) {
      if (hits != 0) return false;
    } else if (hits != 1) {
      return false;
    }
  }
  return true;
}

// The §III-style consistency experiment at desk scale: a random schedule of
// registrations, revocations and updates, then every (user, epoch) pair is
// derived and decrypted. Expected outcomes come from the brute-force
// revocation oracle, never from ku_nodes.
template <class Scheme>
struct ConsistencyResult {
  size_t decrypt_ok = 0, decrypt_total = 0;
  size_t bot_ok = 0, bot_total = 0;
  // bot_matrix[user][epoch-1]: dec_key_gen returned the revoked symbol
  std::vector<std::vector<bool>> bot_matrix;
  bool passed = false;
};

template <class Scheme>
ConsistencyResult<Scheme> run_consistency_schedule(
    const typename Scheme::Engine& eng, uint32_t n_max, size_t n_users,
    uint64_t n_epochs, size_t n_revocations, size_t n_messages,
    uint64_t seed) {
  using S = typename Scheme::Engine::Scalar;
  HashDrbg rng(seed);
  auto st = Scheme::setup(eng, n_max, rng);

  std::vector<S> ids;
  std::vector<typename Scheme::PrivateKey> sks;
  std::vector<NodeId> leaves;
  for (size_t u = 0; u < n_users; u++) {
    ids.push_back(eng.random_scalar(rng));
    sks.push_back(Scheme::pri_key_gen(st.pp, st.mk, ids[u], st.tree, rng));
    leaves.push_back(sks[u].leaf());
  }

  // schedule revocations at random (user, epoch in [1, n_epochs])
  std::vector<std::pair<size_t, uint64_t>> revs;
  for (size_t i = 0; i < n_revocations; i++)
    revs.emplace_back(rng.next_u64() % n_users, 1 + rng.next_u64() % n_epochs);

  std::vector<typename Scheme::KeyUpdate> kus;
  for (uint64_t e = 1; e <= n_epochs; e++) {
    for (const auto& [u, te] : revs)
      if (te == e) Scheme::key_rev(st.pp, ids[u], e, st.rl, st.tree);
    kus.push_back(Scheme::key_upd(st.pp, st.mk, e, st.rl, st.tree, rng));
  }

  ConsistencyResult<Scheme> res;
  res.bot_matrix.assign(n_users, std::vector<bool>(n_epochs, false));
  size_t msg_budget = n_messages;
  size_t live_pairs = 0;
  for (size_t u = 0; u < n_users; u++)
    for (uint64_t e = 1; e <= n_epochs; e++)
      live_pairs += !leaf_revoked_at(st.rl, leaves[u], e);

  for (size_t u = 0; u < n_users; u++) {
    for (uint64_t e = 1; e <= n_epochs; e++) {
      bool expect_bot = leaf_revoked_at(st.rl, leaves[u], e);
      auto dk = Scheme::dec_key_gen(sks[u], kus[e - 1]);
      res.bot_matrix[u][e - 1] = !dk.has_value();
      if (expect_bot) {
        res.bot_total++;
        res.bot_ok += !dk.has_value();
        continue;
      }
      if (!dk.has_value()) return res;  // wrongly revoked: fail fast
      size_t msgs = live_pairs ? std::max<size_t>(1, msg_budget / live_pairs) : 0;
      for (size_t k = 0; k < msgs; k++) {
        auto m = eng.random_gt(rng);
        auto ct = Scheme::enc(st.pp, ids[u], e, m, rng);
        res.decrypt_total++;
        res.decrypt_ok += (Scheme::dec(st.pp, *dk, ct) == m);
      }
    }
  }
  res.passed = res.decrypt_ok == res.decrypt_total &&
               res.bot_ok == res.bot_total && res.decrypt_total > 0;
  return res;
}

}  // namespace ribe::testutil
