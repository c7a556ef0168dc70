#pragma once

#include "ribe/ribe_common.hpp"

namespace ribe {

// RIBE over a 9-dimensional DPVS on a symmetric pairing group (realized via
// the symmetric shim when the base curve is type-3). Each key carries two
// layers sharing the node's alpha3 with opposite signs; only basis vectors
// 1..6 are ever published -- dimensions 7..9 exist in the sampled bases but
// are never exponentiated into pp or mk vectors. Decryption costs exactly
// 18 component pairings.
template <class E>
struct DlinScheme {
  using Engine = E;
  using S = typename E::Scalar;
  using GV = GroupVector<typename E::G1>;  // symmetric: one source group
  using GT = typename E::GT;
  using Entry = NodeKey<GV>;

  static constexpr uint8_t kSchemeId = 0x02;
  static constexpr size_t kDim = 9;
  static constexpr size_t kPublished = 6;
  static constexpr size_t kPairingsPerDecryption = 2 * kDim;
  static constexpr SchemeVariant kVariant = SchemeVariant::kDlin;

  struct PublicParams {
    E engine;
    GT gt_alpha;
    std::array<GV, kPublished> d;  // g^{d_1}..g^{d_6}

    // 1 GT element + 6 nine-dim vectors = 55
    size_t element_count() const {
      size_t n = 1;
      for (const auto& v : d) n += v.dim();
      return n;
    }
  };

  struct MasterKey {
    S alpha;
    std::array<GV, kPublished> dstar;  // g^{d_1*}..g^{d_6*}
    DualBases<S> bases;                // all nine dimensions, oracle use only

    size_t element_count() const {
      size_t n = 1;
      for (const auto& v : dstar) n += v.dim();
      return n;
    }
  };

  struct PrivateKey {
    std::vector<Entry> entries;
    NodeId leaf() const { return entries.front().node; }
  };

  struct KeyUpdate {
    uint64_t time = 0;
    std::vector<Entry> entries;
  };

  struct DecryptionKey {
    NodeId node;
    uint64_t time = 0;
    GV k_id;
    GV k_t;
  };

  struct Ciphertext {
    GT c;
    GV c0;  // 9 source-group elements
  };

  struct SetupResult {
    PublicParams pp;
    MasterKey mk;
    RevocationList rl;
    TreeState<S> tree;
  };

  struct KeyGenTrace {
    std::vector<std::tuple<NodeId, S, S>> r13;  // (node, r1, r3)
  };
  struct KeyUpdTrace {
    std::vector<std::tuple<NodeId, S, S>> r24;  // (node, r2, r4)
  };
  struct EncTrace {
    S z1, z2;
  };

  static SetupResult setup(const E& eng, uint32_t n_max, HashDrbg& rng) {
    SetupResult out{.pp = {.engine = eng}, .mk = {}, .rl = {}, .tree = {}};
    out.tree = TreeState<S>::create(n_max);
    out.mk.bases = sample_dual_bases(eng, kDim, rng);
    out.mk.alpha = eng.random_scalar(rng);
    out.pp.gt_alpha = eng.gt_pow(eng.gt_base(), out.mk.alpha * out.mk.bases.psi);
    for (size_t i = 0; i < kPublished; i++) {
      out.pp.d[i] = vec_exp_g1(eng, out.mk.bases.d[i]);
      out.mk.dstar[i] = vec_exp_g2(eng, out.mk.bases.dstar[i]);
    }
    return out;
  }

  static SetupResult setup_prf(const E& eng, uint32_t n_max, Bytes prf_seed,
                               HashDrbg& rng) {
    SetupResult out = setup(eng, n_max, rng);
    out.tree = TreeState<S>::create_prf(n_max, std::move(prf_seed));
    return out;
  }

  // K_{id,theta} = g^{(a1 + r1 id) d1* - r1 d2* + (a3 + r3 id) d4* - r3 d5*}.
  static PrivateKey pri_key_gen(const PublicParams& pp, const MasterKey& mk,
                                const S& id, TreeState<S>& tree, HashDrbg& rng,
                                KeyGenTrace* trace = nullptr) {
    const E& eng = pp.engine;
    NodeId leaf = tree.assign_leaf(scalar_bytes_of(eng, id));
    PrivateKey sk;
    for (NodeId node : tree.path(leaf)) {
      const auto& sh = tree.get_or_create_shares(eng, node, mk.alpha, kVariant, rng);
      S r1 = eng.random_scalar(rng);
      S r3 = eng.random_scalar(rng);
      if (trace) trace->r13.emplace_back(node, r1, r3);
      GV k = vec_mul(eng, vec_mul(eng, vec_pow(eng, mk.dstar[0], sh.alpha1 + r1 * id),
                                  vec_pow(eng, mk.dstar[1], -r1)),
                     vec_mul(eng, vec_pow(eng, mk.dstar[3], *sh.alpha3 + r3 * id),
                             vec_pow(eng, mk.dstar[4], -r3)));
      sk.entries.push_back({node, std::move(k)});
    }
    return sk;
  }

  // K_{t,theta} = g^{(a2 + r2 t) d1* - r2 d3* + (-a3 + r4 t) d4* - r4 d6*};
  // the same alpha3 share as the private key, with the opposite sign.
  static KeyUpdate key_upd(const PublicParams& pp, const MasterKey& mk,
                           uint64_t t, RevocationList& rl, TreeState<S>& tree,
                           HashDrbg& rng, KeyUpdTrace* trace = nullptr) {
    const E& eng = pp.engine;
    rl.note_update(t);
    S ts = epoch_scalar(eng, t);
    KeyUpdate ku;
    ku.time = t;
    for (NodeId node : ku_nodes(tree, rl, t)) {
      const auto& sh = tree.get_or_create_shares(eng, node, mk.alpha, kVariant, rng);
      S r2 = eng.random_scalar(rng);
      S r4 = eng.random_scalar(rng);
      if (trace) trace->r24.emplace_back(node, r2, r4);
      GV k = vec_mul(eng, vec_mul(eng, vec_pow(eng, mk.dstar[0], sh.alpha2 + r2 * ts),
                                  vec_pow(eng, mk.dstar[2], -r2)),
                     vec_mul(eng, vec_pow(eng, mk.dstar[3], -*sh.alpha3 + r4 * ts),
                             vec_pow(eng, mk.dstar[5], -r4)));
      ku.entries.push_back({node, std::move(k)});
    }
    return ku;
  }

  static std::optional<DecryptionKey> dec_key_gen(const PrivateKey& sk,
                                                  const KeyUpdate& ku) {
    auto m = match_decryption_node(sk.entries, ku.entries);
    if (!m) return std::nullopt;
    const auto& [i, j] = *m;
    return DecryptionKey{.node = sk.entries[i].node,
                         .time = ku.time,
                         .k_id = sk.entries[i].k,
                         .k_t = ku.entries[j].k};
  }

  // C = m (g_T^alpha)^{z1}, C0 = g^{z1(d1 + id d2 + t d3) + z2(d4 + id d5 + t d6)}.
  static Ciphertext enc(const PublicParams& pp, const S& id, uint64_t t,
                        const GT& m, HashDrbg& rng, EncTrace* trace = nullptr) {
    const E& eng = pp.engine;
    S z1 = eng.random_scalar(rng);
    S z2 = eng.random_scalar(rng);
    if (trace) {
      trace->z1 = z1;
      trace->z2 = z2;
    }
    S ts = epoch_scalar(eng, t);
    GV c0 = vec_mul(eng, vec_pow(eng, pp.d[0], z1), vec_pow(eng, pp.d[1], z1 * id));
    c0 = vec_mul(eng, c0, vec_pow(eng, pp.d[2], z1 * ts));
    c0 = vec_mul(eng, c0, vec_pow(eng, pp.d[3], z2));
    c0 = vec_mul(eng, c0, vec_pow(eng, pp.d[4], z2 * id));
    c0 = vec_mul(eng, c0, vec_pow(eng, pp.d[5], z2 * ts));
    return {eng.gt_mul(m, eng.gt_pow(pp.gt_alpha, z1)), std::move(c0)};
  }

  static GT dec(const PublicParams& pp, const DecryptionKey& dk,
                const Ciphertext& ct) {
    const E& eng = pp.engine;
    GT denom = eng.gt_mul(vec_pair(eng, ct.c0, dk.k_id),
                          vec_pair(eng, ct.c0, dk.k_t));
    return eng.gt_mul(ct.c, eng.gt_inverse(denom));
  }

  static RevokeStatus key_rev(const PublicParams& pp, const S& id, uint64_t t,
                              RevocationList& rl, const TreeState<S>& tree) {
    return revoke(rl, tree, scalar_bytes_of(pp.engine, id), t);
  }
};

}  // namespace ribe
