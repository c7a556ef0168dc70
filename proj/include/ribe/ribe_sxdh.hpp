#pragma once

#include "ribe/ribe_common.hpp"

namespace ribe {

// RIBE over a 6-dimensional DPVS on asymmetric pairing groups. Private keys
// live on tree-path nodes in G2, key updates on cover nodes in G2, and a
// ciphertext is one GT mass plus one 6-dim G1 vector. Decryption costs
// exactly 12 component pairings.
template <class E>
struct SxdhScheme {
  using Engine = E;
  using S = typename E::Scalar;
  using GV1 = GroupVector<typename E::G1>;
  using GV2 = GroupVector<typename E::G2>;
  using GT = typename E::GT;
  using Entry = NodeKey<GV2>;

  static constexpr uint8_t kSchemeId = 0x01;
  static constexpr size_t kDim = 6;
  static constexpr size_t kPairingsPerDecryption = 2 * kDim;
  static constexpr SchemeVariant kVariant = SchemeVariant::kSxdh;

  struct PublicParams {
    E engine;
    GT gt_alpha;
    GV1 d1, d2, d3;

    // 1 GT element + 3 six-dim G1 vectors = 19
    size_t element_count() const { return 1 + d1.dim() + d2.dim() + d3.dim(); }
  };

  struct MasterKey {
    S alpha;
    GV2 d1s, d2s, d3s;
    // Full exponent bases, retained for the test-only semi-functional
    // oracles; never serialized into pp/mk artifacts' public surface.
    DualBases<S> bases;

    // alpha counts as one element, as in the scheme's size accounting
    size_t element_count() const {
      return 1 + d1s.dim() + d2s.dim() + d3s.dim();
    }
  };

  struct PrivateKey {
    std::vector<Entry> entries;  // Path(leaf) order: leaf first, root last
    NodeId leaf() const { return entries.front().node; }
  };

  struct KeyUpdate {
    uint64_t time = 0;
    std::vector<Entry> entries;  // ascending node order
  };

  struct DecryptionKey {
    NodeId node;
    uint64_t time = 0;
    GV2 k_id;
    GV2 k_t;
  };

  struct Ciphertext {
    GT c;
    GV1 c0;  // 6 source-group elements; the GT mass is conventionally uncounted
  };

  struct SetupResult {
    PublicParams pp;
    MasterKey mk;
    RevocationList rl;
    TreeState<S> tree;
  };

  // Randomness transcripts for the exponent-recomputation oracles.
  struct KeyGenTrace {
    std::vector<std::pair<NodeId, S>> r1;
  };
  struct KeyUpdTrace {
    std::vector<std::pair<NodeId, S>> r2;
  };
  struct EncTrace {
    S z;
  };

  static SetupResult setup(const E& eng, uint32_t n_max, HashDrbg& rng) {
    SetupResult out{.pp = {.engine = eng}, .mk = {}, .rl = {}, .tree = {}};
    out.tree = TreeState<S>::create(n_max);
    out.mk.bases = sample_dual_bases(eng, kDim, rng);
    out.mk.alpha = eng.random_scalar(rng);
    // g_T^alpha := e(g1,g2)^{alpha d1.d1*} = e(g1,g2)^{alpha psi}
    out.pp.gt_alpha = eng.gt_pow(eng.gt_base(), out.mk.alpha * out.mk.bases.psi);
    out.pp.d1 = vec_exp_g1(eng, out.mk.bases.d[0]);
    out.pp.d2 = vec_exp_g1(eng, out.mk.bases.d[1]);
    out.pp.d3 = vec_exp_g1(eng, out.mk.bases.d[2]);
    out.mk.d1s = vec_exp_g2(eng, out.mk.bases.dstar[0]);
    out.mk.d2s = vec_exp_g2(eng, out.mk.bases.dstar[1]);
    out.mk.d3s = vec_exp_g2(eng, out.mk.bases.dstar[2]);
    return out;
  }

  static SetupResult setup_prf(const E& eng, uint32_t n_max, Bytes prf_seed,
                               HashDrbg& rng) {
    SetupResult out = setup(eng, n_max, rng);
    out.tree = TreeState<S>::create_prf(n_max, std::move(prf_seed));
    return out;
  }

  // K_{id,theta} = g2^{(alpha_{theta,1} + r id) d1* - r d2*} for every node
  // on the path of a freshly assigned leaf.
  static PrivateKey pri_key_gen(const PublicParams& pp, const MasterKey& mk,
                                const S& id, TreeState<S>& tree, HashDrbg& rng,
                                KeyGenTrace* trace = nullptr) {
    const E& eng = pp.engine;
    NodeId leaf = tree.assign_leaf(scalar_bytes_of(eng, id));
    PrivateKey sk;
    for (NodeId node : tree.path(leaf)) {
      const auto& sh = tree.get_or_create_shares(eng, node, mk.alpha, kVariant, rng);
      S r = eng.random_scalar(rng);
      if (trace) trace->r1.emplace_back(node, r);
      GV2 k = vec_mul(eng, vec_pow(eng, mk.d1s, sh.alpha1 + r * id),
                      vec_pow(eng, mk.d2s, -r));
      sk.entries.push_back({node, std::move(k)});
    }
    return sk;
  }

  // K_{t,theta} = g2^{(alpha_{theta,2} + r t) d1* - r d3*} for every cover
  // node; key updates are public artifacts.
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
      S r = eng.random_scalar(rng);
      if (trace) trace->r2.emplace_back(node, r);
      GV2 k = vec_mul(eng, vec_pow(eng, mk.d1s, sh.alpha2 + r * ts),
                      vec_pow(eng, mk.d3s, -r));
      ku.entries.push_back({node, std::move(k)});
    }
    return ku;
  }

  // Deterministic; empty optional is the paper's "revoked" output.
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

  // C = m (g_T^alpha)^z, C0 = g1^{z(d1 + id d2 + t d3)}; only pp is used.
  static Ciphertext enc(const PublicParams& pp, const S& id, uint64_t t,
                        const GT& m, HashDrbg& rng, EncTrace* trace = nullptr) {
    const E& eng = pp.engine;
    S z = eng.random_scalar(rng);
    if (trace) trace->z = z;
    S ts = epoch_scalar(eng, t);
    GV1 c0 = vec_mul(eng, vec_mul(eng, vec_pow(eng, pp.d1, z),
                                  vec_pow(eng, pp.d2, z * id)),
                     vec_pow(eng, pp.d3, z * ts));
    return {eng.gt_mul(m, eng.gt_pow(pp.gt_alpha, z)), std::move(c0)};
  }

  // m = C / (e(C0, K_id) e(C0, K_t)): 12 component pairings, no integrity
  // check (wrong-provenance keys yield an unflagged wrong mass).
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
