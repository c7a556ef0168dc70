#pragma once

#include <optional>
#include <string>

#include "ribe/ribe_dlin.hpp"
#include "ribe/ribe_sxdh.hpp"
#include "ribe/serial.hpp"

namespace ribe {

// Artifact container: an ASCII header line, then a versioned binary body
//   "scheme=sxdh kind=ku t=42 nodes=3\n"
//   magic "RIBE" | u8 scheme id | u8 kind | u16 version | u8 engine id |
//   engine params | payload
// State files use magic "RIBT" with the same engine header.

enum class ArtifactKind : uint8_t {
  kPublicParams = 0x01,
  kMasterKey = 0x02,
  kPrivateKey = 0x03,
  kKeyUpdate = 0x04,
  kCiphertext = 0x05,
  kDecryptionKey = 0x06,
  kHybridCiphertext = 0x07,
};

inline constexpr uint16_t kArtifactVersion = 1;

inline std::string scheme_name(uint8_t scheme_id) {
  switch (scheme_id) {
    case 0x01: return "sxdh";
    case 0x02: return "dlin";
    default: return "unknown";
  }
}

inline std::string kind_name(ArtifactKind k) {
  switch (k) {
    case ArtifactKind::kPublicParams: return "pp";
    case ArtifactKind::kMasterKey: return "mk";
    case ArtifactKind::kPrivateKey: return "sk";
    case ArtifactKind::kKeyUpdate: return "ku";
    case ArtifactKind::kCiphertext: return "ct";
    case ArtifactKind::kDecryptionKey: return "dk";
    case ArtifactKind::kHybridCiphertext: return "hct";
  }
  return "unknown";
}

struct ArtifactInfo {
  std::string header_line;
  uint8_t scheme_id = 0;
  ArtifactKind kind{};
  uint16_t version = 0;
  uint8_t engine_id = 0;
  std::optional<uint64_t> mock_q;
};

// Reads identification fields without decoding the payload.
inline ArtifactInfo peek_artifact(ByteSpan data) {
  ByteReader r(data);
  ArtifactInfo info;
  info.header_line = r.line();
  auto magic = r.bytes(4);
  if (std::string_view(reinterpret_cast<const char*>(magic.data()), 4) != "RIBE")
    throw FormatError("not an artifact file");
  info.scheme_id = r.u8();
  info.kind = ArtifactKind(r.u8());
  info.version = r.u16();
  info.engine_id = r.u8();
  if (info.engine_id & 0x80) info.mock_q = r.u64();
  return info;
}

namespace detail {

template <class E>
void write_artifact_prefix(ByteWriter& w, const E& eng, std::string_view extra,
                           uint8_t scheme_id, ArtifactKind kind) {
  w.text("scheme=");
  w.text(scheme_name(scheme_id));
  w.text(" kind=");
  w.text(kind_name(kind));
  if (!extra.empty()) {
    w.text(" ");
    w.text(extra);
  }
  if (eng.insecure()) w.text(" INSECURE-MOCK");
  w.text("\n");
  w.text("RIBE");
  w.u8(scheme_id);
  w.u8(uint8_t(kind));
  w.u16(kArtifactVersion);
  w.u8(E::kEngineId);
  eng.write_params(w);
}

template <class E>
E read_artifact_prefix(ByteReader& r, uint8_t scheme_id, ArtifactKind kind) {
  r.line();
  auto magic = r.bytes(4);
  if (std::string_view(reinterpret_cast<const char*>(magic.data()), 4) != "RIBE")
    throw FormatError("not an artifact file");
  if (r.u8() != scheme_id) throw FormatError("artifact is for the other scheme");
  if (r.u8() != uint8_t(kind)) throw FormatError("unexpected artifact kind");
  if (r.u16() != kArtifactVersion) throw FormatError("unsupported artifact version");
  if (r.u8() != E::kEngineId) throw FormatError("artifact from a different engine");
  return E::read_params(r);
}

template <class E>
void put_gv1(ByteWriter& w, const E& eng, const GroupVector<typename E::G1>& v) {
  w.u32(uint32_t(v.dim()));
  Bytes buf(eng.g1_bytes());
  for (const auto& x : v.e) {
    eng.encode(x, buf);
    w.bytes(buf);
  }
}

template <class E>
GroupVector<typename E::G1> get_gv1(ByteReader& r, const E& eng) {
  uint32_t n = r.u32();
  if (n == 0 || n > 64) throw FormatError("implausible vector dimension");
  GroupVector<typename E::G1> v;
  v.e.reserve(n);
  for (uint32_t i = 0; i < n; i++) v.e.push_back(eng.decode_g1(r.bytes(eng.g1_bytes())));
  return v;
}

template <class E>
void put_gv2(ByteWriter& w, const E& eng, const GroupVector<typename E::G2>& v) {
  w.u32(uint32_t(v.dim()));
  Bytes buf(eng.g2_bytes());
  for (const auto& x : v.e) {
    eng.encode(x, buf);
    w.bytes(buf);
  }
}

template <class E>
GroupVector<typename E::G2> get_gv2(ByteReader& r, const E& eng) {
  uint32_t n = r.u32();
  if (n == 0 || n > 64) throw FormatError("implausible vector dimension");
  GroupVector<typename E::G2> v;
  v.e.reserve(n);
  for (uint32_t i = 0; i < n; i++) v.e.push_back(eng.decode_g2(r.bytes(eng.g2_bytes())));
  return v;
}

template <class E>
void put_gt(ByteWriter& w, const E& eng, const typename E::GT& x) {
  Bytes buf(eng.gt_bytes());
  eng.encode(x, buf);
  w.bytes(buf);
}

template <class E>
typename E::GT get_gt(ByteReader& r, const E& eng) {
  return eng.decode_gt(r.bytes(eng.gt_bytes()));
}

template <class E>
void put_scalar(ByteWriter& w, const E& eng, const typename E::Scalar& s) {
  Bytes buf(eng.scalar_bytes());
  eng.encode_scalar(s, buf);
  w.bytes(buf);
}

template <class E>
typename E::Scalar get_scalar(ByteReader& r, const E& eng) {
  return eng.decode_scalar(r.bytes(eng.scalar_bytes()));
}

}  // namespace detail

template <class Scheme>
struct ArtifactCodec {
  using E = typename Scheme::Engine;
  using S = typename E::Scalar;
  static constexpr uint8_t kScheme = Scheme::kSchemeId;
  static constexpr bool kIsSxdh = (Scheme::kSchemeId == 0x01);

  // --- public params ---
  static Bytes encode_public_params(const typename Scheme::PublicParams& pp) {
    ByteWriter w;
    detail::write_artifact_prefix(w, pp.engine, "", kScheme,
                                  ArtifactKind::kPublicParams);
    detail::put_gt(w, pp.engine, pp.gt_alpha);
    if constexpr (kIsSxdh) {
      detail::put_gv1(w, pp.engine, pp.d1);
      detail::put_gv1(w, pp.engine, pp.d2);
      detail::put_gv1(w, pp.engine, pp.d3);
    } else {
      for (const auto& v : pp.d) detail::put_gv1(w, pp.engine, v);
    }
    return w.take();
  }

  static typename Scheme::PublicParams decode_public_params(ByteSpan data) {
    ByteReader r(data);
    E eng = detail::read_artifact_prefix<E>(r, kScheme,
                                            ArtifactKind::kPublicParams);
    typename Scheme::PublicParams pp{.engine = eng};
    pp.gt_alpha = detail::get_gt(r, eng);
    if constexpr (kIsSxdh) {
      pp.d1 = detail::get_gv1(r, eng);
      pp.d2 = detail::get_gv1(r, eng);
      pp.d3 = detail::get_gv1(r, eng);
    } else {
      for (auto& v : pp.d) v = detail::get_gv1(r, eng);
    }
    r.expect_end();
    return pp;
  }

  // --- master key; the dual bases are intentionally not serialized ---
  static Bytes encode_master_key(const E& eng, const typename Scheme::MasterKey& mk) {
    ByteWriter w;
    detail::write_artifact_prefix(w, eng, "", kScheme, ArtifactKind::kMasterKey);
    detail::put_scalar(w, eng, mk.alpha);
    if constexpr (kIsSxdh) {
      detail::put_gv2(w, eng, mk.d1s);
      detail::put_gv2(w, eng, mk.d2s);
      detail::put_gv2(w, eng, mk.d3s);
    } else {
      for (const auto& v : mk.dstar) detail::put_gv2(w, eng, v);
    }
    return w.take();
  }

  static typename Scheme::MasterKey decode_master_key(ByteSpan data) {
    ByteReader r(data);
    E eng = detail::read_artifact_prefix<E>(r, kScheme, ArtifactKind::kMasterKey);
    typename Scheme::MasterKey mk{};
    mk.alpha = detail::get_scalar(r, eng);
    if constexpr (kIsSxdh) {
      mk.d1s = detail::get_gv2(r, eng);
      mk.d2s = detail::get_gv2(r, eng);
      mk.d3s = detail::get_gv2(r, eng);
    } else {
      for (auto& v : mk.dstar) v = detail::get_gv2(r, eng);
    }
    r.expect_end();
    return mk;
  }

  // --- private key ---
  static Bytes encode_private_key(const E& eng, const typename Scheme::PrivateKey& sk) {
    ByteWriter w;
    std::string extra = "leaf=" + std::to_string(sk.entries.front().node) +
                        " nodes=" + std::to_string(sk.entries.size());
    detail::write_artifact_prefix(w, eng, extra, kScheme, ArtifactKind::kPrivateKey);
    w.u32(uint32_t(sk.entries.size()));
    for (const auto& ent : sk.entries) {
      w.u32(ent.node);
      detail::put_gv2(w, eng, ent.k);
    }
    return w.take();
  }

  static typename Scheme::PrivateKey decode_private_key(ByteSpan data) {
    ByteReader r(data);
    E eng = detail::read_artifact_prefix<E>(r, kScheme, ArtifactKind::kPrivateKey);
    typename Scheme::PrivateKey sk;
    uint32_t n = r.u32();
    if (n == 0 || n > 4096) throw FormatError("implausible entry count");
    for (uint32_t i = 0; i < n; i++) {
      NodeId node = r.u32();
      sk.entries.push_back({node, detail::get_gv2(r, eng)});
    }
    r.expect_end();
    return sk;
  }

  // --- key update (public bulletin) ---
  static Bytes encode_key_update(const E& eng, const typename Scheme::KeyUpdate& ku) {
    ByteWriter w;
    std::string extra = "t=" + std::to_string(ku.time) +
                        " nodes=" + std::to_string(ku.entries.size());
    detail::write_artifact_prefix(w, eng, extra, kScheme, ArtifactKind::kKeyUpdate);
    w.u64(ku.time);
    w.u32(uint32_t(ku.entries.size()));
    for (const auto& ent : ku.entries) {
      w.u32(ent.node);
      detail::put_gv2(w, eng, ent.k);
    }
    return w.take();
  }

  static typename Scheme::KeyUpdate decode_key_update(ByteSpan data) {
    ByteReader r(data);
    E eng = detail::read_artifact_prefix<E>(r, kScheme, ArtifactKind::kKeyUpdate);
    typename Scheme::KeyUpdate ku;
    ku.time = r.u64();
    uint32_t n = r.u32();
    if (n > 1u << 22) throw FormatError("implausible entry count");
    for (uint32_t i = 0; i < n; i++) {
      NodeId node = r.u32();
      ku.entries.push_back({node, detail::get_gv2(r, eng)});
    }
    r.expect_end();
    return ku;
  }

  // --- ciphertext (no identity or time fields: the scheme is anonymous) ---
  static Bytes encode_ciphertext(const E& eng, const typename Scheme::Ciphertext& ct) {
    ByteWriter w;
    detail::write_artifact_prefix(w, eng, "", kScheme, ArtifactKind::kCiphertext);
    detail::put_gt(w, eng, ct.c);
    detail::put_gv1(w, eng, ct.c0);
    return w.take();
  }

  static typename Scheme::Ciphertext decode_ciphertext(ByteSpan data) {
    ByteReader r(data);
    E eng = detail::read_artifact_prefix<E>(r, kScheme, ArtifactKind::kCiphertext);
    typename Scheme::Ciphertext ct{.c = detail::get_gt(r, eng), .c0 = {}};
    ct.c0 = detail::get_gv1(r, eng);
    r.expect_end();
    return ct;
  }

  // --- decryption key ---
  static Bytes encode_decryption_key(const E& eng,
                                     const typename Scheme::DecryptionKey& dk) {
    ByteWriter w;
    std::string extra =
        "node=" + std::to_string(dk.node) + " t=" + std::to_string(dk.time);
    detail::write_artifact_prefix(w, eng, extra, kScheme,
                                  ArtifactKind::kDecryptionKey);
    w.u32(dk.node);
    w.u64(dk.time);
    detail::put_gv2(w, eng, dk.k_id);
    detail::put_gv2(w, eng, dk.k_t);
    return w.take();
  }

  static typename Scheme::DecryptionKey decode_decryption_key(ByteSpan data) {
    ByteReader r(data);
    E eng = detail::read_artifact_prefix<E>(r, kScheme,
                                            ArtifactKind::kDecryptionKey);
    typename Scheme::DecryptionKey dk{};
    dk.node = r.u32();
    dk.time = r.u64();
    dk.k_id = detail::get_gv2(r, eng);
    dk.k_t = detail::get_gv2(r, eng);
    r.expect_end();
    return dk;
  }

  // --- authority state: magic "RIBT", version, engine, tree + RL ---
  static Bytes encode_state(const E& eng, const TreeState<S>& tree,
                            const RevocationList& rl) {
    ByteWriter w;
    w.text("RIBT");
    w.u16(kArtifactVersion);
    w.u8(kScheme);
    w.u8(E::kEngineId);
    eng.write_params(w);
    w.u16(uint16_t(tree.depth()));
    w.u32(tree.n_max());
    w.u32(tree.next_leaf_offset());
    w.blob(tree.prf_seed());
    w.u32(uint32_t(tree.leaf_assignments().size()));
    for (const auto& [leaf, id] : tree.leaf_assignments()) {
      w.u32(leaf);
      w.blob(id);
    }
    w.u32(uint32_t(tree.node_shares().size()));
    for (const auto& [node, sh] : tree.node_shares()) {
      w.u32(node);
      w.u8(sh.alpha3 ? 1 : 0);
      detail::put_scalar(w, eng, sh.alpha1);
      detail::put_scalar(w, eng, sh.alpha2);
      if (sh.alpha3) detail::put_scalar(w, eng, *sh.alpha3);
    }
    w.u32(uint32_t(rl.entries.size()));
    for (const auto& [leaf, t] : rl.entries) {
      w.u32(leaf);
      w.u64(t);
    }
    w.u8(rl.high_water_update_time ? 1 : 0);
    w.u64(rl.high_water_update_time.value_or(0));
    w.u8(rl.high_water_query_time ? 1 : 0);
    w.u64(rl.high_water_query_time.value_or(0));
    return w.take();
  }

  static std::tuple<E, TreeState<S>, RevocationList> decode_state(ByteSpan data) {
    ByteReader r(data);
    auto magic = r.bytes(4);
    if (std::string_view(reinterpret_cast<const char*>(magic.data()), 4) != "RIBT")
      throw FormatError("not a state file");
    if (r.u16() != kArtifactVersion) throw FormatError("unsupported state version");
    if (r.u8() != kScheme) throw FormatError("state is for the other scheme");
    if (r.u8() != E::kEngineId) throw FormatError("state from a different engine");
    E eng = E::read_params(r);
    uint16_t depth = r.u16();
    uint32_t n_max = r.u32();
    uint32_t next_leaf = r.u32();
    Bytes prf_seed = r.blob();
    std::map<NodeId, Bytes> assignments;
    uint32_t n_assign = r.u32();
    for (uint32_t i = 0; i < n_assign; i++) {
      NodeId leaf = r.u32();
      assignments[leaf] = r.blob();
    }
    std::map<NodeId, ShareSet<S>> shares;
    uint32_t n_shares = r.u32();
    for (uint32_t i = 0; i < n_shares; i++) {
      NodeId node = r.u32();
      bool has3 = r.u8() != 0;
      ShareSet<S> sh;
      sh.alpha1 = detail::get_scalar(r, eng);
      sh.alpha2 = detail::get_scalar(r, eng);
      if (has3) sh.alpha3 = detail::get_scalar(r, eng);
      shares.emplace(node, std::move(sh));
    }
    RevocationList rl;
    uint32_t n_rl = r.u32();
    for (uint32_t i = 0; i < n_rl; i++) {
      NodeId leaf = r.u32();
      uint64_t t = r.u64();
      rl.entries.emplace(leaf, t);
    }
    if (r.u8()) rl.high_water_update_time = r.u64();
    else r.u64();
    if (r.u8()) rl.high_water_query_time = r.u64();
    else r.u64();
    r.expect_end();
    TreeState<S> tree;
    tree.restore(depth, n_max, next_leaf, std::move(prf_seed),
                 std::move(assignments), std::move(shares));
    return {eng, std::move(tree), std::move(rl)};
  }
};

}  // namespace ribe
