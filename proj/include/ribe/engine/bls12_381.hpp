#pragma once

#include <string>

#include "ribe/common.hpp"
#include "ribe/curve/pairing.hpp"
#include "ribe/rng.hpp"

namespace ribe {

// Production pairing engine: BLS12-381, a type-3 curve at the 128-bit
// security level. This is the reference for the engine interface the
// scheme templates are written against:
//
//   types    Scalar, G1, G2, GT (value types with operator==)
//   scalars  scalar_from_u64, scalar_from_wide, random_scalar,
//            random_nonzero_scalar, scalar_bytes, encode/decode_scalar
//   groups   g1, g2, identity_g1/g2/gt, mul (group op), pow, exp_g1/g2,
//            gt_base, gt_mul, gt_pow, gt_inverse, random_gt
//   pairing  pair (increments the per-thread pairing counter)
//   codec    g1/g2/gt_bytes, encode_*, decode_* (decoders validate
//            canonicity and subgroup membership)
class Bls12381Engine {
 public:
  static constexpr bool kInsecure = false;
  static constexpr uint8_t kEngineId = 0x01;

  using Scalar = bls381::Fr;
  using G1 = bls381::G1Point;
  using G2 = bls381::G2Point;
  using GT = bls381::Fp12;

  std::string name() const { return "bls12-381"; }
  bool insecure() const { return kInsecure; }

  // engine parameters embedded in serialized artifacts (none for bls12-381)
  template <class W>
  void write_params(W&) const {}
  template <class R>
  static Bls12381Engine read_params(R&) {
    return {};
  }

  // --- scalars ---
  Scalar scalar_zero() const { return Scalar::zero(); }
  Scalar scalar_one() const { return Scalar::one(); }
  Scalar scalar_from_u64(uint64_t v) const { return Scalar::from_u64(v); }
  Scalar scalar_from_wide(ByteSpan b) const {
    return Scalar::from_wide_bytes_le(b);
  }
  Scalar random_scalar(HashDrbg& rng) const {
    uint8_t buf[64];
    rng.fill_bytes(buf);
    return Scalar::from_wide_bytes_le(buf);
  }
  Scalar random_nonzero_scalar(HashDrbg& rng) const {
    for (int i = 0; i < 100; i++) {
      Scalar s = random_scalar(rng);
      if (!s.is_zero()) return s;
    }
    throw InternalError("rng produced 100 zero scalars");
  }
  size_t scalar_bytes() const { return bls381::kFrBytes; }
  void encode_scalar(const Scalar& s, std::span<uint8_t> out) const {
    s.to_bytes_le(out);
  }
  Scalar decode_scalar(ByteSpan in) const {
    auto s = Scalar::from_bytes_le(in);
    if (!s) throw FormatError("invalid scalar encoding");
    return *s;
  }

  // --- source groups ---
  G1 g1() const { return G1::generator(); }
  G2 g2() const { return G2::generator(); }
  G1 identity_g1() const { return G1::infinity(); }
  G2 identity_g2() const { return G2::infinity(); }
  bool is_identity(const G1& x) const { return x.is_infinity(); }
  bool is_identity(const G2& x) const { return x.is_infinity(); }

  G1 mul(const G1& a, const G1& b) const { return a + b; }
  G2 mul(const G2& a, const G2& b) const { return a + b; }
  G1 pow(const G1& a, const Scalar& s) const { return a.mul(s); }
  G2 pow(const G2& a, const Scalar& s) const { return a.mul(s); }
  G1 exp_g1(const Scalar& s) const { return g1().mul(s); }
  G2 exp_g2(const Scalar& s) const { return g2().mul(s); }

  // --- pairing ---
  GT pair(const G1& a, const G2& b) const {
    pairing_counter()++;
    return bls381::pairing(a, b);
  }
  static uint64_t& pairing_counter() {
    thread_local uint64_t count = 0;
    return count;
  }

  // --- target group ---
  GT identity_gt() const { return GT::one(); }
  bool is_identity(const GT& x) const { return x.is_one(); }
  GT gt_base() const {
    static const GT base = bls381::pairing(G1::generator(), G2::generator());
    return base;
  }
  GT gt_mul(const GT& a, const GT& b) const { return a * b; }
  // All GT values in this engine live in the r-torsion (pairing outputs or
  // checked decodes), so cyclotomic shortcuts apply.
  GT gt_pow(const GT& a, const Scalar& s) const {
    auto e = s.to_canonical();
    GT acc = GT::one();
    bool seen = false;
    for (int i = int(e.size()) - 1; i >= 0; i--) {
      for (int b = 63; b >= 0; b--) {
        if (seen) acc = acc.cyclotomic_square();
        if ((e[i] >> b) & 1) {
          acc = seen ? acc * a : a;
          seen = true;
        }
      }
    }
    return acc;
  }
  GT gt_inverse(const GT& a) const { return a.conjugate(); }
  GT random_gt(HashDrbg& rng) const { return gt_pow(gt_base(), random_scalar(rng)); }

  // --- codec ---
  size_t g1_bytes() const { return bls381::kG1CompressedBytes; }
  size_t g2_bytes() const { return bls381::kG2CompressedBytes; }
  size_t gt_bytes() const { return 12 * bls381::kFpBytes; }

  void encode(const G1& x, std::span<uint8_t> out) const {
    bls381::g1_encode(x, out);
  }
  void encode(const G2& x, std::span<uint8_t> out) const {
    bls381::g2_encode(x, out);
  }
  void encode(const GT& x, std::span<uint8_t> out) const {
    const bls381::Fp* c[12] = {
        &x.c0.c0.c0, &x.c0.c0.c1, &x.c0.c1.c0, &x.c0.c1.c1,
        &x.c0.c2.c0, &x.c0.c2.c1, &x.c1.c0.c0, &x.c1.c0.c1,
        &x.c1.c1.c0, &x.c1.c1.c1, &x.c1.c2.c0, &x.c1.c2.c1};
    for (int i = 0; i < 12; i++)
      c[i]->to_bytes_be(out.subspan(i * bls381::kFpBytes, bls381::kFpBytes));
  }

  G1 decode_g1(ByteSpan in) const {
    auto p = bls381::g1_decode(in);
    if (!p) throw FormatError("invalid G1 encoding");
    return *p;
  }
  G2 decode_g2(ByteSpan in) const {
    auto p = bls381::g2_decode(in);
    if (!p) throw FormatError("invalid G2 encoding");
    return *p;
  }
  GT decode_gt(ByteSpan in) const {
    if (in.size() != gt_bytes()) throw FormatError("bad GT length");
    bls381::Fp c[12];
    for (int i = 0; i < 12; i++) {
      auto f = bls381::Fp::from_bytes_be(
          in.subspan(i * bls381::kFpBytes, bls381::kFpBytes));
      if (!f) throw FormatError("non-canonical GT coefficient");
      c[i] = *f;
    }
    GT x(bls381::Fp6(bls381::Fp2(c[0], c[1]), bls381::Fp2(c[2], c[3]),
                     bls381::Fp2(c[4], c[5])),
         bls381::Fp6(bls381::Fp2(c[6], c[7]), bls381::Fp2(c[8], c[9]),
                     bls381::Fp2(c[10], c[11])));
    if (!bls381::gt_in_subgroup(x)) throw FormatError("GT element outside r-torsion");
    return x;
  }
};

}  // namespace ribe
