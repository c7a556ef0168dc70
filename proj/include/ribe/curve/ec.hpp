#pragma once

#include <optional>
#include <span>

#include "ribe/fields/fp.hpp"
#include "ribe/fields/fp2.hpp"

namespace ribe::bls381 {

// Short Weierstrass point y^2 = x^3 + b in Jacobian coordinates
// (x = X/Z^2, y = Y/Z^3); infinity is Z = 0.
template <class Traits>
class EcPoint {
 public:
  using Field = typename Traits::Field;

  Field X, Y, Z;

  EcPoint() : X(Field::one()), Y(Field::one()), Z(Field::zero()) {}
  EcPoint(const Field& x, const Field& y, const Field& z) : X(x), Y(y), Z(z) {}

  static EcPoint infinity() { return EcPoint{}; }

  static EcPoint from_affine(const Field& x, const Field& y) {
    return {x, y, Field::one()};
  }

  static EcPoint generator() {
    return from_affine(Traits::gen_x(), Traits::gen_y());
  }

  bool is_infinity() const { return Z.is_zero(); }

  bool operator==(const EcPoint& o) const {
    if (is_infinity() || o.is_infinity())
      return is_infinity() && o.is_infinity();
    Field z1z1 = Z.square(), z2z2 = o.Z.square();
    if (X * z2z2 != o.X * z1z1) return false;
    return Y * (z2z2 * o.Z) == o.Y * (z1z1 * Z);
  }
  bool operator!=(const EcPoint& o) const { return !(*this == o); }

  EcPoint negate() const { return {X, -Y, Z}; }

  EcPoint dbl() const {
    if (is_infinity()) return *this;
    Field xx = X.square();
    Field yy = Y.square();
    Field yyyy = yy.square();
    Field s = ((X + yy).square() - xx - yyyy).dbl();
    Field m = xx + xx + xx;
    Field x3 = m.square() - s.dbl();
    Field y3 = m * (s - x3) - yyyy.dbl().dbl().dbl();
    Field z3 = (Y * Z).dbl();
    return {x3, y3, z3};
  }

  EcPoint operator+(const EcPoint& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    Field z1z1 = Z.square(), z2z2 = o.Z.square();
    Field u1 = X * z2z2, u2 = o.X * z1z1;
    Field s1 = Y * z2z2 * o.Z, s2 = o.Y * z1z1 * Z;
    if (u1 == u2) {
      if (s1 != s2) return infinity();
      return dbl();
    }
    Field h = u2 - u1;
    Field i = h.dbl().square();
    Field j = h * i;
    Field r = (s2 - s1).dbl();
    Field v = u1 * i;
    Field x3 = r.square() - j - v.dbl();
    Field y3 = r * (v - x3) - (s1 * j).dbl();
    Field z3 = ((Z + o.Z).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  EcPoint& operator+=(const EcPoint& o) { return *this = *this + o; }

  // Fixed 4-bit window multiplication; exponent in little-endian limbs.
  EcPoint mul(std::span<const uint64_t> exp) const {
    EcPoint table[16];
    table[0] = infinity();
    table[1] = *this;
    for (int i = 2; i < 16; i++) table[i] = table[i - 1] + *this;
    EcPoint acc = infinity();
    bool seen = false;
    for (int i = int(exp.size()) - 1; i >= 0; i--) {
      for (int w = 15; w >= 0; w--) {
        uint64_t d = (exp[i] >> (4 * w)) & 0xf;
        if (seen) {
          acc = acc.dbl().dbl().dbl().dbl();
        }
        if (d) {
          acc = seen ? acc + table[d] : table[d];
          seen = true;
        } else if (!seen) {
          continue;
        }
      }
    }
    return acc;
  }

  EcPoint mul(const Fr& s) const {
    auto raw = s.to_canonical();
    return mul(std::span<const uint64_t>(raw.data(), raw.size()));
  }

  std::pair<Field, Field> to_affine() const {
    // precondition: not infinity
    Field zinv = Z.inverse();
    Field zinv2 = zinv.square();
    return {X * zinv2, Y * zinv2 * zinv};
  }

  bool on_curve() const {
    if (is_infinity()) return true;
    Field z2 = Z.square();
    Field z6 = z2.square() * z2;
    return Y.square() == X.square() * X + Traits::b() * z6;
  }

  bool in_subgroup() const {
    if (!on_curve()) return false;
    return mul(std::span<const uint64_t>(params::kFrModulus, 4)).is_infinity();
  }
};

struct G1Traits {
  using Field = Fp;
  static Fp b() { return Fp::from_u64(4); }
  static Fp gen_x() {
    Fp::Limbs l;
    for (int i = 0; i < 6; i++) l[i] = params::kG1GenX[i];
    return Fp::from_canonical(l);
  }
  static Fp gen_y() {
    Fp::Limbs l;
    for (int i = 0; i < 6; i++) l[i] = params::kG1GenY[i];
    return Fp::from_canonical(l);
  }
};

struct G2Traits {
  using Field = Fp2;
  static Fp2 b() { return Fp2(Fp::from_u64(4), Fp::from_u64(4)); }
  static Fp2 gen_x() { return Fp2::from_limbs(params::kG2GenX); }
  static Fp2 gen_y() { return Fp2::from_limbs(params::kG2GenY); }
};

using G1Point = EcPoint<G1Traits>;
using G2Point = EcPoint<G2Traits>;

// --- Compressed encodings (ZCash flag convention) ----------------------

inline constexpr size_t kG1CompressedBytes = 48;
inline constexpr size_t kG2CompressedBytes = 96;

inline void g1_encode(const G1Point& pt, std::span<uint8_t> out) {
  if (pt.is_infinity()) {
    for (auto& b : out) b = 0;
    out[0] = 0xc0;
    return;
  }
  auto [x, y] = pt.to_affine();
  x.to_bytes_be(out.subspan(0, 48));
  uint8_t flags = 0x80;
  if (y.canonical_greater(-y)) flags |= 0x20;
  out[0] |= flags;
}

inline std::optional<G1Point> g1_decode(std::span<const uint8_t> in) {
  if (in.size() != kG1CompressedBytes) return std::nullopt;
  uint8_t flags = in[0] & 0xe0;
  if (!(flags & 0x80)) return std::nullopt;  // only compressed form accepted
  std::array<uint8_t, 48> buf;
  std::copy(in.begin(), in.end(), buf.begin());
  buf[0] &= 0x1f;
  if (flags & 0x40) {
    // infinity: remaining bits must be zero
    if (flags & 0x20) return std::nullopt;
    for (auto b : buf)
      if (b) return std::nullopt;
    return G1Point::infinity();
  }
  auto x = Fp::from_bytes_be(buf);
  if (!x) return std::nullopt;
  auto y2 = x->square() * *x + G1Traits::b();
  auto y = y2.sqrt();
  if (!y) return std::nullopt;
  bool greater = y->canonical_greater(-*y);
  Fp yy = (bool(flags & 0x20) == greater) ? *y : -*y;
  G1Point pt = G1Point::from_affine(*x, yy);
  if (!pt.in_subgroup()) return std::nullopt;
  return pt;
}

inline void g2_encode(const G2Point& pt, std::span<uint8_t> out) {
  if (pt.is_infinity()) {
    for (auto& b : out) b = 0;
    out[0] = 0xc0;
    return;
  }
  auto [x, y] = pt.to_affine();
  x.c1.to_bytes_be(out.subspan(0, 48));
  x.c0.to_bytes_be(out.subspan(48, 48));
  uint8_t flags = 0x80;
  if (y.canonical_greater(-y)) flags |= 0x20;
  out[0] |= flags;
}

inline std::optional<G2Point> g2_decode(std::span<const uint8_t> in) {
  if (in.size() != kG2CompressedBytes) return std::nullopt;
  uint8_t flags = in[0] & 0xe0;
  if (!(flags & 0x80)) return std::nullopt;
  std::array<uint8_t, 96> buf;
  std::copy(in.begin(), in.end(), buf.begin());
  buf[0] &= 0x1f;
  if (flags & 0x40) {
    if (flags & 0x20) return std::nullopt;
    for (auto b : buf)
      if (b) return std::nullopt;
    return G2Point::infinity();
  }
  auto xc1 = Fp::from_bytes_be(std::span<const uint8_t>(buf).subspan(0, 48));
  auto xc0 = Fp::from_bytes_be(std::span<const uint8_t>(buf).subspan(48, 48));
  if (!xc0 || !xc1) return std::nullopt;
  Fp2 x(*xc0, *xc1);
  auto y = (x.square() * x + G2Traits::b()).sqrt();
  if (!y) return std::nullopt;
  bool greater = y->canonical_greater(-*y);
  Fp2 yy = (bool(flags & 0x20) == greater) ? *y : -*y;
  G2Point pt = G2Point::from_affine(x, yy);
  if (!pt.in_subgroup()) return std::nullopt;
  return pt;
}

}  // namespace ribe::bls381
