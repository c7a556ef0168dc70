#pragma once

#include "ribe/fields/fp2.hpp"

namespace ribe::bls381 {

// Fp6 = Fp2[v] / (v^3 - xi), xi = 1 + u.
class Fp6 {
 public:
  Fp2 c0, c1, c2;

  Fp6() = default;
  Fp6(const Fp2& a, const Fp2& b, const Fp2& c) : c0(a), c1(b), c2(c) {}

  static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
  }
  bool operator!=(const Fp6& o) const { return !(*this == o); }

  Fp6 operator+(const Fp6& o) const {
    return {c0 + o.c0, c1 + o.c1, c2 + o.c2};
  }
  Fp6 operator-(const Fp6& o) const {
    return {c0 - o.c0, c1 - o.c1, c2 - o.c2};
  }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  Fp6 operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0;
    Fp2 t1 = c1 * o.c1;
    Fp2 t2 = c2 * o.c2;
    Fp2 r0 = t0 + ((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_by_xi();
    Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_by_xi();
    Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fp6 square() const { return *this * *this; }

  Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  // Multiplication by v.
  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fp6 inverse() const {
    Fp2 a = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 b = c2.square().mul_by_xi() - c0 * c1;
    Fp2 c = c1.square() - c0 * c2;
    Fp2 t = (c0 * a + (c2 * b + c1 * c).mul_by_xi()).inverse();
    return {a * t, b * t, c * t};
  }

  // x -> x^p componentwise with the v-power twists.
  Fp6 frobenius() const {
    Fp2 g1 = Fp2::from_limbs(params::kFrobGamma1[1]);  // xi^{(p-1)/3}
    Fp2 g2 = Fp2::from_limbs(params::kFrobGamma1[3]);  // xi^{2(p-1)/3}
    return {c0.conjugate(), c1.conjugate() * g1, c2.conjugate() * g2};
  }
};

}  // namespace ribe::bls381
