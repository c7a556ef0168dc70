#pragma once

#include <span>

#include "ribe/fields/fp6.hpp"

namespace ribe::bls381 {

// Fp12 = Fp6[w] / (w^2 - v).
class Fp12 {
 public:
  Fp6 c0, c1;

  Fp12() = default;
  Fp12(const Fp6& a, const Fp6& b) : c0(a), c1(b) {}

  static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool is_one() const { return *this == one(); }
  bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp12& o) const { return !(*this == o); }

  Fp12 operator*(const Fp12& o) const {
    Fp6 t0 = c0 * o.c0;
    Fp6 t1 = c1 * o.c1;
    Fp6 r0 = t0 + t1.mul_by_v();
    Fp6 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1;
    return {r0, r1};
  }
  Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

  Fp12 square() const {
    Fp6 t = c0 * c1;
    Fp6 r0 = (c0 + c1) * (c0 + c1.mul_by_v()) - t - t.mul_by_v();
    return {r0, t + t};
  }

  // x^{p^6}; equals x^{-1} on the cyclotomic subgroup.
  Fp12 conjugate() const { return {c0, -c1}; }

  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  Fp12 frobenius() const {
    Fp2 g0 = Fp2::from_limbs(params::kFrobGamma1[0]);  // xi^{(p-1)/6}
    return {c0.frobenius(), c1.frobenius().mul_fp2(g0)};
  }

  Fp12 frobenius2() const { return frobenius().frobenius(); }
  Fp12 frobenius3() const { return frobenius2().frobenius(); }

  // Sparse multiplication by a line value A + B vw + C v^2 w
  // (A, B, C in Fp2), the shape produced by the Miller loop.
  Fp12 mul_by_045(const Fp2& A, const Fp2& B, const Fp2& C) const {
    Fp6 l0(A, Fp2::zero(), Fp2::zero());
    Fp6 l1(Fp2::zero(), B, C);
    Fp6 t0 = c0.mul_fp2(A);
    Fp6 t1 = c1 * l1;
    Fp6 r0 = t0 + t1.mul_by_v();
    Fp6 r1 = (c0 + c1) * (l0 + l1) - t0 - t1;
    return {r0, r1};
  }

  // Granger-Scott squaring; valid only on the cyclotomic subgroup
  // (checked against square() in the test suite).
  Fp12 cyclotomic_square() const {
    // Fp4 = Fp2[s]/(s^2 - xi) blocks: x = (c0.c0 + c1.c1 s)
    //                                   + (c1.c0 + c0.c2 s) w
    //                                   + (c0.c1 + c1.c2 s) w^2.
    auto fp4_sq = [](const Fp2& a, const Fp2& b) {
      Fp2 a2 = a.square();
      Fp2 b2 = b.square();
      return std::pair<Fp2, Fp2>{a2 + b2.mul_by_xi(), ((a + b).square() - a2 - b2)};
    };
    const Fp2 &x00 = c0.c0, &x01 = c1.c1;
    const Fp2 &x10 = c1.c0, &x11 = c0.c2;
    const Fp2 &x20 = c0.c1, &x21 = c1.c2;

    auto [a0, a1] = fp4_sq(x00, x01);
    auto [b0, b1] = fp4_sq(x10, x11);
    auto [c0_, c1_] = fp4_sq(x20, x21);

    // y0 = 3 x0^2 - 2 conj(x0); y1 = 3 s*x2^2 + 2 conj(x1); y2 = 3 x1^2 - 2 conj(x2)
    Fp2 y00 = (a0 - x00).dbl() + a0;
    Fp2 y01 = (a1 + x01).dbl() + a1;
    Fp2 sc0 = c1_.mul_by_xi();  // s * (c0_ + c1_ s) = xi c1_ + c0_ s
    Fp2 y10 = (sc0 + x10).dbl() + sc0;
    Fp2 y11 = (c0_ - x11).dbl() + c0_;
    Fp2 y20 = (b0 - x20).dbl() + b0;
    Fp2 y21 = (b1 + x21).dbl() + b1;

    Fp12 r;
    r.c0.c0 = y00;
    r.c1.c1 = y01;
    r.c1.c0 = y10;
    r.c0.c2 = y11;
    r.c0.c1 = y20;
    r.c1.c2 = y21;
    return r;
  }

  // Cyclotomic exponentiation by a u64 (MSB-first), used by the final
  // exponentiation; exponent here is |z|.
  Fp12 cyclotomic_pow(uint64_t e) const {
    Fp12 acc = one();
    bool seen = false;
    for (int b = 63; b >= 0; b--) {
      if (seen) acc = acc.cyclotomic_square();
      if ((e >> b) & 1) {
        acc = seen ? acc * *this : *this;
        seen = true;
      }
    }
    return seen ? acc : one();
  }

  // Generic exponentiation (square-and-multiply) for non-cyclotomic use.
  Fp12 pow(std::span<const uint64_t> exp) const {
    Fp12 acc = one();
    for (int i = int(exp.size()) - 1; i >= 0; i--) {
      for (int b = 63; b >= 0; b--) {
        acc = acc.square();
        if ((exp[i] >> b) & 1) acc = acc * *this;
      }
    }
    return acc;
  }
};

}  // namespace ribe::bls381
