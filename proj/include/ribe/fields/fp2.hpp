#pragma once

#include <optional>
#include <span>

#include "ribe/fields/fp.hpp"

namespace ribe::bls381 {

// Fp2 = Fp[u] / (u^2 + 1).
class Fp2 {
 public:
  Fp c0, c1;

  Fp2() = default;
  Fp2(const Fp& a, const Fp& b) : c0(a), c1(b) {}

  static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }
  static Fp2 from_limbs(const uint64_t (&raw)[2][6]) {
    Fp::Limbs a, b;
    for (int i = 0; i < 6; i++) {
      a[i] = raw[0][i];
      b[i] = raw[1][i];
    }
    return {Fp::from_canonical(a), Fp::from_canonical(b)};
  }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp2& o) const { return !(*this == o); }

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }

  Fp2 operator*(const Fp2& o) const {
    // Karatsuba: (a0 + a1 u)(b0 + b1 u) = a0b0 - a1b1 + ((a0+a1)(b0+b1) - a0b0 - a1b1) u
    Fp t0 = c0 * o.c0;
    Fp t1 = c1 * o.c1;
    Fp t2 = (c0 + c1) * (o.c0 + o.c1);
    return {t0 - t1, t2 - t0 - t1};
  }

  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

  Fp2 square() const {
    // (a + bu)^2 = (a+b)(a-b) + 2ab u
    Fp t0 = (c0 + c1) * (c0 - c1);
    Fp t1 = (c0 * c1).dbl();
    return {t0, t1};
  }

  Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }

  Fp2 conjugate() const { return {c0, -c1}; }

  // Multiplication by the sextic non-residue xi = 1 + u.
  Fp2 mul_by_xi() const { return {c0 - c1, c0 + c1}; }

  Fp2 inverse() const {
    Fp n = (c0.square() + c1.square()).inverse();
    return {c0 * n, -(c1 * n)};
  }

  // Frobenius x -> x^p is conjugation (p = 3 mod 4).
  Fp2 frobenius() const { return conjugate(); }

  Fp2 pow(std::span<const uint64_t> exp) const {
    Fp2 acc = one();
    for (int i = int(exp.size()) - 1; i >= 0; i--) {
      for (int b = 63; b >= 0; b--) {
        acc = acc.square();
        if ((exp[i] >> b) & 1) acc = acc * *this;
      }
    }
    return acc;
  }

  Fp2 pow_be_bytes(std::span<const uint8_t> exp) const {
    Fp2 acc = one();
    for (uint8_t byte : exp) {
      for (int b = 7; b >= 0; b--) {
        acc = acc.square();
        if ((byte >> b) & 1) acc = acc * *this;
      }
    }
    return acc;
  }

  // Tonelli-Shanks with the precomputed 2-adicity data (s = 3).
  std::optional<Fp2> sqrt() const {
    if (is_zero()) return zero();
    std::span<const uint8_t> t_exp(params::kFp2TsT, params::kFp2TsTBytes);
    std::span<const uint8_t> h_exp(params::kFp2TsTPlus1Half,
                                   params::kFp2TsTPlus1Half2Bytes);
    Fp2 r = pow_be_bytes(h_exp);  // a^((t+1)/2)
    Fp2 t = pow_be_bytes(t_exp);  // a^t
    Fp2 c = from_limbs(params::kFp2TsZ);
    int m = params::kFp2TwoAdicity;
    while (t != one()) {
      Fp2 t2 = t;
      int i = 0;
      while (t2 != one() && i < m) {
        t2 = t2.square();
        i++;
      }
      if (i == m) return std::nullopt;  // not a square
      Fp2 b = c;
      for (int j = 0; j < m - i - 1; j++) b = b.square();
      m = i;
      c = b.square();
      t = t * c;
      r = r * b;
    }
    return r;
  }

  // ZCash ordering: compare c1 first, then c0, as canonical integers.
  bool canonical_greater(const Fp2& o) const {
    if (c1 != o.c1) return c1.canonical_greater(o.c1);
    return c0.canonical_greater(o.c0);
  }
};

}  // namespace ribe::bls381
