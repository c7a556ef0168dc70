#pragma once

#include "ribe/curve/ec.hpp"
#include "ribe/fields/fp12.hpp"

namespace ribe::bls381 {

namespace detail {

struct LineEval {
  Fp2 a, b, c;  // line value a + b*vw + c*v^2 w, pre-scaled by an Fp2 factor
};

// Doubling step on the twist; line is the tangent at T evaluated at P,
// scaled by 2*Y*Z^3 and xi (both killed by the final exponentiation).
inline LineEval dbl_step(G2Point& t, const Fp& xp, const Fp& yp) {
  Fp2 xx = t.X.square();
  Fp2 yy = t.Y.square();
  Fp2 yyyy = yy.square();
  Fp2 zz = t.Z.square();
  Fp2 s = ((t.X + yy).square() - xx - yyyy).dbl();
  Fp2 m = xx + xx + xx;
  Fp2 x3 = m.square() - s.dbl();
  Fp2 y3 = m * (s - x3) - yyyy.dbl().dbl().dbl();
  Fp2 z3 = (t.Y * t.Z).dbl();

  LineEval l;
  l.a = (z3 * zz).mul_fp(yp).mul_by_xi();
  l.b = m * t.X - yy.dbl();
  l.c = -(m * zz).mul_fp(xp);

  t = G2Point{x3, y3, z3};
  return l;
}

// Mixed addition step with affine Q; line through T and Q evaluated at P,
// scaled by H*Z.
inline LineEval add_step(G2Point& t, const Fp2& xq, const Fp2& yq,
                         const Fp& xp, const Fp& yp) {
  Fp2 z1z1 = t.Z.square();
  Fp2 u2 = xq * z1z1;
  Fp2 s2 = yq * z1z1 * t.Z;
  Fp2 h = u2 - t.X;
  Fp2 r = s2 - t.Y;
  Fp2 hh = h.square();
  Fp2 j = h * hh;
  Fp2 v = t.X * hh;
  Fp2 x3 = r.square() - j - v.dbl();
  Fp2 y3 = r * (v - x3) - t.Y * j;
  Fp2 z3 = t.Z * h;

  LineEval l;
  l.a = z3.mul_fp(yp).mul_by_xi();
  l.b = r * xq - yq * z3;
  l.c = -r.mul_fp(xp);

  t = G2Point{x3, y3, z3};
  return l;
}

inline Fp12 pow_z(const Fp12& x) {
  // x^z for the (negative) curve parameter z; input must be cyclotomic.
  return x.cyclotomic_pow(params::kAbsZ).conjugate();
}

}  // namespace detail

// Optimal ate Miller loop over |z|, conjugated for z < 0.
inline Fp12 miller_loop(const G1Point& p, const G2Point& q) {
  if (p.is_infinity() || q.is_infinity()) return Fp12::one();
  auto [xp, yp] = p.to_affine();
  auto [xq, yq] = q.to_affine();
  G2Point t = G2Point::from_affine(xq, yq);
  Fp12 f = Fp12::one();
  const uint64_t z = params::kAbsZ;
  for (int i = 62; i >= 0; i--) {
    f = f.square();
    auto l = detail::dbl_step(t, xp, yp);
    f = f.mul_by_045(l.a, l.b, l.c);
    if ((z >> i) & 1) {
      auto l2 = detail::add_step(t, xq, yq, xp, yp);
      f = f.mul_by_045(l2.a, l2.b, l2.c);
    }
  }
  return f.conjugate();
}

// Maps the Miller value to the r-torsion of Fp12*. The hard part uses the
// verified decomposition 3*(p^4-p^2+1)/r = (z-1)^2 (z+p)(z^2+p^2-1) + 3,
// i.e. this computes the cube of the classic ate pairing, which is itself
// a nondegenerate bilinear pairing.
inline Fp12 final_exponentiation(const Fp12& f) {
  // easy part: f^((p^6-1)(p^2+1))
  Fp12 g = f.conjugate() * f.inverse();
  g = g.frobenius2() * g;
  // hard part
  Fp12 a = detail::pow_z(g) * g.conjugate();   // g^(z-1)
  a = detail::pow_z(a) * a.conjugate();        // g^((z-1)^2)
  Fp12 b = detail::pow_z(a) * a.frobenius();   // ^(z+p)
  Fp12 c = detail::pow_z(detail::pow_z(b)) * b.frobenius2() * b.conjugate();
  return c * g.cyclotomic_square() * g;        // ^(z^2+p^2-1), then * g^3
}

inline Fp12 pairing(const G1Point& p, const G2Point& q) {
  if (p.is_infinity() || q.is_infinity()) return Fp12::one();
  return final_exponentiation(miller_loop(p, q));
}

// r-torsion membership (used when deserializing GT elements).
inline bool gt_in_subgroup(const Fp12& f) {
  return f.pow(std::span<const uint64_t>(params::kFrModulus, 4)).is_one();
}

}  // namespace ribe::bls381
