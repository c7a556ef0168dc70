#!/usr/bin/env python3
"""Generates include/ribe/fields/bls12_381_params.hpp.

Every constant is recomputed from the curve parameter z and cross-checked
(structural identities, curve membership, subgroup order) before emission,
so the header never carries an unverified literal.
"""

import sys
import textwrap

from sympy import isprime

# Curve parameter for BLS12-381.
Z = -0xD201000000010000

R_MOD = Z**4 - Z**2 + 1                      # subgroup order (Fr modulus)
P_MOD = (Z - 1) ** 2 * R_MOD // 3 + Z        # base field modulus

assert (Z - 1) ** 2 * R_MOD % 3 == 0
assert isprime(P_MOD), "p must be prime"
assert isprime(R_MOD), "r must be prime"
assert P_MOD % 4 == 3, "sqrt via (p+1)/4 needs p = 3 mod 4"
assert P_MOD % 6 == 1
assert P_MOD.bit_length() == 381
assert R_MOD.bit_length() == 255

P_HEX = (
    "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf"
    "6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab"
)
R_HEX = "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001"
assert P_MOD == int(P_HEX, 16)
assert R_MOD == int(R_HEX, 16)


# ---------------------------------------------------------------------------
# Fp2 helpers: elements are pairs (a, b) meaning a + b*u with u^2 = -1.
# ---------------------------------------------------------------------------
def f2_mul(x, y):
    a, b = x
    c, d = y
    return ((a * c - b * d) % P_MOD, (a * d + b * c) % P_MOD)


def f2_add(x, y):
    return ((x[0] + y[0]) % P_MOD, (x[1] + y[1]) % P_MOD)


def f2_sub(x, y):
    return ((x[0] - y[0]) % P_MOD, (x[1] - y[1]) % P_MOD)


def f2_inv(x):
    a, b = x
    n = pow(a * a + b * b, P_MOD - 2, P_MOD)
    return ((a * n) % P_MOD, (-b * n) % P_MOD)


def f2_pow(x, e):
    acc = (1, 0)
    base = x
    while e > 0:
        if e & 1:
            acc = f2_mul(acc, base)
        base = f2_mul(base, base)
        e >>= 1
    return acc


# ---------------------------------------------------------------------------
# Short Weierstrass arithmetic over a generic field (for generator checks).
# ---------------------------------------------------------------------------
def ec_ops(add, sub, mul, inv):
    def pt_add(P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 != y2 or all(c == 0 for c in (y1 if isinstance(y1, tuple) else (y1,))):
                return None
            num = mul(mul(x1, x1), three)
            den = add(y1, y1)
        else:
            num = sub(y2, y1)
            den = sub(x2, x1)
        lam = mul(num, inv(den))
        x3 = sub(sub(mul(lam, lam), x1), x2)
        y3 = sub(mul(lam, sub(x1, x3)), y1)
        return (x3, y3)

    def pt_mul(k, P):
        acc = None
        while k > 0:
            if k & 1:
                acc = pt_add(acc, P)
            P = pt_add(P, P)
            k >>= 1
        return acc

    return pt_add, pt_mul


# Fp instance
three = 3
fp_add = lambda a, b: (a + b) % P_MOD
fp_sub = lambda a, b: (a - b) % P_MOD
fp_mul = lambda a, b: (a * b) % P_MOD
fp_inv = lambda a: pow(a, P_MOD - 2, P_MOD)
g1_add, g1_mul = ec_ops(fp_add, fp_sub, fp_mul, fp_inv)

# Standard G1 generator.
G1X = int(
    "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac58"
    "6c55e83ff97a1aeffb3af00adb22c6bb",
    16,
)
G1Y = int(
    "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3ed"
    "d03cc744a2888ae40caa232946c5e7e1",
    16,
)
assert (G1Y * G1Y - (G1X**3 + 4)) % P_MOD == 0, "G1 generator not on curve"
assert g1_mul(R_MOD, (G1X, G1Y)) is None, "G1 generator does not have order r"

# Fp2 instance
three = (3, 0)
g2_add, g2_mul = ec_ops(f2_add, f2_sub, f2_mul, f2_inv)

# Standard G2 generator; twist curve y^2 = x^3 + 4(1+u).
G2X = (
    int(
        "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d177"
        "0bac0326a805bbefd48056c8c121bdb8",
        16,
    ),
    int(
        "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049"
        "334cf11213945d57e5ac7d055d042b7e",
        16,
    ),
)
G2Y = (
    int(
        "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c"
        "923ac9cc3baca289e193548608b82801",
        16,
    ),
    int(
        "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab"
        "3f370d275cec1da1aaa9075ff05f79be",
        16,
    ),
)
B2 = (4, 4)
lhs = f2_mul(G2Y, G2Y)
rhs = f2_add(f2_mul(G2X, f2_mul(G2X, G2X)), B2)
assert lhs == rhs, "G2 generator not on twist curve"
assert g2_mul(R_MOD, (G2X, G2Y)) is None, "G2 generator does not have order r"

# ---------------------------------------------------------------------------
# Montgomery constants.
# ---------------------------------------------------------------------------
def mont_consts(mod, nlimbs):
    R = 1 << (64 * nlimbs)
    inv64 = pow(-mod, -1, 1 << 64)  # -mod^-1 mod 2^64
    return {
        "r1": R % mod,
        "r2": (R * R) % mod,
        "inv64": inv64,
    }


FP_MONT = mont_consts(P_MOD, 6)
FR_MONT = mont_consts(R_MOD, 4)

# Wide (512-bit) reduction helper for Fr: 2^256 mod r.
FR_SHIFT256 = (1 << 256) % R_MOD
FP_SHIFT384 = (1 << 384) % P_MOD

# ---------------------------------------------------------------------------
# Frobenius constants (tower: Fp2 = Fp[u]/(u^2+1), Fp6 = Fp2[v]/(v^3 - xi),
# Fp12 = Fp6[w]/(w^2 - v), xi = 1 + u).
# ---------------------------------------------------------------------------
XI = (1, 1)
assert (P_MOD - 1) % 6 == 0
FROB_GAMMA1 = [f2_pow(XI, k * (P_MOD - 1) // 6) for k in range(1, 6)]
# gamma1[k-1] = xi^{k(p-1)/6}; v^p = gamma1[1] * v, (v^2)^p = gamma1[3] * v^2,
# w^p = gamma1[0] * w.

# Tonelli-Shanks in Fp2: p^2 - 1 = 2^s * t with t odd.
P2M1 = P_MOD * P_MOD - 1
S2 = 0
T2 = P2M1
while T2 % 2 == 0:
    T2 //= 2
    S2 += 1
assert S2 == 3, f"expected 2-adicity 3 in Fp2, got {S2}"
# find a quadratic non-residue in Fp2
nonres = None
for b in range(1, 20):
    for a in range(0, 20):
        c = (a, b)
        if f2_pow(c, P2M1 // 2) != (1, 0):
            nonres = c
            break
    if nonres:
        break
assert nonres is not None
TS_Z = f2_pow(nonres, T2)  # generator of the 2-Sylow subgroup
assert f2_pow(TS_Z, 1 << (S2 - 1)) != (1, 0)
assert f2_pow(TS_Z, 1 << S2) == (1, 0)

# Final-exponentiation hard-part decomposition (computes the cube of the
# classic pairing, itself a nondegenerate bilinear map):
#   3 * (p^4 - p^2 + 1)/r == (z-1)^2 * (z + p) * (z^2 + p^2 - 1) + 3
HARD = (P_MOD**4 - P_MOD**2 + 1) // R_MOD
assert (P_MOD**4 - P_MOD**2 + 1) % R_MOD == 0
assert 3 * HARD == (Z - 1) ** 2 * (Z + P_MOD) * (Z**2 + P_MOD**2 - 1) + 3, (
    "hard-part decomposition failed"
)

ABS_Z = -Z
assert ABS_Z == 0xD201000000010000


# ---------------------------------------------------------------------------
# Emission.
# ---------------------------------------------------------------------------
def limbs(x, n):
    out = []
    for _ in range(n):
        out.append(x & 0xFFFFFFFFFFFFFFFF)
        x >>= 64
    assert x == 0
    return out


def limb_str(x, n):
    return "{" + ", ".join(f"0x{v:016x}ull" for v in limbs(x, n)) + "}"


def fp2_str(c, n=6):
    return f"{{{limb_str(c[0], n)}, {limb_str(c[1], n)}}}"


def be_bytes_str(x, width):
    bs = x.to_bytes(width, "big")
    body = ", ".join(f"0x{b:02x}" for b in bs)
    return "{" + body + "}"


lines = []
emit = lines.append
emit("// Generated by tools/gen_bls12_381_params.py. Do not edit by hand.")
emit("#pragma once")
emit("")
emit("#include <cstdint>")
emit("")
emit("namespace ribe::bls381::params {")
emit("")
emit("inline constexpr int kFpLimbs = 6;")
emit("inline constexpr int kFrLimbs = 4;")
emit("")
emit(f"inline constexpr uint64_t kFpModulus[6] = {limb_str(P_MOD, 6)};")
emit(f"inline constexpr uint64_t kFpR1[6] = {limb_str(FP_MONT['r1'], 6)};")
emit(f"inline constexpr uint64_t kFpR2[6] = {limb_str(FP_MONT['r2'], 6)};")
emit(f"inline constexpr uint64_t kFpInv64 = 0x{FP_MONT['inv64']:016x}ull;")
emit(f"inline constexpr uint64_t kFpShift384[6] = {limb_str(FP_SHIFT384, 6)};")
emit("")
emit(f"inline constexpr uint64_t kFrModulus[4] = {limb_str(R_MOD, 4)};")
emit(f"inline constexpr uint64_t kFrR1[4] = {limb_str(FR_MONT['r1'], 4)};")
emit(f"inline constexpr uint64_t kFrR2[4] = {limb_str(FR_MONT['r2'], 4)};")
emit(f"inline constexpr uint64_t kFrInv64 = 0x{FR_MONT['inv64']:016x}ull;")
emit(f"inline constexpr uint64_t kFrShift256[4] = {limb_str(FR_SHIFT256, 4)};")
emit("")
emit("// Curve parameter z (negative); |z| drives the Miller loop and the")
emit("// final-exponentiation chain.")
emit(f"inline constexpr uint64_t kAbsZ = 0x{ABS_Z:016x}ull;")
emit("")
emit("// Generators (canonical, non-Montgomery residues).")
emit(f"inline constexpr uint64_t kG1GenX[6] = {limb_str(G1X, 6)};")
emit(f"inline constexpr uint64_t kG1GenY[6] = {limb_str(G1Y, 6)};")
emit(f"inline constexpr uint64_t kG2GenX[2][6] = {fp2_str(G2X)};")
emit(f"inline constexpr uint64_t kG2GenY[2][6] = {fp2_str(G2Y)};")
emit("")
emit("// gamma1[k-1] = xi^{k(p-1)/6} for k = 1..5, xi = 1 + u.")
emit("inline constexpr uint64_t kFrobGamma1[5][2][6] = {")
for c in FROB_GAMMA1:
    emit(f"    {fp2_str(c)},")
emit("};")
emit("")
emit("// Tonelli-Shanks data for square roots in Fp2: p^2 - 1 = 2^3 * t.")
emit(f"inline constexpr int kFp2TwoAdicity = {S2};")
emit(f"inline constexpr uint64_t kFp2TsZ[2][6] = {fp2_str(TS_Z)};")
T_BYTES = (T2.bit_length() + 7) // 8
emit(f"inline constexpr int kFp2TsTBytes = {T_BYTES};")
emit(f"// t, big-endian, {T2.bit_length()} bits")
emit(
    f"inline constexpr uint8_t kFp2TsT[{T_BYTES}] = "
    + be_bytes_str(T2, T_BYTES)
    + ";"
)
TP1H = (T2 + 1) // 2
TP1H_BYTES = (TP1H.bit_length() + 7) // 8
emit(f"inline constexpr int kFp2TsTPlus1Half2Bytes = {TP1H_BYTES};")
emit(
    f"inline constexpr uint8_t kFp2TsTPlus1Half[{TP1H_BYTES}] = "
    + be_bytes_str(TP1H, TP1H_BYTES)
    + ";"
)
emit("")
emit("}  // namespace ribe::bls381::params")
emit("")

out = "\n".join(lines)
path = sys.argv[1] if len(sys.argv) > 1 else "include/ribe/fields/bls12_381_params.hpp"
with open(path, "w") as f:
    f.write(out)
print(f"wrote {path} ({len(out)} bytes); all parameter checks passed")
