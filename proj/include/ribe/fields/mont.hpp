#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>

namespace ribe::bls381 {

// Fixed-width Montgomery field element. Params supplies the modulus and the
// usual Montgomery constants (R, R^2, -m^-1 mod 2^64). Values are kept
// strictly reduced (< m) so a single conditional subtraction suffices after
// every CIOS pass.
template <class Params>
class MontElem {
 public:
  static constexpr int kLimbs = Params::kLimbs;
  using Limbs = std::array<uint64_t, kLimbs>;

  constexpr MontElem() : v_{} {}

  static MontElem zero() { return MontElem{}; }

  static MontElem one() {
    MontElem r;
    copy(r.v_, Params::r1());
    return r;
  }

  static MontElem from_u64(uint64_t x) {
    Limbs raw{};
    raw[0] = x;
    return from_canonical(raw);
  }

  // Input is a plain residue (little-endian limbs, may be >= m; it is
  // reduced). Use from_bytes_* for strict canonical decoding.
  static MontElem from_canonical(const Limbs& raw) {
    MontElem r;
    mont_mul(r.v_, raw, Params::r2());
    return r;
  }

  Limbs to_canonical() const {
    Limbs one_raw{};
    one_raw[0] = 1;
    Limbs out;
    mont_mul_raw(out, v_, one_raw);
    return out;
  }

  // value = lo + hi * 2^(64*kLimbs) mod m, both halves little-endian.
  static MontElem from_wide(const Limbs& lo, const Limbs& hi) {
    MontElem l, h, s;
    mont_mul(l.v_, lo, Params::r2());
    mont_mul(h.v_, hi, Params::r2());
    mont_mul(s.v_, Params::shift(), Params::r2());
    return l + h * s;
  }

  static MontElem from_wide_bytes_le(std::span<const uint8_t> bytes) {
    Limbs lo{}, hi{};
    const size_t half = kLimbs * 8;
    for (size_t i = 0; i < bytes.size() && i < 2 * half; i++) {
      uint64_t b = bytes[i];
      if (i < half) {
        lo[i / 8] |= b << (8 * (i % 8));
      } else {
        hi[(i - half) / 8] |= b << (8 * ((i - half) % 8));
      }
    }
    return from_wide(lo, hi);
  }

  // Strict decode: rejects non-canonical (>= m) input.
  static std::optional<MontElem> from_bytes_le(std::span<const uint8_t> bytes) {
    if (bytes.size() != size_t(kLimbs) * 8) return std::nullopt;
    Limbs raw{};
    for (int i = 0; i < kLimbs; i++) {
      uint64_t w = 0;
      for (int j = 7; j >= 0; j--) w = (w << 8) | bytes[i * 8 + j];
      raw[i] = w;
    }
    if (!less_than(raw, Params::modulus())) return std::nullopt;
    return from_canonical(raw);
  }

  static std::optional<MontElem> from_bytes_be(std::span<const uint8_t> bytes) {
    if (bytes.size() != size_t(kLimbs) * 8) return std::nullopt;
    std::array<uint8_t, size_t(kLimbs) * 8> le;
    for (size_t i = 0; i < le.size(); i++) le[i] = bytes[bytes.size() - 1 - i];
    return from_bytes_le(le);
  }

  void to_bytes_le(std::span<uint8_t> out) const {
    Limbs raw = to_canonical();
    for (int i = 0; i < kLimbs; i++)
      for (int j = 0; j < 8; j++) out[i * 8 + j] = uint8_t(raw[i] >> (8 * j));
  }

  void to_bytes_be(std::span<uint8_t> out) const {
    Limbs raw = to_canonical();
    const size_t n = size_t(kLimbs) * 8;
    for (int i = 0; i < kLimbs; i++)
      for (int j = 0; j < 8; j++)
        out[n - 1 - (i * 8 + j)] = uint8_t(raw[i] >> (8 * j));
  }

  bool is_zero() const {
    uint64_t acc = 0;
    for (auto w : v_) acc |= w;
    return acc == 0;
  }

  bool operator==(const MontElem& o) const { return v_ == o.v_; }
  bool operator!=(const MontElem& o) const { return !(*this == o); }

  MontElem operator+(const MontElem& o) const {
    MontElem r;
    unsigned __int128 c = 0;
    for (int i = 0; i < kLimbs; i++) {
      c += (unsigned __int128)v_[i] + o.v_[i];
      r.v_[i] = uint64_t(c);
      c >>= 64;
    }
    // c is 0 or 1; m < 2^(64*kLimbs) so subtracting once restores range
    if (c || !less_than(r.v_, Params::modulus())) sub_mod(r.v_);
    return r;
  }

  MontElem operator-(const MontElem& o) const {
    MontElem r;
    __int128 borrow = 0;
    for (int i = 0; i < kLimbs; i++) {
      __int128 d = (__int128)v_[i] - o.v_[i] - borrow;
      r.v_[i] = uint64_t(d);
      borrow = d < 0 ? 1 : 0;
    }
    if (borrow) {
      unsigned __int128 c = 0;
      for (int i = 0; i < kLimbs; i++) {
        c += (unsigned __int128)r.v_[i] + Params::modulus()[i];
        r.v_[i] = uint64_t(c);
        c >>= 64;
      }
    }
    return r;
  }

  MontElem operator-() const { return zero() - *this; }

  MontElem operator*(const MontElem& o) const {
    MontElem r;
    mont_mul(r.v_, v_, o.v_);
    return r;
  }

  MontElem& operator+=(const MontElem& o) { return *this = *this + o; }
  MontElem& operator-=(const MontElem& o) { return *this = *this - o; }
  MontElem& operator*=(const MontElem& o) { return *this = *this * o; }

  MontElem square() const { return *this * *this; }

  MontElem dbl() const { return *this + *this; }

  // Exponentiation by a little-endian limb exponent (square-and-multiply).
  MontElem pow(std::span<const uint64_t> exp) const {
    MontElem acc = one();
    bool seen = false;
    for (int i = int(exp.size()) - 1; i >= 0; i--) {
      for (int b = 63; b >= 0; b--) {
        if (seen) acc = acc.square();
        if ((exp[i] >> b) & 1) {
          acc = seen ? acc * *this : *this;
          seen = true;
        }
      }
    }
    return seen ? acc : one();
  }

  // Fermat inversion; zero maps to zero.
  MontElem inverse() const {
    Limbs e = modulus_limbs();
    // m - 2: m is odd and > 2, so the low limb absorbs the borrow
    e[0] -= 2;
    return pow(e);
  }

  // Square root for p = 3 mod 4: x^((p+1)/4), verified. Only meaningful for
  // params that set kSqrtMinus3Mod4.
  std::optional<MontElem> sqrt() const
    requires(Params::kSqrtMinus3Mod4)
  {
    Limbs e = modulus_limbs();
    // (m+1)/4: m = 3 mod 4 so m+1 carries into bit 2
    unsigned __int128 c = 1;
    for (int i = 0; i < kLimbs; i++) {
      c += e[i];
      e[i] = uint64_t(c);
      c >>= 64;
    }
    // shift right by 2 (c is zero here: m+1 < 2^(64*kLimbs))
    for (int i = 0; i < kLimbs; i++) {
      e[i] >>= 2;
      if (i + 1 < kLimbs) e[i] |= e[i + 1] << 62;
    }
    MontElem r = pow(e);
    if (r.square() != *this) return std::nullopt;
    return r;
  }

  // Canonical-residue comparison (for encode sign rules).
  bool canonical_greater(const MontElem& o) const {
    Limbs a = to_canonical(), b = o.to_canonical();
    for (int i = kLimbs - 1; i >= 0; i--) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

  bool lsb_canonical() const { return to_canonical()[0] & 1; }

 private:
  Limbs v_;

  static Limbs modulus_limbs() {
    Limbs m;
    std::memcpy(m.data(), Params::modulus(), sizeof(m));
    return m;
  }

  static void copy(Limbs& d, const uint64_t (&s)[kLimbs]) {
    std::memcpy(d.data(), s, sizeof(d));
  }
  static void copy(Limbs& d, const Limbs& s) { d = s; }

  static bool less_than(const Limbs& a, const uint64_t (&m)[kLimbs]) {
    for (int i = kLimbs - 1; i >= 0; i--) {
      if (a[i] != m[i]) return a[i] < m[i];
    }
    return false;
  }

  static void sub_mod(Limbs& a) {
    __int128 borrow = 0;
    for (int i = 0; i < kLimbs; i++) {
      __int128 d = (__int128)a[i] - Params::modulus()[i] - borrow;
      a[i] = uint64_t(d);
      borrow = d < 0 ? 1 : 0;
    }
  }

  template <class A, class B>
  static void mont_mul(Limbs& out, const A& a, const B& b) {
    mont_mul_raw(out, a, b);
  }

  // CIOS Montgomery multiplication; result strictly reduced.
  template <class A, class B>
  static void mont_mul_raw(Limbs& out, const A& a, const B& b) {
    uint64_t t[kLimbs + 2] = {0};
    for (int i = 0; i < kLimbs; i++) {
      unsigned __int128 c = 0;
      for (int j = 0; j < kLimbs; j++) {
        c += (unsigned __int128)a[j] * b[i] + t[j];
        t[j] = uint64_t(c);
        c >>= 64;
      }
      c += t[kLimbs];
      t[kLimbs] = uint64_t(c);
      t[kLimbs + 1] = uint64_t(c >> 64);

      uint64_t m = t[0] * Params::inv64();
      c = (unsigned __int128)m * Params::modulus()[0] + t[0];
      c >>= 64;
      for (int j = 1; j < kLimbs; j++) {
        c += (unsigned __int128)m * Params::modulus()[j] + t[j];
        t[j - 1] = uint64_t(c);
        c >>= 64;
      }
      c += t[kLimbs];
      t[kLimbs - 1] = uint64_t(c);
      t[kLimbs] = t[kLimbs + 1] + uint64_t(c >> 64);
    }
    Limbs r;
    std::memcpy(r.data(), t, sizeof(r));
    if (t[kLimbs] || !less_than(r, Params::modulus())) sub_mod(r);
    out = r;
  }
};

}  // namespace ribe::bls381
