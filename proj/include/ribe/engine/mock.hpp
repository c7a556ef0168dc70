#pragma once

#include <string>

#include "ribe/common.hpp"
#include "ribe/rng.hpp"

namespace ribe {

namespace mock {

// Residue arithmetic mod a small prime q. Elements carry q so the values
// stay self-contained; mixing moduli is a programming error.
struct Residue {
  uint64_t v = 0;
  uint64_t q = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline uint64_t addq(uint64_t a, uint64_t b, uint64_t q) { return (a + b) % q; }
inline uint64_t subq(uint64_t a, uint64_t b, uint64_t q) {
  return (a + q - b % q) % q;
}
inline uint64_t mulq(uint64_t a, uint64_t b, uint64_t q) {
  return (a * b) % q;  // q < 2^31 keeps the product in range
}
inline uint64_t powq(uint64_t a, uint64_t e, uint64_t q) {
  uint64_t acc = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) acc = mulq(acc, a, q);
    a = mulq(a, a, q);
    e >>= 1;
  }
  return acc;
}

struct Scalar : Residue {
  Scalar() = default;
  Scalar(uint64_t value, uint64_t mod) : Residue{value % mod, mod} {}
  Scalar operator+(const Scalar& o) const { return {addq(v, o.v, q), q}; }
  Scalar operator-(const Scalar& o) const { return {subq(v, o.v, q), q}; }
  Scalar operator*(const Scalar& o) const { return {mulq(v, o.v, q), q}; }
  Scalar operator-() const { return {subq(0, v, q), q}; }
  Scalar inverse() const { return {powq(v, q - 2, q), q}; }
  bool is_zero() const { return v == 0; }
};

// Additive-group carriers tagged by side so the type system still separates
// G1 from G2 under the mock engine.
template <int Side>
struct Elem : Residue {};

}  // namespace mock

// Exponent-only pairing engine over Z_q for a small prime q: all three
// groups are Z_q additive, the pairing is field multiplication, so every
// exponent identity is directly readable. Test/bring-up only.
class MockEngine {
 public:
  static constexpr bool kInsecure = true;
  static constexpr uint8_t kEngineId = 0x81;

  using Scalar = mock::Scalar;
  using G1 = mock::Elem<1>;
  using G2 = mock::Elem<2>;
  using GT = mock::Elem<3>;

  MockEngine() = default;
  explicit MockEngine(uint64_t q) : q_(q) {
    if (q < 2 || q >= (uint64_t(1) << 31) || !is_prime(q))
      throw Error("mock engine needs a prime q < 2^31");
  }

  uint64_t q() const { return q_; }
  std::string name() const { return "mock(" + std::to_string(q_) + ")"; }
  bool insecure() const { return true; }

  template <class W>
  void write_params(W& w) const {
    w.u64(q_);
  }
  template <class R>
  static MockEngine read_params(R& r) {
    return MockEngine(r.u64());
  }

  // --- scalars ---
  Scalar scalar_zero() const { return {0, q_}; }
  Scalar scalar_one() const { return {1, q_}; }
  Scalar scalar_from_u64(uint64_t v) const { return {v % q_, q_}; }
  Scalar scalar_from_wide(ByteSpan b) const {
    uint64_t acc = 0;
    for (size_t i = b.size(); i-- > 0;) acc = (acc * 256 + b[i]) % q_;
    return {acc, q_};
  }
  Scalar random_scalar(HashDrbg& rng) const {
    return scalar_from_u64(rng.next_u64() % q_);
  }
  Scalar random_nonzero_scalar(HashDrbg& rng) const {
    for (int i = 0; i < 100; i++) {
      Scalar s = random_scalar(rng);
      if (!s.is_zero()) return s;
    }
    throw InternalError("rng produced 100 zero scalars");
  }
  size_t scalar_bytes() const { return 8; }
  void encode_scalar(const Scalar& s, std::span<uint8_t> out) const {
    put_le(s.v, out);
  }
  Scalar decode_scalar(ByteSpan in) const { return {take_le(in), q_}; }

  // --- groups (additive notation behind the multiplicative interface) ---
  G1 g1() const { return make<G1>(1); }
  G2 g2() const { return make<G2>(1); }
  G1 identity_g1() const { return make<G1>(0); }
  G2 identity_g2() const { return make<G2>(0); }
  GT identity_gt() const { return make<GT>(0); }
  template <int S>
  bool is_identity(const mock::Elem<S>& x) const {
    return x.v == 0;
  }

  template <int S>
  mock::Elem<S> mul(const mock::Elem<S>& a, const mock::Elem<S>& b) const {
    return make<mock::Elem<S>>(mock::addq(a.v, b.v, q_));
  }
  template <int S>
  mock::Elem<S> pow(const mock::Elem<S>& a, const Scalar& s) const {
    return make<mock::Elem<S>>(mock::mulq(a.v, s.v, q_));
  }
  G1 exp_g1(const Scalar& s) const { return make<G1>(s.v); }
  G2 exp_g2(const Scalar& s) const { return make<G2>(s.v); }

  GT pair(const G1& a, const G2& b) const {
    pairing_counter()++;
    return make<GT>(mock::mulq(a.v, b.v, q_));
  }
  static uint64_t& pairing_counter() {
    thread_local uint64_t count = 0;
    return count;
  }

  GT gt_base() const { return make<GT>(1); }
  GT gt_mul(const GT& a, const GT& b) const { return mul(a, b); }
  GT gt_pow(const GT& a, const Scalar& s) const { return pow(a, s); }
  GT gt_inverse(const GT& a) const { return make<GT>(mock::subq(0, a.v, q_)); }
  GT random_gt(HashDrbg& rng) const { return make<GT>(rng.next_u64() % q_); }

  // the discrete log is in the clear; the oracles lean on this
  uint64_t gt_log(const GT& x) const { return x.v; }

  // --- codec: 8-byte little-endian residues ---
  size_t g1_bytes() const { return 8; }
  size_t g2_bytes() const { return 8; }
  size_t gt_bytes() const { return 8; }
  template <int S>
  void encode(const mock::Elem<S>& x, std::span<uint8_t> out) const {
    put_le(x.v, out);
  }
  G1 decode_g1(ByteSpan in) const { return make<G1>(take_le(in)); }
  G2 decode_g2(ByteSpan in) const { return make<G2>(take_le(in)); }
  GT decode_gt(ByteSpan in) const { return make<GT>(take_le(in)); }

  static bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; d++)
      if (n % d == 0) return false;
    return true;
  }

 private:
  uint64_t q_ = 101;

  template <class E>
  E make(uint64_t v) const {
    E e;
    e.v = v % q_;
    e.q = q_;
    return e;
  }

  static void put_le(uint64_t v, std::span<uint8_t> out) {
    for (int i = 0; i < 8; i++) out[i] = uint8_t(v >> (8 * i));
  }
  uint64_t take_le(ByteSpan in) const {
    if (in.size() != 8) throw FormatError("bad mock element length");
    uint64_t v = 0;
    for (int i = 7; i >= 0; i--) v = (v << 8) | in[i];
    if (v >= q_) throw FormatError("mock residue out of range");
    return v;
  }
};

}  // namespace ribe
