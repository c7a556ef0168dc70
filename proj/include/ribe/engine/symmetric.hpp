#pragma once

#include "ribe/common.hpp"
#include "ribe/rng.hpp"

namespace ribe {

// Symmetric-pairing shim over an asymmetric base engine: a group element is
// an exponent-synchronized pair (g1^x, g2^x) and e(A, B) := e_base(A.a, B.b),
// which satisfies e(g^v, g^w) = e(g, g)^{v.w} and is symmetric in its
// arguments. Decoding enforces the synchronization with a pairing check.
template <class Base>
class SymmetricEngine {
 public:
  static constexpr bool kInsecure = Base::kInsecure;
  static constexpr uint8_t kEngineId = Base::kEngineId | 0x02;

  using Scalar = typename Base::Scalar;
  using GT = typename Base::GT;

  struct G {
    typename Base::G1 a;
    typename Base::G2 b;
    friend bool operator==(const G&, const G&) = default;
  };
  using G1 = G;
  using G2 = G;

  SymmetricEngine() = default;
  explicit SymmetricEngine(Base base) : base_(std::move(base)) {}

  const Base& base() const { return base_; }
  std::string name() const { return base_.name() + "+sym"; }
  bool insecure() const { return base_.insecure(); }

  template <class W>
  void write_params(W& w) const {
    base_.write_params(w);
  }
  template <class R>
  static SymmetricEngine read_params(R& r) {
    return SymmetricEngine(Base::read_params(r));
  }

  // --- scalars (delegated) ---
  Scalar scalar_zero() const { return base_.scalar_zero(); }
  Scalar scalar_one() const { return base_.scalar_one(); }
  Scalar scalar_from_u64(uint64_t v) const { return base_.scalar_from_u64(v); }
  Scalar scalar_from_wide(ByteSpan b) const { return base_.scalar_from_wide(b); }
  Scalar random_scalar(HashDrbg& rng) const { return base_.random_scalar(rng); }
  Scalar random_nonzero_scalar(HashDrbg& rng) const {
    return base_.random_nonzero_scalar(rng);
  }
  size_t scalar_bytes() const { return base_.scalar_bytes(); }
  void encode_scalar(const Scalar& s, std::span<uint8_t> out) const {
    base_.encode_scalar(s, out);
  }
  Scalar decode_scalar(ByteSpan in) const { return base_.decode_scalar(in); }

  // --- the symmetric group ---
  G g1() const { return {base_.g1(), base_.g2()}; }
  G g2() const { return g1(); }
  G identity_g1() const { return {base_.identity_g1(), base_.identity_g2()}; }
  G identity_g2() const { return identity_g1(); }
  bool is_identity(const G& x) const { return base_.is_identity(x.a); }

  G mul(const G& x, const G& y) const {
    return {base_.mul(x.a, y.a), base_.mul(x.b, y.b)};
  }
  G pow(const G& x, const Scalar& s) const {
    return {base_.pow(x.a, s), base_.pow(x.b, s)};
  }
  G exp_g1(const Scalar& s) const { return {base_.exp_g1(s), base_.exp_g2(s)}; }
  G exp_g2(const Scalar& s) const { return exp_g1(s); }

  GT pair(const G& x, const G& y) const { return base_.pair(x.a, y.b); }
  static uint64_t& pairing_counter() { return Base::pairing_counter(); }

  // --- target group (delegated) ---
  GT identity_gt() const { return base_.identity_gt(); }
  bool is_identity(const GT& x) const { return base_.is_identity(x); }
  GT gt_base() const { return base_.gt_base(); }
  GT gt_mul(const GT& a, const GT& b) const { return base_.gt_mul(a, b); }
  GT gt_pow(const GT& a, const Scalar& s) const { return base_.gt_pow(a, s); }
  GT gt_inverse(const GT& a) const { return base_.gt_inverse(a); }
  GT random_gt(HashDrbg& rng) const { return base_.random_gt(rng); }

  // --- codec: both halves, G1 part first ---
  size_t g1_bytes() const { return base_.g1_bytes() + base_.g2_bytes(); }
  size_t g2_bytes() const { return g1_bytes(); }
  size_t gt_bytes() const { return base_.gt_bytes(); }

  void encode(const G& x, std::span<uint8_t> out) const {
    base_.encode(x.a, out.subspan(0, base_.g1_bytes()));
    base_.encode(x.b, out.subspan(base_.g1_bytes()));
  }
  void encode(const GT& x, std::span<uint8_t> out) const {
    base_.encode(x, out);
  }
  G decode_g1(ByteSpan in) const {
    if (in.size() != g1_bytes()) throw FormatError("bad symmetric element length");
    G x{base_.decode_g1(in.subspan(0, base_.g1_bytes())),
        base_.decode_g2(in.subspan(base_.g1_bytes()))};
    // both halves must carry the same exponent: e(x.a, g2) == e(g1, x.b)
    if (base_.pair(x.a, base_.g2()) != base_.pair(base_.g1(), x.b))
      throw FormatError("symmetric element halves out of sync");
    return x;
  }
  G decode_g2(ByteSpan in) const { return decode_g1(in); }
  GT decode_gt(ByteSpan in) const { return base_.decode_gt(in); }

 private:
  Base base_;
};

}  // namespace ribe
