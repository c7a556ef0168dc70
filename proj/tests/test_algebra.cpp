#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ribe;
using testutil::mock101;

namespace {

// all-zero "randomness" source for forcing the singular-matrix retry path
struct ZeroSeed {
  static HashDrbg make() {
    // distinct from any other seed used here; contents irrelevant
    return HashDrbg(uint64_t(0));
  }
};

template <class E>
ExponentVector<typename E::Scalar> ev(const E& eng,
                                      std::initializer_list<uint64_t> v) {
  ExponentVector<typename E::Scalar> out;
  for (uint64_t x : v) out.c.push_back(eng.scalar_from_u64(x));
  return out;
}

}  // namespace

TEST_CASE("mock pairing groups satisfy the bilinearity contract") {
  MockEngine eng = mock101();
  REQUIRE(eng.q() == 101);
  REQUIRE(eng.insecure());

  // pair(g1^3, g2^4) == pair(g1, g2)^12
  auto lhs = eng.pair(eng.exp_g1(eng.scalar_from_u64(3)),
                      eng.exp_g2(eng.scalar_from_u64(4)));
  auto rhs = eng.gt_pow(eng.gt_base(), eng.scalar_from_u64(12));
  REQUIRE(lhs == rhs);

  // e(g1, g2) != 1
  REQUIRE(!eng.is_identity(eng.pair(eng.g1(), eng.g2())));
}

TEST_CASE("mock profile rejects bad moduli") {
  REQUIRE_THROWS_AS(MockEngine(15), Error);            // composite
  REQUIRE_THROWS_AS(MockEngine(1), Error);             // not prime
  REQUIRE_THROWS_AS(MockEngine(uint64_t(1) << 32), Error);  // too large
  REQUIRE_NOTHROW(MockEngine(2));
  REQUIRE_NOTHROW(MockEngine((uint64_t(1) << 31) - 1));  // Mersenne prime
}

TEST_CASE("production bilinearity on 100 random exponent pairs") {
  Bls12381Engine eng;
  REQUIRE(!eng.insecure());
  HashDrbg rng(uint64_t(1001));
  auto base = eng.gt_base();
  for (int i = 0; i < 100; i++) {
    auto s = eng.random_scalar(rng);
    auto t = eng.random_scalar(rng);
    auto lhs = eng.pair(eng.exp_g1(s), eng.exp_g2(t));
    REQUIRE(lhs == eng.gt_pow(base, s * t));
  }
}

TEST_CASE("dual bases: forced 1-dim duality and exact patterns") {
  MockEngine eng = mock101();
  HashDrbg rng(uint64_t(2001));

  auto b1 = sample_dual_bases(eng, 1, rng);
  REQUIRE((b1.d[0].dot(b1.dstar[0]) - b1.psi).is_zero());

  for (size_t n : {2, 6, 9}) {
    auto b = sample_dual_bases(eng, n, rng);
    REQUIRE(b.dim == n);
    REQUIRE(!b.psi.is_zero());
    REQUIRE(testutil::dual_pattern_holds(b));
  }
}

TEST_CASE("dual bases under production engine: pairing-level orthogonality") {
  Bls12381Engine eng;
  HashDrbg rng(uint64_t(2002));
  auto b = sample_dual_bases(eng, 9, rng);
  REQUIRE(testutil::dual_pattern_holds(b));

  std::vector<GroupVector<Bls12381Engine::G1>> d1;
  std::vector<GroupVector<Bls12381Engine::G2>> d2;
  for (size_t i = 0; i < 9; i++) {
    d1.push_back(vec_exp_g1(eng, b.d[i]));
    d2.push_back(vec_exp_g2(eng, b.dstar[i]));
  }
  auto psi_gt = eng.gt_pow(eng.gt_base(), b.psi);
  for (size_t i = 0; i < 9; i++) {
    for (size_t j = 0; j < 9; j++) {
      auto e = vec_pair(eng, d1[i], d2[j]);
      if (i == j) {
        REQUIRE(e == psi_gt);
      } else {
        REQUIRE(eng.is_identity(e));
      }
    }
  }
}

TEST_CASE("dual basis sampling copes with singular draws at q=2") {
  MockEngine eng(2);
  HashDrbg rng(uint64_t(2003));
  for (int i = 0; i < 20; i++) {
    auto b = sample_dual_bases(eng, 3, rng);
    REQUIRE(testutil::dual_pattern_holds(b));
  }
}

TEST_CASE("dual basis sampling edge failures") {
  MockEngine eng = mock101();
  HashDrbg rng(uint64_t(2004));
  REQUIRE_THROWS_AS(sample_dual_bases(eng, 0, rng), Error);
}

TEST_CASE("vec_exp definitions") {
  MockEngine eng = mock101();

  // zero vector -> identities
  auto z = vec_exp_g1(eng, ev(eng, {0, 0, 0}));
  for (const auto& e : z.e) REQUIRE(eng.is_identity(e));

  // mock additive unrolling: exponents are the elements
  auto v = vec_exp_g1(eng, ev(eng, {2, 3}));
  REQUIRE(v.e[0].v == 2);
  REQUIRE(v.e[1].v == 3);

  // g^{a v} = (g^v)^a componentwise
  HashDrbg rng(uint64_t(3001));
  auto a = eng.random_scalar(rng);
  auto w = ev(eng, {5, 12, 44, 7});
  REQUIRE(vec_exp_g1(eng, w.scale(a)) == vec_pow(eng, vec_exp_g1(eng, w), a));
}

TEST_CASE("vec_mul identities and exponent addition") {
  MockEngine eng = mock101();
  auto gv = vec_exp_g1(eng, ev(eng, {1, 2}));
  auto gz = vec_exp_g1(eng, ev(eng, {0, 0}));
  REQUIRE(vec_mul(eng, gv, gz) == gv);

  auto gw = vec_exp_g1(eng, ev(eng, {3, 4}));
  REQUIRE(vec_mul(eng, gv, gw) == vec_exp_g1(eng, ev(eng, {4, 6})));

  // commutative + associative
  auto gu = vec_exp_g1(eng, ev(eng, {9, 55}));
  REQUIRE(vec_mul(eng, gv, gw) == vec_mul(eng, gw, gv));
  REQUIRE(vec_mul(eng, vec_mul(eng, gv, gw), gu) ==
          vec_mul(eng, gv, vec_mul(eng, gw, gu)));

  auto bad = vec_exp_g1(eng, ev(eng, {1, 2, 3}));
  REQUIRE_THROWS_AS(vec_mul(eng, gv, bad), DimensionError);
}

TEST_CASE("vec_mul feeds through vec_pair as exponent addition") {
  MockEngine eng = mock101();
  HashDrbg rng(uint64_t(3002));
  // oracle: (v + w) . u computed in Z_101
  auto v = ev(eng, {5, 66, 3});
  auto w = ev(eng, {12, 9, 80});
  auto u = ev(eng, {7, 2, 31});
  auto expected = (v + w).dot(u);
  auto got = vec_pair(eng, vec_mul(eng, vec_exp_g1(eng, v), vec_exp_g1(eng, w)),
                      vec_exp_g2(eng, u));
  REQUIRE(got == eng.gt_pow(eng.gt_base(), expected));
}

TEST_CASE("vec_pair dot-product collapse and exact pairing count") {
  MockEngine eng = mock101();
  // (1,2,3).(4,5,6) = 32 mod 101
  auto x = vec_exp_g1(eng, ev(eng, {1, 2, 3}));
  auto y = vec_exp_g2(eng, ev(eng, {4, 5, 6}));
  uint64_t before = MockEngine::pairing_counter();
  auto e = vec_pair(eng, x, y);
  REQUIRE(MockEngine::pairing_counter() - before == 3);
  REQUIRE(eng.gt_log(e) == 32);

  auto bad = vec_exp_g2(eng, ev(eng, {1, 2}));
  REQUIRE_THROWS_AS(vec_pair(eng, x, bad), DimensionError);
}

TEST_CASE("vec_pair(vec_exp(v), vec_exp(w)) = gt^{v.w} across engines") {
  // same exponent test vectors, different carriers
  std::vector<std::vector<uint64_t>> vecs = {
      {3, 1, 4, 1, 5, 9}, {2, 7, 1, 8, 2, 8}, {0, 0, 0, 0, 0, 1}};
  MockEngine meng = mock101();
  Bls12381Engine peng;
  for (const auto& vraw : vecs) {
    for (const auto& wraw : vecs) {
      {
        auto v = ev(meng, {vraw[0], vraw[1], vraw[2], vraw[3], vraw[4], vraw[5]});
        auto w = ev(meng, {wraw[0], wraw[1], wraw[2], wraw[3], wraw[4], wraw[5]});
        auto got = vec_pair(meng, vec_exp_g1(meng, v), vec_exp_g2(meng, w));
        REQUIRE(got == meng.gt_pow(meng.gt_base(), v.dot(w)));
      }
      {
        auto v = ev(peng, {vraw[0], vraw[1], vraw[2], vraw[3], vraw[4], vraw[5]});
        auto w = ev(peng, {wraw[0], wraw[1], wraw[2], wraw[3], wraw[4], wraw[5]});
        auto got = vec_pair(peng, vec_exp_g1(peng, v), vec_exp_g2(peng, w));
        REQUIRE(got == peng.gt_pow(peng.gt_base(), v.dot(w)));
      }
    }
  }
}

TEST_CASE("vec_exp is a homomorphism from (Z_q^n, +)") {
  MockEngine eng = mock101();
  HashDrbg rng(uint64_t(3003));
  for (int trial = 0; trial < 20; trial++) {
    ExponentVector<MockEngine::Scalar> v, w;
    for (int i = 0; i < 6; i++) {
      v.c.push_back(eng.random_scalar(rng));
      w.c.push_back(eng.random_scalar(rng));
    }
    REQUIRE(vec_exp_g1(eng, v + w) ==
            vec_mul(eng, vec_exp_g1(eng, v), vec_exp_g1(eng, w)));
  }
}

TEST_CASE("symmetric shim: e(g^v, g^w) = e(g,g)^{v.w} and symmetry") {
  SymmetricEngine<MockEngine> eng{mock101()};
  auto v = ev(eng, {4, 9, 2});
  auto w = ev(eng, {8, 1, 7});
  auto e1 = vec_pair(eng, vec_exp_g1(eng, v), vec_exp_g2(eng, w));
  auto e2 = vec_pair(eng, vec_exp_g1(eng, w), vec_exp_g2(eng, v));
  REQUIRE(e1 == e2);
  REQUIRE(e1 == eng.gt_pow(eng.gt_base(), v.dot(w)));

  SymmetricEngine<Bls12381Engine> peng;
  HashDrbg rng(uint64_t(3004));
  auto a = peng.random_scalar(rng);
  auto b = peng.random_scalar(rng);
  REQUIRE(peng.pair(peng.exp_g1(a), peng.exp_g2(b)) ==
          peng.pair(peng.exp_g1(b), peng.exp_g2(a)));
}
