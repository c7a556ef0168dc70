#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ribe/serial.hpp"

using namespace ribe;
using testutil::mock101;
using S = MockEngine::Scalar;

namespace {

Bytes id_bytes(uint64_t v) {
  Bytes b(8);
  for (int i = 0; i < 8; i++) b[i] = uint8_t(v >> (8 * i));
  return b;
}

template <class Sc>
Bytes serialize_shares(const MockEngine& eng, const TreeState<Sc>& tree) {
  ByteWriter w;
  for (const auto& [node, sh] : tree.node_shares()) {
    w.u32(node);
    w.u64(sh.alpha1.v);
    w.u64(sh.alpha2.v);
    w.u64(sh.alpha3 ? sh.alpha3->v : ~0ull);
  }
  return w.take();
}

}  // namespace

TEST_CASE("new_tree layouts") {
  auto t8 = new_tree<S>(8);
  REQUIRE(t8.depth() == 3);
  REQUIRE(t8.node_count() == 15);
  REQUIRE(t8.first_leaf() == 8);
  REQUIRE(t8.last_leaf() == 15);

  auto t5 = new_tree<S>(5);
  REQUIRE(t5.depth() == 3);  // next power of two

  auto t1 = new_tree<S>(1);
  REQUIRE(t1.depth() == 0);
  REQUIRE(t1.root() == 1);
  REQUIRE(t1.is_leaf(1));

  REQUIRE_THROWS_AS(new_tree<S>(0), Error);
}

TEST_CASE("assign_leaf leftmost policy and capacity") {
  auto t = new_tree<S>(4);  // depth 2
  REQUIRE(t.assign_leaf(id_bytes(10)) == 4);
  REQUIRE(t.assign_leaf(id_bytes(11)) == 5);
  REQUIRE(t.assign_leaf(id_bytes(12)) == 6);
  REQUIRE(t.assign_leaf(id_bytes(13)) == 7);
  REQUIRE_THROWS_AS(t.assign_leaf(id_bytes(14)), CapacityError);
}

TEST_CASE("same identity may hold two leaves; assignments stay injective per leaf") {
  auto t = new_tree<S>(4);
  NodeId a = t.assign_leaf(id_bytes(7));
  NodeId b = t.assign_leaf(id_bytes(7));
  REQUIRE(a != b);
  auto leaves = t.leaves_of(id_bytes(7));
  REQUIRE(leaves == std::vector<NodeId>{4, 5});
  REQUIRE(t.leaf_assignments().size() == 2);
}

TEST_CASE("path to root") {
  auto t = new_tree<S>(4);
  REQUIRE(t.path(5) == std::vector<NodeId>{5, 2, 1});
  REQUIRE_THROWS_AS(t.path(2), Error);  // non-leaf

  auto t1 = new_tree<S>(1);
  REQUIRE(t1.path(1) == std::vector<NodeId>{1});

  auto t16 = new_tree<S>(16);
  auto p = t16.path(27);
  REQUIRE(p.size() == t16.depth() + 1);
  for (size_t i = 0; i + 1 < p.size(); i++) REQUIRE(p[i + 1] == p[i] / 2);
}

TEST_CASE("ku_nodes hand-derived cases") {
  auto t = new_tree<S>(4);
  RevocationList rl;

  // empty RL -> {root}
  REQUIRE(ku_nodes(t, rl, 0) == std::vector<NodeId>{1});

  // revoke leaf 4 at t=1: X = {4,2,1}, Y = {3,5}
  rl.entries.emplace(4, 1);
  REQUIRE(ku_nodes(t, rl, 1) == std::vector<NodeId>{3, 5});

  // future revocation ignored
  RevocationList rl2;
  rl2.entries.emplace(4, 5);
  REQUIRE(ku_nodes(t, rl2, 1) == std::vector<NodeId>{1});
}

TEST_CASE("ku_nodes cover correctness, exhaustive depth 0..4") {
  for (uint32_t depth = 0; depth <= 4; depth++) {
    uint32_t n = uint32_t(1) << depth;
    auto t = new_tree<S>(n);
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); mask++) {
      RevocationList rl;
      uint64_t ti = 1;
      std::vector<uint64_t> times{0};
      for (uint32_t i = 0; i < n; i++) {
        if (mask & (uint32_t(1) << i)) {
          rl.entries.emplace(t.first_leaf() + i, ti);
          times.push_back(ti);
          times.push_back(ti + 1);
          ti++;
        }
      }
      for (uint64_t q : times) {
        REQUIRE(testutil::cover_correct(t, rl, q));
        // |Y| <= 2 |R| depth + 1 and X-monotonicity
        auto y = ku_nodes(t, rl, q);
        size_t r_count = 0;
        for (const auto& [leaf, tr] : rl.entries) r_count += (tr <= q);
        REQUIRE(y.size() <= 2 * r_count * std::max<uint32_t>(depth, 1) + 1);
      }
    }
  }
}

TEST_CASE("X-set is monotone in query time") {
  auto t = new_tree<S>(8);
  RevocationList rl;
  rl.entries.emplace(8, 2);
  rl.entries.emplace(11, 4);
  rl.entries.emplace(13, 6);
  auto x_at = [&](uint64_t q) {
    std::set<NodeId> x;
    for (const auto& [leaf, ti] : rl.entries)
      if (ti <= q)
        for (NodeId n : t.path(leaf)) x.insert(n);
    return x;
  };
  for (uint64_t q = 0; q < 8; q++) {
    auto a = x_at(q), b = x_at(q + 1);
    REQUIRE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("share creation: idempotence, sum invariant, write-once") {
  MockEngine eng = mock101();
  HashDrbg rng(uint64_t(4001));
  auto t = new_tree<S>(1024);  // depth 10, 2047 nodes
  S alpha = eng.scalar_from_u64(77);

  auto first = t.get_or_create_shares(eng, 5, alpha, SchemeVariant::kSxdh, rng);
  auto again = t.get_or_create_shares(eng, 5, alpha, SchemeVariant::kSxdh, rng);
  REQUIRE(first.alpha1.v == again.alpha1.v);
  REQUIRE(first.alpha2.v == again.alpha2.v);

  for (int i = 0; i < 1000; i++) {
    NodeId node = 1 + (rng.next_u64() % t.node_count());
    auto sh = t.get_or_create_shares(eng, node, alpha, SchemeVariant::kSxdh, rng);
    REQUIRE((sh.alpha1 + sh.alpha2 - alpha).is_zero());
    REQUIRE(!sh.alpha3.has_value());
  }

  Bytes before = serialize_shares(eng, t);
  for (int i = 0; i < 200; i++) {
    NodeId node = 1 + (rng.next_u64() % t.node_count());
    if (t.node_shares().count(node))
      t.get_or_create_shares(eng, node, alpha, SchemeVariant::kSxdh, rng);
  }
  REQUIRE(serialize_shares(eng, t) == before);
}

TEST_CASE("share variant mismatch is rejected") {
  MockEngine eng = mock101();
  HashDrbg rng(uint64_t(4002));
  auto t = new_tree<S>(4);
  S alpha = eng.scalar_from_u64(9);
  t.get_or_create_shares(eng, 2, alpha, SchemeVariant::kSxdh, rng);
  REQUIRE_THROWS_AS(
      t.get_or_create_shares(eng, 2, alpha, SchemeVariant::kDlin, rng),
      StateError);
  auto dl = t.get_or_create_shares(eng, 3, alpha, SchemeVariant::kDlin, rng);
  REQUIRE(dl.alpha3.has_value());
  REQUIRE_THROWS_AS(
      t.get_or_create_shares(eng, 3, alpha, SchemeVariant::kSxdh, rng),
      StateError);
}

TEST_CASE("prf-derived shares replay bit-identically") {
  MockEngine eng = mock101();
  Bytes seed = to_bytes("prf-seed-for-tests");
  S alpha = eng.scalar_from_u64(50);
  HashDrbg rng_a(uint64_t(4003)), rng_b(uint64_t(9999));

  auto ta = TreeState<S>::create_prf(16, seed);
  auto tb = TreeState<S>::create_prf(16, seed);
  for (NodeId node : {1u, 2u, 7u, 16u, 31u}) {
    auto sa = ta.get_or_create_shares(eng, node, alpha, SchemeVariant::kDlin, rng_a);
    auto sb = tb.get_or_create_shares(eng, node, alpha, SchemeVariant::kDlin, rng_b);
    // different rngs, same PRF seed: identical shares
    REQUIRE(sa.alpha1.v == sb.alpha1.v);
    REQUIRE(sa.alpha2.v == sb.alpha2.v);
    REQUIRE(sa.alpha3->v == sb.alpha3->v);
    REQUIRE((sa.alpha1 + sa.alpha2 - alpha).is_zero());
  }

  // distinct seed gives distinct shares (overwhelmingly)
  auto tc = TreeState<S>::create_prf(16, to_bytes("another-seed"));
  HashDrbg rng_c(uint64_t(1));
  int diffs = 0;
  for (NodeId node : {1u, 2u, 7u, 16u, 31u}) {
    auto sc = tc.get_or_create_shares(eng, node, alpha, SchemeVariant::kDlin, rng_c);
    auto sa = ta.get_or_create_shares(eng, node, alpha, SchemeVariant::kDlin, rng_c);
    diffs += (sc.alpha1.v != sa.alpha1.v);
  }
  REQUIRE(diffs >= 3);
}

TEST_CASE("revoke: unknown id, dedupe, and time-order rules") {
  auto t = new_tree<S>(4);
  t.assign_leaf(id_bytes(1));
  t.assign_leaf(id_bytes(2));
  RevocationList rl;

  REQUIRE(revoke(rl, t, id_bytes(99), 3) == RevokeStatus::kUnknownIdentity);
  REQUIRE(rl.entries.empty());

  REQUIRE(revoke(rl, t, id_bytes(1), 3) == RevokeStatus::kRevoked);
  REQUIRE(rl.entries.count({4, 3}) == 1);
  // same (leaf, time) twice: set semantics
  REQUIRE(revoke(rl, t, id_bytes(1), 3) == RevokeStatus::kRevoked);
  REQUIRE(rl.entries.size() == 1);

  rl.note_update(5);
  REQUIRE_THROWS_AS(revoke(rl, t, id_bytes(2), 2), TimeOrderError);
  // revoking exactly at a published epoch is restriction 1's second clause
  REQUIRE_THROWS_AS(revoke(rl, t, id_bytes(2), 5), TimeOrderError);
  REQUIRE(revoke(rl, t, id_bytes(2), 6) == RevokeStatus::kRevoked);
  REQUIRE_THROWS_AS(rl.note_update(4), TimeOrderError);
  REQUIRE_NOTHROW(rl.note_update(6));  // update at the revocation epoch is fine
}

TEST_CASE("revoked path is excluded from the cover") {
  auto t = new_tree<S>(4);
  NodeId leaf = t.assign_leaf(id_bytes(1));
  RevocationList rl;
  revoke(rl, t, id_bytes(1), 3);
  auto cover = ku_nodes(t, rl, 3);
  std::set<NodeId> cov(cover.begin(), cover.end());
  for (NodeId n : t.path(leaf)) REQUIRE(cov.count(n) == 0);
  REQUIRE(testutil::cover_correct(t, rl, 3));
}
