#include <gtest/gtest.h>

#include "hypermap/error.hpp"
#include "hypermap/perm_group.hpp"
#include "hypermap/psl2.hpp"
#include "hypermap/rng.hpp"
#include "oracles.hpp"

using namespace hypermap;

TEST(Psl2, NormalizeIdentityAndMinusIdentity) {
  PSL2 g(23);
  EXPECT_EQ(g.normalize(1u, 0u, 0u, 1u), (PSL2Elt{1, 0, 0, 1}));
  EXPECT_EQ(g.normalize(22u, 0u, 0u, 22u), (PSL2Elt{1, 0, 0, 1}));
  EXPECT_EQ(g.normalize(0u, 1u, 22u, 0u), (PSL2Elt{0, 1, 22, 0}));
  EXPECT_EQ(g.normalize(0u, 22u, 1u, 0u), (PSL2Elt{0, 1, 22, 0}));
  EXPECT_THROW(g.normalize(1u, 1u, 1u, 1u), Error);
}

TEST(Psl2, RejectsNonPrimeModulus) {
  EXPECT_THROW(PSL2(21), Error);
  EXPECT_THROW(PSL2(2), Error);
}

TEST(Psl2, ProjectivePermMatchesMoebiusOfInverse) {
  for (std::uint32_t q : {5u, 7u, 23u}) {
    PSL2 g(q);
    Rng rng(q);
    for (int t = 0; t < 200; ++t) {
      auto e = g.random(rng);
      auto p = g.projective_perm(e);
      ASSERT_EQ(p.degree(), q + 1u);
      for (std::uint32_t z = 0; z <= q; ++z)
        EXPECT_EQ(p[z], oracle::moebius(q, e.d, (q - e.b) % q, (q - e.c) % q, e.a, z));
    }
  }
}

TEST(Psl2, UnipotentIsA23CycleFixingInfinity) {
  PSL2 g(23);
  auto p = g.projective_perm(g.normalize(1u, 1u, 0u, 1u));
  EXPECT_EQ(p[g.infinity()], g.infinity());
  EXPECT_EQ(fixed_point_count(p), 1u);
  EXPECT_EQ(cycle_type(p).front(), 23u);
  EXPECT_EQ(g.order(g.normalize(1u, 1u, 0u, 1u)), 23u);
}

TEST(Psl2, IdentityActsTrivially) {
  for (std::uint32_t q : {3u, 11u, 71u}) EXPECT_TRUE(projective_perm(q, PSL2Elt{}).is_identity());
}

TEST(Psl2, ActionIsHomomorphismAndNormalizeIsCompatible) {
  for (std::uint32_t q : {5u, 13u, 23u, 71u}) {
    PSL2 g(q);
    Rng rng(1000 + q);
    for (int t = 0; t < 1000; ++t) {
      auto a = g.random(rng), b = g.random(rng);
      EXPECT_EQ(g.projective_perm(g.mul(a, b)), g.projective_perm(a) * g.projective_perm(b));
      // normalize(M N) from raw, unnormalized entries
      const auto& f = g.field();
      PSL2Elt na{f.neg(a.a), f.neg(a.b), f.neg(a.c), f.neg(a.d)};
      std::uint32_t r0 = f.add(f.mul(na.a, b.a), f.mul(na.b, b.c));
      std::uint32_t r1 = f.add(f.mul(na.a, b.b), f.mul(na.b, b.d));
      std::uint32_t r2 = f.add(f.mul(na.c, b.a), f.mul(na.d, b.c));
      std::uint32_t r3 = f.add(f.mul(na.c, b.b), f.mul(na.d, b.d));
      EXPECT_EQ(g.normalize(r0, r1, r2, r3), g.mul(a, b));
    }
  }
}

TEST(Psl2, StabilizerOfInfinityIsUpperTriangular) {
  PSL2 g(13);
  std::size_t fixers = 0;
  g.for_each_lex([&](const PSL2Elt& e) {
    bool fixes = g.projective_perm(e)[g.infinity()] == g.infinity();
    EXPECT_EQ(fixes, e.c == 0);
    fixers += fixes;
    return true;
  });
  EXPECT_EQ(fixers, 13u * 12u / 2u);
}

TEST(Psl2, LexEnumerationCoversGroupInOrder) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    PSL2 g(q);
    std::vector<PSL2Elt> all;
    g.for_each_lex([&](const PSL2Elt& e) {
      EXPECT_EQ(g.normalize(e.a, e.b, e.c, e.d), e);
      all.push_back(e);
      return true;
    });
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(all.size(), psl2_group_order(q));
  }
}

TEST(Psl2, GroupOrderFormulaMatchesClosure) {
  EXPECT_EQ(psl2_group_order(23), 6072u);
  EXPECT_EQ(psl2_group_order(5), 60u);
  EXPECT_EQ(psl2_group_order(3), 12u);
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) EXPECT_EQ(oracle::psl2_order_by_closure(q), psl2_group_order(q));
  PSL2 g(23);
  PermGroup pg(24, {g.projective_perm(g.normalize(1u, 1u, 0u, 1u)), g.projective_perm(g.normalize(0u, 1u, 22u, 0u))});
  EXPECT_EQ(pg.order(), 6072);
}

TEST(Psl2, ElementOrdersDivideExpectedValues) {
  PSL2 g(23);
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    auto e = g.random(rng);
    auto o = g.order(e);
    EXPECT_TRUE(o == 23 || 11 % o == 0 || 12 % o == 0) << o;
    EXPECT_TRUE(g.has_order(e, o));
    if (o != 23 && 11 % o != 0) EXPECT_EQ(12 % o, 0u);
    // elements of order dividing (q+1)/2 act semiregularly (no fixed points unless identity)
    if (12 % o == 0 && o > 1) EXPECT_EQ(fixed_point_count(g.projective_perm(e)), 0u);
  }
}

TEST(Psl2, GeneratingTripleQ23) {
  auto t = find_generating_triple(23, 4, 6, 12);
  PSL2 g(23);
  EXPECT_EQ(g.order(t.x), 4u);
  EXPECT_EQ(g.order(t.y), 6u);
  EXPECT_EQ(g.order(t.z), 12u);
  EXPECT_EQ(g.mul(g.mul(t.x, t.y), t.z), g.identity());
  PermGroup pg(24, {g.projective_perm(t.x), g.projective_perm(t.y)});
  EXPECT_EQ(pg.order(), 6072);
  EXPECT_TRUE(verify_generating_triple(t));
  for (const auto& e : {t.x, t.y, t.z}) EXPECT_TRUE(is_semiregular(g.projective_perm(e)));
}

TEST(Psl2, GeneratingTripleQ71) {
  auto t = find_generating_triple(71, 2, 4, 9);
  EXPECT_EQ(t.generated_order, 178920u);
  EXPECT_TRUE(verify_generating_triple(t));
}

TEST(Psl2, GeneratingTripleIsDeterministic) {
  auto a = find_generating_triple(23, 4, 6, 12, {.seed = 9});
  auto b = find_generating_triple(23, 4, 6, 12, {.seed = 9});
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.z, b.z);
}

TEST(Psl2, GeneratingTripleExhaustiveFallback) {
  auto t = find_generating_triple(23, 4, 6, 12, {.seed = 1, .random_attempts = 0});
  EXPECT_TRUE(t.used_exhaustive_fallback);
  EXPECT_TRUE(verify_generating_triple(t));
}

TEST(Psl2, GeneratingTripleRejectsBadCongruence) {
  EXPECT_THROW(find_generating_triple(23, 2, 3, 13), Error);
}

TEST(Psl2, TamperedTripleFailsVerification) {
  auto t = find_generating_triple(23, 4, 6, 12);
  t.z = t.x;
  EXPECT_FALSE(verify_generating_triple(t));
}
