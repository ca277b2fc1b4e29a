#include <gtest/gtest.h>

#include "chain.hpp"
#include "hypermap/cover.hpp"
#include "hypermap/dessin.hpp"
#include "hypermap/error.hpp"
#include "oracles.hpp"

using namespace hypermap;

namespace {

GroupTable cyclic(std::uint32_t n) {
  std::vector<Point> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return GroupTable(n, {Perm(img)});
}

GroupTable s3() { return GroupTable(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})}); }

const testchain::Chain& chain23() {
  static const auto c = testchain::build(23, 4, 6, 12);
  return c;
}

}  // namespace

TEST(Epimorphism, TrivialGroup) {
  GroupTable one(1, {});
  const auto& c = chain23();
  auto h = find_epimorphism(c.tz.presentation, one);
  EXPECT_EQ(h.images, std::vector<ElementId>(14, 0));
  EXPECT_TRUE(verify_theta(h, c.rs, c.tz.ledger, one));
  auto va = voltages(c.sd, c.tz.ledger, h, one);
  for (auto v : va.alpha) EXPECT_EQ(v, 0u);
  auto cover = build_cover(c.base, va, one);
  EXPECT_EQ(cover.lifts[0], c.base[0]);
  EXPECT_EQ(cover.lifts[1], c.base[1]);
}

TEST(Epimorphism, CyclicOfOrderTwoAtQ23) {
  auto a = cyclic(2);
  const auto& c = chain23();
  auto h = find_epimorphism(c.tz.presentation, a, {.seed = 1});
  EXPECT_TRUE(is_homomorphism(c.tz.presentation, h, a));
  EXPECT_EQ(a.generated_order(h.images), 2u);
  EXPECT_TRUE(verify_theta(h, c.rs, c.tz.ledger, a));

  auto va = voltages(c.sd, c.tz.ledger, h, a);
  EXPECT_EQ(va.alpha.size(), 48u);
  EXPECT_TRUE(voltages_consistent(c.ambient, c.sd, va, a));
  // tree edges carry the identity
  for (Point i = 0; i < 24; ++i)
    for (std::uint32_t s = 0; s < 2; ++s)
      if (c.sd.id(i, s) < 0) EXPECT_EQ(va.at(i, s), 0u);

  auto cover = build_cover(c.base, va, a);
  EXPECT_EQ(cover.darts(), 48u);
  EXPECT_TRUE(projects_to_base(cover, c.base));
  Dessin d(cover.lifts[0], cover.lifts[1]);
  EXPECT_EQ(perm_order(d.sigma2()), 12u);
  EXPECT_TRUE(is_semiregular(d.sigma2()));
  EXPECT_TRUE(check_deck(cover, a).ok());
}

TEST(Epimorphism, Deterministic) {
  auto a = s3();
  const auto& c = chain23();
  auto h1 = find_epimorphism(c.tz.presentation, a, {.seed = 5});
  auto h2 = find_epimorphism(c.tz.presentation, a, {.seed = 5});
  EXPECT_EQ(h1.images, h2.images);
}

TEST(Epimorphism, SymmetricGroupOnThreeAtQ71) {
  auto c = testchain::build(71, 2, 4, 9);
  ASSERT_EQ(c.tz.presentation.generators, 12u);
  auto a = s3();
  auto h = find_epimorphism(c.tz.presentation, a);
  EXPECT_TRUE(verify_theta(h, c.rs, c.tz.ledger, a));
  auto cover = build_cover(c.base, voltages(c.sd, c.tz.ledger, h, a), a);
  EXPECT_EQ(cover.darts(), 432u);
  Dessin d(cover.lifts[0], cover.lifts[1]);
  EXPECT_EQ(automorphism_group(d).elements.size(), 6u);
}

TEST(Epimorphism, BudgetExhausted) {
  // <a | a^2> has no epimorphism onto C3.
  auto a = cyclic(3);
  Presentation p{1, {{gen_letter(0), gen_letter(0)}}};
  EXPECT_THROW(find_epimorphism(p, a, {.seed = 1, .budget = 100}), Error);
  try {
    find_epimorphism(p, a, {.seed = 1, .budget = 100});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchBudgetExhausted);
  }
}

TEST(VerifyTheta, CorruptingAnyImageIsDetected) {
  // Abelian targets kill every commutator relator, so use S3.
  auto a = s3();
  const auto& c = chain23();
  auto h = find_epimorphism(c.tz.presentation, a);
  ASSERT_TRUE(verify_theta(h, c.rs, c.tz.ledger, a));
  int failures = 0;
  for (std::size_t g = 0; g < h.images.size(); ++g) {
    Hom bad = h;
    bad.images[g] = a.mul(bad.images[g], a.generator_ids()[0]);
    if (!verify_theta(bad, c.rs, c.tz.ledger, a)) ++failures;
  }
  EXPECT_GT(failures, 0);
}

TEST(Cover, NonSurjectiveThetaDisconnects) {
  auto a = cyclic(2);
  const auto& c = chain23();
  Hom h;
  h.images.assign(c.tz.presentation.generators, GroupTable::identity());
  ASSERT_TRUE(verify_theta(h, c.rs, c.tz.ledger, a));
  auto cover = build_cover(c.base, voltages(c.sd, c.tz.ledger, h, a), a);
  EXPECT_FALSE(is_transitive(cover.darts(), cover.lifts));
  EXPECT_THROW(Dessin(cover.lifts[0], cover.lifts[1]), Error);
}

TEST(Cover, DeckMapsCommuteAndAreRegular) {
  auto a = s3();
  const auto& c = chain23();
  auto h = find_epimorphism(c.tz.presentation, a);
  auto cover = build_cover(c.base, voltages(c.sd, c.tz.ledger, h, a), a);
  auto dc = check_deck(cover, a);
  EXPECT_TRUE(dc.commutes);
  EXPECT_TRUE(dc.homomorphism);
  EXPECT_TRUE(dc.pairs_exhaustive);
  EXPECT_TRUE(dc.fixed_point_free);
  EXPECT_TRUE(dc.fiber_regular);
  // independent check of commutation with the oracle composition
  for (ElementId b = 0; b < a.order(); ++b) {
    auto lb = cover.deck(b, a);
    oracle::Images L(lb.images().begin(), lb.images().end());
    for (const auto& s : cover.lifts) {
      oracle::Images S(s.images().begin(), s.images().end());
      EXPECT_EQ(oracle::compose(L, S), oracle::compose(S, L));
    }
  }
}

TEST(Cover, TamperedLiftFailsProjection) {
  auto a = cyclic(3);
  const auto& c = chain23();
  auto h = find_epimorphism(c.tz.presentation, a);
  auto cover = build_cover(c.base, voltages(c.sd, c.tz.ledger, h, a), a);
  EXPECT_TRUE(projects_to_base(cover, c.base));
  std::vector<Point> img(cover.lifts[0].images().begin(), cover.lifts[0].images().end());
  std::swap(img[0], img[5]);
  cover.lifts[0] = Perm(img);
  EXPECT_FALSE(projects_to_base(cover, c.base));
}
