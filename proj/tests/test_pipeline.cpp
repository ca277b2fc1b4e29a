#include <gtest/gtest.h>

#include <json.hpp>

#include "hypermap/catalog.hpp"
#include "hypermap/error.hpp"
#include "hypermap/pipeline.hpp"
#include "oracles.hpp"

using namespace hypermap;
using nlohmann::json;

namespace {

std::size_t closure_order(const GroupTable& g) {
  std::vector<oracle::Images> gens;
  for (const auto& p : g.generators()) gens.emplace_back(p.images().begin(), p.images().end());
  return oracle::closure(g.degree(), gens).size();
}

Realization run(const std::string& name, Triple t, std::uint64_t seed = 1) {
  RealizeOptions o;
  o.triple = t;
  o.seed = seed;
  return realize(catalog_group(name), o);
}

}  // namespace

TEST(Catalog, OrdersAndRanks) {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases{
      {"trivial", 1, 0}, {"C1", 1, 0}, {"C6", 6, 1}, {"D1", 2, 1}, {"D2", 4, 2}, {"D4", 8, 2},
      {"D5", 10, 2},     {"S3", 6, 2}, {"S4", 24, 2}, {"A4", 12, 2}, {"A5", 60, 2}, {"A6", 360, 2},
      {"Q8", 8, 2}};
  for (const auto& [name, order, rank] : cases) {
    auto g = catalog_group(name);
    EXPECT_EQ(g.table.order(), order) << name;
    EXPECT_EQ(closure_order(g.table), order) << name;
    EXPECT_EQ(min_generating_size(g.table), rank) << name;
  }
}

TEST(Catalog, Errors) {
  EXPECT_THROW(catalog_group("X3"), Error);
  EXPECT_THROW(catalog_group("C"), Error);
  EXPECT_THROW(catalog_group("Cfoo"), Error);
  EXPECT_THROW(catalog_group("S6"), Error);  // 720 > default cap 500
  try {
    catalog_group("S6");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAGroupWithinCap);
  }
}

TEST(Catalog, JsonGroup) {
  auto g = group_from_json_text(R"({"degree":8,"generators":[[1,4,7,2,5,0,3,6],[2,3,4,5,6,7,0,1]]})");
  EXPECT_EQ(g.table.order(), 8u);
  EXPECT_EQ(g.name, "custom");
  EXPECT_THROW(group_from_json_text("{"), Error);
  EXPECT_THROW(group_from_json_text(R"({"degree":3,"generators":[[0,0,1]]})"), Error);
  EXPECT_THROW(group_from_json_text(R"({"degree":3,"generators":[[0,1]]})"), Error);
  EXPECT_THROW(group_from_json_text(R"({"generators":[]})"), Error);
}

TEST(Pipeline, TrivialGroupGivesBaseDessin) {
  auto r = run("trivial", Triple::make(4, 6, 12));
  EXPECT_TRUE(r.pass);
  auto c = json::parse(r.certificate);
  EXPECT_EQ(c["cover"]["darts"], 24);
  EXPECT_EQ(c["automorphisms"]["order"], 1);
}

TEST(Pipeline, CyclicOfOrderTwoOn4612) {
  auto r = run("C2", Triple::make(4, 6, 12));
  ASSERT_TRUE(r.pass);
  auto c = json::parse(r.certificate);
  EXPECT_EQ(c["q"], 23);
  EXPECT_EQ(c["base"]["genus_formula"], 7);
  EXPECT_EQ(c["cover"]["darts"], 48);
  EXPECT_EQ(c["cover"]["genus_euler"], 13);
  EXPECT_EQ(c["automorphisms"]["order"], 2);
  EXPECT_EQ(c["presentation"]["rs_generators"], 25);
  EXPECT_EQ(c["presentation"]["rs_relators"], 12);
  EXPECT_EQ(c["presentation"]["tietze_generators"], 14);
  EXPECT_EQ(c["presentation"]["tietze_relators"], 1);
}

TEST(Pipeline, SymmetricOnThreeOn249) {
  auto r = run("S3", Triple::make(2, 4, 9));
  ASSERT_TRUE(r.pass);
  auto c = json::parse(r.certificate);
  EXPECT_EQ(c["q"], 71);
  EXPECT_EQ(c["base"]["genus_euler"], 6);
  EXPECT_EQ(c["cover"]["darts"], 432);
  EXPECT_EQ(c["cover"]["genus_formula"], 31);
  EXPECT_EQ(c["automorphisms"]["order"], 6);
}

TEST(Pipeline, AutoSelectionPrefersFewestDarts) {
  EXPECT_EQ(choose_triple(default_triples(), 2, 6), Triple::make(4, 6, 12));
  auto r = realize(catalog_group("C2"));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(json::parse(r.certificate)["triple"], json::array({4, 6, 12}));
}

TEST(Pipeline, PinnedArithmeticTripleRejected) {
  RealizeOptions o;
  o.triple = Triple::make(2, 3, 7);
  EXPECT_THROW(realize(catalog_group("C2"), o), Error);
}

TEST(Pipeline, PinnedBadQRejected) {
  RealizeOptions o;
  o.triple = Triple::make(4, 6, 12);
  o.q = 29;
  EXPECT_THROW(realize(catalog_group("C2"), o), Error);
}

TEST(Pipeline, DeterministicOutput) {
  auto a = run("Q8", Triple::make(2, 4, 9), 3);
  auto b = run("Q8", Triple::make(2, 4, 9), 3);
  EXPECT_EQ(a.certificate, b.certificate);
  EXPECT_EQ(a.dessin, b.dessin);
}

TEST(Validation, RoundTripPasses) {
  auto r = run("D4", Triple::make(4, 6, 12));
  auto rep = validate_certificate(r.certificate, r.dessin);
  EXPECT_TRUE(rep.ok);
  for (const auto& f : rep.failures) ADD_FAILURE() << f;
}

TEST(Validation, TamperingIsDetected) {
  auto r = run("S3", Triple::make(4, 6, 12));
  auto cert = json::parse(r.certificate);
  auto dess = json::parse(r.dessin);

  auto expect_fail = [&](json c, json d, const char* what) {
    auto rep = validate_certificate(c.dump(), d.dump());
    EXPECT_FALSE(rep.ok) << what;
  };
  {
    auto c = cert;
    c["cover"]["genus_euler"] = c["cover"]["genus_euler"].get<int>() + 1;
    expect_fail(c, dess, "genus");
  }
  {
    auto d = dess;
    d["genus"] = d["genus"].get<int>() + 1;
    expect_fail(cert, d, "dessin genus");
  }
  {
    auto c = cert;
    auto& img = c["theta"]["images"];
    for (auto& v : img)
      if (v != 0) {
        v = 0;
        break;
      }
    expect_fail(c, dess, "theta");
  }
  {
    auto d = dess;
    auto s0 = d["sigma0"].get<std::vector<int>>();
    std::swap(s0[0], s0[1]);
    d["sigma0"] = s0;
    expect_fail(cert, d, "sigma0");
  }
  {
    auto c = cert;
    c["q"] = 47;
    expect_fail(c, dess, "q");
  }
  {
    auto c = cert;
    c["checks"]["cover_type"] = false;
    expect_fail(c, dess, "checks");
  }
  {
    auto c = cert;
    c["verdict"] = "fail";
    expect_fail(c, dess, "verdict");
  }
  {
    auto c = cert;
    c["group"]["name"] = "C6";
    expect_fail(c, dess, "group name");
  }
  expect_fail(json::object(), dess, "empty");
}

TEST(Validation, ProvenanceIsNotRecomputed) {
  auto r = run("C3", Triple::make(4, 6, 12));
  auto cert = json::parse(r.certificate);
  cert["provenance"]["theta_search"]["attempts"] = 12345;
  EXPECT_TRUE(validate_certificate(cert.dump(), r.dessin).ok);
}

TEST(CanonicalJson, SortedKeysAndInlineScalars) {
  EXPECT_EQ(canonical_json_dump(R"({"b":[1,2],"a":{"d":true,"c":[[1],[2]]}})"),
            "{\n  \"a\": {\n    \"c\": [\n      [1],\n      [2]\n    ],\n    \"d\": true\n  },\n  \"b\": [1, 2]\n}\n");
}

TEST(Reports, FindQ) {
  auto j = json::parse(find_q_report(Triple::make(2, 3, 13), 1));
  EXPECT_EQ(j["k"], 156);
  EXPECT_EQ(j["q"], 311);
  EXPECT_EQ(j["genus"], 15);
}

TEST(Reports, TripleInfo) {
  auto j = json::parse(triple_info_report(Triple::make(4, 6, 12)));
  EXPECT_EQ(j["accepted"], true);
  EXPECT_EQ(j["k"], 24);
  EXPECT_EQ(j["admissible_primes"][0]["q"], 23);
}

TEST(Reports, Psl2Triple) {
  auto j = json::parse(psl2_triple_report(23, 4, 6, 12));
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["generated_order"], 6072);
}

TEST(A4Coset, SmallestExample) {
  auto plan = a4_coset_plan(Triple::make(7, 11, 13));
  EXPECT_EQ(plan.smallest_example, Triple::make(7, 11, 13));
  EXPECT_TRUE(plan.genus_exceeds_bound);
  EXPECT_TRUE(a4_coset_eligible(plan.q, plan.triple));
  EXPECT_FALSE(plan.constructed);
  EXPECT_EQ(plan.degree * 24, BigInt(plan.q) * (BigInt(plan.q) * plan.q - 1));
}

TEST(A4Coset, ConstructionAt777) {
  auto plan = a4_coset_plan(Triple::make(7, 7, 7));
  EXPECT_EQ(plan.q, 13u);
  ASSERT_TRUE(plan.constructed);
  EXPECT_EQ(plan.constructed_degree, 91u);
  EXPECT_EQ(plan.euler_genus, 27u);
  EXPECT_EQ(plan.genus, 27);
  EXPECT_TRUE(plan.type_verified);
  EXPECT_TRUE(plan.genus_exceeds_bound);
}

TEST(A4Coset, Errors) {
  EXPECT_THROW(a4_coset_plan(Triple::make(2, 3, 7)), Error);
  try {
    a4_coset_plan(Triple::make(5, 7, 11), 2000);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoEligibleQ);
  }
}

TEST(AglCoset, DegreeOneTwentyAtSeven) {
  auto act = agl_coset_action(7);
  EXPECT_EQ(act.degree, 120u);
  EXPECT_EQ(act.stabilizer_order, 42u);
  EXPECT_TRUE(act.index_verified);
  EXPECT_TRUE(act.at_most_one_fixed_point);
  EXPECT_TRUE(is_transitive(120, {act.x, act.y}));
}

TEST(AglCoset, CapAndReport) {
  try {
    agl_coset_action(13);
    ADD_FAILURE() << "expected DegreeCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
  }
  auto j = json::parse(agl_coset_report(13));
  EXPECT_EQ(j["triple"], json::array({8, 9, 10}));
  EXPECT_EQ(j["genus"], 13250161);
  EXPECT_EQ(j["construction"]["built"], false);
}
