#include "hypermap/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hypermap/arith.hpp"
#include "hypermap/cover.hpp"
#include "hypermap/error.hpp"
#include "hypermap/fpgroup.hpp"
#include "hypermap/psl2.hpp"

namespace hypermap {

using json = nlohmann::json;

std::string_view library_version() { return HYPERMAP_VERSION; }

namespace {

json perm_json(const Perm& p) { return json(std::vector<Point>(p.images().begin(), p.images().end())); }

Perm perm_from_json(const json& j, std::size_t degree) {
  if (!j.is_array() || j.size() != degree) throw Error(ErrorCode::ParseError, "permutation has wrong length");
  std::vector<Point> img;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw Error(ErrorCode::ParseError, "permutation images must be non-negative integers");
    img.push_back(v.get<Point>());
  }
  try {
    return Perm(std::move(img));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json elt_json(const PSL2Elt& e) { return json::array({e.a, e.b, e.c, e.d}); }

PSL2Elt elt_from_json(const json& j, std::uint32_t q) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "matrix must have four entries");
  std::array<std::int64_t, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer()) throw Error(ErrorCode::ParseError, "matrix entries must be integers");
    v[i] = j[i].get<std::int64_t>();
    if (v[i] < 0 || v[i] >= q) throw Error(ErrorCode::ParseError, "matrix entry out of range");
  }
  PSL2Elt e = psl2_normalize(q, v[0], v[1], v[2], v[3]);
  if (e != PSL2Elt{static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]),
                   static_cast<std::uint32_t>(v[2]), static_cast<std::uint32_t>(v[3])})
    throw Error(ErrorCode::ParseError, "matrix is not in normal form");
  return e;
}

json passport_json(const Passport& p) { return json::array({p[0], p[1], p[2]}); }

json torsion_json(const std::vector<BigInt>& t) {
  json a = json::array();
  for (const auto& v : t) a.push_back(v.str());
  return a;
}

json classification_json(const TripleClassification& c) {
  return {{"is_maximal", std::string(to_string(c.is_maximal))},
          {"is_arithmetic", std::string(to_string(c.is_arithmetic))},
          {"certified_by", c.certified_by}};
}

json group_json(const NamedGroup& g) {
  json gens = json::array();
  for (const auto& p : g.table.generators()) gens.push_back(perm_json(p));
  return {{"name", g.name},
          {"order", g.table.order()},
          {"degree", g.table.degree()},
          {"generators", gens}};
}

// Deterministic part of a run: everything recomputable from the group, the
// triple, q, the generating triple and theta.
struct Evaluation {
  json body;    // certificate without provenance
  json dessin;  // dessin file
  std::map<std::string, bool> checks;
  bool pass = false;
};

struct Inputs {
  const NamedGroup* group = nullptr;
  std::size_t rank = 0;
  std::vector<ElementId> rank_witness;
  Triple t;
  std::uint32_t q = 0;
  GeneratingTriple gt;
  Hom theta;
};

struct Chain {
  std::vector<Perm> base;
  SchreierData sd;
  Presentation ambient, rs;
  TietzeResult tz;
};

Chain build_chain(const Triple& t, const GeneratingTriple& gt) {
  Chain c;
  c.base = {projective_perm(gt.q, gt.x), projective_perm(gt.q, gt.y)};
  c.sd = schreier_transversal(c.base, gt.q);
  c.ambient = triangle_presentation(t);
  c.rs = reidemeister_schreier(c.ambient, c.sd);
  c.tz = tietze_simplify(c.rs);
  return c;
}

Evaluation evaluate_run(const Inputs& in, const Chain& c) {
  Evaluation ev;
  auto& ck = ev.checks;
  const GroupTable& a = in.group->table;
  const Triple& t = in.t;
  const std::uint64_t order = a.order();

  // triple and q
  ck["triple_hyperbolic"] = is_hyperbolic(t);
  const auto cls = classify_triple(t, &ClassificationTables::embedded());
  ck["triple_not_excluded"] = cls.is_maximal != Verdict::no && cls.is_arithmetic != Verdict::yes;
  const std::uint64_t k = modulus_k(t);
  ck["q_prime"] = is_prime(in.q);
  ck["q_congruence"] = (in.q + 1) % k == 0;
  const BigInt g = genus_rh(in.q + 1, t);
  ck["genus_at_least_rank"] = g >= std::max<std::uint64_t>(in.rank, 2);
  ck["rank_witness_generates"] =
      in.rank_witness.size() == in.rank && a.generated_order(in.rank_witness) == order;
  ck["generating_triple"] = in.gt.q == in.q && in.gt.l == t.l && in.gt.m == t.m && in.gt.n == t.n &&
                            verify_generating_triple(in.gt);

  // base dessin
  Dessin base(c.base[0], c.base[1]);
  const std::uint64_t base_genus = euler_genus(base);
  ck["base_type"] = verify_type(base, t);
  ck["base_genus_matches"] = BigInt(base_genus) == g;
  const auto base_aut = automorphism_group(base).elements.size();
  ck["base_aut_trivial"] = base_aut == 1;

  // stabilizer presentation
  const std::size_t index = in.q + 1;
  std::size_t expected_relators = index / t.l + index / t.m + index / t.n;
  const auto ab_rs = abelianization(c.rs);
  const auto& sp = c.tz.presentation;
  const auto ab_tz = abelianization(sp);
  const std::size_t two_g = static_cast<std::size_t>(2 * base_genus);
  ck["rs_generators"] = c.rs.generators == index + 1;
  ck["rs_relators"] = c.rs.relators.size() == expected_relators;
  ck["rs_deficiency"] = c.rs.deficiency() == static_cast<std::int64_t>(two_g) - 1;
  ck["rs_abelianization"] = ab_rs.free_rank == two_g && ab_rs.torsion.empty();
  ck["tietze_surface_form"] = !c.tz.stuck && sp.generators == two_g && sp.relators.size() == 1;
  ck["tietze_abelianization"] = ab_tz.free_rank == two_g && ab_tz.torsion.empty();
  bool trace_constant = true;
  for (auto d : c.tz.deficiency_trace) trace_constant = trace_constant && d == c.rs.deficiency();
  ck["tietze_deficiency_invariant"] = trace_constant;

  // theta and the cover
  bool theta_shape = in.theta.images.size() == sp.generators;
  for (auto id : in.theta.images) theta_shape = theta_shape && id < order;
  ck["theta_shape"] = theta_shape;
  if (!theta_shape) throw Error(ErrorCode::ParseError, "theta images do not fit the presentation");
  ck["theta_homomorphism"] = is_homomorphism(sp, in.theta, a);
  ck["theta_surjective"] = a.generated_order(in.theta.images) == order;
  ck["theta_verified"] = verify_theta(in.theta, c.rs, c.tz.ledger, a);
  const auto va = voltages(c.sd, c.tz.ledger, in.theta, a);
  ck["voltages_consistent"] = voltages_consistent(c.ambient, c.sd, va, a);
  const auto cover = build_cover(c.base, va, a);
  ck["cover_projects"] = projects_to_base(cover, c.base);
  ck["cover_transitive"] = is_transitive(cover.darts(), cover.lifts);
  if (!ck["cover_transitive"]) throw Error(ErrorCode::Disconnected, "cover monodromy is not transitive");
  Dessin d(cover.lifts[0], cover.lifts[1]);
  const std::uint64_t cover_genus_euler = euler_genus(d);
  const BigInt cover_g = cover_genus(g, order);
  ck["cover_type"] = verify_type(d, t);
  ck["cover_genus_matches"] = BigInt(cover_genus_euler) == cover_g;
  const auto aut = certify_aut_equals(d, a, cover);
  ck["deck_commutes"] = aut.deck.commutes;
  ck["deck_homomorphism"] = aut.deck.homomorphism;
  ck["deck_fixed_point_free"] = aut.deck.fixed_point_free;
  ck["deck_fiber_regular"] = aut.deck.fiber_regular;
  ck["aut_order_equals_group_order"] = aut.aut_order == order;
  ck["aut_semiregular"] = aut.aut_semiregular;
  ck["aut_isomorphic"] = aut.equal;
  ck["monodromy_not_regular"] = nontrivial_stabilizer_witness(d.darts(), d.monodromy_generators(), 0).has_value();

  ev.pass = true;
  for (const auto& [name, ok] : ck) ev.pass = ev.pass && ok;

  json checks = json::object();
  for (const auto& [name, ok] : ck) checks[name] = ok;
  const auto orders = monodromy_orders(d);

  ev.body = {
      {"format", "hypermap-certificate"},
      {"format_version", 1},
      {"library_version", std::string(library_version())},
      {"group", group_json(*in.group)},
      {"rank", in.rank},
      {"rank_witness", in.rank_witness},
      {"triple", json::array({t.l, t.m, t.n})},
      {"classification", classification_json(cls)},
      {"k", k},
      {"q", in.q},
      {"generating_triple", {{"x", elt_json(in.gt.x)}, {"y", elt_json(in.gt.y)}, {"z", elt_json(in.gt.z)}}},
      {"base",
       {{"darts", index},
        {"genus_formula", bigint_json(g)},
        {"genus_euler", base_genus},
        {"passport", passport_json(passport(base))},
        {"aut_order", base_aut}}},
      {"presentation",
       {{"index", index},
        {"rs_generators", c.rs.generators},
        {"rs_relators", c.rs.relators.size()},
        {"rs_free_rank", ab_rs.free_rank},
        {"rs_torsion", torsion_json(ab_rs.torsion)},
        {"tietze_generators", sp.generators},
        {"tietze_relators", sp.relators.size()},
        {"tietze_free_rank", ab_tz.free_rank},
        {"tietze_torsion", torsion_json(ab_tz.torsion)},
        {"tietze_eliminations", c.tz.eliminations},
        {"tietze_dropped_relators", c.tz.dropped_relators},
        {"tietze_relator_length", sp.total_length()},
        {"stuck", c.tz.stuck}}},
      {"theta", {{"images", in.theta.images}}},
      {"cover",
       {{"darts", d.darts()},
        {"genus_formula", bigint_json(cover_g)},
        {"genus_euler", cover_genus_euler},
        {"passport", passport_json(passport(d))},
        {"monodromy_orders", json::array({orders[0], orders[1], orders[2]})}}},
      {"automorphisms",
       {{"order", bigint_json(aut.aut_order)},
        {"group_order", order},
        {"deck_pairs_exhaustive", aut.deck.pairs_exhaustive}}},
      {"checks", checks},
      {"verdict", ev.pass ? "pass" : "fail"},
  };
  ev.dessin = {{"darts", d.darts()},
               {"sigma0", perm_json(d.sigma0())},
               {"sigma1", perm_json(d.sigma1())},
               {"type", json::array({t.l, t.m, t.n})},
               {"genus", cover_genus_euler},
               {"passport", passport_json(passport(d))}};
  return ev;
}

void canonical_write(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
      if (!first) os << ",\n";
      first = false;
      os << pad << json(it.key()).dump() << ": ";
      canonical_write(os, it.value(), indent + 2);
    }
    os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars) {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      canonical_write(os, j[i], indent + 2);
    }
    os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else {
    os << j.dump();
  }
}

std::string canonical(const json& j) {
  std::ostringstream os;
  canonical_write(os, j, 0);
  os << '\n';
  return os.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint32_t next_admissible(std::uint64_t after, std::uint64_t k) {
  for (std::uint64_t q = after + k;; q += k) {
    if (q > 0xffffffffULL) throw Error(ErrorCode::SearchBoundExceeded, "no admissible prime below 2^32");
    if (is_prime(q)) return static_cast<std::uint32_t>(q);
  }
}

json attempt_json(const AttemptRecord& r) {
  return {{"triple", r.triple.to_string()}, {"q", r.q}, {"seed", r.seed}, {"stage", r.stage}, {"outcome", r.outcome}};
}

}  // namespace

std::vector<Triple> default_triples() {
  std::vector<Triple> out{Triple::make(4, 6, 12), Triple::make(2, 4, 9), Triple::make(2, 3, 21),
                          Triple::make(2, 3, 13)};
  for (std::uint32_t p = 17; p <= 31; ++p)
    if (is_prime(p)) out.push_back(Triple::make(2, 3, p));
  return out;
}

namespace {

// Candidates with their smallest usable q, sorted by dart count.
std::vector<std::pair<Triple, std::uint32_t>> rank_triples(const std::vector<Triple>& candidates,
                                                           std::uint64_t rank) {
  std::vector<std::pair<Triple, std::uint32_t>> out;
  for (const auto& t : candidates) {
    try {
      out.emplace_back(t, find_q(t, rank).q);
    } catch (const Error&) {
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

}  // namespace

Triple choose_triple(const std::vector<Triple>& candidates, std::uint64_t rank, std::size_t) {
  auto ranked = rank_triples(candidates, rank);
  if (ranked.empty()) throw Error(ErrorCode::SearchBoundExceeded, "no candidate triple admits a prime q");
  return ranked.front().first;
}

Realization realize(const NamedGroup& group, const RealizeOptions& opts) {
  const auto t_start = Clock::now();
  const GroupTable& a = group.table;
  json timings = json::object();

  auto t0 = Clock::now();
  const auto witness = min_generating_set(a, opts.seed);
  const std::size_t rank = witness.size();
  timings["rank"] = seconds_since(t0);

  std::vector<std::pair<Triple, std::uint32_t>> plan;
  if (opts.triple) {
    const Triple& t = *opts.triple;
    if (!is_hyperbolic(t)) throw Error(ErrorCode::InvalidArgument, "triple " + t.to_string() + " is not hyperbolic");
    const auto cls = classify_triple(t, &ClassificationTables::embedded());
    if (cls.is_maximal == Verdict::no || cls.is_arithmetic == Verdict::yes)
      throw Error(ErrorCode::InvalidArgument, "triple " + t.to_string() + " is not maximal or is arithmetic");
    if (opts.q) {
      plan.emplace_back(t, *opts.q);
    } else {
      plan.emplace_back(t, find_q(t, rank).q);
    }
  } else {
    plan = rank_triples(default_triples(), rank);
    if (opts.q) {
      // keep triples for which the pinned q is admissible
      std::vector<std::pair<Triple, std::uint32_t>> kept;
      for (auto& [t, q] : plan)
        if ((std::uint64_t{*opts.q} + 1) % modulus_k(t) == 0) kept.emplace_back(t, *opts.q);
      plan = std::move(kept);
      if (plan.empty()) throw Error(ErrorCode::InvalidArgument, "q is admissible for no default triple");
    }
  }
  if (opts.q) {
    const Triple& t = plan.front().first;
    if (!is_prime(*opts.q) || (std::uint64_t{*opts.q} + 1) % modulus_k(t) != 0)
      throw Error(ErrorCode::InvalidArgument, "q must be a prime with q = -1 mod " + std::to_string(modulus_k(t)));
    if (genus_rh(std::uint64_t{*opts.q} + 1, t) < std::max<std::uint64_t>(rank, 2))
      throw Error(ErrorCode::InvalidArgument, "base genus for this q is below the rank of A");
  }
  const bool pinned = opts.triple && opts.q;

  std::vector<AttemptRecord> log;
  for (const auto& [t, q_first] : plan) {
    std::uint32_t q = q_first;
    const std::size_t q_tries = opts.q ? 1 : opts.q_per_triple;
    for (std::size_t qi = 0; qi < q_tries; ++qi) {
      if (qi > 0) q = next_admissible(q, modulus_k(t));
      const std::uint64_t darts = (std::uint64_t{q} + 1) * a.order();
      if (darts > opts.dart_cap) {
        log.push_back({t, q, opts.seed, "cover", "dart cap exceeded"});
        if (pinned) throw Error(ErrorCode::DegreeCapExceeded, "dart count exceeds the cap");
        break;  // later q are larger still
      }
      GeneratingTriple gt;
      Chain chain;
      double triple_time = 0, chain_time = 0;
      try {
        t0 = Clock::now();
        gt = find_generating_triple(q, t.l, t.m, t.n, {.seed = opts.seed});
        triple_time = seconds_since(t0);
        t0 = Clock::now();
        chain = build_chain(t, gt);
        chain_time = seconds_since(t0);
      } catch (const Error& e) {
        log.push_back({t, q, opts.seed, "generating-triple", e.what()});
        if (pinned) throw;
        continue;
      }
      if (chain.tz.stuck) {
        log.push_back({t, q, opts.seed, "tietze", "stuck"});
        continue;
      }
      for (std::uint64_t s = opts.seed; s < opts.seed + opts.seeds_per_q; ++s) {
        Hom theta;
        t0 = Clock::now();
        try {
          theta = find_epimorphism(chain.tz.presentation, a, {.seed = s, .budget = opts.theta_budget});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SearchBudgetExhausted) throw;
          log.push_back({t, q, s, "theta", e.what()});
          continue;
        }
        const double theta_time = seconds_since(t0);
        log.push_back({t, q, s, "theta", "ok"});

        t0 = Clock::now();
        Inputs in{&group, rank, witness, t, q, gt, theta};
        Evaluation ev = evaluate_run(in, chain);
        const double eval_time = seconds_since(t0);

        json attempts = json::array();
        for (const auto& r : log) attempts.push_back(attempt_json(r));
        ev.body["provenance"] = {
            {"seed", opts.seed},
            {"attempts", attempts},
            {"generating_triple_search",
             {{"seed", opts.seed}, {"attempts", gt.attempts}, {"exhaustive_fallback", gt.used_exhaustive_fallback}}},
            {"theta_search", {{"seed", theta.seed}, {"attempts", theta.attempts}, {"structured", theta.structured}}}};

        timings["generating_triple"] = triple_time;
        timings["presentation"] = chain_time;
        timings["theta"] = theta_time;
        timings["cover_and_checks"] = eval_time;
        timings["total"] = seconds_since(t_start);

        Realization r;
        r.certificate = canonical(ev.body);
        r.dessin = canonical(ev.dessin);
        r.timings = timings.dump(2) + "\n";
        r.pass = ev.pass;
        r.attempts = log;
        r.checks = ev.checks;
        return r;
      }
    }
    if (opts.triple) break;
  }
  std::string msg = "every attempt failed:";
  for (const auto& r : log) msg += " [" + r.triple.to_string() + " q=" + std::to_string(r.q) + " " + r.stage + ": " + r.outcome + "]";
  throw Error(ErrorCode::SearchBudgetExhausted, msg);
}

ValidationReport validate_certificate(const std::string& certificate_json, const std::string& dessin_json) {
  ValidationReport rep;
  auto fail = [&](const std::string& why) {
    rep.failures.push_back(why);
    return rep;
  };
  json cert, dess;
  try {
    cert = json::parse(certificate_json);
    dess = json::parse(dessin_json);
  } catch (const json::exception& e) {
    return fail(std::string("unparseable JSON: ") + e.what());
  }
  try {
    if (cert.value("format", "") != "hypermap-certificate" || cert.value("format_version", 0) != 1)
      return fail("unknown certificate format");

    // group
    const auto& gj = cert.at("group");
    json group_file = {{"degree", gj.at("degree")}, {"generators", gj.at("generators")}};
    NamedGroup group = group_from_json_text(group_file.dump(), 2000);
    group.name = gj.at("name").get<std::string>();
    if (group.name != "custom") {
      // a catalog name must denote exactly the stored generators
      NamedGroup named = catalog_group(group.name, 2000);
      if (named.table.generators() != group.table.generators()) return fail("group name does not match generators");
    }

    // inputs
    Inputs in;
    in.group = &group;
    in.rank = cert.at("rank").get<std::size_t>();
    in.rank_witness = cert.at("rank_witness").get<std::vector<ElementId>>();
    for (auto id : in.rank_witness)
      if (id >= group.table.order()) return fail("rank witness out of range");
    const auto tv = cert.at("triple").get<std::vector<std::uint32_t>>();
    if (tv.size() != 3) return fail("triple must have three entries");
    in.t = Triple::make(tv[0], tv[1], tv[2]);
    if (in.t.l != tv[0] || in.t.m != tv[1] || in.t.n != tv[2]) return fail("triple is not sorted");
    in.q = cert.at("q").get<std::uint32_t>();
    if (!is_prime(in.q) || in.q < 5) return fail("q is not an odd prime");
    const auto& gtj = cert.at("generating_triple");
    in.gt.q = in.q;
    in.gt.l = in.t.l;
    in.gt.m = in.t.m;
    in.gt.n = in.t.n;
    in.gt.x = elt_from_json(gtj.at("x"), in.q);
    in.gt.y = elt_from_json(gtj.at("y"), in.q);
    in.gt.z = elt_from_json(gtj.at("z"), in.q);
    in.gt.generated_order = psl2_group_order(in.q);
    in.theta.images = cert.at("theta").at("images").get<std::vector<ElementId>>();
    for (auto id : in.theta.images)
      if (id >= group.table.order()) return fail("theta image out of range");

    if (!verify_generating_triple(in.gt)) return fail("generating triple does not verify");

    Chain chain = build_chain(in.t, in.gt);
    Evaluation ev = evaluate_run(in, chain);

    for (const auto& [name, ok] : ev.checks)
      if (!ok) rep.failures.push_back("check failed: " + name);

    json stored = cert;
    stored.erase("provenance");
    for (auto it = ev.body.begin(); it != ev.body.end(); ++it)
      if (!stored.contains(it.key()) || stored[it.key()] != it.value())
        rep.failures.push_back("field differs from recomputation: " + it.key());
    for (auto it = stored.begin(); it != stored.end(); ++it)
      if (!ev.body.contains(it.key())) rep.failures.push_back("unexpected field: " + it.key());

    // the dessin file must be exactly the recomputed cover
    for (auto it = ev.dessin.begin(); it != ev.dessin.end(); ++it)
      if (!dess.contains(it.key()) || dess[it.key()] != it.value())
        rep.failures.push_back("dessin field differs from recomputation: " + it.key());
    for (auto it = dess.begin(); it != dess.end(); ++it)
      if (!ev.dessin.contains(it.key())) rep.failures.push_back("unexpected dessin field: " + it.key());

    // independent of the comparison: the stored permutations themselves
    const auto n = dess.at("darts").get<std::size_t>();
    Dessin d(perm_from_json(dess.at("sigma0"), n), perm_from_json(dess.at("sigma1"), n));
    if (!verify_type(d, in.t)) rep.failures.push_back("stored dessin has the wrong type");
    if (BigInt(euler_genus(d)) != cover_genus(genus_rh(in.q + 1, in.t), group.table.order()))
      rep.failures.push_back("stored dessin genus differs from |A|(g-1)+1");
    if (automorphism_group(d).elements.size() != group.table.order())
      rep.failures.push_back("stored dessin automorphism group has the wrong order");
  } catch (const json::exception& e) {
    rep.failures.push_back(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    rep.failures.push_back(std::string("certificate does not check: ") + e.what());
  }
  rep.ok = rep.failures.empty();
  return rep;
}

std::string canonical_json_dump(const std::string& json_text) { return canonical(json::parse(json_text)); }

void write_realization(const Realization& r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir + ": " + ec.message());
  auto put = [&](const std::string& name, const std::string& text) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  };
  put("certificate.json", r.certificate);
  put("dessin.json", r.dessin);
  put("timings.json", r.timings);
}

// ---------------------------------------------------------------------------

std::string triple_info_report(const Triple& t) {
  json j = {{"triple", json::array({t.l, t.m, t.n})}, {"hyperbolic", is_hyperbolic(t)}};
  const auto cls = classify_triple(t, &ClassificationTables::embedded());
  j["classification"] = classification_json(cls);
  j["accepted"] = cls.accepted();
  j["on_allowlist"] = on_allowlist(t);
  if (is_hyperbolic(t)) {
    j["k"] = modulus_k(t);
    json primes = json::array();
    for (auto q : admissible_primes(t, 5))
      primes.push_back({{"q", q}, {"genus", bigint_json(genus_rh(std::uint64_t{q} + 1, t))}});
    j["admissible_primes"] = primes;
  }
  const auto& tables = ClassificationTables::embedded();
  if (auto w = tables.non_maximal_witness(t)) {
    json sub = w->sub, super = w->super;
    j["non_maximal_witness"] = {{"sub", sub}, {"super", super}, {"index", w->index}, {"kind", w->kind}};
  }
  return canonical(j);
}

std::string find_q_report(const Triple& t, std::uint64_t rank) {
  auto r = find_q(t, rank);
  return canonical({{"triple", json::array({t.l, t.m, t.n})},
                    {"rank", rank},
                    {"k", r.k},
                    {"q", r.q},
                    {"genus", bigint_json(r.genus)},
                    {"genus_required", r.d_required}});
}

std::string psl2_triple_report(std::uint32_t q, std::uint32_t l, std::uint32_t m, std::uint32_t n,
                               std::uint64_t seed) {
  auto gt = find_generating_triple(q, l, m, n, {.seed = seed});
  const auto px = projective_perm(q, gt.x), py = projective_perm(q, gt.y), pz = projective_perm(q, gt.z);
  return canonical({{"q", q},
                    {"orders", json::array({l, m, n})},
                    {"x", elt_json(gt.x)},
                    {"y", elt_json(gt.y)},
                    {"z", elt_json(gt.z)},
                    {"generated_order", gt.generated_order},
                    {"group_order", psl2_group_order(q)},
                    {"attempts", gt.attempts},
                    {"exhaustive_fallback", gt.used_exhaustive_fallback},
                    {"verified", verify_generating_triple(gt)},
                    {"action_cycle_types",
                     json::array({cycle_type(px), cycle_type(py), cycle_type(pz)})}});
}

}  // namespace hypermap
