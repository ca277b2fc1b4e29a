#include <json.hpp>
#include <map>
#include <set>

#include "hypermap/arith.hpp"
#include "hypermap/error.hpp"
#include "hypermap/pipeline.hpp"
#include "hypermap/psl2.hpp"

namespace hypermap {

using json = nlohmann::json;

namespace {

json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

bool coprime_to_6(const Triple& t) {
  for (auto e : {t.l, t.m, t.n})
    if (e % 2 == 0 || e % 3 == 0) return false;
  return true;
}

/// Each entry divides q, (q - 1)/2 or (q + 1)/2, so PSL2(q) has elements of
/// that order.
bool orders_available(std::uint64_t q, const Triple& t) {
  for (std::uint64_t e : {t.l, t.m, t.n})
    if (q % e != 0 && ((q - 1) / 2) % e != 0 && ((q + 1) / 2) % e != 0) return false;
  return true;
}

std::optional<std::uint32_t> smallest_a4_q(const Triple& t, std::uint64_t q_bound) {
  for (std::uint64_t q = 5; q <= q_bound; q += 2)
    if (is_prime(q) && a4_coset_eligible(q, t) && orders_available(q, t)) return static_cast<std::uint32_t>(q);
  return std::nullopt;
}

using Subgroup = std::vector<PSL2Elt>;

Subgroup closure(const PSL2& g, const std::vector<PSL2Elt>& gens, std::size_t limit) {
  std::set<PSL2Elt> seen{g.identity()};
  std::vector<PSL2Elt> list{g.identity()};
  for (std::size_t k = 0; k < list.size() && list.size() <= limit; ++k)
    for (const auto& s : gens) {
      auto p = g.mul(list[k], s);
      if (seen.insert(p).second) list.push_back(p);
    }
  return {seen.begin(), seen.end()};
}

Subgroup find_a4(const PSL2& g) {
  PSL2Elt a;
  bool have_a = false;
  g.for_each_lex([&](const PSL2Elt& e) {
    if (g.has_order(e, 2)) {
      a = e;
      have_a = true;
      return false;
    }
    return true;
  });
  if (!have_a) throw Error(ErrorCode::SearchExhausted, "no involution");
  Subgroup found;
  g.for_each_lex([&](const PSL2Elt& b) {
    if (!g.has_order(b, 3) || !g.has_order(g.mul(a, b), 3)) return true;
    auto h = closure(g, {a, b}, 12);
    if (h.size() == 12) {
      found = std::move(h);
      return false;
    }
    return true;
  });
  if (found.empty()) throw Error(ErrorCode::SearchExhausted, "no A4 subgroup");
  return found;
}

Subgroup conjugate(const PSL2& g, const Subgroup& h, const PSL2Elt& x) {
  const PSL2Elt xi = g.inverse(x);
  Subgroup out;
  out.reserve(h.size());
  for (const auto& e : h) out.push_back(g.mul(g.mul(xi, e), x));
  std::sort(out.begin(), out.end());
  return out;
}

// The p-cycle generating the same cyclic group as c and mapping 0 to 1.
Perm canonical_cycle(const Perm& c) {
  Perm p = c;
  while (p[0] != 1) p = p * c;
  return p;
}

}  // namespace

A4CosetPlan a4_coset_plan(const Triple& t, std::uint64_t q_bound, std::uint64_t degree_cap) {
  if (!coprime_to_6(t)) throw Error(ErrorCode::InvalidArgument, "entries of " + t.to_string() + " must be coprime to 6");
  A4CosetPlan plan;
  plan.triple = t;
  auto q = smallest_a4_q(t, q_bound);
  if (!q) throw Error(ErrorCode::NoEligibleQ, "no eligible prime q <= " + std::to_string(q_bound));
  plan.q = *q;
  const BigInt qq = plan.q;
  plan.genus_bound_numerator = qq * (qq * qq - 1);
  plan.degree = plan.genus_bound_numerator / 24;
  plan.genus = genus_rh(plan.degree, t);
  plan.genus_exceeds_bound = 120 * plan.genus > plan.genus_bound_numerator;

  // An entry divisible by 5 never divides q or (q +- 1)/2 here, because
  // q = +-3, +-13 mod 40 forces q = +-2 mod 5.
  const auto& tables = ClassificationTables::embedded();
  std::vector<std::uint32_t> values;
  for (std::uint32_t v = 5; values.size() < 12; ++v)
    if (v % 2 && v % 3 && v % 5) values.push_back(v);
  bool found = false;
  for (std::size_t in = 0; in < values.size() && !found; ++in)
    for (std::size_t im = 0; im <= in && !found; ++im)
      for (std::size_t il = 0; il <= im && !found; ++il) {
        Triple c = Triple::make(values[il], values[im], values[in]);
        if (!is_hyperbolic(c) || !classify_triple(c, &tables).accepted()) continue;
        if (!smallest_a4_q(c, q_bound)) continue;
        plan.smallest_example = c;
        found = true;
      }

  if (plan.degree > degree_cap) {
    plan.construction_note = "degree " + plan.degree.str() + " exceeds the cap " + std::to_string(degree_cap);
    return plan;
  }
  PSL2 g(plan.q);
  auto gt = find_generating_triple(plan.q, t.l, t.m, t.n, {.seed = 1, .require_split_congruence = false});
  const Subgroup h = find_a4(g);
  std::map<Subgroup, Point> index{{h, 0}};
  std::vector<Subgroup> orbit{h};
  std::vector<Point> ix, iy;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (int s = 0; s < 2; ++s) {
      auto c = conjugate(g, orbit[k], s == 0 ? gt.x : gt.y);
      auto [it, fresh] = index.emplace(c, static_cast<Point>(orbit.size()));
      if (fresh) orbit.push_back(std::move(c));
      (s == 0 ? ix : iy).push_back(it->second);
    }
  plan.constructed_degree = orbit.size();
  Dessin d{Perm(ix), Perm(iy)};
  plan.euler_genus = euler_genus(d);
  plan.type_verified = verify_type(d, t);
  plan.constructed = true;
  plan.construction_note = "built the action on conjugates of an A4 subgroup";
  return plan;
}

AglCosetAction agl_coset_action(std::uint32_t p, std::uint64_t degree_cap) {
  const auto ct = agl_cycle_triple(p);
  const BigInt degree = factorial(p - 2);
  if (degree > degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + degree.str() + " exceeds the cap " + std::to_string(degree_cap));
  AglCosetAction act;
  act.p = p;

  // AGL1(p) = <i -> i + 1, i -> r i>, r a primitive root.
  std::uint32_t r = 2;
  while (true) {
    bool primitive = true;
    for (auto f : prime_factors(p - 1))
      if (pow_mod(r, (p - 1) / f, p) == 1) primitive = false;
    if (primitive) break;
    ++r;
  }
  std::vector<Point> shift(p), scale(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    shift[i] = (i + 1) % p;
    scale[i] = static_cast<Point>(std::uint64_t{i} * r % p);
  }
  const Perm c0(shift);
  GroupTable agl(p, {c0, Perm(scale)});
  act.stabilizer_order = agl.order();
  act.at_most_one_fixed_point = true;
  for (ElementId e = 1; e < agl.order(); ++e)
    if (fixed_point_count(agl.element(e)) > 1) act.at_most_one_fixed_point = false;

  // Sylow p-subgroups, each named by its generator mapping 0 to 1.
  const Perm base = canonical_cycle(c0);
  std::map<Perm, Point> index{{base, 0}};
  std::vector<Perm> orbit{base};
  std::vector<Point> ix, iy;
  const Perm xi = ct.x.inverse(), yi = ct.y.inverse();
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (int s = 0; s < 2; ++s) {
      const Perm& g = s == 0 ? ct.x : ct.y;
      const Perm& gi = s == 0 ? xi : yi;
      Perm c = canonical_cycle(gi * orbit[k] * g);
      auto [it, fresh] = index.emplace(c, static_cast<Point>(orbit.size()));
      if (fresh) orbit.push_back(std::move(c));
      (s == 0 ? ix : iy).push_back(it->second);
    }
  act.degree = orbit.size();
  // AGL1(p) normalizes the base subgroup, and the orbit-stabilizer count closes.
  bool normalizes = true;
  for (const auto& h : agl.generators()) normalizes = normalizes && canonical_cycle(h.inverse() * base * h) == base;
  act.index_verified = normalizes && BigInt(act.degree) * act.stabilizer_order == factorial(p) &&
                       BigInt(act.degree) == degree;
  act.x = Perm(ix);
  act.y = Perm(iy);
  return act;
}

std::string a4_coset_report(const A4CosetPlan& plan) {
  const Triple& t = plan.triple;
  json j = {{"triple", json::array({t.l, t.m, t.n})},
            {"q", plan.q},
            {"q_mod_40", plan.q % 40},
            {"degree", big(plan.degree)},
            {"genus", big(plan.genus)},
            {"genus_lower_bound", "q(q^2-1)/120 = " + plan.genus_bound_numerator.str() + "/120"},
            {"genus_exceeds_bound", plan.genus_exceeds_bound},
            {"smallest_example",
             json::array({plan.smallest_example.l, plan.smallest_example.m, plan.smallest_example.n})},
            {"is_smallest_example", plan.smallest_example == t}};
  json c = {{"built", plan.constructed}, {"note", plan.construction_note}};
  if (plan.constructed) {
    c["degree"] = plan.constructed_degree;
    c["euler_genus"] = plan.euler_genus;
    c["type_verified"] = plan.type_verified;
    c["genus_matches"] = BigInt(plan.euler_genus) == plan.genus;
  }
  j["construction"] = c;
  return canonical_json_dump(j.dump());
}

std::string agl_coset_report(std::uint32_t p, std::uint64_t degree_cap) {
  const auto ct = agl_cycle_triple(p);
  const BigInt degree = factorial(p - 2);
  json j = {{"p", p},
            {"orders", json::array({ct.l, ct.m, ct.n})},
            {"x", ct.x.to_cycle_string()},
            {"y", ct.y.to_cycle_string()},
            {"z", ct.z.to_cycle_string()},
            {"fixed_points", json::array({ct.fixed_x, ct.fixed_y, ct.fixed_z})},
            {"fixed_point_condition", ct.fixed_point_condition},
            {"generated_order", big(ct.generated_order)},
            {"generates_symmetric_group", ct.generates_symmetric_group},
            {"degree", big(degree)}};
  const Triple t = Triple::make(ct.l, ct.m, ct.n);
  j["triple"] = json::array({t.l, t.m, t.n});
  try {
    j["genus"] = big(genus_rh(degree, t));
  } catch (const Error& e) {
    j["genus"] = nullptr;
    j["genus_note"] = e.what();
  }
  json c;
  try {
    auto act = agl_coset_action(p, degree_cap);
    Dessin d(act.x, act.y);
    const auto orders = monodromy_orders(d);
    c = {{"built", true},
         {"degree", act.degree},
         {"stabilizer_order", act.stabilizer_order},
         {"index_verified", act.index_verified},
         {"at_most_one_fixed_point", act.at_most_one_fixed_point},
         {"monodromy_orders", json::array({orders[0], orders[1], orders[2]})},
         {"type_verified", verify_type(d, ct.l, ct.m, ct.n)},
         {"euler_genus", euler_genus(d)}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeCapExceeded) throw;
    c = {{"built", false}, {"note", e.what()}};
  }
  j["construction"] = c;
  return canonical_json_dump(j.dump());
}

}  // namespace hypermap
