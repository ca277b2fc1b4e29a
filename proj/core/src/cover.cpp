#include "hypermap/cover.hpp"

#include <algorithm>
#include <numeric>

#include "hypermap/error.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {

ElementId evaluate(const Word& w, const std::vector<ElementId>& images, const GroupTable& a) {
  ElementId r = GroupTable::identity();
  for (Letter x : w) {
    ElementId g = images.at(letter_gen(x));
    r = a.mul(r, letter_inverse(x) ? a.inv(g) : g);
  }
  return r;
}

bool is_homomorphism(const Presentation& pres, const Hom& theta, const GroupTable& a) {
  if (theta.images.size() != pres.generators) return false;
  for (const auto& r : pres.relators)
    if (evaluate(r, theta.images, a) != GroupTable::identity()) return false;
  return true;
}

namespace {

bool is_epimorphism(const Presentation& pres, const std::vector<ElementId>& images, const GroupTable& a) {
  for (const auto& r : pres.relators)
    if (evaluate(r, images, a) != GroupTable::identity()) return false;
  return a.generated_order(images) == a.order();
}

}  // namespace

Hom find_epimorphism(const Presentation& spres, const GroupTable& a, const EpimorphismOptions& opts) {
  const std::size_t n = spres.generators;
  Hom h;
  h.seed = opts.seed;
  h.images.assign(n, GroupTable::identity());
  if (a.order() == 1) {
    h.structured = true;
    h.attempts = 1;
    if (is_epimorphism(spres, h.images, a)) return h;
  }

  const auto gens = min_generating_set(a, opts.seed);
  const std::size_t d = gens.size();
  if (d > n)
    throw Error(ErrorCode::SearchBudgetExhausted, "presentation has fewer generators than the rank of A");

  // Ordered placements of the d generators: choose a d-subset, then every
  // permutation of the generating set over it.
  std::uint64_t attempts = 0;
  if (d > 0) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) pos.push_back(i);
      std::vector<std::size_t> perm(d);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        ++attempts;
        std::vector<ElementId> img(n, GroupTable::identity());
        for (std::size_t k = 0; k < d; ++k) img[pos[k]] = gens[perm[k]];
        if (is_epimorphism(spres, img, a)) {
          h.images = std::move(img);
          h.structured = true;
          h.attempts = attempts;
          return h;
        }
      } while (std::next_permutation(perm.begin(), perm.end()) && attempts < opts.budget);
    } while (std::prev_permutation(mask.begin(), mask.end()) && attempts < opts.budget);
  }

  Rng rng(opts.seed);
  for (std::uint64_t t = 0; t < opts.budget; ++t) {
    ++attempts;
    std::vector<ElementId> img(n);
    for (auto& g : img) g = static_cast<ElementId>(rng.below(a.order()));
    if (is_epimorphism(spres, img, a)) {
      h.images = std::move(img);
      h.attempts = attempts;
      return h;
    }
  }
  throw Error(ErrorCode::SearchBudgetExhausted,
              "no epimorphism found in " + std::to_string(attempts) + " attempts");
}

bool verify_theta(const Hom& theta, const Presentation& rs, const Ledger& ledger, const GroupTable& a) {
  if (ledger.rewriting.size() != rs.generators) return false;
  for (const auto& w : ledger.rewriting)
    for (Letter x : w)
      if (letter_gen(x) >= theta.images.size()) return false;
  for (const auto& r : rs.relators)
    if (evaluate(ledger.apply(r), theta.images, a) != GroupTable::identity()) return false;
  return true;
}

VoltageAssignment voltages(const SchreierData& sd, const Ledger& ledger, const Hom& theta, const GroupTable& a) {
  VoltageAssignment va;
  va.points = sd.degree;
  va.gens = sd.ambient_generators();
  va.alpha.assign(va.points * va.gens, GroupTable::identity());
  for (Point i = 0; i < va.points; ++i)
    for (std::uint32_t s = 0; s < va.gens; ++s) {
      std::int32_t id = sd.id(i, s);
      if (id >= 0) va.alpha[i * va.gens + s] = evaluate(ledger.rewriting.at(static_cast<std::size_t>(id)), theta.images, a);
    }
  return va;
}

ElementId voltage_product(Point start, const Word& w, const SchreierData& sd, const VoltageAssignment& va,
                          const GroupTable& a) {
  std::vector<Perm> inv;
  for (const auto& s : sd.action) inv.push_back(s.inverse());
  ElementId r = GroupTable::identity();
  Point p = start;
  for (Letter x : w) {
    std::uint32_t s = letter_gen(x);
    if (!letter_inverse(x)) {
      r = a.mul(r, va.at(p, s));
      p = sd.action[s][p];
    } else {
      p = inv[s][p];
      r = a.mul(r, a.inv(va.at(p, s)));
    }
  }
  return r;
}

bool voltages_consistent(const Presentation& ambient, const SchreierData& sd, const VoltageAssignment& va,
                         const GroupTable& a) {
  for (const auto& r : ambient.relators)
    for (Point i = 0; i < sd.degree; ++i)
      if (voltage_product(i, r, sd, va, a) != GroupTable::identity()) return false;
  return true;
}

Perm CoverStructure::deck(ElementId b, const GroupTable& a) const {
  std::vector<Point> img(darts());
  for (std::size_t i = 0; i < base_degree; ++i)
    for (ElementId e = 0; e < fiber; ++e) img[i * fiber + e] = static_cast<Point>(i * fiber + a.mul(b, e));
  return Perm(std::move(img));
}

CoverStructure build_cover(const std::vector<Perm>& base, const VoltageAssignment& va, const GroupTable& a) {
  if (base.size() != va.gens) throw Error(ErrorCode::InvalidArgument, "voltage table and base action disagree");
  CoverStructure c;
  c.base_degree = va.points;
  c.fiber = a.order();
  for (std::uint32_t s = 0; s < base.size(); ++s) {
    if (base[s].degree() != va.points) throw Error(ErrorCode::InvalidArgument, "base permutation has wrong degree");
    std::vector<Point> img(c.darts());
    for (Point i = 0; i < c.base_degree; ++i) {
      const ElementId v = va.at(i, s);
      const std::size_t j = base[s][i];
      for (ElementId e = 0; e < c.fiber; ++e) img[i * c.fiber + e] = static_cast<Point>(j * c.fiber + a.mul(e, v));
    }
    c.lifts.emplace_back(std::move(img));
  }
  return c;
}

DeckCheck check_deck(const CoverStructure& cover, const GroupTable& a) {
  DeckCheck dc;
  const std::size_t n = cover.darts();
  const std::size_t order = a.order();

  std::vector<Perm> deck;
  deck.reserve(order);
  for (ElementId b = 0; b < order; ++b) deck.push_back(cover.deck(b, a));

  dc.commutes = true;
  for (ElementId b = 0; b < order && dc.commutes; ++b)
    for (const auto& s : cover.lifts)
      if (deck[b] * s != s * deck[b]) {
        dc.commutes = false;
        break;
      }

  // Pairs cost |A|^2 darts each; fall back to generator pairs above a budget.
  dc.pairs_exhaustive = order * order * n <= 200'000'000ULL;
  std::vector<ElementId> left, right;
  if (dc.pairs_exhaustive) {
    left.resize(order);
    std::iota(left.begin(), left.end(), 0);
    right = left;
  } else {
    right = a.generator_ids();
    left.resize(order);
    std::iota(left.begin(), left.end(), 0);
  }
  dc.homomorphism = true;
  for (ElementId b : left) {
    for (ElementId c : right)
      if (deck[c] * deck[b] != deck[a.mul(b, c)]) {
        dc.homomorphism = false;
        break;
      }
    if (!dc.homomorphism) break;
  }

  dc.fixed_point_free = true;
  for (ElementId b = 1; b < order && dc.fixed_point_free; ++b)
    if (fixed_point_count(deck[b]) != 0) dc.fixed_point_free = false;

  dc.fiber_regular = true;
  for (std::size_t i = 0; i < cover.base_degree && dc.fiber_regular; ++i) {
    std::vector<bool> hit(order, false);
    const Point origin = static_cast<Point>(i * order);
    for (ElementId b = 0; b < order; ++b) {
      Point d = deck[b][origin];
      if (d / order != i || hit[d % order]) {
        dc.fiber_regular = false;
        break;
      }
      hit[d % order] = true;
    }
  }
  return dc;
}

bool projects_to_base(const CoverStructure& cover, const std::vector<Perm>& base) {
  if (base.size() != cover.lifts.size()) return false;
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (cover.lifts[s].degree() != cover.darts()) return false;
    for (std::size_t d = 0; d < cover.darts(); ++d)
      if (cover.lifts[s][static_cast<Point>(d)] / cover.fiber != base[s][static_cast<Point>(d / cover.fiber)]) return false;
  }
  return true;
}

}  // namespace hypermap
