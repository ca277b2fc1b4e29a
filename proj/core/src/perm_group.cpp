#include "hypermap/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "hypermap/error.hpp"

namespace hypermap {

namespace {

std::optional<Point> first_moved_point(const Perm& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return std::nullopt;
}

// h * u^{-1} given u^{-1} directly.
Perm times(const Perm& h, const Perm& u_inv) { return h * u_inv; }

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw Error(ErrorCode::InvalidArgument, "generator degree does not match group degree");
  build();
}

void PermGroup::add_strong_generator(const Perm& g, std::size_t up_to_level) {
  if (up_to_level == levels_.size()) {
    auto b = first_moved_point(g);
    Level lv;
    lv.base_point = *b;
    lv.where.assign(degree_, -1);
    lv.where[*b] = 0;
    lv.orbit.push_back(*b);
    lv.transversal.emplace_back(degree_);
    lv.transversal_inv.emplace_back(degree_);
    lv.gens_done.push_back(0);
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = 0; l <= up_to_level; ++l) levels_[l].gens.push_back(g);
}

PermGroup::StripResult PermGroup::strip(Perm h, std::size_t first_level) const {
  for (std::size_t l = first_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point pt = h[lv.base_point];
    std::int32_t idx = lv.where[pt];
    if (idx < 0) return {std::move(h), l};
    h = times(h, lv.transversal_inv[static_cast<std::size_t>(idx)]);
  }
  return {std::move(h), levels_.size()};
}

void PermGroup::build() {
  // Initial base: every non-identity generator must move some base point.
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    bool moves_base = false;
    for (const auto& lv : levels_)
      if (g[lv.base_point] != lv.base_point) moves_base = true;
    if (!moves_base) add_strong_generator(g, levels_.size());
    else {
      // place g at the deepest level whose earlier base points it fixes
      std::size_t l = 0;
      while (l < levels_.size() && g[levels_[l].base_point] == levels_[l].base_point) ++l;
      for (std::size_t k = 0; k <= l; ++k) levels_[k].gens.push_back(g);
    }
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t p = 0; p < levels_[li].orbit.size() && !restarted; ++p) {
      while (levels_[li].gens_done[p] < levels_[li].gens.size()) {
        Level& lv = levels_[li];
        const std::size_t s = lv.gens_done[p]++;
        const Perm& gen = lv.gens[s];
        const Point src = lv.orbit[p];
        const Point dst = gen[src];
        if (lv.where[dst] < 0) {
          lv.where[dst] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(dst);
          Perm u = lv.transversal[p] * gen;
          lv.transversal_inv.push_back(u.inverse());
          lv.transversal.push_back(std::move(u));
          lv.gens_done.push_back(0);
          continue;
        }
        Perm schreier = lv.transversal[p] * gen *
                        lv.transversal_inv[static_cast<std::size_t>(lv.where[dst])];
        if (schreier.is_identity()) continue;
        auto [residue, level] = strip(std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        add_strong_generator(residue, level);
        i = static_cast<std::ptrdiff_t>(level);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  return residue.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens) {
        Point q = g[orb[k]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(std::size_t degree, const std::vector<Perm>& gens) {
  if (degree <= 1) return true;
  return orbits(degree, gens).size() == 1;
}

bool is_transitive(const PermGroup& g) { return is_transitive(g.degree(), g.generators()); }

BigInt group_order(const PermGroup& g) { return g.order(); }

Centralizer centralizer_elements(const PermGroup& g) { return centralizer_elements(g.degree(), g.generators()); }

Centralizer centralizer_elements(std::size_t n, const std::vector<Perm>& gens) {
  if (!is_transitive(n, gens)) throw Error(ErrorCode::NonTransitive, "centralizer requires a transitive group");
  if (n == 0) return {{}, PermGroup(0, {})};

  // BFS spanning tree from 0: order[k] reached from parent via generator.
  std::vector<Point> order{0};
  std::vector<std::int32_t> parent(n, -1), via(n, -1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Point q = gens[s][order[k]];
      if (!seen[q]) {
        seen[q] = true;
        parent[q] = static_cast<std::int32_t>(order[k]);
        via[q] = static_cast<std::int32_t>(s);
        order.push_back(q);
      }
    }

  std::vector<Perm> found;
  std::vector<Point> phi(n);
  for (Point c = 0; c < n; ++c) {
    phi[0] = c;
    for (std::size_t k = 1; k < order.size(); ++k) {
      Point v = order[k];
      phi[v] = gens[static_cast<std::size_t>(via[v])][phi[static_cast<std::size_t>(parent[v])]];
    }
    bool ok = true;
    for (Point v = 0; v < n && ok; ++v)
      for (const auto& s : gens)
        if (phi[s[v]] != s[phi[v]]) {
          ok = false;
          break;
        }
    if (!ok) continue;
    // phi commutes with every generator; it is a bijection because the
    // centralizer of a transitive group acts semiregularly.
    found.emplace_back(phi);
  }

  // Generators: greedily keep elements not in the subgroup generated so far.
  // Elements are identified by the image of 0 (semiregularity).
  std::vector<Perm> small;
  std::vector<bool> in_sub(n, false);
  in_sub[0] = true;
  std::vector<Perm> sub_elements{Perm(n)};
  for (const auto& e : found) {
    if (in_sub[e[0]]) continue;
    small.push_back(e);
    // Recompute closure of the subgroup generated by `small`.
    for (std::size_t k = 0; k < sub_elements.size(); ++k)
      for (const auto& s : small) {
        Perm prod = sub_elements[k] * s;
        if (!in_sub[prod[0]]) {
          in_sub[prod[0]] = true;
          sub_elements.push_back(std::move(prod));
        }
      }
  }
  return {std::move(found), PermGroup(n, std::move(small))};
}

PermGroup centralizer_in_sym(const PermGroup& g) { return centralizer_elements(g).group; }

std::optional<Perm> nontrivial_stabilizer_witness(std::size_t degree,
                                                  const std::vector<Perm>& gens,
                                                  Point point) {
  std::vector<std::int32_t> where(degree, -1);
  std::vector<Perm> transversal;
  std::vector<Point> orbit{point};
  where[point] = 0;
  transversal.emplace_back(degree);
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& s : gens) {
      Point q = s[orbit[k]];
      if (where[q] < 0) {
        where[q] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(q);
        transversal.push_back(transversal[k] * s);
      }
    }
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& s : gens) {
      const Perm& uq = transversal[static_cast<std::size_t>(where[s[orbit[k]]])];
      const Perm& up = transversal[k];
      // u_p s u_q^{-1} is the identity iff u_p s == u_q.
      bool same = true;
      for (Point r = 0; r < degree && same; ++r) same = s[up[r]] == uq[r];
      if (!same) return up * s * uq.inverse();
    }
  return std::nullopt;
}

}  // namespace hypermap
