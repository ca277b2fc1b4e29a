#include "hypermap/group_table.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hypermap/error.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {

GroupTable::GroupTable(std::size_t degree, std::vector<Perm> generators, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw Error(ErrorCode::InvalidArgument, "generator degree does not match group degree");

  std::unordered_map<Perm, ElementId, PermHash> index;
  elements_.emplace_back(degree_);
  index.emplace(elements_.front(), 0);
  for (std::size_t k = 0; k < elements_.size(); ++k)
    for (const auto& g : generators_) {
      Perm prod = elements_[k] * g;
      if (index.count(prod)) continue;
      if (elements_.size() >= cap)
        throw Error(ErrorCode::NotAGroupWithinCap,
                    "group has more than " + std::to_string(cap) + " elements");
      index.emplace(prod, static_cast<ElementId>(elements_.size()));
      elements_.push_back(std::move(prod));
    }

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ElementId c = index.at(elements_[a] * elements_[b]);
      table_[a * n + b] = c;
      if (c == 0) inverse_[a] = static_cast<ElementId>(b);
    }
}

ElementId GroupTable::pow(ElementId a, std::int64_t e) const {
  ElementId base = e < 0 ? inv(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  ElementId r = identity();
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::uint64_t GroupTable::element_order(ElementId a) const {
  std::uint64_t k = 1;
  for (ElementId x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

ElementId GroupTable::index_of(const Perm& p) const {
  auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) throw Error(ErrorCode::InvalidArgument, "permutation is not a group element");
  return static_cast<ElementId>(it - elements_.begin());
}

std::vector<ElementId> GroupTable::generator_ids() const {
  std::vector<ElementId> ids;
  for (const auto& g : generators_) ids.push_back(index_of(g));
  return ids;
}

std::vector<bool> GroupTable::generated_subgroup(const std::vector<ElementId>& ids) const {
  std::vector<bool> in(order(), false);
  std::vector<ElementId> list{identity()};
  in[identity()] = true;
  for (std::size_t k = 0; k < list.size(); ++k)
    for (ElementId g : ids) {
      ElementId p = mul(list[k], g);
      if (!in[p]) {
        in[p] = true;
        list.push_back(p);
      }
    }
  return in;
}

std::size_t GroupTable::generated_order(const std::vector<ElementId>& ids) const {
  auto in = generated_subgroup(ids);
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
}

std::vector<ElementId> GroupTable::class_representatives() const {
  std::vector<bool> done(order(), false);
  std::vector<ElementId> reps;
  for (ElementId a = 0; a < order(); ++a) {
    if (done[a]) continue;
    reps.push_back(a);
    for (ElementId g = 0; g < order(); ++g) done[mul(mul(inv(g), a), g)] = true;
  }
  return reps;
}

namespace {

// Extends `current` (a subgroup bitmap) by elements; dedupes subgroups per
// depth so each distinct chain prefix is explored once.
bool chain_search(const GroupTable& a, const std::vector<ElementId>& candidates_first,
                  std::size_t depth, std::size_t target, const std::vector<bool>& current,
                  std::vector<ElementId>& chosen, std::vector<std::set<std::vector<bool>>>& visited) {
  if (static_cast<std::size_t>(std::count(current.begin(), current.end(), true)) == a.order())
    return true;
  if (depth == target) return false;
  std::vector<ElementId> all;
  if (depth == 0) all = candidates_first;
  else
    for (ElementId g = 0; g < a.order(); ++g) all.push_back(g);
  for (ElementId g : all) {
    if (current[g]) continue;
    chosen.push_back(g);
    auto next = a.generated_subgroup(chosen);
    if (visited[depth].insert(next).second &&
        chain_search(a, candidates_first, depth + 1, target, next, chosen, visited))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<ElementId> min_generating_set(const GroupTable& a, std::uint64_t seed, std::size_t cap) {
  if (a.order() > cap)
    throw Error(ErrorCode::CapExceeded, "group order exceeds the rank-search cap");
  if (a.order() == 1) return {};

  Rng rng(seed);
  for (std::size_t d = 1;; ++d) {
    // Random sampling: cheap, succeeds quickly for most groups.
    const std::size_t samples = 64 * d;
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<ElementId> tuple;
      for (std::size_t k = 0; k < d; ++k) tuple.push_back(static_cast<ElementId>(rng.below(a.order())));
      if (a.generated_order(tuple) == a.order()) return tuple;
    }
    std::vector<ElementId> chosen;
    std::vector<std::set<std::vector<bool>>> visited(d);
    std::vector<bool> trivial(a.order(), false);
    trivial[GroupTable::identity()] = true;
    if (chain_search(a, a.class_representatives(), 0, d, trivial, chosen, visited)) return chosen;
  }
}

std::size_t min_generating_size(const GroupTable& a, std::uint64_t seed, std::size_t cap) {
  return min_generating_set(a, seed, cap).size();
}

}  // namespace hypermap
