#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermap/perm.hpp"
#include "hypermap/perm_group.hpp"

namespace hypermap {

using ElementId = std::uint32_t;

/// A finite group with every element listed and a full multiplication
/// table. Element 0 is the identity; the list is the breadth-first closure
/// of the generators (right multiplication, generators in order), so it is
/// reproducible from the generators alone.
class GroupTable {
 public:
  static constexpr std::size_t kDefaultCap = 2000;

  /// Throws NotAGroupWithinCap when the closure exceeds `cap`.
  GroupTable(std::size_t degree, std::vector<Perm> generators, std::size_t cap = kDefaultCap);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementId inv(ElementId a) const noexcept { return inverse_[a]; }
  ElementId pow(ElementId a, std::int64_t e) const;
  std::uint64_t element_order(ElementId a) const;

  const Perm& element(ElementId a) const { return elements_[a]; }
  /// Throws InvalidArgument when `p` is not an element.
  ElementId index_of(const Perm& p) const;

  const std::vector<Perm>& generators() const noexcept { return generators_; }
  std::vector<ElementId> generator_ids() const;

  PermGroup perm_group() const { return PermGroup(degree_, generators_); }

  /// Order of the subgroup generated by `ids`.
  std::size_t generated_order(const std::vector<ElementId>& ids) const;
  /// Membership bitmap of the subgroup generated by `ids`.
  std::vector<bool> generated_subgroup(const std::vector<ElementId>& ids) const;

  /// Representatives of conjugacy classes (smallest id in each class).
  std::vector<ElementId> class_representatives() const;

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
};

/// Minimum number of generators of `a` (0 for the trivial group). Seeded
/// random sampling is tried first for each candidate size, then an exact
/// search over chains of subgroups with the first element taken up to
/// conjugacy. Throws CapExceeded when |A| > cap.
std::size_t min_generating_size(const GroupTable& a, std::uint64_t seed = 1,
                                std::size_t cap = GroupTable::kDefaultCap);

/// A generating tuple of minimum size, found by the same search.
std::vector<ElementId> min_generating_set(const GroupTable& a, std::uint64_t seed = 1,
                                          std::size_t cap = GroupTable::kDefaultCap);

}  // namespace hypermap
