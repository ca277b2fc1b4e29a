#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/perm.hpp"

namespace hypermap {

/// A permutation group given by generators, with a base and strong
/// generating set built eagerly by the deterministic Schreier-Sims
/// algorithm (base points chosen in natural order, generators processed in
/// the given order). Immutable after construction.
class PermGroup {
 public:
  /// Group generated by `generators` on `degree` points. An empty generator
  /// list gives the trivial group.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }

  /// Exact order (product of basic orbit lengths).
  const BigInt& order() const noexcept { return order_; }

  bool contains(const Perm& p) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    // position in `orbit` for each point, or -1
    std::vector<std::int32_t> where;
    std::vector<Perm> transversal;
    std::vector<Perm> transversal_inv;
    std::vector<std::size_t> gens_done;
  };

  struct StripResult {
    Perm residue;
    std::size_t level;
  };

  StripResult strip(Perm h, std::size_t first_level) const;
  void build();
  void add_strong_generator(const Perm& g, std::size_t up_to_level);

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  BigInt order_;
};

/// Orbits of the group generated by `gens` on {0..degree-1}; each orbit is
/// sorted and the list is ordered by smallest element.
std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Perm>& gens);

bool is_transitive(const PermGroup& g);
bool is_transitive(std::size_t degree, const std::vector<Perm>& gens);

BigInt group_order(const PermGroup& g);

/// Full centralizer of a transitive group in Sym(n). A centralizing element
/// is determined by the image c of point 0; each candidate c is propagated
/// along a BFS spanning tree of the Schreier graph and accepted when every
/// edge is consistent. Throws NonTransitive otherwise.
struct Centralizer {
  /// All elements, identity first, ordered by the image of point 0.
  std::vector<Perm> elements;
  /// Small generating set extracted from `elements`.
  PermGroup group;
};

Centralizer centralizer_elements(const PermGroup& g);
/// Same, without building a stabilizer chain for the group itself.
Centralizer centralizer_elements(std::size_t degree, const std::vector<Perm>& gens);
PermGroup centralizer_in_sym(const PermGroup& g);

/// True iff the stabilizer of `point` in the group is non-trivial, detected
/// by finding a non-identity Schreier generator. Works at any degree without
/// building a stabilizer chain; used to certify that a transitive group is
/// not regular (equivalently, its order exceeds its degree).
std::optional<Perm> nontrivial_stabilizer_witness(std::size_t degree,
                                                  const std::vector<Perm>& gens,
                                                  Point point);

}  // namespace hypermap
