#pragma once

#include <cstdint>
#include <vector>

#include "hypermap/fpgroup.hpp"
#include "hypermap/group_table.hpp"
#include "hypermap/perm.hpp"

namespace hypermap {

/// Homomorphism from a finitely presented group to a GroupTable, given by
/// the image of each generator.
struct Hom {
  std::vector<ElementId> images;
  /// Search provenance.
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
  bool structured = false;
};

/// Value of a word under generator images.
ElementId evaluate(const Word& w, const std::vector<ElementId>& images, const GroupTable& a);

struct EpimorphismOptions {
  std::uint64_t seed = 1;
  /// Random assignments tried after the structured ones.
  std::uint64_t budget = 1000000;
};

/// Structured attempts first (a minimum generating set placed on every
/// ordered choice of generator positions, all others sent to the identity),
/// then seeded uniformly random assignments. Each candidate must kill every
/// relator and generate A. Throws SearchBudgetExhausted.
Hom find_epimorphism(const Presentation& spres, const GroupTable& a, const EpimorphismOptions& opts = {});

/// Every relator of `pres` evaluates to the identity.
bool is_homomorphism(const Presentation& pres, const Hom& theta, const GroupTable& a);

/// True iff every relator of the original stabilizer presentation, rewritten
/// through the ledger and evaluated under theta, is the identity.
bool verify_theta(const Hom& theta, const Presentation& rs, const Ledger& ledger, const GroupTable& a);

/// alpha(i, s) in A for each base point i and ambient generator s; the
/// identity on spanning-tree edges.
struct VoltageAssignment {
  std::size_t points = 0;
  std::size_t gens = 0;
  std::vector<ElementId> alpha;  // alpha[i * gens + s]

  ElementId at(Point i, std::uint32_t s) const { return alpha[static_cast<std::size_t>(i) * gens + s]; }
};

VoltageAssignment voltages(const SchreierData& sd, const Ledger& ledger, const Hom& theta, const GroupTable& a);

/// Ordered voltage product along w read from `start` (inverse letters use
/// the inverse voltage of the edge they traverse backwards).
ElementId voltage_product(Point start, const Word& w, const SchreierData& sd, const VoltageAssignment& va,
                          const GroupTable& a);

/// Every relator cycle of the base action has trivial voltage product.
bool voltages_consistent(const Presentation& ambient, const SchreierData& sd, const VoltageAssignment& va,
                         const GroupTable& a);

/// Derived permutations on darts (i, a) = i * |A| + a:
///   (i, a) s^ = (i s, a alpha(i, s)).
struct CoverStructure {
  std::size_t base_degree = 0;
  std::size_t fiber = 0;
  std::vector<Perm> lifts;  // one per ambient generator

  std::size_t darts() const noexcept { return base_degree * fiber; }
  /// Deck map lambda_b: (i, a) -> (i, b a).
  Perm deck(ElementId b, const GroupTable& a) const;
};

CoverStructure build_cover(const std::vector<Perm>& base, const VoltageAssignment& va, const GroupTable& a);

struct DeckCheck {
  bool commutes = false;
  /// lambda_c lambda_b = lambda_{b c} (c applied first), on every pair when
  /// affordable, on pairs of generators otherwise.
  bool homomorphism = false;
  bool pairs_exhaustive = false;
  /// lambda_b has no fixed dart for b != 1 (so the injection is faithful).
  bool fixed_point_free = false;
  /// Each fiber is a single regular orbit of the deck maps.
  bool fiber_regular = false;

  bool ok() const { return commutes && homomorphism && fixed_point_free && fiber_regular; }
};

DeckCheck check_deck(const CoverStructure& cover, const GroupTable& a);

/// Dart d lies over base point d / |A| and each lift projects to its base
/// permutation.
bool projects_to_base(const CoverStructure& cover, const std::vector<Perm>& base);

}  // namespace hypermap
