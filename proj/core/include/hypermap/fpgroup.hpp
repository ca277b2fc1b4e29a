#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/perm.hpp"
#include "hypermap/triangle.hpp"

namespace hypermap {

/// A letter is g + 1 for generator g and -(g + 1) for its inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

constexpr Letter gen_letter(std::uint32_t g, bool inverse = false) {
  return inverse ? -static_cast<Letter>(g + 1) : static_cast<Letter>(g + 1);
}
constexpr std::uint32_t letter_gen(Letter x) { return static_cast<std::uint32_t>((x < 0 ? -x : x) - 1); }
constexpr bool letter_inverse(Letter x) { return x < 0; }

Word free_reduce(const Word& w);
/// Free reduction followed by cancelling inverse letters at the two ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::uint32_t e);
/// Letters rendered as a, b, ... for small generator counts, g12 otherwise;
/// inverses carry a trailing '^-1'.
std::string to_string(const Word& w);

/// Applies a word, letter by letter, to a point of a permutation action.
Point act(Point p, const Word& w, const std::vector<Perm>& action);

struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  std::size_t total_length() const;
  /// generators - relators
  std::int64_t deficiency() const {
    return static_cast<std::int64_t>(generators) - static_cast<std::int64_t>(relators.size());
  }
};

/// <X, Y | X^l, Y^m, (XY)^n> on generators X = 0, Y = 1 (Z = (XY)^{-1}).
Presentation triangle_presentation(const Triple& t);

/// Schreier transversal of a transitive action of the ambient generators.
struct SchreierData {
  std::size_t degree = 0;
  Point basepoint = 0;
  /// Action of each ambient generator.
  std::vector<Perm> action;
  /// U_i: positive word taking the basepoint to i; shortlex-minimal
  /// (breadth-first, generators in index order). U_basepoint is empty.
  std::vector<Word> transversal;
  /// For point i and ambient generator s, the Schreier generator
  /// sigma(i, s) = U_i s U_{i.s}^{-1} has id schreier_id[i * gens + s], or
  /// -1 when it is freely trivial (a spanning-tree edge).
  std::vector<std::int32_t> schreier_id;
  /// (i, s) of each Schreier generator, in id order (sorted by i, then s).
  std::vector<std::pair<Point, std::uint32_t>> schreier_edges;

  std::size_t ambient_generators() const noexcept { return action.size(); }
  std::size_t schreier_count() const noexcept { return schreier_edges.size(); }
  std::int32_t id(Point i, std::uint32_t s) const noexcept {
    return schreier_id[static_cast<std::size_t>(i) * action.size() + s];
  }
  /// U_i s U_{i.s}^{-1} as a word in the ambient generators.
  Word schreier_word(std::size_t id) const;
};

/// Throws NonTransitive when the action is not transitive, InvalidArgument
/// when the basepoint is out of range or degrees disagree.
SchreierData schreier_transversal(const std::vector<Perm>& action, Point basepoint);

/// The rewriting map tau: a word in the ambient generators that fixes the
/// basepoint becomes a word in the Schreier generators. Throws
/// NotInStabilizer otherwise.
Word rewrite_word(const Word& w, const SchreierData& sd);

/// Rewriting of w read from an arbitrary start point; w must return to it.
Word rewrite_from(Point start, const Word& w, const SchreierData& sd);

/// Presentation of the point stabilizer on the Schreier generators: one
/// relator for each cycle of the action of each relator's root (so X^l
/// contributes one relator per cycle of X), rewritten from the cycle's
/// smallest point.
Presentation reidemeister_schreier(const Presentation& pres, const SchreierData& sd);

/// Record of a Tietze simplification. Generator ids in `steps` are the
/// original ids; `rewriting` maps every original generator to a word in the
/// final generators and is a homomorphism on free words.
struct Ledger {
  struct Step {
    std::uint32_t eliminated = 0;
    /// Value of the eliminated generator, in generators alive at that stage.
    Word definition;
  };
  std::size_t original_generators = 0;
  std::vector<Step> steps;
  /// Original id of each final generator, in final order.
  std::vector<std::uint32_t> surviving;
  std::vector<Word> rewriting;

  /// Substitutes `rewriting` letter by letter.
  Word apply(const Word& original) const;
};

struct TietzeOptions {
  /// Give up (flagging `stuck`) once the presentation grows past this
  /// multiple of its input length.
  double blowup_factor = 1e4;
};

struct TietzeResult {
  Presentation presentation;
  Ledger ledger;
  /// True when no further elimination applies but more than one relator
  /// remains, or when the length guard fired.
  bool stuck = false;
  bool blowup = false;
  std::size_t eliminations = 0;
  /// Relators removed because they became empty or duplicated another one
  /// up to rotation and inversion. These are not elimination steps.
  std::size_t dropped_relators = 0;
  /// generators - relators recorded after every elimination step.
  std::vector<std::int64_t> deficiency_trace;
};

/// Repeatedly eliminates a generator occurring exactly once in some
/// relator: the shortest such relator first, then the lowest generator id.
TietzeResult tietze_simplify(const Presentation& pres, const TietzeOptions& opts = {});

struct Abelianization {
  std::size_t free_rank = 0;
  /// Invariant factors greater than 1, ascending by divisibility.
  std::vector<BigInt> torsion;
};

/// Smith normal form of the relator exponent-sum matrix.
Abelianization abelianization(const Presentation& pres);

/// Smith normal form diagonal (non-zero entries, each dividing the next) of
/// an integer matrix given row-major.
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> rows, std::size_t cols);

}  // namespace hypermap
