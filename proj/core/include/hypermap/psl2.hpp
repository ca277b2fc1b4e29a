#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "hypermap/bigint.hpp"
#include "hypermap/perm.hpp"

namespace hypermap {

class Rng;

/// The prime field F_q.
class Fq {
 public:
  /// Throws BadPrime unless q is prime.
  explicit Fq(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % q_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a} + q_ - b) % q_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>(std::uint64_t{a} * b % q_); }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  /// Inverse of a nonzero element.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }

 private:
  std::uint32_t q_;
};

/// Element of PSL2(F_q): a determinant-one matrix [[a, b], [c, d]] in its
/// sign-normalized form, where the first nonzero entry of (a, b, c, d) lies
/// in 1..(q-1)/2. Each group element has exactly one such representative.
struct PSL2Elt {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const PSL2Elt&, const PSL2Elt&) = default;
  friend auto operator<=>(const PSL2Elt&, const PSL2Elt&) = default;
  std::array<std::uint32_t, 4> entries() const { return {a, b, c, d}; }
};

/// PSL2(F_q) for an odd prime q together with its action on the projective
/// line P^1(F_q). Point i < q is [i : 1]; point q is infinity = [1 : 0].
/// The matrix M moves [u : v] by the Moebius map of M^{-1},
/// [u : v] -> [d u - b v : -c u + a v], which is a right action
/// (projective_perm(M N) == projective_perm(M) * projective_perm(N)) whose
/// stabilizer of infinity is the upper-triangular subgroup.
class PSL2 {
 public:
  /// Throws BadPrime unless q is an odd prime.
  explicit PSL2(std::uint32_t q);

  std::uint32_t q() const noexcept { return field_.modulus(); }
  const Fq& field() const noexcept { return field_; }

  /// Throws NotUnimodular when ad - bc != 1.
  PSL2Elt normalize(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const;
  PSL2Elt normalize(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const;

  PSL2Elt identity() const noexcept { return {}; }
  PSL2Elt mul(const PSL2Elt& x, const PSL2Elt& y) const;
  PSL2Elt inverse(const PSL2Elt& x) const;
  PSL2Elt pow(const PSL2Elt& x, std::uint64_t e) const;

  /// Least t >= 1 with x^t = 1, by repeated multiplication.
  std::uint64_t order(const PSL2Elt& x) const;
  /// Exact test via powering and the prime divisors of k.
  bool has_order(const PSL2Elt& x, std::uint64_t k) const;

  std::size_t degree() const noexcept { return q() + 1; }
  Point infinity() const noexcept { return q(); }
  Perm projective_perm(const PSL2Elt& x) const;

  /// Uniformly random element.
  PSL2Elt random(Rng& rng) const;

  /// Visits every element in increasing lexicographic order of its
  /// normalized (a, b, c, d); stops early when `visit` returns false.
  void for_each_lex(const std::function<bool(const PSL2Elt&)>& visit) const;

  std::uint64_t group_order() const;

 private:
  Fq field_;
};

/// q (q^2 - 1) / 2 for an odd prime q.
std::uint64_t psl2_group_order(std::uint32_t q);

/// Free-function forms of the matrix operations above.
PSL2Elt psl2_normalize(std::uint32_t q, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
Perm projective_perm(std::uint32_t q, const PSL2Elt& e);
std::uint64_t psl2_order(std::uint32_t q, const PSL2Elt& e);

/// Elements x, y, z = (x y)^{-1} of PSL2(F_q) with orders exactly
/// (l, m, n) and <x, y> = PSL2(F_q).
struct GeneratingTriple {
  std::uint32_t q = 0;
  std::uint32_t l = 0, m = 0, n = 0;
  PSL2Elt x, y, z;
  std::uint64_t generated_order = 0;
  /// Number of candidate y examined before success.
  std::uint64_t attempts = 0;
  bool used_exhaustive_fallback = false;
};

struct TripleSearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t random_attempts = 200000;
  /// When false, the congruence q = -1 mod lcm(2l, 2m, 2n) is not required;
  /// the search then only needs elements of the three orders to exist.
  bool require_split_congruence = true;
};

/// x is the first element of order l in lexicographic order; y is drawn at
/// random (seeded) among elements of order m, then exhaustively in
/// lexicographic order, until z has order n and <x, y> is the whole group.
/// Throws InvalidArgument when preconditions fail and SearchExhausted when
/// no such y exists.
GeneratingTriple find_generating_triple(std::uint32_t q, std::uint32_t l, std::uint32_t m,
                                        std::uint32_t n, const TripleSearchOptions& opts = {});

/// Recomputes every invariant of a triple (orders, product, generation).
bool verify_generating_triple(const GeneratingTriple& t);

}  // namespace hypermap
