#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypermap {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, acting on the right of points.
///
/// Composition is left-to-right: (p * q) applies p first, then q, so
/// image(p * q, i) == q[p[i]].
class Perm {
 public:
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(std::size_t degree);

  /// Validates that `images` is a bijection of {0, ..., n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Disjoint cycles, 0-based; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; identity prints as "()".
  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

/// Multiset of cycle lengths, sorted descending; sums to the degree.
std::vector<std::size_t> cycle_type(const Perm& p);

std::size_t cycle_count(const Perm& p);

/// Least common multiple of the cycle lengths.
std::uint64_t perm_order(const Perm& p);

/// True iff every cycle has length perm_order(p), i.e. every non-identity
/// power is fixed-point-free.
bool is_semiregular(const Perm& p);

std::size_t fixed_point_count(const Perm& p);

/// Parses "[1,0,2]" (image array) or "(0 1)(2 3)" (cycles). Cycle notation
/// needs `degree`; pass 0 to use 1 + the largest point mentioned.
Perm parse_perm(std::string_view text, std::size_t degree = 0);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace hypermap
