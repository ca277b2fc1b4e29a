#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/perm.hpp"

namespace hypermap {

/// Type (l, m, n) of a triangle group
///   <X, Y, Z | X^l = Y^m = Z^n = XYZ = 1>,
/// stored sorted so that l <= m <= n.
struct Triple {
  std::uint32_t l = 2, m = 3, n = 7;

  /// Sorts the entries; throws InvalidArgument if any entry is below 2.
  static Triple make(std::uint32_t a, std::uint32_t b, std::uint32_t c);

  std::string to_string() const;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Parses "l,m,n".
Triple parse_triple(std::string_view text);

/// 1/l + 1/m + 1/n < 1, compared exactly.
bool is_hyperbolic(const Triple& t);

/// lcm(2l, 2m, 2n). Throws InvalidArgument for non-hyperbolic triples.
std::uint64_t modulus_k(const Triple& t);

enum class Verdict { yes, no, uncertified };
std::string_view to_string(Verdict v);

struct TripleClassification {
  Verdict is_maximal = Verdict::uncertified;
  Verdict is_arithmetic = Verdict::uncertified;
  /// "allowlist", "singerman-table", "takeuchi-table",
  /// "singerman-table+takeuchi-table" or "none".
  std::string certified_by = "none";

  /// The construction needs a maximal, non-arithmetic triangle group.
  bool accepted() const { return is_maximal == Verdict::yes && is_arithmetic == Verdict::no; }
};

/// Optional classification data: non-maximal triangle groups (inclusions
/// among triangle groups, with parametric families) and the cocompact
/// arithmetic triangle groups. Each file ends in a checksum line; a table
/// whose checksum does not match is disabled rather than trusted.
class ClassificationTables {
 public:
  struct Inclusion {
    std::vector<std::string> sub;    // pattern tokens, e.g. {"s", "s", "t"}
    std::vector<std::string> super;  // e.g. {"2", "s", "2t"}
    std::string index;
    std::string kind;
    std::string source;
  };

  /// Tables compiled into the library.
  static const ClassificationTables& embedded();

  /// Parses the two TSV texts. A table that fails its checksum is left
  /// disabled; `error_*` records why.
  static ClassificationTables parse(std::string_view singerman_tsv, std::string_view takeuchi_tsv);

  bool singerman_enabled() const noexcept { return singerman_ok_; }
  bool takeuchi_enabled() const noexcept { return takeuchi_ok_; }
  const std::string& singerman_error() const noexcept { return singerman_error_; }
  const std::string& takeuchi_error() const noexcept { return takeuchi_error_; }

  /// The first inclusion whose sub pattern matches t, if any.
  std::optional<Inclusion> non_maximal_witness(const Triple& t) const;
  bool is_arithmetic(const Triple& t) const;

  const std::vector<Inclusion>& inclusions() const noexcept { return inclusions_; }
  const std::vector<Triple>& arithmetic() const noexcept { return arithmetic_; }

 private:
  std::vector<Inclusion> inclusions_;
  std::vector<Triple> arithmetic_;
  bool singerman_ok_ = false;
  bool takeuchi_ok_ = false;
  std::string singerman_error_;
  std::string takeuchi_error_;
};

/// FNV-1a 64 of the data lines (non-empty, not starting with '#'), each
/// followed by '\n', as 16 lowercase hex digits.
std::string table_checksum(std::string_view tsv);

/// Raw embedded TSV texts.
std::string_view embedded_singerman_tsv();
std::string_view embedded_takeuchi_tsv();

/// True for the triples the construction is known to work with:
/// (2,3,n) with n prime >= 13 or n > 30, and
/// (2,3,21), (2,4,9), (4,6,12), (7,11,13), (8,9,10).
bool on_allowlist(const Triple& t);

/// Allowlist first; otherwise the enabled tables, when `tables` is given.
TripleClassification classify_triple(const Triple& t, const ClassificationTables* tables = nullptr);

struct QSearchResult {
  std::uint32_t q = 0;
  std::uint64_t k = 0;
  BigInt genus;
  std::uint64_t d_required = 0;
};

/// Smallest prime q = -1 mod k with genus_rh(q + 1, t) >= max(d, 2).
/// Throws SearchBoundExceeded past `q_bound`.
QSearchResult find_q(const Triple& t, std::uint64_t d, std::uint64_t q_bound = 0xffffffffULL);

/// The first `count` primes q = -1 mod modulus_k(t), ascending.
std::vector<std::uint32_t> admissible_primes(const Triple& t, std::size_t count);

/// Smallest prime power p^e <= bound with p^e = -1 mod k.
/// Throws BoundTooSmall when there is none.
std::uint64_t smallest_prime_power_residue(std::uint64_t k, std::uint64_t bound);

/// Riemann-Hurwitz genus of a torsion-free subgroup of the given index:
///   g = (index / 2)(1 - 1/l - 1/m - 1/n) + 1.
/// Throws NonIntegralGenus when the value is not an integer.
BigInt genus_rh(const BigInt& index, const Triple& t);

/// Genus |A| (g - 1) + 1 of the regular |A|-sheeted unbranched cover.
BigInt cover_genus(const BigInt& g_base, std::uint64_t order_a);

/// q > 3, q = +-3 or +-13 mod 40, and l, m, n all coprime to 6.
bool a4_coset_eligible(std::uint64_t q, const Triple& t);

/// The cycle construction in S_p for p = 2l - 3:
///   x = (0 1 ... l-1), y = (3 2 1 0 l l+1 ... p-1), z = (x y)^{-1},
/// which is the cycle (p-1 p-2 ... 3). Points are 0-based.
struct CycleTriple {
  std::uint32_t p = 0;
  std::uint32_t l = 0, m = 0, n = 0;  // orders of x, y, z (unsorted)
  Perm x, y, z;
  std::size_t fixed_x = 0, fixed_y = 0, fixed_z = 0;
  /// Every one of x, y, z fixes at least two points.
  bool fixed_point_condition = false;
  BigInt generated_order;
  bool generates_symmetric_group = false;
};

/// Throws BadPrime unless p is a prime >= 5.
CycleTriple agl_cycle_triple(std::uint32_t p);

}  // namespace hypermap
