#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypermap/catalog.hpp"
#include "hypermap/dessin.hpp"
#include "hypermap/triangle.hpp"

namespace hypermap {

std::string_view library_version();

struct RealizeOptions {
  std::optional<Triple> triple;
  std::optional<std::uint32_t> q;
  std::uint64_t seed = 1;
  std::uint64_t theta_budget = 1000000;
  std::size_t dart_cap = 1000000;
  /// Retry policy: seeds per q, then admissible q per triple, then triples.
  std::size_t seeds_per_q = 3;
  std::size_t q_per_triple = 3;
};

/// Triples tried by default, in order: (4,6,12), (2,4,9), (2,3,21), (2,3,13),
/// then (2,3,p) for primes 17 <= p <= 31.
std::vector<Triple> default_triples();

/// Among `candidates`, the one whose smallest admissible q with genus at
/// least max(rank, 2) gives the fewest darts; ties keep list order.
Triple choose_triple(const std::vector<Triple>& candidates, std::uint64_t rank, std::size_t order);

struct AttemptRecord {
  Triple triple;
  std::uint32_t q = 0;
  std::uint64_t seed = 0;
  std::string stage;
  std::string outcome;  // "ok" or the error message
};

struct Realization {
  std::string certificate;  // canonical JSON
  std::string dessin;       // canonical JSON
  std::string timings;      // JSON, not canonical
  bool pass = false;
  std::vector<AttemptRecord> attempts;
  /// Recorded check name -> result.
  std::map<std::string, bool> checks;
};

/// Runs the full construction. Throws the stage error when the options pin
/// everything and it fails; SearchBudgetExhausted when every retry fails.
Realization realize(const NamedGroup& group, const RealizeOptions& opts = {});

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Re-checks every claim of a certificate and its dessin from the stored
/// data alone: arithmetic identities, the generating triple, the recomputed
/// stabilizer presentation, theta, the cover against the stored
/// permutations, and the automorphism group order. No search is re-run.
ValidationReport validate_certificate(const std::string& certificate_json, const std::string& dessin_json);

/// Sorted keys, two-space indent, arrays of scalars on one line.
std::string canonical_json_dump(const std::string& json_text);

/// Writes certificate.json, dessin.json and timings.json into `dir`.
void write_realization(const Realization& r, const std::string& dir);

// ---------------------------------------------------------------------------
// Reports printed by the CLI (JSON text).

std::string triple_info_report(const Triple& t);
std::string find_q_report(const Triple& t, std::uint64_t rank);
std::string psl2_triple_report(std::uint32_t q, std::uint32_t l, std::uint32_t m, std::uint32_t n,
                               std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Primitive-representation variants.

struct A4CosetPlan {
  Triple triple;
  std::uint32_t q = 0;
  BigInt degree;        // q (q^2 - 1) / 24
  BigInt genus;         // Riemann-Hurwitz for that index
  BigInt genus_bound_numerator;  // q (q^2 - 1); the bound is this / 120
  bool genus_exceeds_bound = false;
  /// Smallest triple with entries coprime to 6 that admits an eligible q
  /// and is maximal and non-arithmetic, ordered by (n, m, l).
  Triple smallest_example;
  bool constructed = false;
  std::string construction_note;
  std::uint64_t constructed_degree = 0;
  std::uint64_t euler_genus = 0;
  bool type_verified = false;
};

/// Throws InvalidArgument unless every entry is coprime to 6, NoEligibleQ
/// when no prime q <= q_bound works. Builds the action on conjugates of an
/// A4 subgroup when the degree is at most `degree_cap`.
A4CosetPlan a4_coset_plan(const Triple& t, std::uint64_t q_bound = 100000, std::uint64_t degree_cap = 20000);

/// The symmetric group S_p acting on its Sylow p-subgroups, equivalently on
/// the cosets of AGL1(p).
struct AglCosetAction {
  std::uint32_t p = 0;
  std::size_t degree = 0;       // (p - 2)!
  std::uint64_t stabilizer_order = 0;  // |AGL1(p)| = p (p - 1)
  bool index_verified = false;  // degree * |AGL1(p)| = p!
  /// Every non-identity element of AGL1(p) fixes at most one point.
  bool at_most_one_fixed_point = false;
  Perm x, y;  // action of the cycle triple's x and y
};

/// Throws BadPrime, or DegreeCapExceeded when (p - 2)! > degree_cap.
AglCosetAction agl_coset_action(std::uint32_t p, std::uint64_t degree_cap = 10000);

std::string a4_coset_report(const A4CosetPlan& plan);
std::string agl_coset_report(std::uint32_t p, std::uint64_t degree_cap = 10000);

}  // namespace hypermap
