#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/cover.hpp"
#include "hypermap/group_table.hpp"
#include "hypermap/perm.hpp"
#include "hypermap/perm_group.hpp"
#include "hypermap/triangle.hpp"

namespace hypermap {

/// Oriented hypermap on darts 0..n-1 given by a transitive pair (sigma0,
/// sigma1); sigma2 = (sigma0 sigma1)^{-1} so that sigma0 sigma1 sigma2 = 1.
class Dessin {
 public:
  /// Throws InvalidArgument on degree mismatch and Disconnected when the
  /// pair is not transitive.
  Dessin(Perm sigma0, Perm sigma1);

  std::size_t darts() const noexcept { return sigma0_.degree(); }
  const Perm& sigma0() const noexcept { return sigma0_; }
  const Perm& sigma1() const noexcept { return sigma1_; }
  Perm sigma2() const { return (sigma0_ * sigma1_).inverse(); }
  std::vector<Perm> monodromy_generators() const { return {sigma0_, sigma1_}; }

 private:
  Perm sigma0_, sigma1_;
};

/// chi = c(sigma0) + c(sigma1) + c(sigma2) - n, g = (2 - chi) / 2.
std::uint64_t euler_genus(const Dessin& d);

/// Cycle types of sigma0, sigma1, sigma2 (each sorted descending).
using Passport = std::array<std::vector<std::size_t>, 3>;
Passport passport(const Dessin& d);
/// "4^6 | 6^4 | 12^2"
std::string to_string(const Passport& p);

/// Orders of sigma0, sigma1, sigma2.
std::array<std::uint64_t, 3> monodromy_orders(const Dessin& d);

/// Orders exactly (l, m, n), in that order, and all three semiregular.
bool verify_type(const Dessin& d, std::uint32_t l, std::uint32_t m, std::uint32_t n);
bool verify_type(const Dessin& d, const Triple& t);

/// Centralizer of the monodromy group in Sym(darts).
Centralizer automorphism_group(const Dessin& d);

struct AutCertificate {
  DeckCheck deck;
  BigInt aut_order;
  std::size_t group_order = 0;
  bool aut_semiregular = false;
  bool equal = false;
};

/// Deck maps are automorphisms, the deck injection is a faithful
/// homomorphism, and |Aut(d)| = |A|; together these give Aut(d) = A.
AutCertificate certify_aut_equals(const Dessin& d, const GroupTable& a, const CoverStructure& cover);

}  // namespace hypermap
