#include "hypermap/dessin.hpp"

#include <sstream>

#include "hypermap/error.hpp"

namespace hypermap {

Dessin::Dessin(Perm sigma0, Perm sigma1) : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.degree() != sigma1_.degree())
    throw Error(ErrorCode::InvalidArgument, "sigma0 and sigma1 have different degrees");
  if (sigma0_.degree() == 0) throw Error(ErrorCode::InvalidArgument, "a dessin needs at least one dart");
  if (!is_transitive(sigma0_.degree(), {sigma0_, sigma1_}))
    throw Error(ErrorCode::Disconnected, "monodromy group is not transitive");
}

std::uint64_t euler_genus(const Dessin& d) {
  const auto n = static_cast<std::int64_t>(d.darts());
  const auto chi = static_cast<std::int64_t>(cycle_count(d.sigma0()) + cycle_count(d.sigma1()) +
                                             cycle_count(d.sigma2())) -
                   n;
  if (chi % 2 != 0 || chi > 2) throw Error(ErrorCode::InvalidArgument, "Euler characteristic is not that of a closed surface");
  return static_cast<std::uint64_t>((2 - chi) / 2);
}

Passport passport(const Dessin& d) { return {cycle_type(d.sigma0()), cycle_type(d.sigma1()), cycle_type(d.sigma2())}; }

std::string to_string(const Passport& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k) os << " | ";
    const auto& c = p[k];
    for (std::size_t i = 0; i < c.size();) {
      std::size_t j = i;
      while (j < c.size() && c[j] == c[i]) ++j;
      if (i) os << ' ';
      os << c[i] << '^' << (j - i);
      i = j;
    }
  }
  return os.str();
}

std::array<std::uint64_t, 3> monodromy_orders(const Dessin& d) {
  return {perm_order(d.sigma0()), perm_order(d.sigma1()), perm_order(d.sigma2())};
}

bool verify_type(const Dessin& d, std::uint32_t l, std::uint32_t m, std::uint32_t n) {
  const std::array<std::uint64_t, 3> want{l, m, n};
  const std::array<Perm, 3> s{d.sigma0(), d.sigma1(), d.sigma2()};
  for (std::size_t k = 0; k < 3; ++k)
    if (perm_order(s[k]) != want[k] || !is_semiregular(s[k])) return false;
  return true;
}

bool verify_type(const Dessin& d, const Triple& t) { return verify_type(d, t.l, t.m, t.n); }

Centralizer automorphism_group(const Dessin& d) {
  return centralizer_elements(d.darts(), d.monodromy_generators());
}

AutCertificate certify_aut_equals(const Dessin& d, const GroupTable& a, const CoverStructure& cover) {
  AutCertificate c;
  c.group_order = a.order();
  c.deck = check_deck(cover, a);
  bool same = cover.darts() == d.darts() && cover.lifts.size() >= 2 && cover.lifts[0] == d.sigma0() &&
              cover.lifts[1] == d.sigma1();
  auto aut = automorphism_group(d);
  c.aut_order = aut.elements.size();
  c.aut_semiregular = true;
  for (std::size_t i = 1; i < aut.elements.size(); ++i)
    if (fixed_point_count(aut.elements[i]) != 0) c.aut_semiregular = false;
  c.equal = same && c.deck.ok() && c.aut_order == a.order();
  return c;
}

}  // namespace hypermap
