#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are compared against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& p, const Images& q) {
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Images identity(std::size_t n) {
  Images r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

/// Naive closure: every product of generators until nothing new appears.
inline std::set<Images> closure(std::size_t n, const std::vector<Images>& gens) {
  std::set<Images> seen{identity(n)};
  std::vector<Images> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        auto p = compose(e, g);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Every permutation of Sym(n) commuting with all generators.
inline std::vector<Images> centralizer_bruteforce(std::size_t n, const std::vector<Images>& gens) {
  std::vector<Images> out;
  Images p = identity(n);
  do {
    bool ok = true;
    for (const auto& g : gens)
      if (compose(p, g) != compose(g, p)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t q) {
  for (std::uint64_t x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  return 0;
}

/// Moebius map z -> (a z + b) / (c z + d) on P^1(F_q) with infinity = q,
/// evaluated case by case from the definition.
inline std::uint64_t moebius(std::uint64_t q, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                             std::uint64_t d, std::uint64_t z) {
  if (z == q) {
    if (c == 0) return q;
    return a * mod_inv(c, q) % q;
  }
  std::uint64_t num = (a * z + b) % q, den = (c * z + d) % q;
  if (den == 0) return q;
  return num * mod_inv(den, q) % q;
}

/// Order of PSL2(q) by closure over 2x2 matrices modulo +-I.
inline std::size_t psl2_order_by_closure(std::uint64_t q) {
  using M = std::array<std::uint64_t, 4>;
  auto norm = [q](M m) {
    M neg{(q - m[0]) % q, (q - m[1]) % q, (q - m[2]) % q, (q - m[3]) % q};
    return std::min(m, neg);
  };
  auto mul = [q](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
             (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
  };
  std::vector<M> gens{norm({1, 1, 0, 1}), norm({0, 1, q - 1, 0})};
  std::set<M> seen{norm({1, 0, 0, 1})};
  std::vector<M> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        auto p = norm(mul(e, g));
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::uint64_t lcm_of_cycles(const Images& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    r = std::lcm(r, len);
  }
  return r;
}

/// Number of cycles, counting fixed points.
inline std::size_t cycles(const Images& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

}  // namespace oracle
