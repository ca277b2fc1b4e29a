#include "hypermap/psl2.hpp"

#include <numeric>

#include "hypermap/arith.hpp"
#include "hypermap/error.hpp"
#include "hypermap/perm_group.hpp"
#include "hypermap/rng.hpp"

namespace hypermap {

Fq::Fq(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw Error(ErrorCode::BadPrime, std::to_string(q) + " is not prime");
}

std::uint32_t Fq::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return static_cast<std::uint32_t>(pow_mod(a, q_ - 2, q_));
}

PSL2::PSL2(std::uint32_t q) : field_(q) {
  if (q == 2) throw Error(ErrorCode::BadPrime, "PSL2 requires an odd prime");
}

PSL2Elt PSL2::normalize(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
  const auto& f = field_;
  a %= q(), b %= q(), c %= q(), d %= q();
  if (f.sub(f.mul(a, d), f.mul(b, c)) != 1)
    throw Error(ErrorCode::NotUnimodular, "matrix does not have determinant 1");
  const std::uint32_t half = (q() - 1) / 2;
  std::uint32_t lead = a != 0 ? a : (b != 0 ? b : c);
  if (lead > half) return {f.neg(a), f.neg(b), f.neg(c), f.neg(d)};
  return {a, b, c, d};
}

PSL2Elt PSL2::normalize(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const {
  return normalize(field_.reduce(a), field_.reduce(b), field_.reduce(c), field_.reduce(d));
}

PSL2Elt PSL2::mul(const PSL2Elt& x, const PSL2Elt& y) const {
  const auto& f = field_;
  return normalize(f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                   f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d)));
}

PSL2Elt PSL2::inverse(const PSL2Elt& x) const {
  return normalize(x.d, field_.neg(x.b), field_.neg(x.c), x.a);
}

PSL2Elt PSL2::pow(const PSL2Elt& x, std::uint64_t e) const {
  PSL2Elt r = identity(), base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t PSL2::order(const PSL2Elt& x) const {
  std::uint64_t t = 1;
  for (PSL2Elt y = x; y != identity(); y = mul(y, x)) ++t;
  return t;
}

bool PSL2::has_order(const PSL2Elt& x, std::uint64_t k) const {
  if (k == 0 || pow(x, k) != identity()) return false;
  for (std::uint64_t p : prime_factors(k))
    if (pow(x, k / p) == identity()) return false;
  return true;
}

Perm PSL2::projective_perm(const PSL2Elt& x) const {
  const auto& f = field_;
  const std::uint32_t n = q();
  std::vector<Point> images(degree());
  auto index_of = [&](std::uint32_t u, std::uint32_t v) -> Point {
    if (v == 0) return n;
    return f.mul(u, f.inv(v));
  };
  // [u : v] -> [d u - b v : -c u + a v]
  for (std::uint32_t i = 0; i < n; ++i)
    images[i] = index_of(f.sub(f.mul(x.d, i), x.b), f.sub(x.a, f.mul(x.c, i)));
  images[n] = index_of(x.d, f.neg(x.c));
  return Perm(std::move(images));
}

PSL2Elt PSL2::random(Rng& rng) const {
  const auto& f = field_;
  for (;;) {
    // Uniform over SL2: a random nonzero first row, then a uniform completion.
    auto a = static_cast<std::uint32_t>(rng.below(q()));
    auto b = static_cast<std::uint32_t>(rng.below(q()));
    if (a == 0 && b == 0) continue;
    auto t = static_cast<std::uint32_t>(rng.below(q()));
    if (a != 0) {
      // c = t, d = (1 + b c) / a
      return normalize(a, b, t, f.mul(f.add(1, f.mul(b, t)), f.inv(a)));
    }
    // a = 0: c = -1/b, d = t
    return normalize(a, b, f.neg(f.inv(b)), t);
  }
}

void PSL2::for_each_lex(const std::function<bool(const PSL2Elt&)>& visit) const {
  const auto& f = field_;
  const std::uint32_t half = (q() - 1) / 2;
  // a = 0: then b != 0, c = -1/b, d free; normalized iff b <= half.
  for (std::uint32_t b = 1; b <= half; ++b) {
    std::uint32_t c = f.neg(f.inv(b));
    for (std::uint32_t d = 0; d < q(); ++d)
      if (!visit({0, b, c, d})) return;
  }
  for (std::uint32_t a = 1; a <= half; ++a) {
    std::uint32_t a_inv = f.inv(a);
    for (std::uint32_t b = 0; b < q(); ++b)
      for (std::uint32_t c = 0; c < q(); ++c)
        if (!visit({a, b, c, f.mul(f.add(1, f.mul(b, c)), a_inv)})) return;
  }
}

std::uint64_t PSL2::group_order() const { return psl2_group_order(q()); }

std::uint64_t psl2_group_order(std::uint32_t q) {
  if (q < 3 || !is_prime(q)) throw Error(ErrorCode::BadPrime, "q must be an odd prime");
  const std::uint64_t qq = q;
  return qq * (qq * qq - 1) / 2;
}

PSL2Elt psl2_normalize(std::uint32_t q, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return PSL2(q).normalize(a, b, c, d);
}

Perm projective_perm(std::uint32_t q, const PSL2Elt& e) { return PSL2(q).projective_perm(e); }

std::uint64_t psl2_order(std::uint32_t q, const PSL2Elt& e) { return PSL2(q).order(e); }

namespace {

bool element_orders_exist(std::uint32_t q, std::uint32_t k) {
  // Element orders of PSL2(q): divisors of q, (q-1)/2 and (q+1)/2.
  return k == q || ((q - 1) / 2) % k == 0 || ((q + 1) / 2) % k == 0;
}

}  // namespace

GeneratingTriple find_generating_triple(std::uint32_t q, std::uint32_t l, std::uint32_t m,
                                        std::uint32_t n, const TripleSearchOptions& opts) {
  if (q < 3 || !is_prime(q)) throw Error(ErrorCode::InvalidArgument, "q must be an odd prime");
  if (l < 2 || m < 2 || n < 2) throw Error(ErrorCode::InvalidArgument, "orders must be at least 2");
  if (opts.require_split_congruence) {
    std::uint64_t k = std::lcm(std::lcm(2ULL * l, 2ULL * m), 2ULL * n);
    if ((std::uint64_t{q} + 1) % k != 0)
      throw Error(ErrorCode::InvalidArgument,
                  "q = " + std::to_string(q) + " is not -1 mod lcm(2l,2m,2n) = " + std::to_string(k));
  } else if (!element_orders_exist(q, l) || !element_orders_exist(q, m) || !element_orders_exist(q, n)) {
    throw Error(ErrorCode::InvalidArgument, "PSL2(q) has no elements of the requested orders");
  }

  const PSL2 g(q);
  GeneratingTriple result;
  result.q = q;
  result.l = l;
  result.m = m;
  result.n = n;

  bool have_x = false;
  g.for_each_lex([&](const PSL2Elt& e) {
    if (g.has_order(e, l)) {
      result.x = e;
      have_x = true;
      return false;
    }
    return true;
  });
  if (!have_x) throw Error(ErrorCode::SearchExhausted, "no element of order " + std::to_string(l));

  const std::uint64_t full = g.group_order();
  const Perm px = g.projective_perm(result.x);
  auto accept = [&](const PSL2Elt& y) {
    ++result.attempts;
    if (!g.has_order(y, m)) return false;
    PSL2Elt z = g.inverse(g.mul(result.x, y));
    if (!g.has_order(z, n)) return false;
    PermGroup gen(g.degree(), {px, g.projective_perm(y)});
    if (gen.order() != full) return false;
    result.y = y;
    result.z = z;
    result.generated_order = full;
    return true;
  };

  Rng rng(opts.seed);
  for (std::uint64_t t = 0; t < opts.random_attempts; ++t)
    if (accept(g.random(rng))) return result;

  result.used_exhaustive_fallback = true;
  bool found = false;
  g.for_each_lex([&](const PSL2Elt& y) {
    found = accept(y);
    return !found;
  });
  if (!found)
    throw Error(ErrorCode::SearchExhausted, "no generating triple of orders (" + std::to_string(l) + "," +
                                                std::to_string(m) + "," + std::to_string(n) + ") in PSL2(" +
                                                std::to_string(q) + ")");
  return result;
}

bool verify_generating_triple(const GeneratingTriple& t) {
  try {
    const PSL2 g(t.q);
    for (const auto& e : {t.x, t.y, t.z})
      if (g.normalize(e.a, e.b, e.c, e.d) != e) return false;
    if (g.mul(g.mul(t.x, t.y), t.z) != g.identity()) return false;
    if (g.order(t.x) != t.l || g.order(t.y) != t.m || g.order(t.z) != t.n) return false;
    PermGroup gen(g.degree(), {g.projective_perm(t.x), g.projective_perm(t.y)});
    return gen.order() == g.group_order();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace hypermap
