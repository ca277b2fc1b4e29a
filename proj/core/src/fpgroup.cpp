#include "hypermap/fpgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hypermap/error.hpp"
#include "hypermap/perm_group.hpp"

namespace hypermap {

// ---------------------------------------------------------------------------
// Words

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Letter& x : r) x = -x;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

Word power(const Word& w, std::uint32_t e) {
  Word r;
  for (std::uint32_t i = 0; i < e; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    std::uint32_t g = letter_gen(w[i]);
    if (g < 26) os << static_cast<char>('a' + g);
    else os << 'g' << g;
    if (letter_inverse(w[i])) os << "^-1";
  }
  return os.str();
}

Point act(Point p, const Word& w, const std::vector<Perm>& action) {
  for (Letter x : w) {
    const Perm& s = action.at(letter_gen(x));
    if (letter_inverse(x)) {
      // preimage under s
      Point q = 0;
      while (s[q] != p) ++q;
      p = q;
    } else {
      p = s[p];
    }
  }
  return p;
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

Presentation triangle_presentation(const Triple& t) {
  const Letter X = gen_letter(0), Y = gen_letter(1);
  return {2, {Word(t.l, X), Word(t.m, Y), power({X, Y}, t.n)}};
}

// ---------------------------------------------------------------------------
// Schreier transversal and rewriting

SchreierData schreier_transversal(const std::vector<Perm>& action, Point basepoint) {
  if (action.empty()) throw Error(ErrorCode::InvalidArgument, "action needs at least one generator");
  const std::size_t n = action.front().degree();
  for (const auto& s : action)
    if (s.degree() != n) throw Error(ErrorCode::InvalidArgument, "action permutations differ in degree");
  if (basepoint >= n) throw Error(ErrorCode::InvalidArgument, "basepoint out of range");

  SchreierData sd;
  sd.degree = n;
  sd.basepoint = basepoint;
  sd.action = action;
  sd.transversal.assign(n, Word{});
  const std::size_t gens = action.size();
  std::vector<bool> seen(n, false);
  // tree[i * gens + s]: the edge i --s--> i.s is in the BFS tree
  std::vector<bool> tree(n * gens, false);
  std::vector<Point> queue{basepoint};
  seen[basepoint] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Point i = queue[k];
    for (std::uint32_t s = 0; s < gens; ++s) {
      Point j = action[s][i];
      if (seen[j]) continue;
      seen[j] = true;
      tree[i * gens + s] = true;
      sd.transversal[j] = sd.transversal[i];
      sd.transversal[j].push_back(gen_letter(s));
      queue.push_back(j);
    }
  }
  if (queue.size() != n) throw Error(ErrorCode::NonTransitive, "action is not transitive");

  sd.schreier_id.assign(n * gens, -1);
  for (Point i = 0; i < n; ++i)
    for (std::uint32_t s = 0; s < gens; ++s) {
      if (tree[i * gens + s]) continue;
      sd.schreier_id[i * gens + s] = static_cast<std::int32_t>(sd.schreier_edges.size());
      sd.schreier_edges.emplace_back(i, s);
    }
  return sd;
}

Word SchreierData::schreier_word(std::size_t id) const {
  auto [i, s] = schreier_edges.at(id);
  Word w = transversal[i];
  w.push_back(gen_letter(s));
  return concat(w, inverse(transversal[action[s][i]]));
}

Word rewrite_from(Point start, const Word& w, const SchreierData& sd) {
  const std::size_t gens = sd.ambient_generators();
  std::vector<Perm> inv;
  inv.reserve(gens);
  for (const auto& s : sd.action) inv.push_back(s.inverse());
  Word out;
  Point p = start;
  for (Letter x : w) {
    std::uint32_t s = letter_gen(x);
    if (s >= gens) throw Error(ErrorCode::InvalidArgument, "letter outside the ambient generators");
    if (!letter_inverse(x)) {
      std::int32_t id = sd.id(p, s);
      if (id >= 0) out.push_back(gen_letter(static_cast<std::uint32_t>(id)));
      p = sd.action[s][p];
    } else {
      Point q = inv[s][p];
      std::int32_t id = sd.id(q, s);
      if (id >= 0) out.push_back(gen_letter(static_cast<std::uint32_t>(id), true));
      p = q;
    }
  }
  if (p != start) throw Error(ErrorCode::NotInStabilizer, "word does not fix its start point");
  return free_reduce(out);
}

Word rewrite_word(const Word& w, const SchreierData& sd) { return rewrite_from(sd.basepoint, w, sd); }

namespace {

// Shortest u with w = u^k.
Word root_of(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return w;
}

Perm word_perm(const Word& w, const std::vector<Perm>& action) {
  Perm p(action.front().degree());
  for (Letter x : w) {
    const Perm& s = action[letter_gen(x)];
    p = p * (letter_inverse(x) ? s.inverse() : s);
  }
  return p;
}

}  // namespace

Presentation reidemeister_schreier(const Presentation& pres, const SchreierData& sd) {
  if (pres.generators != sd.ambient_generators())
    throw Error(ErrorCode::InvalidArgument, "presentation and action have different generator counts");
  Presentation out;
  out.generators = sd.schreier_count();
  for (const auto& r : pres.relators) {
    if (r.empty()) continue;
    if (!word_perm(r, sd.action).is_identity())
      throw Error(ErrorCode::InvalidArgument, "relator does not act trivially: " + to_string(r));
    Word root = root_of(r);
    for (const auto& cyc : orbits(sd.degree, {word_perm(root, sd.action)}))
      out.relators.push_back(cyclic_reduce(rewrite_from(cyc.front(), r, sd)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tietze simplification

Word Ledger::apply(const Word& original) const {
  Word out;
  for (Letter x : original) {
    const Word& img = rewriting.at(letter_gen(x));
    if (letter_inverse(x)) {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return free_reduce(out);
}

namespace {

Word substitute(const Word& w, std::uint32_t g, const Word& value, const Word& value_inv) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (letter_gen(x) != g) out.push_back(x);
    else {
      const Word& v = letter_inverse(x) ? value_inv : value;
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return cyclic_reduce(out);
}

// Canonical representative of a relator up to rotation and inversion.
Word canonical_cyclic(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)})
    for (std::size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot < best) best = std::move(rot);
    }
  return best;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& pres, const TietzeOptions& opts) {
  TietzeResult res;
  res.ledger.original_generators = pres.generators;
  std::vector<bool> alive(pres.generators, true);
  std::vector<Word> rels;
  for (const auto& r : pres.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) ++res.dropped_relators;
    else rels.push_back(std::move(c));
  }
  const double limit = opts.blowup_factor * static_cast<double>(std::max<std::size_t>(pres.total_length(), 1));
  std::size_t live_gens = pres.generators;

  for (;;) {
    // Choose (relator length, generator id, relator index) minimal among
    // generators occurring exactly once in a relator.
    std::size_t best_rel = rels.size();
    std::uint32_t best_gen = 0;
    std::map<std::uint32_t, int> count;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      if (best_rel < rels.size() && rels[ri].size() > rels[best_rel].size()) continue;
      count.clear();
      for (Letter x : rels[ri]) ++count[letter_gen(x)];
      for (auto [g, c] : count) {
        if (c != 1) continue;
        bool better = best_rel == rels.size() || rels[ri].size() < rels[best_rel].size() ||
                      (rels[ri].size() == rels[best_rel].size() && g < best_gen);
        if (better) {
          best_rel = ri;
          best_gen = g;
        }
        break;  // count is ordered; the first once-occurring id is the lowest
      }
    }
    if (best_rel == rels.size()) break;

    // Rotate so the generator comes first: r = g^e w, hence g = w^{-e}.
    Word r = rels[best_rel];
    auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [&](Letter x) { return letter_gen(x) == best_gen; }) - r.begin());
    Word rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word value = letter_inverse(r[pos]) ? free_reduce(rest) : inverse(free_reduce(rest));
    Word value_inv = inverse(value);

    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
    std::vector<Word> next;
    next.reserve(rels.size());
    for (const auto& w : rels) {
      Word s = substitute(w, best_gen, value, value_inv);
      if (s.empty()) ++res.dropped_relators;
      else next.push_back(std::move(s));
    }
    rels = std::move(next);
    alive[best_gen] = false;
    --live_gens;
    res.ledger.steps.push_back({best_gen, value});
    ++res.eliminations;
    res.deficiency_trace.push_back(static_cast<std::int64_t>(live_gens) -
                                   static_cast<std::int64_t>(rels.size() + res.dropped_relators));

    std::size_t total = 0;
    for (const auto& w : rels) total += w.size();
    if (static_cast<double>(total) > limit) {
      res.blowup = true;
      break;
    }
  }

  // Remove duplicates up to rotation and inversion.
  std::set<Word> canon;
  std::vector<Word> unique;
  for (auto& w : rels) {
    if (canon.insert(canonical_cyclic(w)).second) unique.push_back(std::move(w));
    else ++res.dropped_relators;
  }
  rels = std::move(unique);

  // Renumber survivors and build the rewriting map by back-substitution.
  std::vector<std::int64_t> final_index(pres.generators, -1);
  for (std::uint32_t g = 0; g < pres.generators; ++g)
    if (alive[g]) {
      final_index[g] = static_cast<std::int64_t>(res.ledger.surviving.size());
      res.ledger.surviving.push_back(g);
    }
  auto renumber = [&](const Word& w) {
    Word out;
    for (Letter x : w)
      out.push_back(gen_letter(static_cast<std::uint32_t>(final_index[letter_gen(x)]), letter_inverse(x)));
    return out;
  };
  res.ledger.rewriting.assign(pres.generators, Word{});
  for (std::uint32_t g : res.ledger.surviving) res.ledger.rewriting[g] = {gen_letter(static_cast<std::uint32_t>(final_index[g]))};
  for (auto it = res.ledger.steps.rbegin(); it != res.ledger.steps.rend(); ++it) {
    Word v;
    for (Letter x : it->definition) {
      const Word& img = res.ledger.rewriting[letter_gen(x)];
      if (letter_inverse(x)) {
        Word inv = inverse(img);
        v.insert(v.end(), inv.begin(), inv.end());
      } else {
        v.insert(v.end(), img.begin(), img.end());
      }
    }
    res.ledger.rewriting[it->eliminated] = free_reduce(v);
  }

  res.presentation.generators = res.ledger.surviving.size();
  for (const auto& w : rels) res.presentation.relators.push_back(renumber(w));
  res.stuck = res.blowup || res.presentation.relators.size() > 1;
  return res;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

template <class T>
T abs_value(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Diagonal of the Smith normal form, smallest-pivot strategy.
template <class T>
std::vector<T> smith_diagonal(std::vector<std::vector<T>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<T> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest non-zero entry in the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs_value(a[i][j]) < abs_value(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      const T piv = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        T qt = a[i][t] / piv;
        for (std::size_t j = t; j < cols; ++j)
          if (a[t][j] != 0) a[i][j] = checked_sub(a[i][j], checked_mul(qt, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        T qt = a[t][j] / piv;
        for (std::size_t i = t; i < rows; ++i)
          if (a[i][t] != 0) a[i][j] = checked_sub(a[i][j], checked_mul(qt, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and repeat
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % piv != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] = checked_add(a[t][c], a[i][c]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs_value(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
  return smith_diagonal<BigInt>(std::move(rows), cols);
}

Abelianization abelianization(const Presentation& pres) {
  const std::size_t cols = pres.generators;
  std::vector<std::vector<std::int64_t>> m(pres.relators.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    for (Letter x : pres.relators[i]) m[i][letter_gen(x)] += letter_inverse(x) ? -1 : 1;

  std::vector<BigInt> diag;
  try {
    for (auto v : smith_diagonal<std::int64_t>(m, cols)) diag.emplace_back(v);
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> big(m.size(), std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) big[i][j] = m[i][j];
    diag = smith_invariants(std::move(big), cols);
  }
  Abelianization ab;
  ab.free_rank = cols - diag.size();
  for (auto& d : diag)
    if (d > 1) ab.torsion.push_back(d);
  return ab;
}

}  // namespace hypermap
