#include "hypermap/triangle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "hypermap/arith.hpp"
#include "hypermap/error.hpp"
#include "hypermap/perm_group.hpp"

namespace hypermap {

Triple Triple::make(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  if (a < 2 || b < 2 || c < 2) throw Error(ErrorCode::InvalidArgument, "triple entries must be at least 2");
  std::array<std::uint32_t, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

std::string Triple::to_string() const {
  return std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n);
}

Triple parse_triple(std::string_view text) {
  std::vector<std::uint32_t> vals;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorCode::ParseError, "malformed triple '" + std::string(text) + "'");
    if (cur.size() > 9) throw Error(ErrorCode::ParseError, "triple entry too large");
    vals.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
    else if (ch == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::ParseError, "malformed triple '" + std::string(text) + "'");
  }
  flush();
  if (vals.size() != 3) throw Error(ErrorCode::ParseError, "a triple has exactly three entries");
  try {
    return Triple::make(vals[0], vals[1], vals[2]);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

bool is_hyperbolic(const Triple& t) {
  const std::uint64_t l = t.l, m = t.m, n = t.n;
  return m * n + l * n + l * m < l * m * n;
}

std::uint64_t modulus_k(const Triple& t) {
  if (!is_hyperbolic(t)) throw Error(ErrorCode::InvalidArgument, "triple " + t.to_string() + " is not hyperbolic");
  return std::lcm(std::lcm(2ULL * t.l, 2ULL * t.m), 2ULL * t.n);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::uncertified: return "uncertified";
  }
  return "uncertified";
}

// ---------------------------------------------------------------------------
// Classification tables

std::string table_checksum(std::string_view tsv) {
  std::uint64_t h = 14695981039346656037ULL;
  std::size_t pos = 0;
  while (pos <= tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') {
      for (char ch : line) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
      }
      h ^= static_cast<unsigned char>('\n');
      h *= 1099511628211ULL;
    }
    pos = end + 1;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = s.find(sep, pos);
    out.emplace_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> data_lines(std::string_view tsv) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') out.push_back(line);
    pos = end + 1;
  }
  return out;
}

// Returns the checksum recorded in the file or an empty string.
std::string recorded_checksum(std::string_view tsv) {
  constexpr std::string_view tag = "#checksum\t";
  auto at = tsv.find(tag);
  if (at == std::string_view::npos) return {};
  auto rest = tsv.substr(at + tag.size());
  return std::string(rest.substr(0, rest.find_first_of("\r\n")));
}

struct Token {
  std::uint64_t coef = 0;
  std::string var;  // empty: constant `coef`
};

Token parse_token(const std::string& s) {
  Token t;
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  t.var = s.substr(i);
  t.coef = i == 0 ? 1 : std::stoull(s.substr(0, i));
  return t;
}

bool pattern_matches(const std::vector<std::string>& pattern, const Triple& t) {
  if (pattern.size() != 3) return false;
  std::array<std::uint64_t, 3> v{t.l, t.m, t.n};
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::map<std::string, std::uint64_t> bind;
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      Token tok = parse_token(pattern[static_cast<std::size_t>(k)]);
      std::uint64_t val = v[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      if (tok.var.empty()) {
        ok = val == tok.coef;
      } else if (val % tok.coef != 0 || val / tok.coef < 1) {
        ok = false;
      } else {
        auto [it, fresh] = bind.emplace(tok.var, val / tok.coef);
        ok = fresh || it->second == val / tok.coef;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

ClassificationTables ClassificationTables::parse(std::string_view singerman_tsv, std::string_view takeuchi_tsv) {
  ClassificationTables tables;

  auto check = [](std::string_view tsv, std::string& err) {
    auto rec = recorded_checksum(tsv);
    if (rec.empty()) {
      err = "missing checksum line";
      return false;
    }
    auto actual = table_checksum(tsv);
    if (rec != actual) {
      err = "checksum mismatch: recorded " + rec + ", computed " + actual;
      return false;
    }
    return true;
  };

  if (check(singerman_tsv, tables.singerman_error_)) {
    try {
      for (auto line : data_lines(singerman_tsv)) {
        auto cols = split(line, '\t');
        if (cols.size() != 5) throw Error(ErrorCode::ParseError, "inclusion row needs 5 columns");
        tables.inclusions_.push_back({split(cols[0], ','), split(cols[1], ','), cols[2], cols[3], cols[4]});
      }
      tables.singerman_ok_ = true;
    } catch (const std::exception& e) {
      tables.inclusions_.clear();
      tables.singerman_error_ = e.what();
    }
  }

  if (check(takeuchi_tsv, tables.takeuchi_error_)) {
    try {
      for (auto line : data_lines(takeuchi_tsv)) {
        auto cols = split(line, '\t');
        if (cols.size() != 5) throw Error(ErrorCode::ParseError, "arithmetic row needs 5 columns");
        tables.arithmetic_.push_back(Triple::make(static_cast<std::uint32_t>(std::stoul(cols[0])),
                                                  static_cast<std::uint32_t>(std::stoul(cols[1])),
                                                  static_cast<std::uint32_t>(std::stoul(cols[2]))));
      }
      tables.takeuchi_ok_ = true;
    } catch (const std::exception& e) {
      tables.arithmetic_.clear();
      tables.takeuchi_error_ = e.what();
    }
  }
  return tables;
}

const ClassificationTables& ClassificationTables::embedded() {
  static const ClassificationTables tables = parse(embedded_singerman_tsv(), embedded_takeuchi_tsv());
  return tables;
}

std::optional<ClassificationTables::Inclusion> ClassificationTables::non_maximal_witness(const Triple& t) const {
  for (const auto& inc : inclusions_)
    if (pattern_matches(inc.sub, t)) return inc;
  return std::nullopt;
}

bool ClassificationTables::is_arithmetic(const Triple& t) const {
  return std::find(arithmetic_.begin(), arithmetic_.end(), t) != arithmetic_.end();
}

bool on_allowlist(const Triple& t) {
  static const std::array<Triple, 5> extra{{{2, 3, 21}, {2, 4, 9}, {4, 6, 12}, {7, 11, 13}, {8, 9, 10}}};
  if (std::find(extra.begin(), extra.end(), t) != extra.end()) return true;
  return t.l == 2 && t.m == 3 && ((t.n >= 13 && is_prime(t.n)) || t.n > 30);
}

TripleClassification classify_triple(const Triple& t, const ClassificationTables* tables) {
  TripleClassification c;
  if (!is_hyperbolic(t)) return c;
  if (on_allowlist(t)) {
    c.is_maximal = Verdict::yes;
    c.is_arithmetic = Verdict::no;
    c.certified_by = "allowlist";
    return c;
  }
  if (!tables) return c;
  std::vector<std::string> by;
  if (tables->singerman_enabled()) {
    c.is_maximal = tables->non_maximal_witness(t) ? Verdict::no : Verdict::yes;
    by.emplace_back("singerman-table");
  }
  if (tables->takeuchi_enabled()) {
    c.is_arithmetic = tables->is_arithmetic(t) ? Verdict::yes : Verdict::no;
    by.emplace_back("takeuchi-table");
  }
  if (!by.empty()) {
    c.certified_by = by.front();
    for (std::size_t i = 1; i < by.size(); ++i) c.certified_by += "+" + by[i];
  }
  return c;
}

// ---------------------------------------------------------------------------
// Primes and genus formulas

QSearchResult find_q(const Triple& t, std::uint64_t d, std::uint64_t q_bound) {
  const std::uint64_t k = modulus_k(t);
  const std::uint64_t need = std::max<std::uint64_t>(d, 2);
  for (std::uint64_t q = k - 1; q <= q_bound; q += k) {
    if (!is_prime(q)) continue;
    BigInt g = genus_rh(BigInt(q + 1), t);
    if (g >= need) return {static_cast<std::uint32_t>(q), k, g, d};
  }
  throw Error(ErrorCode::SearchBoundExceeded,
              "no admissible prime q <= " + std::to_string(q_bound) + " for " + t.to_string());
}

std::vector<std::uint32_t> admissible_primes(const Triple& t, std::size_t count) {
  const std::uint64_t k = modulus_k(t);
  std::vector<std::uint32_t> out;
  for (std::uint64_t q = k - 1; out.size() < count && q <= 0xffffffffULL; q += k)
    if (is_prime(q)) out.push_back(static_cast<std::uint32_t>(q));
  return out;
}

std::uint64_t smallest_prime_power_residue(std::uint64_t k, std::uint64_t bound) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  for (std::uint64_t v = k - 1; v <= bound; v += k)
    if (prime_power_base(v) != 0) return v;
  throw Error(ErrorCode::BoundTooSmall, "no prime power = -1 mod " + std::to_string(k) + " up to " +
                                            std::to_string(bound));
}

BigInt genus_rh(const BigInt& index, const Triple& t) {
  if (!is_hyperbolic(t)) throw Error(ErrorCode::InvalidArgument, "triple " + t.to_string() + " is not hyperbolic");
  const BigInt l = t.l, m = t.m, n = t.n;
  BigInt num = index * (l * m * n - m * n - l * n - l * m);
  BigInt den = 2 * l * m * n;
  if (num % den != 0)
    throw Error(ErrorCode::NonIntegralGenus,
                "index " + index.str() + " gives a non-integral genus for " + t.to_string());
  return num / den + 1;
}

BigInt cover_genus(const BigInt& g_base, std::uint64_t order_a) {
  if (order_a == 0) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  return BigInt(order_a) * (g_base - 1) + 1;
}

bool a4_coset_eligible(std::uint64_t q, const Triple& t) {
  if (q <= 3) return false;
  const std::uint64_t r = q % 40;
  const bool congruence = r == 3 || r == 37 || r == 13 || r == 27;
  auto coprime6 = [](std::uint64_t v) { return std::gcd(v, std::uint64_t{6}) == 1; };
  return congruence && coprime6(t.l) && coprime6(t.m) && coprime6(t.n);
}

CycleTriple agl_cycle_triple(std::uint32_t p) {
  if (p < 5 || !is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not a prime >= 5");
  CycleTriple ct;
  ct.p = p;
  const std::uint32_t l = (p + 3) / 2;

  std::vector<Point> xc(l);
  std::iota(xc.begin(), xc.end(), Point{0});
  std::vector<Point> yc{3, 2, 1, 0};
  for (Point v = l; v < p; ++v) yc.push_back(v);

  ct.x = Perm::from_cycles(p, {xc});
  ct.y = Perm::from_cycles(p, {yc});
  ct.z = (ct.x * ct.y).inverse();
  ct.l = static_cast<std::uint32_t>(perm_order(ct.x));
  ct.m = static_cast<std::uint32_t>(perm_order(ct.y));
  ct.n = static_cast<std::uint32_t>(perm_order(ct.z));
  ct.fixed_x = fixed_point_count(ct.x);
  ct.fixed_y = fixed_point_count(ct.y);
  ct.fixed_z = fixed_point_count(ct.z);
  ct.fixed_point_condition = ct.fixed_x >= 2 && ct.fixed_y >= 2 && ct.fixed_z >= 2;
  ct.generated_order = PermGroup(p, {ct.x, ct.y}).order();
  ct.generates_symmetric_group = ct.generated_order == factorial(p);
  return ct;
}

}  // namespace hypermap
