#include "hypermap/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hypermap/error.hpp"

namespace hypermap {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error(ErrorCode::InvalidArgument, "image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw Error(ErrorCode::InvalidArgument, "cycles are not disjoint or out of range");
      used[c[i]] = true;
      p.images_[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::InvalidArgument, "degree mismatch in composition");
  Perm r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (Point j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = true;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t cycle_count(const Perm& p) { return cycle_type(p).size(); }

std::uint64_t perm_order(const Perm& p) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p)) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

bool is_semiregular(const Perm& p) {
  auto ct = cycle_type(p);
  return ct.empty() || ct.front() == ct.back();
}

std::size_t fixed_point_count(const Perm& p) {
  std::size_t n = 0;
  for (Point i = 0; i < p.degree(); ++i) n += p[i] == i;
  return n;
}

namespace {

std::vector<Point> parse_numbers(std::string_view s) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::uint64_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        if (v > 0xffffffffULL) throw Error(ErrorCode::ParseError, "point index too large");
        ++i;
      }
      out.push_back(static_cast<Point>(v));
    } else if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else {
      throw Error(ErrorCode::ParseError, std::string("unexpected character '") + s[i] + "'");
    }
  }
  return out;
}

}  // namespace

Perm parse_perm(std::string_view text, std::size_t degree) {
  auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw Error(ErrorCode::ParseError, "empty permutation");
  text.remove_prefix(first);
  text = text.substr(0, text.find_last_not_of(" \t\n") + 1);

  if (text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated image array");
    auto images = parse_numbers(text.substr(1, text.size() - 2));
    if (degree != 0 && images.size() != degree)
      throw Error(ErrorCode::ParseError, "image array has wrong length");
    try {
      return Perm(std::move(images));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }

  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  Point max_point = 0;
  bool any_point = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw Error(ErrorCode::ParseError, "expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated cycle");
    auto pts = parse_numbers(text.substr(pos + 1, close - pos - 1));
    for (Point v : pts) {
      max_point = std::max(max_point, v);
      any_point = true;
    }
    if (!pts.empty()) cycles.push_back(std::move(pts));
    pos = close + 1;
  }
  std::size_t n = degree != 0 ? degree : (any_point ? max_point + 1 : 1);
  try {
    return Perm::from_cycles(n, cycles);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hypermap
