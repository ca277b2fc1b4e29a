#include "hypermap/catalog.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hypermap/error.hpp"

namespace hypermap {

namespace {

Perm cycle_on(std::size_t degree, std::uint32_t first, std::uint32_t last) {
  std::vector<Point> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  for (std::uint32_t i = first; i < last; ++i) img[i] = i + 1;
  img[last] = first;
  return Perm(std::move(img));
}

std::uint32_t parse_index(std::string_view name, std::string_view digits) {
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || n == 0 || n > 64)
    throw Error(ErrorCode::ParseError, "bad group name: " + std::string(name));
  return n;
}

}  // namespace

NamedGroup catalog_group(std::string_view name, std::size_t cap) {
  const std::string key(name);
  if (name == "trivial" || name == "1") return {key, GroupTable(1, {}, cap)};
  if (name == "Q8")
    return {key, GroupTable(8,
                            {Perm::from_cycles(8, {{0, 1, 4, 5}, {2, 7, 6, 3}}),
                             Perm::from_cycles(8, {{0, 2, 4, 6}, {1, 3, 5, 7}})},
                            cap)};
  if (name.size() < 2) throw Error(ErrorCode::ParseError, "unknown group: " + key);
  const char kind = name.front();
  const std::uint32_t n = parse_index(name, name.substr(1));
  switch (kind) {
    case 'C':
      if (n == 1) return {key, GroupTable(1, {}, cap)};
      return {key, GroupTable(n, {cycle_on(n, 0, n - 1)}, cap)};
    case 'D': {
      if (n == 1) return {key, GroupTable(2, {Perm::from_cycles(2, {{0, 1}})}, cap)};
      if (n == 2)
        return {key, GroupTable(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}, cap)};
      std::vector<Point> refl(n);
      for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
      return {key, GroupTable(n, {cycle_on(n, 0, n - 1), Perm(refl)}, cap)};
    }
    case 'S':
      if (n == 1) return {key, GroupTable(1, {}, cap)};
      if (n == 2) return {key, GroupTable(2, {Perm::from_cycles(2, {{0, 1}})}, cap)};
      return {key, GroupTable(n, {Perm::from_cycles(n, {{0, 1}}), cycle_on(n, 0, n - 1)}, cap)};
    case 'A':
      if (n <= 2) return {key, GroupTable(1, {}, cap)};
      if (n == 3) return {key, GroupTable(3, {cycle_on(3, 0, 2)}, cap)};
      // (0 1 2) with an (n-1)- or n-cycle of even parity
      return {key, GroupTable(n, {cycle_on(n, 0, 2), n % 2 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1)}, cap)};
    default:
      throw Error(ErrorCode::ParseError, "unknown group: " + key);
  }
}

NamedGroup group_from_json_text(std::string_view text, std::size_t cap) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("group JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators") || !j["degree"].is_number_unsigned() ||
      !j["generators"].is_array())
    throw Error(ErrorCode::ParseError, "group JSON needs \"degree\" and \"generators\"");
  const auto degree = j["degree"].get<std::size_t>();
  if (degree == 0) throw Error(ErrorCode::ParseError, "group JSON: degree must be positive");
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array() || g.size() != degree) throw Error(ErrorCode::ParseError, "group JSON: generator has wrong length");
    std::vector<Point> img;
    for (const auto& v : g) {
      if (!v.is_number_unsigned()) throw Error(ErrorCode::ParseError, "group JSON: images must be non-negative integers");
      img.push_back(v.get<Point>());
    }
    try {
      gens.emplace_back(std::move(img));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, std::string("group JSON: ") + e.what());
    }
  }
  return {"custom", GroupTable(degree, std::move(gens), cap)};
}

NamedGroup load_group(const std::string& source, std::size_t cap) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    return group_from_json_text(ss.str(), cap);
  }
  return catalog_group(source, cap);
}

}  // namespace hypermap
