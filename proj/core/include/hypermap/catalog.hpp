#pragma once

#include <string>
#include <string_view>

#include "hypermap/group_table.hpp"

namespace hypermap {

struct NamedGroup {
  /// Catalog name, or "custom" for a group read from JSON.
  std::string name;
  GroupTable table;
};

/// trivial, C<n>, D<n> (dihedral of order 2n), S<n>, A<n>, Q8.
/// Throws ParseError for unknown names, NotAGroupWithinCap above `cap`.
NamedGroup catalog_group(std::string_view name, std::size_t cap = 500);

/// {"degree": n, "generators": [[...], ...]}; throws ParseError.
NamedGroup group_from_json_text(std::string_view text, std::size_t cap = 500);

/// A catalog name, or the path of a JSON file when `source` names an
/// existing file. Throws Io when the file cannot be read.
NamedGroup load_group(const std::string& source, std::size_t cap = 500);

}  // namespace hypermap
