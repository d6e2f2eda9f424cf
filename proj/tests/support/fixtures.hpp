#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "knotsig/knot_table.hpp"

namespace knotsig::testing {

inline const std::vector<KnotRecord>& fixture_knots() {
  static const std::vector<KnotRecord> records = load_table(KNOTSIG_FIXTURES).records;
  return records;
}

inline const KnotRecord& fixture(const std::string& name) {
  for (const auto& r : fixture_knots())
    if (r.name == name) return r;
  throw std::out_of_range("no fixture knot " + name);
}

/// The 21 slice knots with a circle root of signature one.
inline const std::vector<std::string>& theorem_knot_names() {
  static const std::vector<std::string> names{
      "8_20",   "10_87",  "10_140", "11a28",  "11a58",  "11a165", "12a189",
      "12a377", "12a979", "12n56",  "12n57",  "12n62",  "12n66",  "12n87",
      "12n106", "12n288", "12n501", "12n504", "12n582", "12n670", "12n721"};
  return names;
}

inline SeifertMatrix matrix(const char* text) {
  return SeifertMatrix::validate(parse_integer_matrix(text));
}

}  // namespace knotsig::testing
