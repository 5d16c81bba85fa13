#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace thomkit {

// The variable families. Every indexed family is graded by its index
// (deg fam[i] = i, the Chern grading); y is index-free of degree 1.
enum class Family : std::uint8_t { a, b, c, cs, d, x, y };

struct FamilySpec {
  std::string_view tag;
  bool indexed;              // admits an index (all but y)
  bool unit_at_zero;         // fam[0] == 1
  bool vanishes_below_zero;  // fam[i] == 0 for i < 0
};

// d is the only family whose nonpositive indices are live variables.
inline constexpr std::array<FamilySpec, 7> kFamilySpecs{{
    {"a", true, true, true},
    {"b", true, true, true},
    {"c", true, true, true},
    {"cs", true, true, true},
    {"d", true, false, false},
    {"x", true, true, true},
    {"y", false, false, false},
}};

constexpr const FamilySpec& spec_of(Family f) {
  return kFamilySpecs[static_cast<std::size_t>(f)];
}

constexpr std::string_view tag_of(Family f) { return spec_of(f).tag; }

inline std::optional<Family> family_from_tag(std::string_view tag) {
  for (std::size_t i = 0; i < kFamilySpecs.size(); ++i) {
    if (kFamilySpecs[i].tag == tag) return static_cast<Family>(i);
  }
  return std::nullopt;
}

struct Variable {
  Family family;
  int index;  // always 0 for y

  Variable(Family f, int i) : family(f), index(i) {
    if (!spec_of(f).indexed && i != 0) {
      throw std::invalid_argument("family 'y' admits no index");
    }
  }

  int degree() const { return spec_of(family).indexed ? index : 1; }

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

}  // namespace thomkit
