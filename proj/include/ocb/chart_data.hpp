#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ocb/abelian.hpp"
#include "ocb/point.hpp"

namespace ocb {

struct FamilyParam {
  std::string name;
  int64_t min = 0;
  std::optional<int64_t> max;
};

// A declarative generator family: degree(params) = offset + sum p_i * step_i
// over the chart coordinates, one cyclic summand of the given order per
// admissible parameter tuple.
struct GeneratorFamily {
  std::string name;  // display pattern, e.g. "S1(1/(u^k a^l))"
  std::vector<FamilyParam> params;
  std::array<int64_t, 3> offset{0, 0, 0};
  std::vector<std::array<int64_t, 3>> steps;
  Int order = 0;
  std::string provenance;
};

struct ChartTable {
  std::string group;
  std::vector<std::string> coords;  // legend for the degree coordinates
  std::vector<GeneratorFamily> families;
};

// The built-in transcription for a chart group.
ChartTable chart_table(const PointChart& chart);

// Solve for all family instances at one coordinate; labels come from the
// family name with parameter values substituted.
GradedGroup table_group_at(const ChartTable& table, const std::array<int64_t, 3>& coord);

std::string chart_table_to_json(const ChartTable& table);
ChartTable chart_table_from_json(const std::string& text);

// Chart coordinates of a (normalized) degree, padded to three entries.
std::array<int64_t, 3> chart_coords(const PointChart& chart, const Degree& alpha);

}  // namespace ocb
