#pragma once

#include <string>
#include <vector>

#include "ocb/assembly.hpp"

namespace ocb {

// Glyph for one cyclic summand order.
std::string order_glyph(const Int& order);

// Motivic grid: the entry in degree alpha is drawn at column rank(alpha) and
// row (weight of the nontrivial part). Cells list glyphs with multiplicity
// suffixes.
std::string render_motivic_grid(const AdditiveChart& chart);

// One-line rendering of a graded group, e.g. "Z + Z/2^2".
std::string render_group(const GradedGroup& g);

}  // namespace ocb
