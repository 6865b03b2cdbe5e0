#include "ocb/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ocb {

std::string order_glyph(const Int& order) {
  if (order == 0) return "■";
  if (order == 2) return "•";
  if (order == 3) return "▲";
  if (order == 4) return "⊙";
  return "[" + order.str() + "]";
}

std::string render_group(const GradedGroup& g) {
  if (g.summands.empty()) return "0";
  std::map<Int, int> counts;
  for (const auto& s : g.summands) counts[s.order]++;
  std::ostringstream os;
  bool first = true;
  for (const auto& [order, count] : counts) {
    if (!first) os << " + ";
    os << (order == 0 ? std::string("Z") : "Z/" + order.str());
    if (count > 1) os << "^" << count;
    first = false;
  }
  return os.str();
}

std::string render_motivic_grid(const AdditiveChart& chart) {
  // gather cells keyed by (rank, weight)
  struct Cell {
    std::map<Int, int> counts;
    bool unsupported = false;
  };
  std::map<std::pair<int64_t, int64_t>, Cell> cells;
  int64_t cmin = 0, cmax = 0, rmin = 0, rmax = 0;
  bool any = false;
  for (const auto& [deg, entry] : chart.entries) {
    int64_t col = deg.rank(), row = deg.nontrivial_weight();
    Cell& cell = cells[{col, row}];
    if (!entry.supported) cell.unsupported = true;
    for (const auto& s : entry.summands) cell.counts[s.order]++;
    if (!entry.summands.empty() || !entry.supported) {
      if (!any) {
        cmin = cmax = col;
        rmin = rmax = row;
        any = true;
      }
      cmin = std::min(cmin, col);
      cmax = std::max(cmax, col);
      rmin = std::min(rmin, row);
      rmax = std::max(rmax, row);
    }
  }
  std::ostringstream os;
  os << "motivic grid for " << chart.group << ", ";
  if (chart.rep.rfind("S(", 0) == 0 || chart.rep == "point")
    os << chart.rep << "\n";
  else
    os << "OC_" << chart.k << "(" << chart.rep << ")\n";
  os << "columns: rank; rows: weight of the nontrivial part; legend: Z=■ Z/2=• Z/3=▲ Z/4=⊙\n";
  if (!any) {
    os << "(empty window)\n";
    return os.str();
  }
  const int width = 12;
  auto pad = [&](std::string s) {
    // count display width naively by code points
    size_t glyphs = 0;
    for (size_t i = 0; i < s.size();) {
      unsigned char c = s[i];
      i += (c >= 0xF0) ? 4 : (c >= 0xE0) ? 3 : (c >= 0xC0) ? 2 : 1;
      ++glyphs;
    }
    while (glyphs < static_cast<size_t>(width)) {
      s += ' ';
      ++glyphs;
    }
    return s;
  };
  for (int64_t row = rmax; row >= rmin; --row) {
    std::ostringstream line;
    line << (row >= 0 ? " " : "") << row << " | ";
    for (int64_t col = cmin; col <= cmax; ++col) {
      auto it = cells.find({col, row});
      std::string cell;
      if (it != cells.end()) {
        if (it->second.unsupported) cell = "?";
        for (const auto& [order, count] : it->second.counts) {
          if (!cell.empty() && cell != "?") cell += " ";
          cell += order_glyph(order);
          if (count > 1) cell += "x" + std::to_string(count);
        }
      }
      if (cell.empty()) cell = ".";
      line << pad(cell);
    }
    os << line.str() << "\n";
  }
  std::ostringstream axis;
  axis << "     ";
  for (int64_t col = cmin; col <= cmax; ++col) axis << pad(std::to_string(col));
  os << axis.str() << "\n";
  return os.str();
}

}  // namespace ocb
