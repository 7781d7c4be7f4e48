#pragma once

#include <string>
#include <utility>
#include <vector>

namespace scfem {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (h, error), both > 0
};

// Small self-contained log-log SVG plot; cosmetic output only.
void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series);

}  // namespace scfem
