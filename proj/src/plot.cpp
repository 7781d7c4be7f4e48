#include "scfem/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scfem/errors.hpp"

namespace scfem {

namespace {
constexpr int kWidth = 640, kHeight = 480;
constexpr int kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b"};
}  // namespace

void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series) {
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (x <= 0.0 || y <= 0.0) {
        throw InputError("write_loglog_svg: coordinates must be positive");
      }
      lo_x = std::min(lo_x, std::log10(x));
      hi_x = std::max(hi_x, std::log10(x));
      lo_y = std::min(lo_y, std::log10(y));
      hi_y = std::max(hi_y, std::log10(y));
    }
  }
  if (lo_x > hi_x) throw InputError("write_loglog_svg: no data");
  // Pad degenerate ranges so single points still map somewhere sensible.
  if (hi_x - lo_x < 0.1) { lo_x -= 0.5; hi_x += 0.5; }
  if (hi_y - lo_y < 0.1) { lo_y -= 0.5; hi_y += 0.5; }

  auto px = [&](double lx) {
    return kLeft + (lx - lo_x) / (hi_x - lo_x) * (kWidth - kLeft - kRight);
  };
  auto py = [&](double ly) {
    return kHeight - kBottom -
           (ly - lo_y) / (hi_y - lo_y) * (kHeight - kTop - kBottom);
  };

  std::ofstream out(path);
  if (!out) throw IoError("write_loglog_svg: cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // Decade grid lines with labels.
  for (int d = static_cast<int>(std::ceil(lo_x)); d <= std::floor(hi_x); ++d) {
    const double x = px(d);
    out << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x
        << "\" y2=\"" << kHeight - kBottom
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">1e" << d << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(lo_y)); d <= std::floor(hi_y); ++d) {
    const double y = py(d);
    out << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\""
        << kWidth - kRight << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">1e" << d << "</text>\n";
  }
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
      << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">h</text>\n";

  for (size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[s].points) {
      out << px(std::log10(x)) << "," << py(std::log10(y)) << " ";
    }
    out << "\"/>\n";
    for (const auto& [x, y] : series[s].points) {
      out << "<circle cx=\"" << px(std::log10(x)) << "\" cy=\""
          << py(std::log10(y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    out << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 16 + 16 * s
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
        << "\">" << series[s].label << "</text>\n";
  }
  out << "</svg>\n";
  if (!out.good()) throw IoError("write_loglog_svg: write failed for " + path);
}

}  // namespace scfem
