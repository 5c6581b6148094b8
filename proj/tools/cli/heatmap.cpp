#include "heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "input.hpp"
#include "spinelab/parallel.hpp"
#include "spinelab/spines.hpp"

namespace spinelab::cli {

namespace {

// Categorical colors indexed by spine count; counts past the end reuse the
// last entry.
constexpr const char* kCountPalette[] = {
    "#ffffff", "#f0f0f0", "#d9d9d9", "#bdbdbd", "#969696", "#737373", "#525252",
    "#3b6ea5", "#5e9c4a", "#c9822b", "#a23b3b", "#6a4c93", "#252525",
};
constexpr int kPaletteSize = static_cast<int>(sizeof kCountPalette / sizeof *kCountPalette);

struct Rgb {
  double r, g, b;
};

// Sequential ramp for the systole, light (short spines) to dark.
constexpr Rgb kRamp[] = {{255, 255, 229}, {217, 240, 163}, {120, 198, 121}, {35, 132, 67}, {0, 69, 41}};
constexpr int kRampSize = static_cast<int>(sizeof kRamp / sizeof *kRamp);

constexpr double kPlotLeft = 60.0;
constexpr double kPlotTop = 30.0;
constexpr double kPlotWidth = 400.0;
constexpr double kPlotHeight = 800.0;
constexpr double kLegendLeft = kPlotLeft + kPlotWidth + 30.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string hex_color(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(c.r)),
                static_cast<int>(std::lround(c.g)), static_cast<int>(std::lround(c.b)));
  return buf;
}

std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0) * (kRampSize - 1);
  const int i = std::min(static_cast<int>(t), kRampSize - 2);
  const double f = t - i;
  const Rgb& a = kRamp[i];
  const Rgb& b = kRamp[i + 1];
  return hex_color({a.r + f * (b.r - a.r), a.g + f * (b.g - a.g), a.b + f * (b.b - a.b)});
}

std::string count_color(double v) {
  const int idx = std::clamp(static_cast<int>(v), 0, kPaletteSize - 1);
  return kCountPalette[idx];
}

}  // namespace

void GridSpec::validate() const {
  if (cols < 2 || rows < 2) throw UsageError("heatmap grid needs at least 2 columns and 2 rows");
  if (!(im_min > 0.0)) throw UsageError("heatmap grid must stay in the upper half-plane");
  if (!(re_max > re_min) || !(im_max > im_min)) throw UsageError("heatmap grid range is empty");
}

double GridSpec::cell_re(int col) const { return re_min + (col + 0.5) * (re_max - re_min) / cols; }

double GridSpec::cell_im(int row) const { return im_max - (row + 0.5) * (im_max - im_min) / rows; }

Quantity parse_quantity(std::string_view name) {
  if (name == "count") return Quantity::Count;
  if (name == "count-no") return Quantity::CountUnoriented;
  if (name == "systole") return Quantity::Systole;
  throw UsageError("unknown quantity '" + std::string(name) + "' (count, count-no, systole)");
}

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::Count: return "count";
    case Quantity::CountUnoriented: return "count-no";
    case Quantity::Systole: return "systole";
  }
  return "count";
}

Heatmap evaluate_heatmap(const GridSpec& grid, Quantity quantity, unsigned threads) {
  grid.validate();
  Heatmap map{grid, quantity, std::vector<double>(static_cast<std::size_t>(grid.rows) * grid.cols)};
  parallel_for(
      map.values.size(),
      [&](std::size_t idx) {
        const int row = static_cast<int>(idx / grid.cols);
        const int col = static_cast<int>(idx % grid.cols);
        const UHPoint z(grid.cell_re(col), grid.cell_im(row));
        switch (quantity) {
          case Quantity::Count: map.values[idx] = static_cast<double>(count_oriented(z)); break;
          case Quantity::CountUnoriented:
            map.values[idx] = static_cast<double>(count_unoriented(z));
            break;
          case Quantity::Systole: map.values[idx] = spine_systole(z); break;
        }
      },
      threads);
  return map;
}

std::string heatmap_csv(const Heatmap& map) {
  std::ostringstream out;
  out << "row,col,re,im,value\n";
  for (int row = 0; row < map.grid.rows; ++row) {
    for (int col = 0; col < map.grid.cols; ++col) {
      out << row << ',' << col << ',' << format_number(map.grid.cell_re(col)) << ','
          << format_number(map.grid.cell_im(row)) << ',' << format_number(map.at(row, col)) << '\n';
    }
  }
  return out.str();
}

std::string heatmap_svg(const Heatmap& map) {
  const GridSpec& g = map.grid;
  const double cell_w = kPlotWidth / g.cols;
  const double cell_h = kPlotHeight / g.rows;
  auto x_of = [&](double re) { return kPlotLeft + (re - g.re_min) / (g.re_max - g.re_min) * kPlotWidth; };
  auto y_of = [&](double im) { return kPlotTop + (g.im_max - im) / (g.im_max - g.im_min) * kPlotHeight; };

  const bool is_count = map.quantity != Quantity::Systole;
  const auto [lo_it, hi_it] = std::minmax_element(map.values.begin(), map.values.end());
  const double lo = *lo_it, hi = *hi_it;
  auto color = [&](double v) {
    return is_count ? count_color(v) : ramp_color(hi > lo ? (v - lo) / (hi - lo) : 0.0);
  };

  const double width = kLegendLeft + 140.0;
  const double height = kPlotTop + kPlotHeight + 50.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width)
      << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<title>" << to_string(map.quantity) << " over [" << format_number(g.re_min) << ", "
      << format_number(g.re_max) << "] x [" << format_number(g.im_min) << ", "
      << format_number(g.im_max) << "]</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" fill=\"#ffffff\"/>\n";

  out << "<g shape-rendering=\"crispEdges\">\n";
  for (int row = 0; row < g.rows; ++row) {
    for (int col = 0; col < g.cols; ++col) {
      out << "<rect x=\"" << fixed(kPlotLeft + col * cell_w) << "\" y=\"" << fixed(kPlotTop + row * cell_h)
          << "\" width=\"" << fixed(cell_w) << "\" height=\"" << fixed(cell_h) << "\" fill=\""
          << color(map.at(row, col)) << "\"/>\n";
    }
  }
  out << "</g>\n";

  // Fundamental domain |z| >= 1, |Re z| <= 1/2, clipped to the plot.
  out << "<clipPath id=\"plot\"><rect x=\"" << fixed(kPlotLeft) << "\" y=\"" << fixed(kPlotTop)
      << "\" width=\"" << fixed(kPlotWidth) << "\" height=\"" << fixed(kPlotHeight) << "\"/></clipPath>\n";
  out << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" points=\"";
  out << fixed(x_of(-0.5)) << ',' << fixed(y_of(g.im_max));
  constexpr int kArcSamples = 60;
  for (int k = 0; k <= kArcSamples; ++k) {
    const double theta = (2.0 / 3.0 - (1.0 / 3.0) * k / kArcSamples) * 3.14159265358979323846;
    out << ' ' << fixed(x_of(std::cos(theta))) << ',' << fixed(y_of(std::sin(theta)));
  }
  out << ' ' << fixed(x_of(0.5)) << ',' << fixed(y_of(g.im_max)) << "\"/>\n";

  // Axes and ticks.
  out << "<rect x=\"" << fixed(kPlotLeft) << "\" y=\"" << fixed(kPlotTop) << "\" width=\"" << fixed(kPlotWidth)
      << "\" height=\"" << fixed(kPlotHeight) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  const double re_step = (g.re_max - g.re_min) > 2.0 ? 1.0 : 0.25;
  for (double t = std::ceil(g.re_min / re_step) * re_step; t <= g.re_max + 1e-12; t += re_step) {
    const double x = x_of(t);
    const double y = kPlotTop + kPlotHeight;
    out << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x) << "\" y2=\""
        << fixed(y + 5) << "\" stroke=\"#000000\"/>\n"
        << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y + 18) << "\" text-anchor=\"middle\">"
        << format_number(std::abs(t) < 1e-12 ? 0.0 : t) << "</text>\n";
  }
  const double im_step = (g.im_max - g.im_min) > 3.0 ? 1.0 : 0.25;
  for (double t = std::ceil(g.im_min / im_step) * im_step; t <= g.im_max + 1e-12; t += im_step) {
    const double y = y_of(t);
    out << "<line x1=\"" << fixed(kPlotLeft - 5) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(kPlotLeft)
        << "\" y2=\"" << fixed(y) << "\" stroke=\"#000000\"/>\n"
        << "<text x=\"" << fixed(kPlotLeft - 8) << "\" y=\"" << fixed(y + 4) << "\" text-anchor=\"end\">"
        << format_number(t) << "</text>\n";
  }
  out << "<text x=\"" << fixed(kPlotLeft + kPlotWidth / 2) << "\" y=\"" << fixed(height - 8)
      << "\" text-anchor=\"middle\">Re z</text>\n"
      << "<text x=\"14\" y=\"" << fixed(kPlotTop + kPlotHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << fixed(kPlotTop + kPlotHeight / 2) << ")\">Im z</text>\n";

  // Legend.
  out << "<text x=\"" << fixed(kLegendLeft) << "\" y=\"" << fixed(kPlotTop) << "\">" << to_string(map.quantity)
      << "</text>\n";
  if (is_count) {
    const std::set<int> present(map.values.begin(), map.values.end());
    double y = kPlotTop + 12;
    for (int v : present) {
      out << "<rect x=\"" << fixed(kLegendLeft) << "\" y=\"" << fixed(y) << "\" width=\"14\" height=\"14\" fill=\""
          << count_color(v) << "\" stroke=\"#000000\"/>\n"
          << "<text x=\"" << fixed(kLegendLeft + 20) << "\" y=\"" << fixed(y + 11) << "\">" << v << "</text>\n";
      y += 20;
    }
  } else {
    constexpr int kSteps = 10;
    for (int k = 0; k <= kSteps; ++k) {
      const double t = static_cast<double>(k) / kSteps;
      const double y = kPlotTop + 12 + k * 20.0;
      out << "<rect x=\"" << fixed(kLegendLeft) << "\" y=\"" << fixed(y) << "\" width=\"14\" height=\"20\" fill=\""
          << ramp_color(t) << "\"/>\n"
          << "<text x=\"" << fixed(kLegendLeft + 20) << "\" y=\"" << fixed(y + 14) << "\">"
          << fixed(lo + t * (hi - lo)) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace spinelab::cli
