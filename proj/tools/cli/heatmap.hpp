#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spinelab::cli {

struct GridSpec {
  double re_min = -0.5;
  double re_max = 0.5;
  double im_min = 0.85;
  double im_max = 5.2;
  int cols = 100;
  int rows = 400;

  /// Throws UsageError on fewer than 2 cells per axis, an empty range, or
  /// im_min <= 0.
  void validate() const;
  /// Cell centers; row 0 is the top (largest Im) row.
  [[nodiscard]] double cell_re(int col) const;
  [[nodiscard]] double cell_im(int row) const;
};

enum class Quantity { Count, CountUnoriented, Systole };

Quantity parse_quantity(std::string_view name);
std::string_view to_string(Quantity q) noexcept;

struct Heatmap {
  GridSpec grid;
  Quantity quantity;
  std::vector<double> values;  // row-major

  [[nodiscard]] double at(int row, int col) const { return values[row * grid.cols + col]; }
};

Heatmap evaluate_heatmap(const GridSpec& grid, Quantity quantity, unsigned threads = 0);

/// Header "row,col,re,im,value".
std::string heatmap_csv(const Heatmap& map);
std::string heatmap_svg(const Heatmap& map);

}  // namespace spinelab::cli
