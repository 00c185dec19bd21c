#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace jd {

/// Nine significant digits, '.' decimal point, no locale dependence.
std::string format_number(double value);

/// Comma-separated rows terminated by '\n'. Cells are written verbatim.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  void row(std::span<const std::string> cells);
  void row(const std::string& label, std::span<const double> numbers);
  void row(std::span<const double> numbers);

  size_t columns() const { return columns_; }

 private:
  std::ostream& out_;
  size_t columns_;
};

/// Description of one plotted panel for the generated gnuplot script.
struct PlotPanel {
  std::string csv_path;
  std::string title;
  std::string x_label;
  std::string y_label;
  int x_column = 2;  ///< 1-based, as gnuplot counts
  int y_column = 3;
  std::vector<std::string> series;  ///< labels in column 1; empty for a single unlabeled series
  bool surface = false;             ///< splot x, y, z with z in `y_column`
  int z_column = 0;
};

/// Plain gnuplot script rendering each panel to a PNG next to its CSV.
std::string gnuplot_script(std::span<const PlotPanel> panels);

}  // namespace jd
