#include "jd/output.hpp"

#include <charconv>
#include <sstream>
#include <system_error>

#include "jd/errors.hpp"

namespace jd {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  if (res.ec != std::errc{}) throw Error("format_number failed");
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size()) {
  row(header);
}

void CsvWriter::row(std::span<const std::string> cells) {
  if (cells.size() != columns_) throw Error("CSV row width does not match the header");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::string& label, std::span<const double> numbers) {
  std::vector<std::string> cells;
  cells.reserve(numbers.size() + 1);
  cells.push_back(label);
  for (double v : numbers) cells.push_back(format_number(v));
  row(cells);
}

void CsvWriter::row(std::span<const double> numbers) {
  std::vector<std::string> cells;
  cells.reserve(numbers.size());
  for (double v : numbers) cells.push_back(format_number(v));
  row(cells);
}

std::string gnuplot_script(std::span<const PlotPanel> panels) {
  std::ostringstream gp;
  gp << "# generated by jdisc\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set terminal pngcairo size 800,600\n";
  for (const PlotPanel& p : panels) {
    std::string png = p.csv_path;
    if (const auto dot = png.rfind(".csv"); dot != std::string::npos) png.erase(dot);
    png += p.surface ? ".png" : "_" + std::to_string(p.y_column) + ".png";
    gp << "\nset output '" << png << "'\n"
       << "set title '" << p.title << "'\n"
       << "set xlabel '" << p.x_label << "'\n"
       << "set ylabel '" << p.y_label << "'\n";
    if (p.surface) {
      // Long-format grid without blank separator lines, so `image` rather than pm3d.
      gp << "plot '" << p.csv_path << "' using " << p.x_column << ':' << p.y_column << ':'
         << p.z_column << " with image notitle\n";
      continue;
    }
    if (p.series.empty()) {
      gp << "plot '" << p.csv_path << "' using " << p.x_column << ':' << p.y_column
         << " with lines notitle\n";
      continue;
    }
    gp << "plot";
    for (size_t i = 0; i < p.series.size(); ++i) {
      gp << (i ? ", \\\n    " : " ") << '\'' << p.csv_path << "' using " << p.x_column
         << ":(strcol(1) eq '" << p.series[i] << "' ? $" << p.y_column
         << " : NaN) with lines title '" << p.series[i] << '\'';
    }
    gp << '\n';
  }
  return gp.str();
}

}  // namespace jd
