#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "dunkl/error.hpp"
#include "dunkl/grid.hpp"

namespace dunkl {

namespace {

bool parse_number(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::vector<CsvSample> read_csv_samples(std::istream& in) {
  std::vector<CsvSample> rows;
  std::string line;
  int number = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (view[view.find_first_not_of(" \t")] == '#') continue;

    const auto fields = split_fields(view);
    double x = 0.0, re = 0.0, im = 0.0;
    const bool numeric = (fields.size() == 2 || fields.size() == 3) && parse_number(fields[0], x) &&
                         parse_number(fields[1], re) && (fields.size() == 2 || parse_number(fields[2], im));
    if (!numeric) {
      if (first_content) {  // header row
        first_content = false;
        continue;
      }
      throw ParseError("expected 'x,value' or 'x,re,im'", number);
    }
    first_content = false;
    rows.push_back({x, {re, im}});
  }
  if (rows.empty()) throw ParseError("CSV contains no samples", number);
  return rows;
}

GridFunction interpolate_onto(const std::vector<CsvSample>& samples, const GridPtr& grid) {
  if (samples.empty()) throw ParseError("CSV contains no samples", 0);
  std::vector<CsvSample> sorted = samples;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CsvSample& a, const CsvSample& b) { return a.x < b.x; });

  std::vector<Complex> values(static_cast<std::size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j) {
    const double x = grid->node(j);
    if (x < sorted.front().x || x > sorted.back().x) continue;
    auto hi = std::lower_bound(sorted.begin(), sorted.end(), x,
                               [](const CsvSample& s, double v) { return s.x < v; });
    if (hi->x == x) {
      values[static_cast<std::size_t>(j)] = hi->value;
      continue;
    }
    auto lo = hi - 1;
    const double t = (x - lo->x) / (hi->x - lo->x);
    values[static_cast<std::size_t>(j)] = (1.0 - t) * lo->value + t * hi->value;
  }
  return GridFunction(grid, std::move(values));
}

GridFunction read_csv(std::istream& in, const GridPtr& grid) { return interpolate_onto(read_csv_samples(in), grid); }

void write_csv(std::ostream& out, const GridFunction& f) {
  const bool real = f.max_imag() == 0.0;
  char buf[128];
  for (int j = 0; j < f.size(); ++j) {
    const Complex v = f[j];
    if (real)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", f.grid().node(j), v.real());
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", f.grid().node(j), v.real(), v.imag());
    out << buf;
  }
}

}  // namespace dunkl
