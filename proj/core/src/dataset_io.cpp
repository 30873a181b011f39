#include "semreg/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "semreg/errors.hpp"
#include "semreg/expression_text.hpp"

namespace semreg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(delimiter, start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t column) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw DataParseError("non-numeric cell '" + std::string(cell) + "'", row, column);
  }
  if (!std::isfinite(value)) {
    throw DataParseError("non-finite cell '" + std::string(cell) + "'", row, column);
  }
  return value;
}

}  // namespace

Dataset parse_dataset(std::string_view text, const CsvOptions& options) {
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  std::size_t columns = 0;
  bool header_pending = options.header;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_number;
    if (line.empty()) continue;
    const auto cells = split(line, options.delimiter);
    if (columns == 0) {
      columns = cells.size();
      if (columns < 2) {
        throw DataParseError("need at least one variable and a target column", line_number, 1);
      }
    } else if (cells.size() != columns) {
      throw DataParseError("expected " + std::to_string(columns) + " cells, found " +
                               std::to_string(cells.size()),
                           line_number, std::min(cells.size(), columns) + 1);
    }
    if (header_pending) {
      header_pending = false;
      for (auto cell : cells) names.emplace_back(cell);
      continue;
    }
    std::vector<double> row(columns);
    for (std::size_t c = 0; c < columns; ++c) row[c] = parse_cell(cells[c], line_number, c + 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw EmptyDataset();

  const std::size_t target = options.target_column.value_or(columns - 1);
  if (target >= columns) {
    throw InvalidDataset("target column " + std::to_string(target) + " out of range for " +
                         std::to_string(columns) + " columns");
  }
  std::vector<std::vector<double>> variables(columns - 1,
                                             std::vector<double>(rows.size()));
  std::vector<double> targets(rows.size());
  std::vector<std::string> variable_names;
  for (std::size_t c = 0; c < columns; ++c) {
    if (c != target && !names.empty()) variable_names.push_back(names[c]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t v = 0;
    for (std::size_t c = 0; c < columns; ++c) {
      if (c == target) {
        targets[r] = rows[r][c];
      } else {
        variables[v++][r] = rows[r][c];
      }
    }
  }
  return Dataset(std::move(variables), std::move(targets), std::move(variable_names));
}

Dataset load_dataset(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dataset '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str(), options);
}

std::string format_dataset(const Dataset& data, std::string_view target_name, char delimiter) {
  std::string out;
  for (const auto& name : data.variable_names()) {
    out += name;
    out += delimiter;
  }
  out += target_name;
  out += '\n';
  for (std::size_t i = 0; i < data.num_patterns(); ++i) {
    for (std::size_t v = 0; v < data.num_variables(); ++v) {
      out += format_real(data.variable(v)[i]);
      out += delimiter;
    }
    out += format_real(data.targets()[i]);
    out += '\n';
  }
  return out;
}

}  // namespace semreg
