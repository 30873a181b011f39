#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "semreg/dataset.hpp"

namespace semreg {

struct CsvOptions {
  char delimiter = ',';
  /// First non-empty line holds column names.
  bool header = false;
  /// 0-based target column; nullopt selects the last column.
  std::optional<std::size_t> target_column;
};

/// Parses delimited numeric text: one pattern per line, LF or CRLF. Every
/// column other than the target becomes a variable, in file order. Throws
/// DataParseError on malformed or non-finite cells, EmptyDataset when there
/// are no data rows.
Dataset parse_dataset(std::string_view text, const CsvOptions& options = {});

/// parse_dataset on the contents of `path`. Throws Error if unreadable.
Dataset load_dataset(const std::filesystem::path& path, const CsvOptions& options = {});

/// Writes `data` as delimited text with a header row, target last.
std::string format_dataset(const Dataset& data, std::string_view target_name = "y",
                           char delimiter = ',');

}  // namespace semreg
