#pragma once

#include <string>
#include <variant>
#include <vector>

#include "figura/exact.hpp"

namespace figura::cli {

enum class Format { Text, Json, Csv };

// "text", "json", "csv"; throws InvalidArgument otherwise.
Format parse_format(const std::string& s);

using Cell = std::variant<Int, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// Text: space-aligned columns under the header. CSV: header line, then one
/// line per row, fields quoted when they contain a comma, quote or newline.
/// JSON: array of records keyed by the header, integers as numbers.
/// Throws std::logic_error when a row's width differs from the header's.
std::string emit_table(const Table& t, Format f);

}  // namespace figura::cli
