#include "figura/cli/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace figura::cli {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw InvalidArgument("unknown output format '" + s + "' (expected text, json or csv)");
}

namespace {

std::string cell_text(const Cell& c) {
    return std::holds_alternative<Int>(c) ? std::to_string(std::get<Int>(c)) : std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit_table(const Table& t, Format f) {
    for (const auto& row : t.rows)
        if (row.size() != t.header.size()) throw std::logic_error("emit_table: ragged row");

    std::ostringstream os;
    switch (f) {
        case Format::Json: {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : t.rows) {
                nlohmann::ordered_json rec = nlohmann::ordered_json::object();
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (std::holds_alternative<Int>(row[c]))
                        rec[t.header[c]] = std::get<Int>(row[c]);
                    else
                        rec[t.header[c]] = std::get<std::string>(row[c]);
                }
                arr.push_back(std::move(rec));
            }
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << csv_field(t.header[c]);
            os << '\n';
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
                os << '\n';
            }
            break;
        }
        case Format::Text: {
            std::vector<std::size_t> width(t.header.size());
            for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
            for (const auto& row : t.rows)
                for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
            auto line = [&](const std::vector<std::string>& cells) {
                std::string s;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (c) s += "  ";
                    s += cells[c];
                    if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
                }
                os << s << '\n';
            };
            line(t.header);
            for (const auto& row : t.rows) {
                std::vector<std::string> cells;
                for (const auto& c : row) cells.push_back(cell_text(c));
                line(cells);
            }
            break;
        }
    }
    return os.str();
}

}  // namespace figura::cli
