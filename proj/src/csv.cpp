#include "atlaslearn/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

#include "atlaslearn/error.hpp"

namespace atlaslearn {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parse_number(std::string_view cell) {
    if (cell.empty()) return std::nullopt;
    if (cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::vector<double> values;
    std::size_t width = 0;
    std::size_t line_no = 0;
    bool first = true;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        std::vector<double> row;
        row.reserve(cells.size());
        std::optional<std::size_t> bad;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto v = parse_number(cells[c]);
            if (!v) {
                if (!bad) bad = c;
                continue;
            }
            row.push_back(*v);
        }
        if (first) {
            first = false;
            width = cells.size();
            if (bad) {
                for (const auto cell : cells) table.header.emplace_back(cell);
                continue;
            }
        }
        if (cells.size() != width) {
            throw ParseError("row has " + std::to_string(cells.size()) + " columns, expected " + std::to_string(width),
                             line_no);
        }
        if (bad) {
            throw ParseError("column " + std::to_string(*bad + 1) + " is not a number: '" +
                                 std::string(cells[*bad]) + "'",
                             line_no);
        }
        values.insert(values.end(), row.begin(), row.end());
    }
    if (values.empty()) throw ParseError("no data rows", line_no == 0 ? 1 : line_no);
    table.cloud = PointCloud(width, std::move(values));
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return read_csv(in);
}

PointCloud ingest_csv(const std::filesystem::path& path) { return read_csv(path).cloud; }

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    if (!header.empty()) out << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
        out << '\n';
    }
}

}  // namespace atlaslearn
