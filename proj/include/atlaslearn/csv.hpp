#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

struct CsvTable {
    /// empty when the file has no header row
    std::vector<std::string> header;
    PointCloud cloud;
};

/// Comma-separated numeric rows, one point per row. A first row containing
/// any non-numeric cell is taken as a header. Blank lines are ignored.
/// Ragged rows, non-numeric cells and empty input raise ParseError carrying
/// the 1-based line number.
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

/// read_csv(path).cloud
PointCloud ingest_csv(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace atlaslearn
