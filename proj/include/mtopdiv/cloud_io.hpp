#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mtopdiv/geometry.hpp"

namespace mtd {

enum class CloudFormat { csv, mtdb };

/// "csv" or "mtdb".
CloudFormat parse_cloud_format(const std::string& text);

/// Format from the file extension; CSV unless the extension is .mtdb.
CloudFormat format_from_path(const std::filesystem::path& path);

/// CSV: comma-separated decimals, one point per row. A first row that does not
/// parse as numbers is a header and is skipped. Blank lines are ignored.
PointCloud parse_csv(std::string_view text);

/// MTDB: "MTDB", version byte 0x01, u32 n, u32 D (little-endian), then n * D
/// little-endian IEEE-754 doubles in row-major order.
PointCloud parse_mtdb(std::string_view bytes);

std::string format_csv(const PointCloud& cloud);
std::string format_mtdb(const PointCloud& cloud);

/// Throws std::runtime_error (IO) or ParseError.
PointCloud load_cloud(const std::filesystem::path& path, CloudFormat format);
void save_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format);

/// Shortest-exact decimal with 17 significant digits; "inf" / "-inf" for
/// infinities.
std::string format_number(double value);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mtd
