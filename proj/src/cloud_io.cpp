#include "mtopdiv/cloud_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "mtopdiv/errors.hpp"

namespace mtd {

namespace {

constexpr char kMagic[4] = {'M', 'T', 'D', 'B'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeaderSize = 4 + 1 + 4 + 4;

std::string location(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Parses one CSV row; on failure reports the 1-based column of the bad field.
bool parse_row(std::string_view line, std::vector<double>& out, std::size_t& bad_column) {
    out.clear();
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        const std::string_view field = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        double value = 0.0;
        const char* first = field.data();
        const char* last = field.data() + field.size();
        if (!field.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
            bad_column = start + 1;
            return false;
        }
        out.push_back(value);
        if (comma == std::string_view::npos) return true;
        start = comma + 1;
    }
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xFFU));
}

std::uint32_t get_u32(std::string_view bytes, std::size_t offset) {
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[offset + b])) << (8 * b);
    return v;
}

}  // namespace

CloudFormat parse_cloud_format(const std::string& text) {
    if (text == "csv") return CloudFormat::csv;
    if (text == "mtdb") return CloudFormat::mtdb;
    throw InvalidInput("unknown cloud format '" + text + "' (expected csv or mtdb)");
}

CloudFormat format_from_path(const std::filesystem::path& path) {
    return path.extension() == ".mtdb" ? CloudFormat::mtdb : CloudFormat::csv;
}

PointCloud parse_csv(std::string_view text) {
    std::vector<double> coords;
    std::vector<double> row;
    std::size_t dim = 0;
    std::size_t n = 0;
    std::size_t line_no = 0;
    bool first_content_line = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        ++line_no;
        if (trim(line).empty()) continue;
        std::size_t bad_column = 0;
        const bool ok = parse_row(line, row, bad_column);
        if (!ok) {
            if (first_content_line) {
                first_content_line = false;
                continue;
            }
            throw ParseError("csv: invalid number at " + location(line_no, bad_column));
        }
        first_content_line = false;
        if (dim == 0) {
            dim = row.size();
        } else if (row.size() != dim) {
            throw ParseError("csv: expected " + std::to_string(dim) + " values, found " + std::to_string(row.size()) +
                             " at " + location(line_no, 1));
        }
        coords.insert(coords.end(), row.begin(), row.end());
        ++n;
    }
    if (n == 0) return PointCloud(1);
    return PointCloud(n, dim, std::move(coords));
}

PointCloud parse_mtdb(std::string_view bytes) {
    if (bytes.size() < kHeaderSize) throw ParseError("mtdb: truncated header (" + std::to_string(bytes.size()) + " bytes)");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw ParseError("mtdb: bad magic at offset 0");
    if (static_cast<std::uint8_t>(bytes[4]) != kVersion) {
        throw ParseError("mtdb: unsupported version " + std::to_string(static_cast<unsigned char>(bytes[4])) +
                         " at offset 4");
    }
    const std::uint64_t n = get_u32(bytes, 5);
    const std::uint64_t dim = get_u32(bytes, 9);
    if (dim == 0) throw ParseError("mtdb: zero dimension at offset 9");
    const std::uint64_t payload_values = (bytes.size() - kHeaderSize) / 8;
    if (n != 0 && dim > payload_values / n) {
        throw ParseError("mtdb: truncated payload, header declares " + std::to_string(n) + " x " + std::to_string(dim) +
                         " values, file holds " + std::to_string(payload_values));
    }
    const std::uint64_t expected = kHeaderSize + n * dim * 8;
    if (bytes.size() < expected) {
        throw ParseError("mtdb: truncated payload, expected " + std::to_string(expected) + " bytes, found " +
                         std::to_string(bytes.size()));
    }
    if (bytes.size() > expected) throw ParseError("mtdb: trailing bytes after offset " + std::to_string(expected));
    std::vector<double> coords(n * dim);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) {
            bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[kHeaderSize + 8 * i + b])) << (8 * b);
        }
        coords[i] = std::bit_cast<double>(bits);
        if (!std::isfinite(coords[i])) {
            throw ParseError("mtdb: non-finite value at offset " + std::to_string(kHeaderSize + 8 * i));
        }
    }
    return PointCloud(n, dim, std::move(coords));
}

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_csv(const PointCloud& cloud) {
    std::string out;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto row = cloud.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += format_number(row[k]);
        }
        out += '\n';
    }
    return out;
}

std::string format_mtdb(const PointCloud& cloud) {
    std::string out(kMagic, 4);
    out.push_back(static_cast<char>(kVersion));
    put_u32(out, static_cast<std::uint32_t>(cloud.size()));
    put_u32(out, static_cast<std::uint32_t>(cloud.dim()));
    for (double v : cloud.coords()) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFFU));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

PointCloud load_cloud(const std::filesystem::path& path, CloudFormat format) {
    const std::string content = read_file(path);
    try {
        return format == CloudFormat::csv ? parse_csv(content) : parse_mtdb(content);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const InvalidInput& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format) {
    write_file(path, format == CloudFormat::csv ? format_csv(cloud) : format_mtdb(cloud));
}

}  // namespace mtd
