#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ambiarray/types.hpp"

namespace ambiarray {

using json = nlohmann::ordered_json;

// FNV-1a 64-bit content hash, as a 16-digit lowercase hex string.
uint64_t fnv1a64(const void* data, size_t len);
std::string fnv1a64_hex(const std::filesystem::path& file);

// Little-endian complex128 payload helpers (explicit byte order so the files
// are portable regardless of host endianness).
void append_complex_le(std::string& out, const cdouble* values, size_t count);
std::vector<cdouble> parse_complex_le(const uint8_t* data, size_t byte_len);

// Container file: 8-byte magic "AMBARR01", little-endian uint64 header
// length, UTF-8 JSON header, then a raw payload.
void write_container(const std::filesystem::path& path, const json& header,
                     const std::string& payload);
struct Container {
    json header;
    std::vector<uint8_t> payload;
};
Container read_container(const std::filesystem::path& path);

// JSON file helpers with uniform error reporting.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

// CSV writer with fixed formatting so reruns are byte identical. The first
// line is a "# schema=<name>/<version>" comment, then the header row.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& schema,
              const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);
    ~CsvWriter();

    static std::string format(double v);

private:
    std::ofstream out_;
    std::filesystem::path path_;
    size_t columns_;
};

}  // namespace ambiarray
