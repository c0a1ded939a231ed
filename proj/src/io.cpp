#include "ambiarray/io.hpp"

#include <cstdio>
#include <cstring>

namespace ambiarray {

namespace {

constexpr char kMagic[8] = {'A', 'M', 'B', 'A', 'R', 'R', '0', '1'};

void append_f64_le(std::string& out, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int i = 0; i < 8; ++i) out.push_back(char((bits >> (8 * i)) & 0xff));
}

double parse_f64_le(const uint8_t* p) {
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= uint64_t(p[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

uint64_t fnv1a64(const void* data, size_t len) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw IoError("cannot open " + file.string());
    uint64_t h = 0xcbf29ce484222325ull;
    char buf[65536];
    while (is.read(buf, sizeof buf) || is.gcount() > 0) {
        const std::streamsize got = is.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= uint8_t(buf[i]);
            h *= 0x100000001b3ull;
        }
        if (!is) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

void append_complex_le(std::string& out, const cdouble* values, size_t count) {
    out.reserve(out.size() + 16 * count);
    for (size_t i = 0; i < count; ++i) {
        append_f64_le(out, values[i].real());
        append_f64_le(out, values[i].imag());
    }
}

std::vector<cdouble> parse_complex_le(const uint8_t* data, size_t byte_len) {
    if (byte_len % 16) throw IoError("complex payload length not a multiple of 16");
    std::vector<cdouble> out(byte_len / 16);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = cdouble(parse_f64_le(data + 16 * i), parse_f64_le(data + 16 * i + 8));
    return out;
}

void write_container(const std::filesystem::path& path, const json& header,
                     const std::string& payload) {
    std::string head = header.dump();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os.write(kMagic, 8);
    std::string len;
    uint64_t n = head.size();
    for (int i = 0; i < 8; ++i) len.push_back(char((n >> (8 * i)) & 0xff));
    os.write(len.data(), 8);
    os.write(head.data(), std::streamsize(head.size()));
    os.write(payload.data(), std::streamsize(payload.size()));
    if (!os) throw IoError("write failed for " + path.string());
}

Container read_container(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path.string());
    std::vector<uint8_t> buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (buf.size() < 16 || std::memcmp(buf.data(), kMagic, 8))
        throw IoError(path.string() + " is not an ambiarray container");
    uint64_t hlen = 0;
    for (int i = 0; i < 8; ++i) hlen |= uint64_t(buf[8 + i]) << (8 * i);
    if (16 + hlen > buf.size()) throw IoError(path.string() + ": truncated header");
    Container c;
    try {
        c.header = json::parse(buf.begin() + 16, buf.begin() + 16 + ptrdiff_t(hlen));
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": bad container header: " + e.what());
    }
    c.payload.assign(buf.begin() + 16 + ptrdiff_t(hlen), buf.end());
    return c;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path.string());
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os << j.dump(2) << '\n';
    if (!os) throw IoError("write failed for " + path.string());
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& schema,
                     const std::vector<std::string>& columns)
    : out_(path), path_(path), columns_(columns.size()) {
    if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    out_ << "# schema=" << schema << '\n';
    for (size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
}

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw DimensionError("csv row width mismatch");
    for (size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format(values[i]);
    out_ << '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    if (values.size() != columns_) throw DimensionError("csv row width mismatch");
    for (size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << values[i];
    out_ << '\n';
}

CsvWriter::~CsvWriter() { out_.flush(); }

}  // namespace ambiarray
