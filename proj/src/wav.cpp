#include "ambiarray/wav.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace ambiarray {

namespace {

void put_u16(std::string& s, uint16_t v) {
    s.push_back(char(v & 0xff));
    s.push_back(char(v >> 8));
}

void put_u32(std::string& s, uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}

uint32_t get_u32(const uint8_t* p) {
    return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 | uint32_t(p[3]) << 24;
}

uint16_t get_u16(const uint8_t* p) { return uint16_t(p[0]) | uint16_t(p[1]) << 8; }

}  // namespace

long write_wav(const std::filesystem::path& path, const WavData& data, WavFormat format) {
    if (data.channels.empty()) throw DomainError("wav needs at least one channel");
    const size_t frames = data.channels.front().size();
    for (const auto& c : data.channels)
        if (c.size() != frames) throw DimensionError("wav channels must have equal length");
    if (data.sample_rate <= 0) throw DomainError("wav sample rate must be positive");

    const int nch = (int)data.channels.size();
    const int bytes_per_sample = format == WavFormat::pcm24 ? 3 : 4;
    const int block_align = nch * bytes_per_sample;
    const uint32_t data_bytes = uint32_t(frames * block_align);
    const uint16_t fmt_code = format == WavFormat::pcm24 ? 1 : 3;
    const bool is_float = format == WavFormat::float32;

    std::string out;
    out.reserve(64 + data_bytes);
    out += "RIFF";
    put_u32(out, 4 + 24 + (is_float ? 12 : 0) + 8 + data_bytes);
    out += "WAVE";
    out += "fmt ";
    put_u32(out, 16);
    put_u16(out, fmt_code);
    put_u16(out, uint16_t(nch));
    put_u32(out, uint32_t(std::lround(data.sample_rate)));
    put_u32(out, uint32_t(std::lround(data.sample_rate)) * block_align);
    put_u16(out, uint16_t(block_align));
    put_u16(out, uint16_t(8 * bytes_per_sample));
    if (is_float) {  // fact chunk is required for non-PCM formats
        out += "fact";
        put_u32(out, 4);
        put_u32(out, uint32_t(frames));
    }
    out += "data";
    put_u32(out, data_bytes);

    long clipped = 0;
    for (size_t i = 0; i < frames; ++i) {
        for (int c = 0; c < nch; ++c) {
            const double v = data.channels[c][i];
            if (format == WavFormat::pcm24) {
                double scaled = std::nearbyint(v * 8388608.0);
                if (scaled > 8388607.0) {
                    scaled = 8388607.0;
                    ++clipped;
                } else if (scaled < -8388608.0) {
                    scaled = -8388608.0;
                    ++clipped;
                }
                const int32_t q = int32_t(scaled);
                out.push_back(char(q & 0xff));
                out.push_back(char((q >> 8) & 0xff));
                out.push_back(char((q >> 16) & 0xff));
            } else {
                const float f = float(v);
                uint32_t bits;
                std::memcpy(&bits, &f, 4);
                put_u32(out, bits);
            }
        }
    }

    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os.write(out.data(), std::streamsize(out.size()));
    if (!os) throw IoError("write failed for " + path.string());
    return clipped;
}

WavData read_wav(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path.string());
    std::vector<uint8_t> buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (buf.size() < 44 || std::memcmp(buf.data(), "RIFF", 4) || std::memcmp(buf.data() + 8, "WAVE", 4))
        throw IoError(path.string() + " is not a RIFF/WAVE file");

    uint16_t fmt_code = 0, nch = 0, bits = 0;
    uint32_t rate = 0;
    const uint8_t* data_ptr = nullptr;
    size_t data_len = 0;
    size_t pos = 12;
    while (pos + 8 <= buf.size()) {
        const uint32_t chunk_len = get_u32(buf.data() + pos + 4);
        const uint8_t* body = buf.data() + pos + 8;
        if (pos + 8 + chunk_len > buf.size()) throw IoError(path.string() + ": truncated chunk");
        if (!std::memcmp(buf.data() + pos, "fmt ", 4)) {
            if (chunk_len < 16) throw IoError(path.string() + ": short fmt chunk");
            fmt_code = get_u16(body);
            nch = get_u16(body + 2);
            rate = get_u32(body + 4);
            bits = get_u16(body + 14);
            if (fmt_code == 0xfffe) {  // extensible: actual code leads the GUID
                if (chunk_len < 40) throw IoError(path.string() + ": short extensible fmt");
                fmt_code = get_u16(body + 24);
            }
        } else if (!std::memcmp(buf.data() + pos, "data", 4)) {
            data_ptr = body;
            data_len = chunk_len;
        }
        pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word aligned
    }
    if (!nch || !rate) throw IoError(path.string() + ": missing fmt chunk");
    if (!data_ptr) throw IoError(path.string() + ": missing data chunk");

    const int bytes_per_sample = bits / 8;
    if (bits % 8 || bytes_per_sample < 2 || bytes_per_sample > 8)
        throw IoError(path.string() + ": unsupported bit depth " + std::to_string(bits));
    const size_t frames = data_len / (size_t(nch) * bytes_per_sample);

    WavData out;
    out.sample_rate = rate;
    out.channels.assign(nch, std::vector<double>(frames));
    const uint8_t* p = data_ptr;
    for (size_t i = 0; i < frames; ++i) {
        for (int c = 0; c < nch; ++c, p += bytes_per_sample) {
            double v;
            if (fmt_code == 1) {
                int64_t q = 0;
                for (int b = 0; b < bytes_per_sample; ++b) q |= int64_t(p[b]) << (8 * b);
                const int64_t signbit = int64_t(1) << (8 * bytes_per_sample - 1);
                if (q & signbit) q -= signbit << 1;
                v = double(q) / double(signbit);
            } else if (fmt_code == 3 && bytes_per_sample == 4) {
                float f;
                std::memcpy(&f, p, 4);
                v = f;
            } else if (fmt_code == 3 && bytes_per_sample == 8) {
                std::memcpy(&v, p, 8);
            } else {
                throw IoError(path.string() + ": unsupported format code " +
                              std::to_string(fmt_code));
            }
            out.channels[c][i] = v;
        }
    }
    return out;
}

}  // namespace ambiarray
