#pragma once

#include <filesystem>
#include <vector>

#include "ambiarray/types.hpp"

namespace ambiarray {

enum class WavFormat { pcm24, float32 };

struct WavData {
    double sample_rate = 48000.0;
    std::vector<std::vector<double>> channels;  // equal-length, samples in [-1, 1] nominal

    int frame_count() const { return channels.empty() ? 0 : (int)channels.front().size(); }
};

// Writes a RIFF/WAVE file. pcm24 clamps to full scale; the return value is
// the number of clamped samples (0 for float32).
long write_wav(const std::filesystem::path& path, const WavData& data, WavFormat format);

// Reads PCM16/PCM24/PCM32 and float32/float64 WAV files.
WavData read_wav(const std::filesystem::path& path);

}  // namespace ambiarray
