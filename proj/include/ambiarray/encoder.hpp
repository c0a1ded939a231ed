#pragma once

#include <filesystem>

#include "ambiarray/steering.hpp"

namespace ambiarray {

// Microphone signals in the frequency domain, one column per rfft bin.
struct MicSpectra {
    FrequencyGrid freqs;
    MatrixXcd bins;  // mic_count x bin_count

    void validate() const;
};

// Spherical harmonic domain signal, ACN channel rows, one column per bin.
// tilde marks the (-1)^m, m -> -m reindexed form used for binaural rendering.
struct ShSignal {
    int order = 0;
    bool tilde = false;
    FrequencyGrid freqs;
    MatrixXcd coeffs;  // (order+1)^2 x bin_count

    void validate() const;
};

// Per-bin encoding matrices C (mic_count x (order+1)^2). Coefficients are
// recovered as a_hat = C^H x. Designed once per array and reused.
struct EncodingFilter {
    int order = 0;
    double snr_ratio = 1000.0;  // signal to noise variance ratio used in the design
    bool tilde = false;
    std::string grid_name;
    FrequencyGrid freqs;
    std::vector<MatrixXcd> bins;

    int mic_count() const { return bins.empty() ? 0 : (int)bins.front().rows(); }
    void validate() const;
};

// Signal-matching design: per bin, C = (V V^H + I/snr_ratio)^-1 V Y, the MMSE
// encoder for a diffuse ensemble on the grid plus uncorrelated sensor noise.
// The fit sums plainly over the grid directions; `weighted` opts in to the
// grid quadrature weights instead, C = (V W V^H + I/snr_ratio)^-1 V W Y.
EncodingFilter asm_filter(const std::vector<SteeringMatrix>& steering, const DirectionGrid& grid,
                          int order, double snr_ratio, const FrequencyGrid& freqs,
                          bool weighted = false);

// a_hat = C^H x per bin.
VectorXcd encode_bin(const MatrixXcd& filter_bin, const VectorXcd& mic_bin);
ShSignal encode(const EncodingFilter& filter, const MicSpectra& mics);

// Reindex map a~_nm = (-1)^m a_{n,-m}; an involution. For filters the map is
// applied to the coefficient columns, and the tilde flag flips.
MatrixXcd tilde_reindex_rows(const MatrixXcd& coeffs, int order);
ShSignal tilde_reindex(const ShSignal& a);
EncodingFilter tilde_reindex(const EncodingFilter& filter);

// Container I/O (binary header + complex128 payload, bin major, row major
// inside each bin).
void write_filter(const std::filesystem::path& path, const EncodingFilter& f);
EncodingFilter read_filter(const std::filesystem::path& path);

}  // namespace ambiarray
