#pragma once

#include "ambiarray/hrtf.hpp"
#include "ambiarray/rotation.hpp"

namespace ambiarray {

// Ear signals in the frequency domain.
struct BinauralSpectra {
    FrequencyGrid freqs;
    VectorXcd left, right;  // bin_count each

    void validate() const;
};

// p = h^T a~ per bin and ear. The signal is reindexed to tilde form if it is
// not already; mismatched orders are truncated to the lower one.
BinauralSpectra render(const HrtfSh& hrtf, const ShSignal& signal);

// Ideal plane-wave Ambisonics signal: a_nm = conj(Y_nm(dir)) * spectrum(bin),
// in plain (non tilde) form.
ShSignal ideal_plane_wave_signal(const Direction& dir, int order, const FrequencyGrid& freqs,
                                 const VectorXcd& spectrum);

// Head rotation by yaw delta_phi then pitch delta_theta. HRTF coefficients
// get D; tilde-form signals get D^T (the counter rotation); plain signals get D.
HrtfSh rotate(const HrtfSh& h, double delta_phi, double delta_theta);
ShSignal rotate(const ShSignal& a, double delta_phi, double delta_theta);

// Time-domain stereo result of an inverse rfft.
struct StereoBuffer {
    double sample_rate = 48000.0;
    std::vector<double> left, right;
    long clipped_samples = 0;    // samples beyond +-1.0 (after normalization, if any)
    double imag_residue = 0.0;   // largest imaginary part discarded by the inverse transform
};

// Inverse transform both ears. normalize scales the pair so the joint peak
// sits at 0.999 when it would otherwise exceed it.
StereoBuffer to_time(const BinauralSpectra& spectra, bool normalize = false);

// Convolve a mono signal with the binaural pair interpreted as impulse
// responses of length nfft (overlap-add). Output length is input + nfft - 1.
StereoBuffer filter_audio(const std::vector<double>& mono, double sample_rate,
                          const BinauralSpectra& filter, bool normalize = false);

}  // namespace ambiarray
