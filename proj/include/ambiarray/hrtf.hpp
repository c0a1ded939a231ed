#pragma once

#include <filesystem>
#include <functional>

#include "ambiarray/encoder.hpp"
#include "ambiarray/grids.hpp"

namespace ambiarray {

// Reference HRTF sampled on a sphere grid, one row per direction.
struct HrtfSet {
    std::string name;
    DirectionGrid grid;
    FrequencyGrid freqs;
    MatrixXcd left, right;  // Q x bin_count

    void validate() const;
};

// HRTF evaluated at arbitrary directions, used for rotated references and
// azimuth sweeps. at(dir) returns per-bin (left, right) spectra.
struct HrtfSource {
    std::string name;
    FrequencyGrid freqs;
    std::function<std::pair<VectorXcd, VectorXcd>(const Direction&)> at;
};

// Rigid-sphere head model with pressure ears on the surface. Defaults: radius
// 0.0875 m, ears on the horizontal plane at azimuth +90 (left) and -90 deg.
HrtfSource analytic_sphere_hrtf(const FrequencyGrid& freqs, double head_radius = 0.0875,
                                Direction left_ear = Direction{kPi / 2, kPi / 2},
                                Direction right_ear = Direction{kPi / 2, -kPi / 2});

// Order-limited interpolant of a sampled set (weighted least squares fit,
// then pointwise SH synthesis).
HrtfSource sh_interp_hrtf(const HrtfSet& set, int order);

HrtfSet sample_hrtf(const HrtfSource& source, const DirectionGrid& grid);

// SH-domain HRTF coefficients, ACN rows, one column per bin.
struct HrtfSh {
    int order = 0;
    std::string variant;  // "ls", "magls", "aa_ls", "aa_magls", "crossfaded"
    FrequencyGrid freqs;
    MatrixXcd left, right;  // (order+1)^2 x bin_count
    std::vector<int> nonconverged_left, nonconverged_right;  // bins that hit max_iterations

    void validate() const;
};

// Linear low/high blend with alpha(f) ramping from 0 to 1 between f_min and f_max.
struct CrossfadeSpec {
    double f_min = 800.0;
    double f_max = 1300.0;

    double alpha(double f) const;
    void validate(double nyquist) const;
};

// Stopping rule for the alternating magnitude solver: quit after
// max_iterations or once the relative objective change drops below rel_tol.
struct IterOptions {
    int max_iterations = 50;
    double rel_tol = 1e-8;
};

// Weighted least squares projection onto SH up to `order` using the grid
// quadrature weights. Throws NumericalError if the grid cannot resolve the order.
HrtfSh ls_encode(const HrtfSet& set, int order);

// Magnitude least squares: below the fade-in the ls_encode solution passes
// through unchanged; from the first nonzero-alpha bin upward the magnitude
// objective || |Y h| - |h_ref| ||^2 is minimized by alternating projection,
// with phases carried across bins for inter-frequency consistency (the first
// refined bin is seeded from its LS solution).
HrtfSh magls_encode(const HrtfSet& set, int order, const CrossfadeSpec& fade,
                    const IterOptions& opts = {});

// Array-aware complex objective, solved in closed form at every bin:
//   min_h  || G h - h_ref ||^2 + (1/snr_ratio) || B h ||^2
// with G = V^T conj(C~) the rendered response of the encode-then-decode chain
// on the grid and B = conj(C~) the noise path. snr_ratio <= 0 means reuse the
// ratio stored in the filter.
HrtfSh aa_ls_encode(const HrtfSet& set, const EncodingFilter& filter,
                    const std::vector<SteeringMatrix>& steering, double snr_ratio = 0.0);

// Array-aware magnitude objective above the fade-in, the complex aa_ls_encode
// solution below:
//   min_h  || |G h| - |h_ref| ||^2 + (1/snr_ratio) || B h ||^2
HrtfSh aa_magls_encode(const HrtfSet& set, const EncodingFilter& filter,
                       const std::vector<SteeringMatrix>& steering, const CrossfadeSpec& fade,
                       double snr_ratio = 0.0, const IterOptions& opts = {});

// Per-bin blend (1 - alpha) * low + alpha * high.
HrtfSh crossfade(const HrtfSh& low, const HrtfSh& high, const CrossfadeSpec& fade);

// Single-bin magnitude solver, exposed for convergence tests. Minimizes
//   sig2 * || |G h| - target_mag ||^2 + noise2 * || B h ||^2
// starting from phases `phase0` on the reconstruction G h. If `objective` is
// non-null the objective value after each iteration is appended.
VectorXcd magls_solve_bin(const MatrixXcd& g, const MatrixXcd& b, const VectorXd& target_mag,
                          const VectorXd& phase0, double sig2, double noise2,
                          const IterOptions& opts, bool* converged = nullptr,
                          std::vector<double>* objective = nullptr);

// Interchange directory: manifest.json + grid.csv + per-ear raw complex128
// little-endian files, bin major (all directions of bin 0, then bin 1, ...).
void write_hrtf_set(const std::filesystem::path& dir, const HrtfSet& set);
HrtfSet read_hrtf_set(const std::filesystem::path& dir);

// Container I/O for SH-domain coefficients.
void write_hrtf_sh(const std::filesystem::path& path, const HrtfSh& h);
HrtfSh read_hrtf_sh(const std::filesystem::path& path);

}  // namespace ambiarray
