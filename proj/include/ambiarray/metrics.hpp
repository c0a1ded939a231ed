#pragma once

#include <filesystem>
#include <functional>

#include "ambiarray/hrtf.hpp"

namespace ambiarray {

// Fraction of a target pattern y outside the row space of the steering
// matrix, in dB: 10*log10( ||(I - P)y||^2 / ||y||^2 ). Singular directions
// with sigma <= svd_rel_tol * sigma_max count as null space. Clamped at
// -300 dB so perfectly representable patterns stay finite.
double nullspace_ratio_db(const MatrixXcd& v, const VectorXcd& y, double svd_rel_tol = 1e-3);

struct NullspaceReport {
    int order = 0;
    double svd_rel_tol = 1e-3;
    std::vector<double> freqs;
    std::vector<std::pair<int, int>> channels;  // (n, m) per column
    MatrixXd xi_db;                             // bin_count x channel_count
};

NullspaceReport nullspace_report(const std::vector<SteeringMatrix>& steering,
                                 const DirectionGrid& grid, int order,
                                 double svd_rel_tol = 1e-3);

struct MagnitudeReport {
    int order = 0;
    std::vector<double> freqs;
    std::vector<std::pair<int, int>> channels;
    MatrixXd xi_mag_db;    // encoder response ||c_nm^H V||^2 per bin
    VectorXd xi_ideal_db;  // target ||y_nm||^2 per channel (frequency independent)
};

MagnitudeReport magnitude_report(const EncodingFilter& filter,
                                 const std::vector<SteeringMatrix>& steering,
                                 const DirectionGrid& grid);

// Binaural reproduction errors of an encode-then-render chain against a
// reference HRTF, per bin and ear, optionally under head rotation (the HRTF
// coefficients get the rotation operator, the reference is evaluated at the
// counter-rotated directions).
struct BinauralErrorReport {
    double rotation_phi = 0.0, rotation_theta = 0.0;  // radians
    std::vector<double> freqs, alpha;
    VectorXd eps_bin_left, eps_bin_right;    // complex error, relative
    VectorXd eps_mag_left, eps_mag_right;    // magnitude error, relative
    VectorXd eps_comb_left, eps_comb_right;  // (1-alpha)*bin + alpha*mag
};

BinauralErrorReport binaural_error_report(const HrtfSh& h, const EncodingFilter& filter,
                                          const std::vector<SteeringMatrix>& steering,
                                          const DirectionGrid& grid, const HrtfSource& reference,
                                          const CrossfadeSpec& fade, double rotation_phi = 0.0,
                                          double rotation_theta = 0.0);

// Same report against an arbitrary per-bin reproduction operator G (Q x
// channel count): row i of G * h is the rendered response toward grid
// direction i. The filter overload uses G = V^T conj(C~); ideal spherical
// harmonic playback corresponds to G = Y. The reference may point into
// caller-owned storage reused between bins.
using ReproductionOp = std::function<const MatrixXcd&(int bin)>;
BinauralErrorReport binaural_error_report(const HrtfSh& h, const ReproductionOp& reproduction,
                                          const DirectionGrid& grid, const HrtfSource& reference,
                                          const CrossfadeSpec& fade, double rotation_phi = 0.0,
                                          double rotation_theta = 0.0);

void write_nullspace_csv(const std::filesystem::path& path, const NullspaceReport& r);
void write_nullspace_json(const std::filesystem::path& path, const NullspaceReport& r);
void write_magnitude_csv(const std::filesystem::path& path, const MagnitudeReport& r);
void write_magnitude_json(const std::filesystem::path& path, const MagnitudeReport& r);
void write_binaural_error_csv(const std::filesystem::path& path, const BinauralErrorReport& r,
                              const std::string& method);
void write_binaural_error_json(const std::filesystem::path& path, const BinauralErrorReport& r,
                               const std::string& method);

}  // namespace ambiarray
