#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ambiarray/errors.hpp"

namespace ambiarray {

using cdouble = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kFourPi = 4.0 * kPi;
inline constexpr double kSoundSpeed = 343.0;  // m/s, dry air at ~20 C

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

// A direction on the unit sphere. theta is the colatitude measured from +z
// (up), phi the azimuth measured counterclockwise from +x (front), so +y is
// phi = +pi/2 (left).
struct Direction {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // (-pi, pi]

    static Direction from_degrees(double theta_deg, double phi_deg) {
        return normalized(deg2rad(theta_deg), deg2rad(phi_deg));
    }

    static Direction normalized(double theta, double phi) {
        if (!(std::isfinite(theta) && std::isfinite(phi)))
            throw DomainError("direction angles must be finite");
        theta = wrap_angle(theta);
        if (theta < 0.0) {  // (theta, phi) and (-theta, phi+pi) are the same point
            theta = -theta;
            phi += kPi;
        }
        return Direction{theta, wrap_angle(phi)};
    }

    Vector3d unit() const {
        const double st = std::sin(theta);
        return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    }

    static Direction from_unit(const Vector3d& v) {
        const double n = v.norm();
        if (n < 1e-300) throw DomainError("cannot take direction of zero vector");
        const double z = std::clamp(v.z() / n, -1.0, 1.0);
        return Direction{std::acos(z), std::atan2(v.y(), v.x())};
    }
};

// Quadrature grid on the sphere. Weights are in steradians and sum to 4*pi
// for proper quadrature rules; uniform test grids may carry equal weights.
struct DirectionGrid {
    std::string name;
    std::vector<Direction> directions;
    VectorXd weights;

    int size() const { return static_cast<int>(directions.size()); }

    void validate() const {
        if (directions.empty()) throw DimensionError("grid has no directions");
        if (weights.size() != static_cast<Eigen::Index>(directions.size()))
            throw DimensionError("grid weight count does not match direction count");
        double sum = 0.0;
        for (Eigen::Index i = 0; i < weights.size(); ++i) {
            if (!(weights[i] > 0.0)) throw DomainError("grid weights must be positive");
            sum += weights[i];
        }
        if (std::abs(sum - kFourPi) > 1e-6 * kFourPi)
            throw DomainError("grid weights must sum to 4*pi, got " + std::to_string(sum));
    }
};

// Uniform DFT bin layout for a real signal: bins 0..nfft/2 at fs/nfft spacing.
struct FrequencyGrid {
    double sample_rate = 48000.0;
    int nfft = 1024;

    void validate() const {
        if (sample_rate <= 0.0) throw DomainError("sample rate must be positive");
        if (nfft < 2 || (nfft % 2) != 0) throw DomainError("nfft must be even and >= 2");
    }

    int bin_count() const { return nfft / 2 + 1; }
    double bin_hz(int j) const { return j * sample_rate / nfft; }
    double nyquist() const { return sample_rate / 2.0; }

    std::vector<double> bins() const {
        std::vector<double> f(bin_count());
        for (int j = 0; j < bin_count(); ++j) f[j] = bin_hz(j);
        return f;
    }

    bool operator==(const FrequencyGrid& o) const {
        return sample_rate == o.sample_rate && nfft == o.nfft;
    }
};

}  // namespace ambiarray
