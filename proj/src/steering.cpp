#include "ambiarray/steering.hpp"

#include <cmath>

#include "ambiarray/radial.hpp"
#include "ambiarray/sh.hpp"

namespace ambiarray {

int default_truncation_order(double k_times_rmax) {
    if (k_times_rmax < 0.0 || !std::isfinite(k_times_rmax))
        throw DomainError("k*r must be finite and >= 0");
    return std::min(60, static_cast<int>(std::ceil(k_times_rmax)) + 10);
}

namespace {

MatrixXcd steering_entries(const ArrayGeometry& geom, const std::vector<Direction>& dirs,
                           double freq_hz, double sound_speed, int trunc) {
    geom.validate();
    if (freq_hz < 0.0 || !std::isfinite(freq_hz)) throw DomainError("frequency must be >= 0");
    if (!(sound_speed > 0.0)) throw DomainError("sound speed must be positive");
    const int nmic = geom.mic_count();
    const int nq = static_cast<int>(dirs.size());
    MatrixXcd v(nmic, nq);
    if (freq_hz == 0.0) {  // every mount reduces to unit pressure at DC
        v.setOnes();
        return v;
    }
    const double k = 2.0 * kPi * freq_hz / sound_speed;

    if (geom.mount == Mount::free_field) {
        for (int i = 0; i < nmic; ++i) {
            const Vector3d ri = geom.mics[i].position();
            for (int q = 0; q < nq; ++q)
                v(i, q) = std::polar(1.0, k * dirs[q].unit().dot(ri));
        }
        return v;
    }

    if (trunc < 0) trunc = default_truncation_order(k * geom.max_mic_radius());
    if (trunc < 1) throw DomainError("truncation order must be >= 1");
    // per-mic radial profile c_n = (2n+1)/(4pi) * b_n(ka, kr_i)
    std::vector<std::vector<cdouble>> coeff(nmic, std::vector<cdouble>(trunc + 1));
    const double ka = k * geom.sphere_radius;
    for (int i = 0; i < nmic; ++i)
        for (int n = 0; n <= trunc; ++n)
            coeff[i][n] = (2.0 * n + 1.0) / kFourPi * rigid_sphere_radial(n, ka, k * geom.mics[i].r);

    std::vector<Vector3d> qdir(nq);
    for (int q = 0; q < nq; ++q) qdir[q] = dirs[q].unit();
    std::vector<double> pn;
    for (int i = 0; i < nmic; ++i) {
        const Vector3d mi = geom.mics[i].direction().unit();
        for (int q = 0; q < nq; ++q) {
            legendre_polynomials(trunc, std::clamp(qdir[q].dot(mi), -1.0, 1.0), pn);
            cdouble sum(0, 0);
            for (int n = 0; n <= trunc; ++n) sum += coeff[i][n] * pn[n];
            v(i, q) = sum;
        }
    }
    return v;
}

}  // namespace

SteeringMatrix steering_matrix(const ArrayGeometry& geom, const DirectionGrid& grid,
                               double freq_hz, double sound_speed, int truncation_order) {
    grid.validate();
    return {freq_hz,
            steering_entries(geom, grid.directions, freq_hz, sound_speed, truncation_order)};
}

VectorXcd steering_vector(const ArrayGeometry& geom, const Direction& dir, double freq_hz,
                          double sound_speed, int truncation_order) {
    return steering_entries(geom, {dir}, freq_hz, sound_speed, truncation_order).col(0);
}

std::vector<SteeringMatrix> steering_set(const ArrayGeometry& geom, const DirectionGrid& grid,
                                         const FrequencyGrid& freqs, double sound_speed) {
    freqs.validate();
    grid.validate();
    std::vector<SteeringMatrix> set(freqs.bin_count());
    for (int j = 0; j < freqs.bin_count(); ++j)
        set[j] = {freqs.bin_hz(j),
                  steering_entries(geom, grid.directions, freqs.bin_hz(j), sound_speed, -1)};
    return set;
}

}  // namespace ambiarray
