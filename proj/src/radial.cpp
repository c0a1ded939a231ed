#include "ambiarray/radial.hpp"

#include <cmath>

namespace ambiarray {

namespace {

const cdouble kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^n cycle

inline cdouble ipow(int n) { return kIPow[n & 3]; }

}  // namespace

cdouble rigid_sphere_radial(int n, double ka) { return rigid_sphere_radial(n, ka, ka); }

cdouble rigid_sphere_radial(int n, double ka, double kr) {
    if (n < 0) throw DomainError("radial degree must be >= 0");
    if (ka < 0.0 || !std::isfinite(ka)) throw DomainError("ka must be finite and >= 0");
    if (kr < ka - 1e-12 * std::max(1.0, ka))
        throw DomainError("sensor radius must not be inside the sphere");
    kr = std::max(kr, ka);
    if (ka == 0.0) return open_sphere_radial(n, kr);

    const unsigned un = static_cast<unsigned>(n);
    const double ja = std::sph_bessel(un, ka);
    const double ja1 = std::sph_bessel(un + 1, ka);
    const double jap = (n / ka) * ja - ja1;  // j_n'(ka)
    const double jr = std::sph_bessel(un, kr);
    const double ya = std::sph_neumann(un, ka);
    const double ya1 = std::sph_neumann(un + 1, ka);
    const double yr = std::sph_neumann(un, kr);

    cdouble scattered;  // -j_n'(ka)/h_n'(ka) * h_n(kr)
    if (std::isfinite(ya) && std::isfinite(ya1) && std::isfinite(yr)) {
        const cdouble hap(jap, -((n / ka) * ya - ya1));
        const cdouble hr(jr, -yr);
        scattered = -(jap / hap) * hr;
    } else {
        // y_n overflowed: y_n(kr)/y_n'(ka) ~ -(ka/kr)^(n+1) * ka/(n+1)
        scattered = jap * std::pow(ka / kr, n + 1.0) * ka / (n + 1.0);
    }
    return kFourPi * ipow(n) * (jr + scattered);
}

cdouble open_sphere_radial(int n, double ka) {
    if (n < 0) throw DomainError("radial degree must be >= 0");
    if (ka < 0.0 || !std::isfinite(ka)) throw DomainError("ka must be finite and >= 0");
    return kFourPi * ipow(n) * std::sph_bessel(static_cast<unsigned>(n), ka);
}

}  // namespace ambiarray
