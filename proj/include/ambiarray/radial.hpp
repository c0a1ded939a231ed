#pragma once

#include "ambiarray/types.hpp"

namespace ambiarray {

// Plane-wave radial weight for a pressure sensor on a rigid sphere:
//   b_n(ka) = 4*pi*i^n * (j_n(ka) - j_n'(ka)/h_n'(ka) * h_n(ka))
// with h_n the spherical Hankel function of the second kind (j_n - i*y_n),
// matching the exp(+i k . r) incident-wave convention. At ka = 0 this is
// 4*pi for n = 0 and 0 for n >= 1.
cdouble rigid_sphere_radial(int n, double ka);

// Sensor at radius r >= a away from the surface of a rigid sphere of radius a:
//   4*pi*i^n * (j_n(kr) - j_n'(ka)/h_n'(ka) * h_n(kr))
cdouble rigid_sphere_radial(int n, double ka, double kr);

// Free-field (open) counterpart 4*pi*i^n*j_n(ka).
cdouble open_sphere_radial(int n, double ka);

}  // namespace ambiarray
