#pragma once

#include "ambiarray/acn.hpp"
#include "ambiarray/types.hpp"

namespace ambiarray {

// Orthonormal complex spherical harmonics with Condon-Shortley phase,
// Y_nm(theta, phi) = Pbar_n^m(cos theta) * exp(i m phi), channels in ACN order.
// Pbar includes the sqrt((2n+1)/(4pi) * (n-m)!/(n+m)!) normalization so that
// the weighted quadrature sum of Y_nm * conj(Y_n'm') over a sphere grid is a
// Kronecker delta.

// Fully normalized associated Legendre values Pbar_n^m(x) for all 0 <= m <= n <= order.
// Output is indexed by acn_index(n, m) for m >= 0 (negative-m slots unused).
void normalized_legendre(int order, double x, std::vector<double>& pbar);

// All SH values up to `order` at one direction, as a (order+1)^2 vector.
VectorXcd sh_vector(const Direction& dir, int order);

// Q x (order+1)^2 matrix of SH values over a grid, one row per direction.
MatrixXcd sh_matrix(const DirectionGrid& grid, int order);

// Plain Legendre polynomials P_0..P_order at x, for addition theorem sums.
void legendre_polynomials(int order, double x, std::vector<double>& p);

}  // namespace ambiarray
