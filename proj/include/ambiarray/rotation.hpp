#pragma once

#include "ambiarray/types.hpp"

namespace ambiarray {

// Block-diagonal rotation of spherical harmonic coefficient vectors in ACN
// order. For a rotation R = Rz(alpha) Ry(beta) Rz(gamma) the matrix satisfies
//   matrix * y(r) = y(R^-1 r) applied from the left to stacked coefficients,
// i.e. coefficients f' = matrix * f represent the rotated function
// f'(r) = f(R^-1 r). Equivalently matrix^T * y(r) = y(R^-1 r) pointwise on
// stacked SH basis vectors; see tests for the exact identities.
struct RotationOp {
    int order = 0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;  // zyz Euler angles, radians
    MatrixXcd matrix;                             // (order+1)^2 square

    // The n-th diagonal block, (2n+1) square.
    MatrixXcd block(int n) const;
};

// Real Wigner little-d matrix d^n(beta), rows/cols indexed m' = -n..n, m = -n..n.
MatrixXd wigner_little_d(int n, double beta);

// Full-rank zyz rotation operator with entries
//   D^n_{m'm} = exp(-i m' alpha) d^n_{m'm}(beta) exp(-i m gamma).
RotationOp wigner_d_zyz(double alpha, double beta, double gamma, int order);

// Head-rotation operator D(dphi, dtheta, 0): yaw dphi about z then pitch
// dtheta about the (new) y axis. Applied directly to HRTF coefficients and as
// its transpose to tilde-form Ambisonics signals.
RotationOp wigner_d(double delta_phi, double delta_theta, int order);

// 3x3 rotation matrix of the same zyz convention, for direction-domain checks.
Eigen::Matrix3d rotation_matrix_zyz(double alpha, double beta, double gamma);

}  // namespace ambiarray
