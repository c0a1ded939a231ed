#include "ambiarray/rotation.hpp"

#include <cmath>

#include "ambiarray/acn.hpp"

namespace ambiarray {

namespace {

constexpr int kMaxOrder = 64;

// factorials up to (2*kMaxOrder)! in long double; 128! ~ 4e215 fits comfortably
const long double* factorial_table() {
    static long double table[2 * kMaxOrder + 1];
    static bool init = [] {
        table[0] = 1.0L;
        for (int i = 1; i <= 2 * kMaxOrder; ++i) table[i] = table[i - 1] * i;
        return true;
    }();
    (void)init;
    return table;
}

}  // namespace

MatrixXd wigner_little_d(int n, double beta) {
    if (n < 0) throw DomainError("degree must be >= 0");
    if (n > kMaxOrder) throw DomainError("rotation degree capped at 64");
    const long double* fact = factorial_table();
    const long double c = std::cos(0.5L * (long double)beta);
    const long double s = std::sin(0.5L * (long double)beta);
    MatrixXd d(2 * n + 1, 2 * n + 1);
    for (int mp = -n; mp <= n; ++mp) {
        for (int m = -n; m <= n; ++m) {
            const long double norm = sqrtl(fact[n + mp] * fact[n - mp] * fact[n + m] * fact[n - m]);
            const int s_lo = std::max(0, m - mp);
            const int s_hi = std::min(n + m, n - mp);
            long double sum = 0.0L;
            for (int k = s_lo; k <= s_hi; ++k) {
                const long double denom =
                    fact[n + m - k] * fact[k] * fact[mp - m + k] * fact[n - mp - k];
                long double term = powl(c, 2 * n + m - mp - 2 * k) * powl(s, mp - m + 2 * k) / denom;
                if ((mp - m + k) & 1) term = -term;
                sum += term;
            }
            d(mp + n, m + n) = static_cast<double>(norm * sum);
        }
    }
    return d;
}

MatrixXcd RotationOp::block(int n) const {
    if (n < 0 || n > order) throw DomainError("block degree out of range");
    const int off = n * n;
    return matrix.block(off, off, 2 * n + 1, 2 * n + 1);
}

RotationOp wigner_d_zyz(double alpha, double beta, double gamma, int order) {
    if (order < 0) throw DomainError("order must be >= 0");
    RotationOp op;
    op.order = order;
    op.alpha = alpha;
    op.beta = beta;
    op.gamma = gamma;
    const int nc = sh_channel_count(order);
    op.matrix = MatrixXcd::Zero(nc, nc);
    for (int n = 0; n <= order; ++n) {
        const MatrixXd d = wigner_little_d(n, beta);
        const int off = n * n;
        for (int mp = -n; mp <= n; ++mp) {
            const cdouble ea = std::polar(1.0, -mp * alpha);
            for (int m = -n; m <= n; ++m) {
                op.matrix(off + n + mp, off + n + m) =
                    ea * d(mp + n, m + n) * std::polar(1.0, -m * gamma);
            }
        }
    }
    return op;
}

RotationOp wigner_d(double delta_phi, double delta_theta, int order) {
    return wigner_d_zyz(delta_phi, delta_theta, 0.0, order);
}

Eigen::Matrix3d rotation_matrix_zyz(double alpha, double beta, double gamma) {
    Eigen::Matrix3d rz1 = Eigen::AngleAxisd(alpha, Vector3d::UnitZ()).toRotationMatrix();
    Eigen::Matrix3d ry = Eigen::AngleAxisd(beta, Vector3d::UnitY()).toRotationMatrix();
    Eigen::Matrix3d rz2 = Eigen::AngleAxisd(gamma, Vector3d::UnitZ()).toRotationMatrix();
    return rz1 * ry * rz2;
}

}  // namespace ambiarray
