#include "ambiarray/sh.hpp"

#include <cmath>

namespace ambiarray {

void normalized_legendre(int order, double x, std::vector<double>& pbar) {
    if (order < 0) throw DomainError("order must be >= 0");
    if (x < -1.0 || x > 1.0) throw DomainError("Legendre argument must be in [-1, 1]");
    pbar.assign(sh_channel_count(order), 0.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));  // sin(theta)

    // Diagonal terms, Condon-Shortley sign carried by the minus in the ratio.
    pbar[acn_index(0, 0)] = std::sqrt(1.0 / kFourPi);
    for (int m = 1; m <= order; ++m) {
        pbar[acn_index(m, m)] =
            -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * pbar[acn_index(m - 1, m - 1)];
    }
    // First off-diagonal, then the standard three-term upward recurrence.
    for (int m = 0; m < order; ++m)
        pbar[acn_index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * pbar[acn_index(m, m)];
    for (int m = 0; m <= order; ++m) {
        for (int n = m + 2; n <= order; ++n) {
            const double a = std::sqrt((4.0 * n * n - 1.0) / (double(n) * n - double(m) * m));
            const double b = std::sqrt(((n - 1.0) * (n - 1.0) - double(m) * m) /
                                       (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
            pbar[acn_index(n, m)] =
                a * (x * pbar[acn_index(n - 1, m)] - b * pbar[acn_index(n - 2, m)]);
        }
    }
}

VectorXcd sh_vector(const Direction& dir, int order) {
    std::vector<double> pbar;
    normalized_legendre(order, std::cos(dir.theta), pbar);
    VectorXcd y(sh_channel_count(order));
    for (int n = 0; n <= order; ++n) {
        for (int m = 0; m <= n; ++m) {
            const cdouble e = std::polar(1.0, m * dir.phi);
            const double p = pbar[acn_index(n, m)];
            y[acn_index(n, m)] = p * e;
            // Y_{n,-m} = (-1)^m conj(Y_{n,m})
            if (m > 0) y[acn_index(n, -m)] = (m % 2 ? -1.0 : 1.0) * p * std::conj(e);
        }
    }
    return y;
}

MatrixXcd sh_matrix(const DirectionGrid& grid, int order) {
    grid.validate();
    MatrixXcd y(grid.size(), sh_channel_count(order));
    for (int q = 0; q < grid.size(); ++q) y.row(q) = sh_vector(grid.directions[q], order).transpose();
    return y;
}

void legendre_polynomials(int order, double x, std::vector<double>& p) {
    if (order < 0) throw DomainError("order must be >= 0");
    p.assign(order + 1, 0.0);
    p[0] = 1.0;
    if (order >= 1) p[1] = x;
    for (int n = 2; n <= order; ++n)
        p[n] = ((2.0 * n - 1.0) * x * p[n - 1] - (n - 1.0) * p[n - 2]) / n;
}

}  // namespace ambiarray
