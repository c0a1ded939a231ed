#include <doctest.h>

#include <ambiarray/acn.hpp>
#include <ambiarray/grids.hpp>
#include <ambiarray/rotation.hpp>
#include <ambiarray/sh.hpp>
#include <cmath>
#include <complex>
#include <random>

using namespace ambiarray;
using doctest::Approx;

namespace {

cdouble sh_value(int n, int m, double theta, double phi) {
    return sh_vector(Direction{theta, phi}, n)(acn_index(n, m));
}

std::mt19937 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::strlen(tag));
    return std::mt19937(seq);
}

Direction random_direction(std::mt19937& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    return Direction{std::acos(2.0 * u01(rng) - 1.0), 2.0 * kPi * u01(rng) - kPi};
}

}  // namespace

TEST_SUITE("sh_rotation") {

TEST_CASE("acn index maps (degree, order) pairs to n^2+n+m and back") {
    int flat = 0;
    for (int n = 0; n <= 30; ++n) {
        for (int m = -n; m <= n; ++m, ++flat) {
            CHECK(acn_index(n, m) == flat);
            auto [n2, m2] = acn_to_degree_order(flat);
            CHECK(n2 == n);
            CHECK(m2 == m);
        }
    }
    CHECK(sh_channel_count(0) == 1);
    CHECK(sh_channel_count(4) == 25);
    CHECK_THROWS_AS(acn_index(1, 2), DomainError);
    CHECK_THROWS_AS(acn_index(-1, 0), DomainError);
    CHECK_THROWS_AS(sh_channel_count(-2), DomainError);
    CHECK_THROWS_AS(acn_to_degree_order(-1), DomainError);
}

TEST_CASE("spherical harmonic spot values") {
    // Constant channel is 1/sqrt(4 pi) everywhere.
    CHECK(sh_value(0, 0, 0.123, 4.56).real() == Approx(0.28209479177387814).epsilon(1e-13));
    CHECK(sh_value(0, 0, 0.123, 4.56).imag() == Approx(0.0));
    // Polar value of the first zonal harmonic: sqrt(3 / 4 pi).
    CHECK(sh_value(1, 0, 0.0, 0.0).real() == Approx(0.48860251190291992).epsilon(1e-13));

    const cdouble y43 = sh_value(4, 3, 2.0, 0.7);
    CHECK(y43.real() == Approx(-0.19770326747013139).epsilon(1e-12));
    CHECK(y43.imag() == Approx(0.33804224840472952).epsilon(1e-12));

    CHECK(sh_value(12, 0, 1.234, 0.0).real() == Approx(-0.1567094679994302).epsilon(1e-12));

    const cdouble ym = sh_value(30, -17, 1.1, -2.3);
    const cdouble yp = sh_value(30, 17, 1.1, -2.3);
    CHECK(ym.real() == Approx(-0.048902298858716935).epsilon(1e-11));
    CHECK(ym.imag() == Approx(-0.28504107473567714).epsilon(1e-11));
    CHECK(yp.real() == Approx(0.048902298858716935).epsilon(1e-11));
    CHECK(yp.imag() == Approx(-0.28504107473567714).epsilon(1e-11));
}

TEST_CASE("normalized and plain Legendre evaluations") {
    std::vector<double> pbar;
    normalized_legendre(30, 0.3, pbar);
    CHECK(pbar[acn_index(30, 15)] == Approx(0.34509620372088201).epsilon(1e-12));
    normalized_legendre(1, 1.0, pbar);
    CHECK(pbar[acn_index(1, 0)] == Approx(0.48860251190291992).epsilon(1e-13));

    std::vector<double> p;
    legendre_polynomials(7, 0.3, p);
    CHECK(p[0] == Approx(1.0));
    CHECK(p[1] == Approx(0.3));
    CHECK(p[7] == Approx(-0.22407298124999989).epsilon(1e-13));

    CHECK_THROWS_AS(normalized_legendre(2, 1.5, pbar), DomainError);
    CHECK_THROWS_AS(legendre_polynomials(-1, 0.0, p), DomainError);
}

TEST_CASE("conjugate symmetry Y_{n,m} = (-1)^m conj(Y_{n,-m})") {
    auto rng = rng_for("conj-sym");
    for (int trial = 0; trial < 20; ++trial) {
        const Direction d = random_direction(rng);
        const VectorXcd y = sh_vector(d, 30);
        for (int n = 0; n <= 30; ++n) {
            for (int m = 0; m <= n; ++m) {
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                const cdouble lhs = y(acn_index(n, m));
                const cdouble rhs = sign * std::conj(y(acn_index(n, -m)));
                CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(lhs)));
            }
        }
    }
}

TEST_CASE("quadrature grid orthonormality at order 20") {
    const DirectionGrid grid = lebedev_grid(2702);
    REQUIRE(grid.size() == 2702);
    CHECK(grid.weights.sum() == Approx(kFourPi).epsilon(1e-12));
    const MatrixXcd y = sh_matrix(grid, 20);
    REQUIRE(y.rows() == 2702);
    REQUIRE(y.cols() == 441);
    const MatrixXcd gram = y.adjoint() * grid.weights.asDiagonal() * y;
    const double dev = (gram - MatrixXcd::Identity(441, 441)).cwiseAbs().maxCoeff();
    CHECK(dev <= 1e-10);
}

TEST_CASE("sh_matrix rows agree with per-direction vectors") {
    const DirectionGrid grid = fibonacci_grid(17);
    const MatrixXcd y = sh_matrix(grid, 3);
    for (int q = 0; q < grid.size(); ++q)
        CHECK((y.row(q).transpose() - sh_vector(grid.directions[q], 3)).norm() == Approx(0.0));
}

TEST_CASE("first-degree rotation block matches the closed form") {
    const double beta = 0.8;
    const MatrixXd d = wigner_little_d(1, beta);
    const double c2 = std::cos(beta / 2) * std::cos(beta / 2);
    const double s2 = std::sin(beta / 2) * std::sin(beta / 2);
    const double s = std::sin(beta) / std::sqrt(2.0);
    MatrixXd want(3, 3);
    // rows/cols ordered m = -1, 0, +1
    want << c2, s, s2, -s, std::cos(beta), s, s2, -s, c2;
    CHECK((d - want).cwiseAbs().maxCoeff() <= 1e-14);

    // beta = 0 is the identity for any degree
    CHECK((wigner_little_d(4, 0.0) - MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-15);

    // same-axis composition: d(b1) d(b2) = d(b1 + b2)
    const MatrixXd lhs = wigner_little_d(3, 0.4) * wigner_little_d(3, 0.9);
    CHECK((lhs - wigner_little_d(3, 1.3)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("rotation operators are unitary and block diagonal") {
    auto rng = rng_for("unitary");
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        const RotationOp op = wigner_d_zyz(ang(rng), ang(rng), ang(rng), 8);
        const MatrixXcd& d = op.matrix;
        REQUIRE(d.rows() == 81);
        CHECK((d.adjoint() * d - MatrixXcd::Identity(81, 81)).cwiseAbs().maxCoeff() <= 1e-12);
        // no coupling between degrees
        for (int n = 0; n <= 8; ++n) {
            const int lo = n * n, sz = 2 * n + 1;
            MatrixXcd block = d.block(lo, lo, sz, sz);
            MatrixXcd cleared = d;
            cleared.block(lo, lo, sz, sz).setZero();
            CHECK(cleared.middleRows(lo, sz).cwiseAbs().maxCoeff() == Approx(0.0));
            CHECK((op.block(n) - block).cwiseAbs().maxCoeff() == Approx(0.0));
        }
    }
    CHECK((wigner_d_zyz(0, 0, 0, 5).matrix - MatrixXcd::Identity(36, 36)).cwiseAbs().maxCoeff() <=
          1e-15);
}

TEST_CASE("coefficient rotation matches pointwise direction rotation") {
    // If coefficients transform with D, the synthesized function rotates:
    // D^T y(u) = y(R^{-1} u) for R = Rz(alpha) Ry(beta) Rz(gamma).
    auto rng = rng_for("pointwise");
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double a = ang(rng), b = ang(rng), g = ang(rng);
        const RotationOp op = wigner_d_zyz(a, b, g, 6);
        const Eigen::Matrix3d r = rotation_matrix_zyz(a, b, g);
        const Direction dir = random_direction(rng);
        const VectorXcd lhs = op.matrix.transpose() * sh_vector(dir, 6);
        const VectorXcd rhs = sh_vector(Direction::from_unit(r.transpose() * dir.unit()), 6);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-8);
        // and the conjugate operator rotates the other way
        const VectorXcd lhs2 = op.matrix.conjugate() * sh_vector(dir, 6);
        const VectorXcd rhs2 = sh_vector(Direction::from_unit(r * dir.unit()), 6);
        CHECK((lhs2 - rhs2).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("yaw-pitch operator equals the three-angle operator with zero roll") {
    auto rng = rng_for("yawpitch");
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double phi = ang(rng), theta = ang(rng);
        const RotationOp a = wigner_d(phi, theta, 5);
        const RotationOp b = wigner_d_zyz(phi, theta, 0.0, 5);
        CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == Approx(0.0));
        // adjoint and transpose identities for the zero-roll operator
        const MatrixXcd adj = wigner_d_zyz(0.0, -theta, -phi, 5).matrix;
        CHECK((a.matrix.adjoint() - adj).cwiseAbs().maxCoeff() <= 1e-12);
        const MatrixXcd tra = wigner_d_zyz(0.0, -theta, phi, 5).matrix;
        CHECK((a.matrix.transpose() - tra).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("first-degree yaw operator is a phase diagonal") {
    const double phi = 0.7;
    const MatrixXcd d = wigner_d(phi, 0.0, 1).matrix;
    MatrixXcd want = MatrixXcd::Zero(4, 4);
    want(0, 0) = 1.0;
    want(1, 1) = std::polar(1.0, phi);   // m = -1 row of degree 1
    want(2, 2) = 1.0;                    // m = 0
    want(3, 3) = std::polar(1.0, -phi);  // m = +1
    CHECK((d - want).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("zyz rotation matrix composes Rz(alpha) Ry(beta) Rz(gamma)") {
    const Eigen::Matrix3d r = rotation_matrix_zyz(0.3, 0.0, 0.0);
    CHECK(r(0, 0) == Approx(std::cos(0.3)));
    CHECK(r(1, 0) == Approx(std::sin(0.3)));
    CHECK(r(2, 2) == Approx(1.0));
    const Eigen::Matrix3d ry = rotation_matrix_zyz(0.0, 0.5, 0.0);
    CHECK(ry(0, 0) == Approx(std::cos(0.5)));
    CHECK(ry(0, 2) == Approx(std::sin(0.5)));
    // orthogonality at random angles
    const Eigen::Matrix3d q = rotation_matrix_zyz(1.1, -0.6, 2.4);
    CHECK((q * q.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(q.determinant() == Approx(1.0));
}

TEST_CASE("inverse rotation is the reversed-angle operator") {
    const RotationOp op = wigner_d_zyz(0.9, 1.2, -0.4, 4);
    const RotationOp inv = wigner_d_zyz(0.4, -1.2, -0.9, 4);
    CHECK((op.matrix * inv.matrix - MatrixXcd::Identity(25, 25)).cwiseAbs().maxCoeff() <= 1e-13);
}

}  // TEST_SUITE
