#include <doctest.h>

#include <ambiarray/acn.hpp>
#include <ambiarray/encoder.hpp>
#include <ambiarray/geometry.hpp>
#include <ambiarray/grids.hpp>
#include <ambiarray/radial.hpp>
#include <ambiarray/sh.hpp>
#include <ambiarray/steering.hpp>
#include <cmath>
#include <random>

using namespace ambiarray;
using doctest::Approx;

namespace {

FrequencyGrid grid_48k(int nfft) { return FrequencyGrid{48000.0, nfft}; }

std::mt19937 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::strlen(tag));
    return std::mt19937(seq);
}

VectorXcd random_complex(int n, std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale / std::sqrt(2.0));
    VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = cdouble(g(rng), g(rng));
    return v;
}

// Stacked least-squares solution of the regularized fit
//   min_c || V^H c - y ||^2 + (1/snr) ||c||^2
// through a QR factorization, as an independent reference for asm_filter.
MatrixXcd ridge_by_qr(const MatrixXcd& v, const MatrixXcd& y, double snr) {
    const int m = (int)v.rows(), q = (int)v.cols(), nc = (int)y.cols();
    MatrixXcd a(q + m, m);
    a.topRows(q) = v.adjoint();
    a.bottomRows(m) = std::sqrt(1.0 / snr) * MatrixXcd::Identity(m, m);
    MatrixXcd b = MatrixXcd::Zero(q + m, nc);
    b.topRows(q) = y;
    return a.colPivHouseholderQr().solve(b);
}

}  // namespace

TEST_SUITE("array_encoding") {

TEST_CASE("wearable preset geometry") {
    const ArrayGeometry g = default_wearable_geometry();
    REQUIRE(g.mic_count() == 5);
    CHECK(g.mount == Mount::rigid_sphere);
    CHECK(g.sphere_radius == Approx(0.1));
    CHECK(g.max_mic_radius() == Approx(0.1));
    const double want_theta[] = {90.0, 72.0, 108.0, 72.0, 90.0};
    const double want_phi[] = {-70.0, -35.0, 0.0, 35.0, 70.0};
    for (int i = 0; i < 5; ++i) {
        CHECK(rad2deg(g.mics[i].theta) == Approx(want_theta[i]));
        CHECK(rad2deg(g.mics[i].phi) == Approx(want_phi[i]));
        CHECK(g.mics[i].r == Approx(0.1));
    }
    CHECK_NOTHROW(g.validate());
    CHECK(geometry_preset("wearable").mic_count() == 5);
    CHECK(geometry_preset("sphere32").mic_count() == 32);
    CHECK_THROWS_AS(geometry_preset("nonsense"), ConfigError);
}

TEST_CASE("rigid sphere radial terms") {
    // surface pressure terms at ka = kr = 1
    const cdouble b0 = rigid_sphere_radial(0, 1.0, 1.0);
    CHECK(b0.real() == Approx(8.681937637828856).epsilon(1e-12));
    CHECK(b0.imag() == Approx(1.8922986184969675).epsilon(1e-12));
    const cdouble b1 = rigid_sphere_radial(1, 1.0, 1.0);
    CHECK(b1.real() == Approx(0.60100835646759332).epsilon(1e-12));
    CHECK(b1.imag() == Approx(5.5876223063967139).epsilon(1e-12));
    const cdouble b5 = rigid_sphere_radial(5, 1.0, 1.0);
    CHECK(b5.real() == Approx(1.6539890512351352e-10).epsilon(1e-9));
    CHECK(b5.imag() == Approx(0.0021357779806360235).epsilon(1e-12));
    CHECK(std::abs(b5) / std::abs(b0) < 1e-2);  // fast series decay past n = ka

    // a vanishing scatterer leaves the incident wave: 4 pi i^n j_n(kr)
    const cdouble open0 = rigid_sphere_radial(0, 0.0, 1.0);
    CHECK(open0.real() == Approx(10.574236256325824).epsilon(1e-12));
    CHECK(open0.imag() == Approx(0.0));
    const cdouble os = open_sphere_radial(0, 1.0);
    CHECK(os.real() == Approx(10.574236256325824).epsilon(1e-12));

    // two-argument form is the surface special case
    CHECK(std::abs(rigid_sphere_radial(2, 1.3) - rigid_sphere_radial(2, 1.3, 1.3)) == Approx(0.0));
}

TEST_CASE("series truncation default") {
    CHECK(default_truncation_order(0.0) == 10);
    CHECK(default_truncation_order(1.0) == 11);
    CHECK(default_truncation_order(14.599) == 25);
    CHECK(default_truncation_order(1000.0) == 60);
}

TEST_CASE("rigid steering matches a deep-series reference") {
    // one surface mic at the pole of a 0.1 m rigid sphere, ka = kr = 1
    ArrayGeometry g;
    g.name = "single";
    g.mount = Mount::rigid_sphere;
    g.sphere_radius = 0.1;
    g.mics = {MicPosition{0.0, 0.0, 0.1}};
    const double f = 343.0 / (2.0 * kPi * 0.1);  // k = 10 -> ka = 1

    // same direction as the mic (cos gamma = 1), reference summed to order 40
    const VectorXcd v1 = steering_vector(g, Direction{0.0, 0.0}, f);
    CHECK(v1(0).real() == Approx(0.32061727072436419).epsilon(1e-8));
    CHECK(v1(0).imag() == Approx(1.3816840271001973).epsilon(1e-8));

    // 60 degrees away (cos gamma = 0.5)
    const VectorXcd v2 = steering_vector(g, Direction{kPi / 3.0, 0.0}, f);
    CHECK(v2(0).real() == Approx(0.8240870940507351).epsilon(1e-8));
    CHECK(v2(0).imag() == Approx(0.86555019251918119).epsilon(1e-8));
}

TEST_CASE("steering at zero frequency and in free field") {
    const ArrayGeometry g = default_wearable_geometry();
    const DirectionGrid grid = fibonacci_grid(24);
    const SteeringMatrix dc = steering_matrix(g, grid, 0.0);
    CHECK((dc.entries - MatrixXcd::Ones(5, 24)).cwiseAbs().maxCoeff() == Approx(0.0));

    ArrayGeometry ff;
    ff.name = "ff";
    ff.mount = Mount::free_field;
    ff.sphere_radius = 0.0;
    ff.mics = {MicPosition{deg2rad(90.0), 0.0, 0.05}};  // on the +x axis
    const double f = 1000.0;
    const SteeringMatrix s = steering_matrix(ff, grid, f);
    for (int q = 0; q < grid.size(); ++q) CHECK(std::abs(s.entries(0, q)) == Approx(1.0));
    // incident wave convention exp(+i k r_q . r): arrival from +x leads by k * 0.05
    const double k = 2.0 * kPi * f / 343.0;
    const VectorXcd vx = steering_vector(ff, Direction{deg2rad(90.0), 0.0}, f);
    CHECK(std::arg(vx(0)) == Approx(k * 0.05).epsilon(1e-12));
}

TEST_CASE("encoder design matches an independent ridge solve") {
    ArrayGeometry g;
    g.name = "toy4";
    g.mount = Mount::rigid_sphere;
    g.sphere_radius = 0.08;
    g.mics = {MicPosition{deg2rad(50.0), deg2rad(-40.0), 0.08},
              MicPosition{deg2rad(85.0), deg2rad(10.0), 0.08},
              MicPosition{deg2rad(120.0), deg2rad(150.0), 0.08},
              MicPosition{deg2rad(30.0), deg2rad(100.0), 0.08}};
    const DirectionGrid grid = fibonacci_grid(36);
    const FrequencyGrid freqs = grid_48k(16);
    const auto steering = steering_set(g, grid, freqs);
    const double snr = 50.0;
    const EncodingFilter filter = asm_filter(steering, grid, 1, snr, freqs);
    REQUIRE((int)filter.bins.size() == freqs.bin_count());
    CHECK(filter.order == 1);
    CHECK(filter.snr_ratio == Approx(snr));
    CHECK_FALSE(filter.tilde);

    const MatrixXcd y = sh_matrix(grid, 1);
    for (int j = 0; j < freqs.bin_count(); ++j) {
        const MatrixXcd ref = ridge_by_qr(steering[j].entries, y, snr);
        CHECK((filter.bins[j] - ref).cwiseAbs().maxCoeff() <= 1e-8);
        // stationarity of the quadratic objective at the returned solution
        const MatrixXcd grad =
            steering[j].entries *
                (steering[j].entries.adjoint() * filter.bins[j] - y) +
            filter.bins[j] / snr;
        CHECK(grad.cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("infinite noise drives the encoder to zero") {
    const ArrayGeometry g = default_wearable_geometry();
    const DirectionGrid grid = fibonacci_grid(36);
    const FrequencyGrid freqs = grid_48k(8);
    const auto steering = steering_set(g, grid, freqs);
    const EncodingFilter filter = asm_filter(steering, grid, 1, 1e-12, freqs);
    for (const auto& b : filter.bins) CHECK(b.cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("dense spherical array reproduces the ideal encoder at low frequency") {
    const ArrayGeometry g = geometry_preset("sphere32");
    const DirectionGrid grid = lebedev_grid(194);
    const FrequencyGrid freqs = grid_48k(128);
    const auto steering = steering_set(g, grid, freqs);
    const EncodingFilter filter = asm_filter(steering, grid, 1, 1000.0, freqs);
    const EncodingFilter tilde_f = tilde_reindex(filter);
    const MatrixXcd yt = sh_matrix(grid, 1).transpose();
    for (int j = 1; j < freqs.bin_count(); ++j) {
        if (freqs.bin_hz(j) >= 2000.0) break;
        const MatrixXcd lhs = tilde_f.bins[j].adjoint() * steering[j].entries;
        CHECK((lhs - yt).norm() / yt.norm() < 0.01);
    }
}

TEST_CASE("coefficients are recovered as C^H x") {
    auto rng = rng_for("encode");
    const FrequencyGrid freqs = grid_48k(8);
    EncodingFilter filter;
    filter.order = 1;
    filter.freqs = freqs;
    for (int j = 0; j < freqs.bin_count(); ++j) {
        MatrixXcd b(3, 4);
        for (int r = 0; r < 3; ++r) b.row(r) = random_complex(4, rng).transpose();
        filter.bins.push_back(b);
    }
    MicSpectra mics;
    mics.freqs = freqs;
    mics.bins = MatrixXcd::Zero(3, freqs.bin_count());
    for (int j = 0; j < freqs.bin_count(); ++j) mics.bins.col(j) = random_complex(3, rng);

    const ShSignal a = encode(filter, mics);
    CHECK(a.order == 1);
    CHECK_FALSE(a.tilde);
    for (int j = 0; j < freqs.bin_count(); ++j) {
        const VectorXcd want = filter.bins[j].adjoint() * mics.bins.col(j);
        CHECK((a.coeffs.col(j) - want).cwiseAbs().maxCoeff() == Approx(0.0));
        CHECK((encode_bin(filter.bins[j], mics.bins.col(j)) - want).cwiseAbs().maxCoeff() ==
              Approx(0.0));
    }

    MicSpectra wrong = mics;
    wrong.bins = MatrixXcd::Zero(4, freqs.bin_count());
    CHECK_THROWS_AS(encode(filter, wrong), DimensionError);
}

TEST_CASE("tilde reindexing is an involution and flips m") {
    auto rng = rng_for("tilde");
    ShSignal a;
    a.order = 3;
    a.freqs = grid_48k(8);
    a.coeffs = MatrixXcd::Zero(16, a.freqs.bin_count());
    for (int j = 0; j < a.freqs.bin_count(); ++j) a.coeffs.col(j) = random_complex(16, rng);

    const ShSignal t = tilde_reindex(a);
    CHECK(t.tilde);
    for (int n = 0; n <= 3; ++n) {
        for (int m = -n; m <= n; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            CHECK((t.coeffs.row(acn_index(n, m)) - sign * a.coeffs.row(acn_index(n, -m)))
                      .cwiseAbs()
                      .maxCoeff() == Approx(0.0));
        }
    }
    const ShSignal back = tilde_reindex(t);
    CHECK_FALSE(back.tilde);
    CHECK((back.coeffs - a.coeffs).cwiseAbs().maxCoeff() == Approx(0.0));

    // the filter variant permutes columns so that encode(tilde(C)) = tilde(encode(C))
    EncodingFilter f;
    f.order = 2;
    f.freqs = grid_48k(8);
    for (int j = 0; j < f.freqs.bin_count(); ++j) {
        MatrixXcd b(4, 9);
        for (int r = 0; r < 4; ++r) b.row(r) = random_complex(9, rng).transpose();
        f.bins.push_back(b);
    }
    const EncodingFilter ft = tilde_reindex(f);
    CHECK(ft.tilde);
    MicSpectra mics;
    mics.freqs = f.freqs;
    mics.bins = MatrixXcd::Zero(4, f.freqs.bin_count());
    for (int j = 0; j < f.freqs.bin_count(); ++j) mics.bins.col(j) = random_complex(4, rng);
    const ShSignal lhs = encode(ft, mics);
    const ShSignal rhs = tilde_reindex(encode(f, mics));
    CHECK((lhs.coeffs - rhs.coeffs).cwiseAbs().maxCoeff() == Approx(0.0));
}

TEST_CASE("monte carlo reconstruction error matches the closed form") {
    // For diffuse unit-variance amplitudes s over the grid plus white noise n,
    //   a_hat = C^H (V s + n),  a = Y^H s,
    //   E||a_hat - a||^2 = ||C^H V - Y^H||_F^2 + (1/snr) ||C||_F^2,
    //   E||a||^2 = ||Y||_F^2.
    const ArrayGeometry g = default_wearable_geometry();
    const DirectionGrid grid = fibonacci_grid(64);
    const FrequencyGrid freqs = grid_48k(32);
    const auto steering = steering_set(g, grid, freqs);
    const double snr = 1000.0;
    const EncodingFilter filter = asm_filter(steering, grid, 1, snr, freqs);
    const MatrixXcd y = sh_matrix(grid, 1);
    const int j = 2;  // 3 kHz
    const MatrixXcd& v = steering[j].entries;
    const MatrixXcd& c = filter.bins[j];

    const double closed_num =
        (c.adjoint() * v - y.adjoint()).squaredNorm() + c.squaredNorm() / snr;
    const double closed_den = y.squaredNorm();

    auto rng = rng_for("mc-nmse");
    const double noise_scale = std::sqrt(1.0 / snr);
    double num = 0.0, den = 0.0;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        const VectorXcd s = random_complex(grid.size(), rng);
        const VectorXcd n = random_complex(g.mic_count(), rng, noise_scale);
        const VectorXcd ahat = encode_bin(c, v * s + n);
        const VectorXcd a = y.adjoint() * s;
        num += (ahat - a).squaredNorm();
        den += a.squaredNorm();
    }
    const double mc = (num / draws) / (den / draws);
    const double closed = closed_num / closed_den;
    CHECK(mc == Approx(closed).epsilon(0.02));
}

TEST_CASE("quadrature-weighted design on a uniform grid rescales the noise term") {
    // With uniform weights w the weighted normal equations collapse to the
    // plain ones at snr' = w * snr.
    const ArrayGeometry g = default_wearable_geometry();
    const DirectionGrid grid = fibonacci_grid(49);
    const FrequencyGrid freqs = grid_48k(8);
    const auto steering = steering_set(g, grid, freqs);
    const double w = grid.weights(0);
    CHECK((grid.weights.array() - w).abs().maxCoeff() == Approx(0.0));
    const EncodingFilter weighted = asm_filter(steering, grid, 1, 500.0, freqs, true);
    const EncodingFilter plain = asm_filter(steering, grid, 1, 500.0 * w, freqs, false);
    for (int j = 0; j < freqs.bin_count(); ++j)
        CHECK((weighted.bins[j] - plain.bins[j]).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("invalid designs are rejected") {
    const ArrayGeometry g = default_wearable_geometry();
    const DirectionGrid grid = fibonacci_grid(16);
    const FrequencyGrid freqs = grid_48k(8);
    auto steering = steering_set(g, grid, freqs);
    CHECK_THROWS_AS(asm_filter(steering, grid, 1, 0.0, freqs), DomainError);
    CHECK_THROWS_AS(asm_filter(steering, grid, -1, 10.0, freqs), DomainError);
    steering[3].entries(2, 5) = cdouble(std::nan(""), 0.0);
    CHECK_THROWS_AS(asm_filter(steering, grid, 1, 10.0, freqs), DomainError);
}

}  // TEST_SUITE
