#include "ambiarray/metrics.hpp"

#include <cmath>

#include "ambiarray/io.hpp"
#include "ambiarray/rotation.hpp"
#include "ambiarray/sh.hpp"

namespace ambiarray {

namespace {

// Orthonormal basis of the steering row space via the mic-side Gram matrix
// (cheap for wide V). Returns W with columns spanning colspace(V^H).
MatrixXcd rowspace_basis(const MatrixXcd& v, double svd_rel_tol) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(v * v.adjoint());
    if (es.info() != Eigen::Success) throw NumericalError("steering Gram eigensolve failed");
    const VectorXd evals = es.eigenvalues().cwiseMax(0.0);
    const double sigma_max = std::sqrt(evals.maxCoeff());
    std::vector<int> keep;
    for (int i = 0; i < evals.size(); ++i)
        if (std::sqrt(evals[i]) > svd_rel_tol * sigma_max) keep.push_back(i);
    MatrixXcd w(v.cols(), keep.size());
    for (size_t k = 0; k < keep.size(); ++k)
        w.col(k) = v.adjoint() * es.eigenvectors().col(keep[k]) / std::sqrt(evals[keep[k]]);
    return w;
}

double clamp_db(double ratio) { return 10.0 * std::log10(std::max(ratio, 1e-30)); }

std::vector<std::pair<int, int>> channel_list(int order) {
    std::vector<std::pair<int, int>> ch;
    for (int n = 0; n <= order; ++n)
        for (int m = -n; m <= n; ++m) ch.emplace_back(n, m);
    return ch;
}

}  // namespace

double nullspace_ratio_db(const MatrixXcd& v, const VectorXcd& y, double svd_rel_tol) {
    if (v.cols() != y.size()) throw DimensionError("pattern length does not match steering");
    if (!(svd_rel_tol > 0.0)) throw DomainError("svd tolerance must be positive");
    const double total = y.squaredNorm();
    if (!(total > 0.0)) throw DomainError("target pattern is zero");
    const MatrixXcd w = rowspace_basis(v, svd_rel_tol);
    const double inside = (w.adjoint() * y).squaredNorm();
    return clamp_db(std::max(0.0, total - inside) / total);
}

NullspaceReport nullspace_report(const std::vector<SteeringMatrix>& steering,
                                 const DirectionGrid& grid, int order, double svd_rel_tol) {
    grid.validate();
    if (steering.empty()) throw DimensionError("steering set is empty");
    const MatrixXcd y = sh_matrix(grid, order);
    NullspaceReport r;
    r.order = order;
    r.svd_rel_tol = svd_rel_tol;
    r.channels = channel_list(order);
    r.xi_db.resize(steering.size(), y.cols());
    r.freqs.reserve(steering.size());
    for (size_t j = 0; j < steering.size(); ++j) {
        const MatrixXcd& v = steering[j].entries;
        if (v.cols() != grid.size())
            throw DimensionError("steering direction count does not match grid");
        r.freqs.push_back(steering[j].freq);
        const MatrixXcd w = rowspace_basis(v, svd_rel_tol);
        for (int c = 0; c < y.cols(); ++c) {
            const double total = y.col(c).squaredNorm();
            const double inside = (w.adjoint() * y.col(c)).squaredNorm();
            r.xi_db(j, c) = clamp_db(std::max(0.0, total - inside) / total);
        }
    }
    return r;
}

MagnitudeReport magnitude_report(const EncodingFilter& filter,
                                 const std::vector<SteeringMatrix>& steering,
                                 const DirectionGrid& grid) {
    filter.validate();
    grid.validate();
    if (steering.size() != filter.bins.size())
        throw DimensionError("steering set size does not match filter");
    const MatrixXcd y = sh_matrix(grid, filter.order);
    MagnitudeReport r;
    r.order = filter.order;
    r.channels = channel_list(filter.order);
    r.xi_mag_db.resize(steering.size(), y.cols());
    r.xi_ideal_db.resize(y.cols());
    for (int c = 0; c < y.cols(); ++c) r.xi_ideal_db[c] = clamp_db(y.col(c).squaredNorm());
    r.freqs.reserve(steering.size());
    for (size_t j = 0; j < steering.size(); ++j) {
        const MatrixXcd& v = steering[j].entries;
        if (v.cols() != grid.size())
            throw DimensionError("steering direction count does not match grid");
        if (v.rows() != filter.mic_count())
            throw DimensionError("steering mic count does not match filter");
        r.freqs.push_back(steering[j].freq);
        const MatrixXcd response = filter.bins[j].adjoint() * v;  // nc x Q
        for (int c = 0; c < y.cols(); ++c)
            r.xi_mag_db(j, c) = clamp_db(response.row(c).squaredNorm());
    }
    return r;
}

BinauralErrorReport binaural_error_report(const HrtfSh& h, const EncodingFilter& filter,
                                          const std::vector<SteeringMatrix>& steering,
                                          const DirectionGrid& grid, const HrtfSource& reference,
                                          const CrossfadeSpec& fade, double rotation_phi,
                                          double rotation_theta) {
    filter.validate();
    if (h.order != filter.order) throw DimensionError("hrtf and filter orders differ");
    if (!(h.freqs == filter.freqs)) throw DimensionError("frequency grids differ");
    if (steering.size() != filter.bins.size())
        throw DimensionError("steering set size does not match filter");
    const EncodingFilter tilde_f = filter.tilde ? filter : tilde_reindex(filter);
    MatrixXcd scratch;
    auto reproduction = [&steering, &tilde_f, &scratch](int j) -> const MatrixXcd& {
        scratch = steering[j].entries.transpose() * tilde_f.bins[j].conjugate();
        return scratch;
    };
    return binaural_error_report(h, reproduction, grid, reference, fade, rotation_phi,
                                 rotation_theta);
}

BinauralErrorReport binaural_error_report(const HrtfSh& h, const ReproductionOp& reproduction,
                                          const DirectionGrid& grid, const HrtfSource& reference,
                                          const CrossfadeSpec& fade, double rotation_phi,
                                          double rotation_theta) {
    h.validate();
    grid.validate();
    if (!(h.freqs == reference.freqs)) throw DimensionError("frequency grids differ");
    fade.validate(h.freqs.nyquist());

    const int nb = h.freqs.bin_count();
    const int q = grid.size();

    // rotated HRTF coefficients, and reference at the counter-rotated directions
    MatrixXcd hl = h.left, hr = h.right;
    MatrixXcd ref_l(q, nb), ref_r(q, nb);
    const bool rotated = rotation_phi != 0.0 || rotation_theta != 0.0;
    Eigen::Matrix3d rinv = Eigen::Matrix3d::Identity();
    if (rotated) {
        const RotationOp op = wigner_d(rotation_phi, rotation_theta, h.order);
        hl = op.matrix * h.left;
        hr = op.matrix * h.right;
        rinv = rotation_matrix_zyz(rotation_phi, rotation_theta, 0.0).transpose();
    }
    for (int i = 0; i < q; ++i) {
        const Direction d =
            rotated ? Direction::from_unit(rinv * grid.directions[i].unit()) : grid.directions[i];
        auto [l, r] = reference.at(d);
        ref_l.row(i) = l.transpose();
        ref_r.row(i) = r.transpose();
    }

    BinauralErrorReport rep;
    rep.rotation_phi = rotation_phi;
    rep.rotation_theta = rotation_theta;
    rep.eps_bin_left.resize(nb);
    rep.eps_bin_right.resize(nb);
    rep.eps_mag_left.resize(nb);
    rep.eps_mag_right.resize(nb);
    rep.eps_comb_left.resize(nb);
    rep.eps_comb_right.resize(nb);
    for (int j = 0; j < nb; ++j) {
        const MatrixXcd& g = reproduction(j);
        if (g.rows() != q || g.cols() != hl.rows())
            throw DimensionError("reproduction operator shape does not match grid and order");
        const VectorXcd pl = g * hl.col(j);
        const VectorXcd pr = g * hr.col(j);
        const double a = fade.alpha(h.freqs.bin_hz(j));
        rep.freqs.push_back(h.freqs.bin_hz(j));
        rep.alpha.push_back(a);
        auto fill = [&](const VectorXcd& p, const VectorXcd& ref, double& bin, double& mag,
                        double& comb) {
            const double denom = std::max(ref.squaredNorm(), 1e-300);
            bin = (p - ref).squaredNorm() / denom;
            mag = (p.cwiseAbs() - ref.cwiseAbs()).squaredNorm() / denom;
            comb = (1.0 - a) * bin + a * mag;
        };
        fill(pl, ref_l.col(j), rep.eps_bin_left[j], rep.eps_mag_left[j], rep.eps_comb_left[j]);
        fill(pr, ref_r.col(j), rep.eps_bin_right[j], rep.eps_mag_right[j], rep.eps_comb_right[j]);
    }
    return rep;
}

void write_nullspace_csv(const std::filesystem::path& path, const NullspaceReport& r) {
    CsvWriter csv(path, "nullspace/1", {"freq_hz", "n", "m", "xi_null_db"});
    for (size_t j = 0; j < r.freqs.size(); ++j)
        for (size_t c = 0; c < r.channels.size(); ++c)
            csv.row({r.freqs[j], double(r.channels[c].first), double(r.channels[c].second),
                     r.xi_db(j, c)});
}

void write_nullspace_json(const std::filesystem::path& path, const NullspaceReport& r) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "nullspace_report";
    j["order"] = r.order;
    j["svd_rel_tol"] = r.svd_rel_tol;
    j["freqs_hz"] = r.freqs;
    j["channels"] = json::array();
    for (auto [n, m] : r.channels) j["channels"].push_back({n, m});
    j["xi_null_db"] = json::array();
    for (Eigen::Index row = 0; row < r.xi_db.rows(); ++row) {
        json jr = json::array();
        for (Eigen::Index c = 0; c < r.xi_db.cols(); ++c) jr.push_back(r.xi_db(row, c));
        j["xi_null_db"].push_back(std::move(jr));
    }
    write_json_file(path, j);
}

void write_magnitude_csv(const std::filesystem::path& path, const MagnitudeReport& r) {
    CsvWriter csv(path, "magnitude/1", {"freq_hz", "n", "m", "xi_mag_db", "xi_ideal_db"});
    for (size_t j = 0; j < r.freqs.size(); ++j)
        for (size_t c = 0; c < r.channels.size(); ++c)
            csv.row({r.freqs[j], double(r.channels[c].first), double(r.channels[c].second),
                     r.xi_mag_db(j, c), r.xi_ideal_db[c]});
}

void write_magnitude_json(const std::filesystem::path& path, const MagnitudeReport& r) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "magnitude_report";
    j["order"] = r.order;
    j["freqs_hz"] = r.freqs;
    j["channels"] = json::array();
    for (auto [n, m] : r.channels) j["channels"].push_back({n, m});
    j["xi_ideal_db"] = std::vector<double>(r.xi_ideal_db.data(),
                                           r.xi_ideal_db.data() + r.xi_ideal_db.size());
    j["xi_mag_db"] = json::array();
    for (Eigen::Index row = 0; row < r.xi_mag_db.rows(); ++row) {
        json jr = json::array();
        for (Eigen::Index c = 0; c < r.xi_mag_db.cols(); ++c) jr.push_back(r.xi_mag_db(row, c));
        j["xi_mag_db"].push_back(std::move(jr));
    }
    write_json_file(path, j);
}

void write_binaural_error_csv(const std::filesystem::path& path, const BinauralErrorReport& r,
                              const std::string& method) {
    CsvWriter csv(path, "binaural_error/1",
                  {"method", "rotation_phi_deg", "rotation_theta_deg", "freq_hz", "alpha",
                   "eps_bin_left", "eps_bin_right", "eps_mag_left", "eps_mag_right",
                   "eps_comb_left", "eps_comb_right"});
    for (size_t j = 0; j < r.freqs.size(); ++j) {
        csv.row_mixed({method, CsvWriter::format(rad2deg(r.rotation_phi)),
                       CsvWriter::format(rad2deg(r.rotation_theta)),
                       CsvWriter::format(r.freqs[j]), CsvWriter::format(r.alpha[j]),
                       CsvWriter::format(r.eps_bin_left[j]), CsvWriter::format(r.eps_bin_right[j]),
                       CsvWriter::format(r.eps_mag_left[j]), CsvWriter::format(r.eps_mag_right[j]),
                       CsvWriter::format(r.eps_comb_left[j]),
                       CsvWriter::format(r.eps_comb_right[j])});
    }
}

void write_binaural_error_json(const std::filesystem::path& path, const BinauralErrorReport& r,
                               const std::string& method) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "binaural_error_report";
    j["method"] = method;
    j["rotation_phi_deg"] = rad2deg(r.rotation_phi);
    j["rotation_theta_deg"] = rad2deg(r.rotation_theta);
    j["freqs_hz"] = r.freqs;
    j["alpha"] = r.alpha;
    auto vec = [](const VectorXd& v) {
        return std::vector<double>(v.data(), v.data() + v.size());
    };
    j["eps_bin_left"] = vec(r.eps_bin_left);
    j["eps_bin_right"] = vec(r.eps_bin_right);
    j["eps_mag_left"] = vec(r.eps_mag_left);
    j["eps_mag_right"] = vec(r.eps_mag_right);
    j["eps_comb_left"] = vec(r.eps_comb_left);
    j["eps_comb_right"] = vec(r.eps_comb_right);
    write_json_file(path, j);
}

}  // namespace ambiarray
