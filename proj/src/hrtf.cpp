#include "ambiarray/hrtf.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "ambiarray/io.hpp"
#include "ambiarray/radial.hpp"
#include "ambiarray/sh.hpp"
#include "ambiarray/steering.hpp"

namespace ambiarray {

void HrtfSet::validate() const {
    grid.validate();
    freqs.validate();
    const int q = grid.size();
    const int nb = freqs.bin_count();
    if (left.rows() != q || right.rows() != q)
        throw DimensionError("hrtf set row count does not match grid");
    if (left.cols() != nb || right.cols() != nb)
        throw DimensionError("hrtf set bin count does not match frequency grid");
    const double scale = std::max(left.cwiseAbs().maxCoeff(), right.cwiseAbs().maxCoeff());
    const double dc_imag =
        std::max(left.col(0).imag().cwiseAbs().maxCoeff(), right.col(0).imag().cwiseAbs().maxCoeff());
    if (dc_imag > 1e-9 * (1.0 + scale))
        throw DomainError("hrtf set DC bin must be real valued");
}

void HrtfSh::validate() const {
    freqs.validate();
    const int nc = sh_channel_count(order);
    if (left.rows() != nc || right.rows() != nc)
        throw DimensionError("hrtf coefficients row count does not match order");
    if (left.cols() != freqs.bin_count() || right.cols() != freqs.bin_count())
        throw DimensionError("hrtf coefficients bin count does not match frequency grid");
}

double CrossfadeSpec::alpha(double f) const {
    if (f <= f_min) return 0.0;
    if (f >= f_max) return 1.0;
    return (f - f_min) / (f_max - f_min);
}

void CrossfadeSpec::validate(double nyquist) const {
    if (!(f_min > 0.0) || !(f_max > f_min))
        throw DomainError("crossfade needs 0 < f_min < f_max");
    if (f_max > nyquist) throw DomainError("crossfade f_max exceeds nyquist");
}

HrtfSource analytic_sphere_hrtf(const FrequencyGrid& freqs, double head_radius,
                                Direction left_ear, Direction right_ear) {
    freqs.validate();
    if (!(head_radius > 0.0)) throw DomainError("head radius must be positive");
    const int nb = freqs.bin_count();
    // per-bin radial profiles c_n = (2n+1)/(4pi) b_n(ka) and truncation orders
    auto trunc = std::make_shared<std::vector<int>>(nb);
    auto coeff = std::make_shared<std::vector<std::vector<cdouble>>>(nb);
    int tmax = 1;
    for (int j = 0; j < nb; ++j) {
        const double ka = 2.0 * kPi * freqs.bin_hz(j) * head_radius / kSoundSpeed;
        const int t = default_truncation_order(ka);
        (*trunc)[j] = t;
        tmax = std::max(tmax, t);
        auto& c = (*coeff)[j];
        c.resize(t + 1);
        for (int n = 0; n <= t; ++n)
            c[n] = (2.0 * n + 1.0) / kFourPi * rigid_sphere_radial(n, ka);
    }
    const Vector3d le = left_ear.unit(), re = right_ear.unit();

    HrtfSource src;
    src.name = "analytic_sphere";
    src.freqs = freqs;
    src.at = [=](const Direction& dir) {
        const Vector3d u = dir.unit();
        VectorXcd l(nb), r(nb);
        std::vector<double> pl, pr;
        legendre_polynomials(tmax, std::clamp(u.dot(le), -1.0, 1.0), pl);
        legendre_polynomials(tmax, std::clamp(u.dot(re), -1.0, 1.0), pr);
        for (int j = 0; j < nb; ++j) {
            cdouble al(0, 0), ar(0, 0);
            const auto& c = (*coeff)[j];
            for (int n = 0; n <= (*trunc)[j]; ++n) {
                al += c[n] * pl[n];
                ar += c[n] * pr[n];
            }
            l[j] = al;
            r[j] = ar;
        }
        return std::make_pair(std::move(l), std::move(r));
    };
    return src;
}

namespace {

// weighted normal equations (Y^H W Y) h = Y^H W rhs for every bin at once
MatrixXcd weighted_sh_fit(const MatrixXcd& y, const VectorXd& w, const MatrixXcd& rhs,
                          const char* what) {
    const MatrixXcd yw = y.adjoint() * w.asDiagonal();
    Eigen::LDLT<MatrixXcd> ldlt(yw * y);
    if (ldlt.info() != Eigen::Success)
        throw NumericalError(std::string(what) + ": SH normal equations failed");
    const VectorXd d = ldlt.vectorD().real();
    if (d.minCoeff() < 1e-10 * d.maxCoeff())
        throw NumericalError(std::string(what) + ": grid cannot resolve the requested order");
    return ldlt.solve(yw * rhs);
}

}  // namespace

HrtfSource sh_interp_hrtf(const HrtfSet& set, int order) {
    HrtfSh fit = ls_encode(set, order);
    auto left = std::make_shared<MatrixXcd>(fit.left.transpose());    // bins x nc
    auto right = std::make_shared<MatrixXcd>(fit.right.transpose());
    HrtfSource src;
    src.name = set.name + "_sh" + std::to_string(order);
    src.freqs = set.freqs;
    src.at = [left, right, order](const Direction& dir) {
        const VectorXcd y = sh_vector(dir, order);
        return std::make_pair(VectorXcd(*left * y), VectorXcd(*right * y));
    };
    return src;
}

HrtfSet sample_hrtf(const HrtfSource& source, const DirectionGrid& grid) {
    grid.validate();
    HrtfSet set;
    set.name = source.name;
    set.grid = grid;
    set.freqs = source.freqs;
    set.left.resize(grid.size(), source.freqs.bin_count());
    set.right.resize(grid.size(), source.freqs.bin_count());
    for (int q = 0; q < grid.size(); ++q) {
        auto [l, r] = source.at(grid.directions[q]);
        set.left.row(q) = l.transpose();
        set.right.row(q) = r.transpose();
    }
    set.validate();
    return set;
}

HrtfSh ls_encode(const HrtfSet& set, int order) {
    set.validate();
    if (order < 0) throw DomainError("order must be >= 0");
    const MatrixXcd y = sh_matrix(set.grid, order);
    HrtfSh h;
    h.order = order;
    h.variant = "ls";
    h.freqs = set.freqs;
    h.left = weighted_sh_fit(y, set.grid.weights, set.left, "ls_encode");
    h.right = weighted_sh_fit(y, set.grid.weights, set.right, "ls_encode");
    return h;
}

VectorXcd magls_solve_bin(const MatrixXcd& g, const MatrixXcd& b, const VectorXd& target_mag,
                          const VectorXd& phase0, double sig2, double noise2,
                          const IterOptions& opts, bool* converged,
                          std::vector<double>* objective) {
    if (g.rows() != target_mag.size() || g.rows() != phase0.size())
        throw DimensionError("magnitude solver operand sizes differ");
    if (opts.max_iterations < 1) throw DomainError("need at least one iteration");
    const Eigen::Index nc = g.cols();
    MatrixXcd a = sig2 * (g.adjoint() * g);
    if (noise2 > 0.0 && b.size() > 0) a += noise2 * (b.adjoint() * b);
    // tiny ridge keeps unconstrained coefficients at zero instead of blowing up
    const double floor = std::max(1e-13 * a.trace().real() / double(nc), 1e-300);
    a.diagonal().array() += floor;
    Eigen::LDLT<MatrixXcd> ldlt(a);
    if (ldlt.info() != Eigen::Success)
        throw NumericalError("magnitude solver normal equations failed");

    VectorXd phase = phase0;
    VectorXcd h;
    double prev = -1.0;
    bool ok = false;
    for (int it = 0; it < opts.max_iterations; ++it) {
        VectorXcd target(target_mag.size());
        for (Eigen::Index i = 0; i < target.size(); ++i)
            target[i] = std::polar(target_mag[i], phase[i]);
        h = ldlt.solve(sig2 * (g.adjoint() * target));
        const VectorXcd recon = g * h;
        double j = sig2 * (recon.cwiseAbs() - target_mag).squaredNorm();
        if (noise2 > 0.0 && b.size() > 0) j += noise2 * (b * h).squaredNorm();
        if (objective) objective->push_back(j);
        for (Eigen::Index i = 0; i < recon.size(); ++i)
            phase[i] = std::atan2(recon[i].imag(), recon[i].real());
        if (prev >= 0.0 && std::abs(prev - j) <= opts.rel_tol * std::max(prev, 1e-300)) {
            ok = true;
            break;
        }
        prev = j;
    }
    if (converged) *converged = ok;
    return h;
}

namespace {

VectorXd phases_of(const VectorXcd& v) {
    VectorXd p(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) p[i] = std::atan2(v[i].imag(), v[i].real());
    return p;
}

// Shared driver for the magnitude pipelines: below the fade-in the supplied
// per-bin low-band solution passes through untouched; from the first
// nonzero-alpha bin upward the magnitude objective is refined by alternating
// projection, with phases carried bin to bin. The low-band solution of the
// first refined bin seeds the phases.
struct MagDriver {
    std::function<MatrixXcd(int)> g_of;  // Q x nc reconstruction operator
    std::function<MatrixXcd(int)> b_of;  // noise path, may return empty
    double sig2 = 1.0, noise2 = 0.0;

    void run(const MatrixXcd& ref, const MatrixXcd& low, const FrequencyGrid& freqs,
             const CrossfadeSpec& fade, const IterOptions& opts, MatrixXcd& out,
             std::vector<int>& nonconverged) {
        const int nb = freqs.bin_count();
        VectorXcd h_prev;
        bool have_prev = false;
        for (int j = 0; j < nb; ++j) {
            if (fade.alpha(freqs.bin_hz(j)) <= 0.0) {
                out.col(j) = low.col(j);
                continue;
            }
            const MatrixXcd g = g_of(j);
            const MatrixXcd b = b_of ? b_of(j) : MatrixXcd();
            if (!have_prev) {  // seed phases from this bin's low-band solution
                h_prev = low.col(j);
                have_prev = true;
            }
            bool converged = false;
            out.col(j) = magls_solve_bin(g, b, ref.col(j).cwiseAbs(), phases_of(g * h_prev),
                                         sig2, noise2, opts, &converged);
            if (!converged) nonconverged.push_back(j);
            h_prev = out.col(j);
        }
    }
};

}  // namespace

HrtfSh magls_encode(const HrtfSet& set, int order, const CrossfadeSpec& fade,
                    const IterOptions& opts) {
    set.validate();
    fade.validate(set.freqs.nyquist());
    const HrtfSh base = ls_encode(set, order);
    const auto y = std::make_shared<MatrixXcd>(sh_matrix(set.grid, order));

    HrtfSh h;
    h.order = order;
    h.variant = "magls";
    h.freqs = set.freqs;
    h.left.resize(y->cols(), set.freqs.bin_count());
    h.right.resize(y->cols(), set.freqs.bin_count());

    MagDriver drv;
    drv.g_of = [y](int) { return *y; };
    drv.b_of = nullptr;
    drv.run(set.left, base.left, set.freqs, fade, opts, h.left, h.nonconverged_left);
    drv.run(set.right, base.right, set.freqs, fade, opts, h.right, h.nonconverged_right);
    return h;
}

namespace {

struct AaOperators {
    std::shared_ptr<EncodingFilter> tilde_filter;
    std::vector<SteeringMatrix> const* steering;
    double sig2, noise2;

    static AaOperators make(const HrtfSet& set, const EncodingFilter& filter,
                            const std::vector<SteeringMatrix>& steering, double snr_ratio) {
        set.validate();
        filter.validate();
        if (!(filter.freqs == set.freqs))
            throw DimensionError("filter and hrtf set frequency grids differ");
        if (static_cast<int>(steering.size()) != set.freqs.bin_count())
            throw DimensionError("steering set size does not match frequency grid");
        for (const auto& s : steering) {
            if (s.entries.cols() != set.grid.size())
                throw DimensionError("steering directions do not match the hrtf grid");
            if (s.entries.rows() != filter.mic_count())
                throw DimensionError("steering mic count does not match the filter");
        }
        AaOperators ops;
        ops.tilde_filter = std::make_shared<EncodingFilter>(
            filter.tilde ? filter : tilde_reindex(filter));
        ops.steering = &steering;
        ops.sig2 = 1.0;
        const double ratio = snr_ratio > 0.0 ? snr_ratio : filter.snr_ratio;
        if (!(ratio > 0.0)) throw DomainError("snr_ratio must be positive");
        ops.noise2 = 1.0 / ratio;
        return ops;
    }

    MatrixXcd b(int j) const { return tilde_filter->bins[j].conjugate(); }
    MatrixXcd g(int j) const { return (*steering)[j].entries.transpose() * b(j); }
};

}  // namespace

HrtfSh aa_ls_encode(const HrtfSet& set, const EncodingFilter& filter,
                    const std::vector<SteeringMatrix>& steering, double snr_ratio) {
    AaOperators ops = AaOperators::make(set, filter, steering, snr_ratio);
    HrtfSh h;
    h.order = filter.order;
    h.variant = "aa_ls";
    h.freqs = set.freqs;
    const int nc = sh_channel_count(filter.order);
    const int nb = set.freqs.bin_count();
    h.left.resize(nc, nb);
    h.right.resize(nc, nb);
    for (int j = 0; j < nb; ++j) {
        const MatrixXcd g = ops.g(j);
        const MatrixXcd b = ops.b(j);
        MatrixXcd a = ops.sig2 * (g.adjoint() * g) + ops.noise2 * (b.adjoint() * b);
        a.diagonal().array() += std::max(1e-13 * a.trace().real() / double(nc), 1e-300);
        Eigen::LDLT<MatrixXcd> ldlt(a);
        if (ldlt.info() != Eigen::Success)
            throw NumericalError("aa_ls solve failed at bin " + std::to_string(j));
        h.left.col(j) = ldlt.solve(ops.sig2 * (g.adjoint() * set.left.col(j)));
        h.right.col(j) = ldlt.solve(ops.sig2 * (g.adjoint() * set.right.col(j)));
    }
    return h;
}

HrtfSh aa_magls_encode(const HrtfSet& set, const EncodingFilter& filter,
                       const std::vector<SteeringMatrix>& steering, const CrossfadeSpec& fade,
                       double snr_ratio, const IterOptions& opts) {
    AaOperators ops = AaOperators::make(set, filter, steering, snr_ratio);
    fade.validate(set.freqs.nyquist());
    const HrtfSh base = aa_ls_encode(set, filter, steering, snr_ratio);
    HrtfSh h;
    h.order = filter.order;
    h.variant = "aa_magls";
    h.freqs = set.freqs;
    const int nc = sh_channel_count(filter.order);
    h.left.resize(nc, set.freqs.bin_count());
    h.right.resize(nc, set.freqs.bin_count());

    MagDriver drv;
    drv.g_of = [&ops](int j) { return ops.g(j); };
    drv.b_of = [&ops](int j) { return ops.b(j); };
    drv.sig2 = ops.sig2;
    drv.noise2 = ops.noise2;
    drv.run(set.left, base.left, set.freqs, fade, opts, h.left, h.nonconverged_left);
    drv.run(set.right, base.right, set.freqs, fade, opts, h.right, h.nonconverged_right);
    return h;
}

HrtfSh crossfade(const HrtfSh& low, const HrtfSh& high, const CrossfadeSpec& fade) {
    low.validate();
    high.validate();
    if (low.order != high.order) throw DimensionError("crossfade orders differ");
    if (!(low.freqs == high.freqs)) throw DimensionError("crossfade frequency grids differ");
    fade.validate(low.freqs.nyquist());
    HrtfSh out;
    out.order = low.order;
    out.variant = "crossfaded";
    out.freqs = low.freqs;
    out.left.resize(low.left.rows(), low.left.cols());
    out.right.resize(low.right.rows(), low.right.cols());
    for (int j = 0; j < low.freqs.bin_count(); ++j) {
        const double a = fade.alpha(low.freqs.bin_hz(j));
        out.left.col(j) = (1.0 - a) * low.left.col(j) + a * high.left.col(j);
        out.right.col(j) = (1.0 - a) * low.right.col(j) + a * high.right.col(j);
    }
    auto merge = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return a;
    };
    out.nonconverged_left = merge(low.nonconverged_left, high.nonconverged_left);
    out.nonconverged_right = merge(low.nonconverged_right, high.nonconverged_right);
    return out;
}

void write_hrtf_set(const std::filesystem::path& dir, const HrtfSet& set) {
    set.validate();
    std::filesystem::create_directories(dir);
    write_grid_csv(dir / "grid.csv", set.grid);
    auto dump_ear = [&](const char* file, const MatrixXcd& ear) {
        std::string payload;
        for (int j = 0; j < ear.cols(); ++j) {
            const VectorXcd col = ear.col(j);
            append_complex_le(payload, col.data(), size_t(col.size()));
        }
        std::ofstream os(dir / file, std::ios::binary);
        if (!os) throw IoError("cannot open " + (dir / file).string() + " for writing");
        os.write(payload.data(), std::streamsize(payload.size()));
        if (!os) throw IoError("write failed for " + (dir / file).string());
    };
    dump_ear("left.f64", set.left);
    dump_ear("right.f64", set.right);
    json manifest;
    manifest["schema_version"] = 1;
    manifest["kind"] = "hrtf_set";
    manifest["name"] = set.name;
    manifest["sample_rate"] = set.freqs.sample_rate;
    manifest["nfft"] = set.freqs.nfft;
    manifest["direction_count"] = set.grid.size();
    manifest["grid_csv"] = "grid.csv";
    manifest["left"] = "left.f64";
    manifest["right"] = "right.f64";
    write_json_file(dir / "manifest.json", manifest);
}

HrtfSet read_hrtf_set(const std::filesystem::path& dir) {
    const json manifest = read_json_file(dir / "manifest.json");
    try {
        if (manifest.at("kind") != "hrtf_set")
            throw IoError(dir.string() + " is not an hrtf set directory");
        HrtfSet set;
        set.name = manifest.value("name", dir.filename().string());
        set.freqs = {manifest.at("sample_rate").get<double>(), manifest.at("nfft").get<int>()};
        set.grid = read_grid_csv(dir / manifest.at("grid_csv").get<std::string>());
        const int q = manifest.at("direction_count").get<int>();
        if (q != set.grid.size())
            throw IoError(dir.string() + ": manifest direction count does not match grid");
        const int nb = set.freqs.bin_count();
        auto load_ear = [&](const std::string& file) {
            std::ifstream is(dir / file, std::ios::binary);
            if (!is) throw IoError("cannot open " + (dir / file).string());
            std::vector<uint8_t> buf((std::istreambuf_iterator<char>(is)),
                                     std::istreambuf_iterator<char>());
            const std::vector<cdouble> flat = parse_complex_le(buf.data(), buf.size());
            if (flat.size() != size_t(q) * nb)
                throw IoError((dir / file).string() + ": unexpected payload size");
            MatrixXcd ear(q, nb);
            for (int j = 0; j < nb; ++j)
                ear.col(j) = Eigen::Map<const VectorXcd>(flat.data() + size_t(j) * q, q);
            return ear;
        };
        set.left = load_ear(manifest.at("left").get<std::string>());
        set.right = load_ear(manifest.at("right").get<std::string>());
        set.validate();
        return set;
    } catch (const json::exception& e) {
        throw IoError(dir.string() + ": " + e.what());
    }
}

void write_hrtf_sh(const std::filesystem::path& path, const HrtfSh& h) {
    h.validate();
    json header;
    header["kind"] = "hrtf_sh";
    header["schema_version"] = 1;
    header["order"] = h.order;
    header["variant"] = h.variant;
    header["sample_rate"] = h.freqs.sample_rate;
    header["nfft"] = h.freqs.nfft;
    header["nonconverged_left"] = h.nonconverged_left;
    header["nonconverged_right"] = h.nonconverged_right;
    std::string payload;
    for (const MatrixXcd* ear : {&h.left, &h.right}) {
        for (int j = 0; j < ear->cols(); ++j) {
            const VectorXcd col = ear->col(j);
            append_complex_le(payload, col.data(), size_t(col.size()));
        }
    }
    write_container(path, header, payload);
}

HrtfSh read_hrtf_sh(const std::filesystem::path& path) {
    Container c = read_container(path);
    try {
        if (c.header.at("kind") != "hrtf_sh")
            throw IoError(path.string() + " is not an hrtf coefficient container");
        HrtfSh h;
        h.order = c.header.at("order").get<int>();
        h.variant = c.header.at("variant").get<std::string>();
        h.freqs = {c.header.at("sample_rate").get<double>(), c.header.at("nfft").get<int>()};
        h.nonconverged_left = c.header.value("nonconverged_left", std::vector<int>{});
        h.nonconverged_right = c.header.value("nonconverged_right", std::vector<int>{});
        const int nc = sh_channel_count(h.order);
        const int nb = h.freqs.bin_count();
        const std::vector<cdouble> flat = parse_complex_le(c.payload.data(), c.payload.size());
        if (flat.size() != 2 * size_t(nc) * nb)
            throw IoError(path.string() + ": payload size does not match header");
        h.left.resize(nc, nb);
        h.right.resize(nc, nb);
        for (int j = 0; j < nb; ++j) {
            h.left.col(j) = Eigen::Map<const VectorXcd>(flat.data() + size_t(j) * nc, nc);
            h.right.col(j) =
                Eigen::Map<const VectorXcd>(flat.data() + size_t(nb + j) * nc, nc);
        }
        h.validate();
        return h;
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

}  // namespace ambiarray
