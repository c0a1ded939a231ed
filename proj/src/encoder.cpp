#include "ambiarray/encoder.hpp"

#include "ambiarray/acn.hpp"
#include "ambiarray/io.hpp"
#include "ambiarray/sh.hpp"

namespace ambiarray {

void MicSpectra::validate() const {
    freqs.validate();
    if (bins.cols() != freqs.bin_count())
        throw DimensionError("mic spectra bin count does not match frequency grid");
    if (bins.rows() < 1) throw DimensionError("mic spectra needs at least one channel");
}

void ShSignal::validate() const {
    freqs.validate();
    if (coeffs.rows() != sh_channel_count(order))
        throw DimensionError("sh signal channel count does not match order");
    if (coeffs.cols() != freqs.bin_count())
        throw DimensionError("sh signal bin count does not match frequency grid");
}

void EncodingFilter::validate() const {
    freqs.validate();
    if (static_cast<int>(bins.size()) != freqs.bin_count())
        throw DimensionError("filter bin count does not match frequency grid");
    const int nc = sh_channel_count(order);
    for (const auto& b : bins) {
        if (b.cols() != nc) throw DimensionError("filter column count does not match order");
        if (b.rows() != bins.front().rows())
            throw DimensionError("filter mic count varies across bins");
    }
}

EncodingFilter asm_filter(const std::vector<SteeringMatrix>& steering, const DirectionGrid& grid,
                          int order, double snr_ratio, const FrequencyGrid& freqs, bool weighted) {
    freqs.validate();
    grid.validate();
    if (order < 0) throw DomainError("order must be >= 0");
    if (!(snr_ratio > 0.0)) throw DomainError("snr_ratio must be positive");
    if (static_cast<int>(steering.size()) != freqs.bin_count())
        throw DimensionError("steering set size does not match frequency grid");

    const MatrixXcd y = sh_matrix(grid, order);
    EncodingFilter f;
    f.order = order;
    f.snr_ratio = snr_ratio;
    f.grid_name = grid.name;
    f.freqs = freqs;
    f.bins.resize(steering.size());
    const double lambda = 1.0 / snr_ratio;
    for (size_t j = 0; j < steering.size(); ++j) {
        const MatrixXcd& v = steering[j].entries;
        if (v.cols() != grid.size())
            throw DimensionError("steering direction count does not match grid");
        if (!v.allFinite())
            throw DomainError("steering matrix has non-finite entries at bin " +
                              std::to_string(j));
        MatrixXcd gram, rhs;
        if (weighted) {
            const MatrixXcd vw = v * grid.weights.asDiagonal();
            gram = vw * v.adjoint();
            rhs = vw * y;
        } else {
            gram = v * v.adjoint();
            rhs = v * y;
        }
        gram.diagonal().array() += lambda;
        Eigen::LDLT<MatrixXcd> ldlt(gram);
        if (ldlt.info() != Eigen::Success)
            throw NumericalError("encoder normal equations not solvable at bin " +
                                 std::to_string(j));
        f.bins[j] = ldlt.solve(rhs);
    }
    return f;
}

VectorXcd encode_bin(const MatrixXcd& filter_bin, const VectorXcd& mic_bin) {
    if (filter_bin.rows() != mic_bin.size())
        throw DimensionError("mic count mismatch between filter and signal");
    return filter_bin.adjoint() * mic_bin;
}

ShSignal encode(const EncodingFilter& filter, const MicSpectra& mics) {
    filter.validate();
    mics.validate();
    if (!(filter.freqs == mics.freqs))
        throw DimensionError("filter and signal frequency grids differ");
    if (filter.mic_count() != mics.bins.rows())
        throw DimensionError("mic count mismatch between filter and signal");
    ShSignal a;
    a.order = filter.order;
    a.tilde = filter.tilde;
    a.freqs = filter.freqs;
    a.coeffs.resize(sh_channel_count(filter.order), filter.freqs.bin_count());
    for (int j = 0; j < filter.freqs.bin_count(); ++j)
        a.coeffs.col(j) = filter.bins[j].adjoint() * mics.bins.col(j);
    return a;
}

MatrixXcd tilde_reindex_rows(const MatrixXcd& coeffs, int order) {
    if (coeffs.rows() != sh_channel_count(order))
        throw DimensionError("row count does not match order");
    MatrixXcd out(coeffs.rows(), coeffs.cols());
    for (int n = 0; n <= order; ++n)
        for (int m = -n; m <= n; ++m)
            out.row(acn_index(n, m)) = (m % 2 ? -1.0 : 1.0) * coeffs.row(acn_index(n, -m));
    return out;
}

ShSignal tilde_reindex(const ShSignal& a) {
    a.validate();
    ShSignal out = a;
    out.tilde = !a.tilde;
    out.coeffs = tilde_reindex_rows(a.coeffs, a.order);
    return out;
}

EncodingFilter tilde_reindex(const EncodingFilter& filter) {
    filter.validate();
    EncodingFilter out = filter;
    out.tilde = !filter.tilde;
    for (auto& b : out.bins) b = tilde_reindex_rows(b.transpose(), filter.order).transpose();
    return out;
}

void write_filter(const std::filesystem::path& path, const EncodingFilter& f) {
    f.validate();
    json header;
    header["kind"] = "encoding_filter";
    header["schema_version"] = 1;
    header["mic_count"] = f.mic_count();
    header["order"] = f.order;
    header["grid"] = f.grid_name;
    header["sample_rate"] = f.freqs.sample_rate;
    header["nfft"] = f.freqs.nfft;
    header["snr_ratio"] = f.snr_ratio;
    header["tilde"] = f.tilde;
    std::string payload;
    for (const auto& b : f.bins) {
        // row major: all coefficients of mic 0, then mic 1, ...
        const MatrixXcd rm = b.transpose();
        append_complex_le(payload, rm.data(), size_t(rm.size()));
    }
    write_container(path, header, payload);
}

EncodingFilter read_filter(const std::filesystem::path& path) {
    Container c = read_container(path);
    try {
        if (c.header.at("kind") != "encoding_filter")
            throw IoError(path.string() + " is not an encoding filter container");
        EncodingFilter f;
        f.order = c.header.at("order").get<int>();
        f.snr_ratio = c.header.at("snr_ratio").get<double>();
        f.grid_name = c.header.at("grid").get<std::string>();
        f.freqs = {c.header.at("sample_rate").get<double>(), c.header.at("nfft").get<int>()};
        f.tilde = c.header.value("tilde", false);
        const int nmic = c.header.at("mic_count").get<int>();
        const int nc = sh_channel_count(f.order);
        const std::vector<cdouble> flat = parse_complex_le(c.payload.data(), c.payload.size());
        const size_t per_bin = size_t(nmic) * nc;
        if (flat.size() != per_bin * f.freqs.bin_count())
            throw IoError(path.string() + ": payload size does not match header");
        f.bins.resize(f.freqs.bin_count());
        for (int j = 0; j < f.freqs.bin_count(); ++j) {
            MatrixXcd rm = Eigen::Map<const MatrixXcd>(flat.data() + j * per_bin, nc, nmic);
            f.bins[j] = rm.transpose();
        }
        f.validate();
        return f;
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

}  // namespace ambiarray
