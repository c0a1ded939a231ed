#include "ambiarray/render.hpp"

#include <cmath>

#include "ambiarray/fft.hpp"
#include "ambiarray/sh.hpp"

namespace ambiarray {

void BinauralSpectra::validate() const {
    freqs.validate();
    if (left.size() != freqs.bin_count() || right.size() != freqs.bin_count())
        throw DimensionError("binaural spectra bin count does not match frequency grid");
}

BinauralSpectra render(const HrtfSh& hrtf, const ShSignal& signal) {
    hrtf.validate();
    signal.validate();
    if (!(hrtf.freqs == signal.freqs))
        throw DimensionError("hrtf and signal frequency grids differ");
    const MatrixXcd coeffs =
        signal.tilde ? signal.coeffs : tilde_reindex_rows(signal.coeffs, signal.order);
    const int order = std::min(hrtf.order, signal.order);
    const int nc = sh_channel_count(order);

    BinauralSpectra out;
    out.freqs = hrtf.freqs;
    out.left.resize(out.freqs.bin_count());
    out.right.resize(out.freqs.bin_count());
    for (int j = 0; j < out.freqs.bin_count(); ++j) {
        const VectorXcd ac = coeffs.col(j).head(nc);
        out.left[j] = hrtf.left.col(j).head(nc).transpose() * ac;
        out.right[j] = hrtf.right.col(j).head(nc).transpose() * ac;
    }
    return out;
}

ShSignal ideal_plane_wave_signal(const Direction& dir, int order, const FrequencyGrid& freqs,
                                 const VectorXcd& spectrum) {
    freqs.validate();
    if (spectrum.size() != freqs.bin_count())
        throw DimensionError("spectrum length does not match frequency grid");
    ShSignal a;
    a.order = order;
    a.tilde = false;
    a.freqs = freqs;
    a.coeffs = sh_vector(dir, order).conjugate() * spectrum.transpose();
    return a;
}

HrtfSh rotate(const HrtfSh& h, double delta_phi, double delta_theta) {
    h.validate();
    HrtfSh out = h;
    if (delta_phi == 0.0 && delta_theta == 0.0) return out;
    const RotationOp op = wigner_d(delta_phi, delta_theta, h.order);
    out.left = op.matrix * h.left;
    out.right = op.matrix * h.right;
    return out;
}

ShSignal rotate(const ShSignal& a, double delta_phi, double delta_theta) {
    a.validate();
    ShSignal out = a;
    if (delta_phi == 0.0 && delta_theta == 0.0) return out;
    const RotationOp op = wigner_d(delta_phi, delta_theta, a.order);
    out.coeffs = a.tilde ? MatrixXcd(op.matrix.transpose() * a.coeffs)
                         : MatrixXcd(op.matrix * a.coeffs);
    return out;
}

namespace {

std::vector<double> ear_to_time(const VectorXcd& spec, int nfft, double& residue) {
    std::vector<cdouble> half(spec.data(), spec.data() + spec.size());
    double r = 0.0;
    std::vector<double> t = irfft(half, nfft, &r);
    residue = std::max(residue, r);
    return t;
}

void finalize(StereoBuffer& buf, bool normalize) {
    double peak = 0.0;
    for (double v : buf.left) peak = std::max(peak, std::abs(v));
    for (double v : buf.right) peak = std::max(peak, std::abs(v));
    if (normalize && peak > 0.999) {
        const double s = 0.999 / peak;
        for (double& v : buf.left) v *= s;
        for (double& v : buf.right) v *= s;
        peak = 0.999;
    }
    if (peak > 1.0) {
        for (double v : buf.left) buf.clipped_samples += std::abs(v) > 1.0;
        for (double v : buf.right) buf.clipped_samples += std::abs(v) > 1.0;
    }
}

}  // namespace

StereoBuffer to_time(const BinauralSpectra& spectra, bool normalize) {
    spectra.validate();
    StereoBuffer buf;
    buf.sample_rate = spectra.freqs.sample_rate;
    buf.left = ear_to_time(spectra.left, spectra.freqs.nfft, buf.imag_residue);
    buf.right = ear_to_time(spectra.right, spectra.freqs.nfft, buf.imag_residue);
    finalize(buf, normalize);
    return buf;
}

StereoBuffer filter_audio(const std::vector<double>& mono, double sample_rate,
                          const BinauralSpectra& filter, bool normalize) {
    filter.validate();
    if (mono.empty()) throw DomainError("input audio is empty");
    if (sample_rate != filter.freqs.sample_rate)
        throw DomainError("audio sample rate does not match the filter");

    const int nfft = filter.freqs.nfft;
    StereoBuffer ir = to_time({filter.freqs, filter.left, filter.right}, false);
    const size_t out_len = mono.size() + nfft - 1;

    // overlap-add with blocks of nfft samples and FFTs of 2*nfft
    const int fft_len = 2 * nfft;
    std::vector<cdouble> irl(ir.left.begin(), ir.left.end());
    std::vector<cdouble> irr(ir.right.begin(), ir.right.end());
    irl.resize(fft_len);
    irr.resize(fft_len);
    fft_inplace(irl, false);
    fft_inplace(irr, false);

    StereoBuffer buf;
    buf.sample_rate = sample_rate;
    buf.imag_residue = ir.imag_residue;
    buf.left.assign(out_len, 0.0);
    buf.right.assign(out_len, 0.0);
    std::vector<cdouble> block(fft_len);
    for (size_t start = 0; start < mono.size(); start += nfft) {
        const size_t n = std::min(size_t(nfft), mono.size() - start);
        std::fill(block.begin(), block.end(), cdouble(0, 0));
        for (size_t i = 0; i < n; ++i) block[i] = mono[start + i];
        fft_inplace(block, false);
        std::vector<cdouble> outl(fft_len), outr(fft_len);
        for (int i = 0; i < fft_len; ++i) {
            outl[i] = block[i] * irl[i];
            outr[i] = block[i] * irr[i];
        }
        fft_inplace(outl, true);
        fft_inplace(outr, true);
        const size_t limit = std::min(out_len - start, size_t(fft_len) - 1);
        for (size_t i = 0; i < limit; ++i) {
            buf.left[start + i] += outl[i].real();
            buf.right[start + i] += outr[i].real();
        }
    }
    finalize(buf, normalize);
    return buf;
}

}  // namespace ambiarray
