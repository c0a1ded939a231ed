#include "ambiarray/fft.hpp"

#include <cmath>

namespace ambiarray {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cdouble>& x, bool inverse) {
    const size_t n = x.size();
    for (size_t i = 1, j = 0; i < n; ++i) {  // bit reversal permutation
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / double(len);
        const cdouble wl = std::polar(1.0, ang);
        for (size_t i = 0; i < n; i += len) {
            cdouble w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const cdouble u = x[i + k];
                const cdouble v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Chirp z-transform: turns an arbitrary-length DFT into a convolution that a
// power-of-two FFT can evaluate.
void fft_bluestein(std::vector<cdouble>& x, bool inverse) {
    const size_t n = x.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cdouble> chirp(n);
    for (size_t k = 0; k < n; ++k) {
        // k*k mod 2n avoids the precision loss of huge phase arguments
        const size_t kk = (k * k) % (2 * n);
        chirp[k] = std::polar(1.0, sign * kPi * double(kk) / double(n));
    }
    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cdouble> a(m, cdouble(0, 0)), b(m, cdouble(0, 0));
    for (size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    for (size_t k = 0; k < n; ++k) {
        b[k] = std::conj(chirp[k]);
        if (k) b[m - k] = b[k];
    }
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, true);
    const double scale = 1.0 / double(m);
    for (size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k] * scale;
}

}  // namespace

void fft_inplace(std::vector<cdouble>& x, bool inverse) {
    if (x.empty()) throw DomainError("fft of empty vector");
    if (x.size() > 1) {
        if (is_pow2(x.size()))
            fft_pow2(x, inverse);
        else
            fft_bluestein(x, inverse);
    }
    if (inverse) {
        const double scale = 1.0 / double(x.size());
        for (auto& v : x) v *= scale;
    }
}

std::vector<cdouble> fft(std::vector<cdouble> x) {
    fft_inplace(x, false);
    return x;
}

std::vector<cdouble> ifft(std::vector<cdouble> x) {
    fft_inplace(x, true);
    return x;
}

std::vector<cdouble> rfft(const std::vector<double>& x) {
    if (x.empty() || x.size() % 2) throw DomainError("rfft needs even nonzero length");
    std::vector<cdouble> full(x.begin(), x.end());
    fft_inplace(full, false);
    full.resize(x.size() / 2 + 1);
    return full;
}

std::vector<double> irfft(const std::vector<cdouble>& half, int nfft, double* imag_residue) {
    if (nfft < 2 || nfft % 2) throw DomainError("irfft needs even nfft >= 2");
    if (static_cast<int>(half.size()) != nfft / 2 + 1)
        throw DimensionError("irfft expects nfft/2+1 bins");
    double residue = std::max(std::abs(half.front().imag()), std::abs(half.back().imag()));
    if (imag_residue) *imag_residue = residue;
    std::vector<cdouble> full(nfft);
    full[0] = half[0].real();
    full[nfft / 2] = half[nfft / 2].real();
    for (int k = 1; k < nfft / 2; ++k) {
        full[k] = half[k];
        full[nfft - k] = std::conj(half[k]);
    }
    fft_inplace(full, true);
    std::vector<double> out(nfft);
    for (int i = 0; i < nfft; ++i) out[i] = full[i].real();
    return out;
}

}  // namespace ambiarray
