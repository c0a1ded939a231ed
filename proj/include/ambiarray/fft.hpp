#pragma once

#include <vector>

#include "ambiarray/types.hpp"

namespace ambiarray {

// Forward/inverse DFT for any length (radix-2 in place, Bluestein otherwise).
// Forward is unscaled, inverse divides by the length.
void fft_inplace(std::vector<cdouble>& x, bool inverse);

std::vector<cdouble> fft(std::vector<cdouble> x);
std::vector<cdouble> ifft(std::vector<cdouble> x);

// Real transform with even length n, returning the n/2+1 nonnegative bins.
std::vector<cdouble> rfft(const std::vector<double>& x);

// Inverse of rfft. The upper half is completed by conjugate symmetry; DC and
// Nyquist are forced real. If imag_residue is given, it receives the largest
// imaginary magnitude discarded from those two bins.
std::vector<double> irfft(const std::vector<cdouble>& half, int nfft,
                          double* imag_residue = nullptr);

}  // namespace ambiarray
