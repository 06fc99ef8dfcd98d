#pragma once

// FFT plumbing and Fourier multipliers on the periodic grid.
//
// Forward transforms are unnormalized, inverse transforms divide by n^3, so
// inverse(forward(f)) == f. Wavenumbers lie in [-n/2, n/2).

#include "parityns/grid.hpp"
#include "parityns/symtype.hpp"

namespace parityns {

SpectralGrid forward(const Grid3& f);
Grid3 inverse(const SpectralGrid& f);
SpectralVector forward(const VectorField& u);
VectorField inverse(const SpectralVector& u);

/// Integer wavenumber of index j.
inline int wavenumber(int j, int n) { return j < n / 2 ? j : j - n; }
/// Wavenumber used for odd-order derivatives: the Nyquist mode is dropped
/// so that derivatives of real fields stay real.
inline int derivative_wavenumber(int j, int n) { return j == n / 2 ? 0 : wavenumber(j, n); }

/// Largest |k_i| kept by the 2/3 rule.
inline int two_thirds_cutoff(int n) { return (n - 1) / 3; }

/// Zero every mode with some |k_i| > kmax.
void truncate(SpectralGrid& f, int kmax);
void truncate(SpectralVector& u, int kmax);

/// d^idx in spectral space; odd orders use derivative_wavenumber.
SpectralGrid derivative(const SpectralGrid& f, const MultiIndex& idx);
Grid3 derivative(const Grid3& f, const MultiIndex& idx);

/// Multiplies mode k by exp(-t |k|^2).
void apply_heat(SpectralGrid& f, double t);
void apply_heat(SpectralVector& u, double t);

/// v - k (k.v) / |k|^2 with derivative wavenumbers; k = 0 left unchanged.
void apply_leray(SpectralVector& u);

/// (-Delta)^{-1} with the zero mode set to 0.
void apply_inverse_laplacian(SpectralGrid& f);

}  // namespace parityns
