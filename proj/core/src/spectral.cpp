#include "parityns/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace parityns {

namespace {

struct Plans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Plan creation is not thread safe in FFTW; execution with new arrays is.
Plans plans_for(int n) {
  static std::mutex mu;
  static std::map<int, Plans> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> scratch(static_cast<std::size_t>(n) * n * n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  Plans p;
  p.fwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, flags);
  p.bwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, flags);
  cache.emplace(n, p);
  return p;
}

template <class F>
void for_each_mode(int n, F&& f) {
  std::size_t i = 0;
  for (int j3 = 0; j3 < n; ++j3)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j1 = 0; j1 < n; ++j1, ++i) f(i, j1, j2, j3);
}

}  // namespace

SpectralGrid forward(const Grid3& f) {
  SpectralGrid out(f.n());
  out.values() = f.values();
  auto* buf = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plans_for(f.n()).fwd, buf, buf);
  return out;
}

Grid3 inverse(const SpectralGrid& f) {
  Grid3 out(f.n());
  out.values() = f.values();
  auto* buf = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plans_for(f.n()).bwd, buf, buf);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out.values()) v *= scale;
  return out;
}

SpectralVector forward(const VectorField& u) { return {forward(u[0]), forward(u[1]), forward(u[2])}; }

VectorField inverse(const SpectralVector& u) { return {inverse(u[0]), inverse(u[1]), inverse(u[2])}; }

void truncate(SpectralGrid& f, int kmax) {
  const int n = f.n();
  for_each_mode(n, [&](std::size_t i, int j1, int j2, int j3) {
    if (std::abs(wavenumber(j1, n)) > kmax || std::abs(wavenumber(j2, n)) > kmax || std::abs(wavenumber(j3, n)) > kmax)
      f[i] = 0.0;
  });
}

void truncate(SpectralVector& u, int kmax) {
  for (int l = 0; l < 3; ++l) truncate(u[l], kmax);
}

SpectralGrid derivative(const SpectralGrid& f, const MultiIndex& idx) {
  const int n = f.n();
  // Per-axis factor (i k)^a, tabulated.
  std::array<std::vector<cplx>, 3> factor;
  for (int a = 0; a < 3; ++a) {
    factor[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(n));
    const int order = idx[static_cast<std::size_t>(a)];
    for (int j = 0; j < n; ++j) {
      const int k = order % 2 ? derivative_wavenumber(j, n) : wavenumber(j, n);
      cplx v = 1.0;
      for (int r = 0; r < order; ++r) v *= cplx(0.0, k);
      factor[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = v;
    }
  }
  SpectralGrid out(n);
  for_each_mode(n, [&](std::size_t i, int j1, int j2, int j3) {
    out[i] = f[i] * factor[0][static_cast<std::size_t>(j1)] * factor[1][static_cast<std::size_t>(j2)] *
             factor[2][static_cast<std::size_t>(j3)];
  });
  return out;
}

Grid3 derivative(const Grid3& f, const MultiIndex& idx) { return inverse(derivative(forward(f), idx)); }

void apply_heat(SpectralGrid& f, double t) {
  if (t == 0.0) return;
  const int n = f.n();
  std::vector<double> decay(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double k = wavenumber(j, n);
    decay[static_cast<std::size_t>(j)] = std::exp(-t * k * k);
  }
  for_each_mode(n, [&](std::size_t i, int j1, int j2, int j3) {
    f[i] *= decay[static_cast<std::size_t>(j1)] * decay[static_cast<std::size_t>(j2)] * decay[static_cast<std::size_t>(j3)];
  });
}

void apply_heat(SpectralVector& u, double t) {
  for (int l = 0; l < 3; ++l) apply_heat(u[l], t);
}

void apply_leray(SpectralVector& u) {
  const int n = u.n();
  for_each_mode(n, [&](std::size_t i, int j1, int j2, int j3) {
    const double k[3] = {static_cast<double>(derivative_wavenumber(j1, n)), static_cast<double>(derivative_wavenumber(j2, n)),
                         static_cast<double>(derivative_wavenumber(j3, n))};
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    if (k2 == 0.0) return;
    const cplx kv = (k[0] * u[0][i] + k[1] * u[1][i] + k[2] * u[2][i]) / k2;
    for (int l = 0; l < 3; ++l) u[l][i] -= k[l] * kv;
  });
}

void apply_inverse_laplacian(SpectralGrid& f) {
  const int n = f.n();
  for_each_mode(n, [&](std::size_t i, int j1, int j2, int j3) {
    const double k1 = derivative_wavenumber(j1, n), k2 = derivative_wavenumber(j2, n), k3 = derivative_wavenumber(j3, n);
    const double kk = k1 * k1 + k2 * k2 + k3 * k3;
    f[i] = kk == 0.0 ? cplx(0.0) : f[i] / kk;
  });
}

}  // namespace parityns
