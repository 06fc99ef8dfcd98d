#include "parityns/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "parityns/enumerate.hpp"
#include "parityns/errors.hpp"
#include "parityns/spectral.hpp"

namespace parityns {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

using Real3 = std::vector<double>;

std::size_t reflected_index(std::size_t i, int n, int axis) {
  const std::size_t un = static_cast<std::size_t>(n);
  std::size_t j[3] = {i % un, (i / un) % un, i / (un * un)};
  j[axis] = (un - j[axis]) % un;
  return j[0] + un * (j[1] + un * j[2]);
}

template <class V>
V reflect_values(const V& f, int n, int axis) {
  V out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[reflected_index(i, n, axis)] = f[i];
  return out;
}

double norm2(const Real3& g) {
  double s = 0.0;
  for (double v : g) s += v * v;
  return std::sqrt(s);
}

PartMeasurement measure_part(const Real3& g, int n, double tol) {
  PartMeasurement m;
  m.norm = norm2(g);
  if (m.norm <= zero_threshold(n)) {
    m.label = PartLabel::zero();
    return m;
  }
  double mean = 0.0;
  for (double v : g) mean += v;
  mean /= static_cast<double>(g.size());
  double dev = 0.0;
  for (double v : g) dev += (v - mean) * (v - mean);
  m.const_residual = std::sqrt(dev) / m.norm;

  int bits[3] = {0, 0, 0};
  bool ok = true;
  for (int axis = 0; axis < 3; ++axis) {
    const Real3 r = reflect_values(g, n, axis);
    double de = 0.0, dodd = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      de += (g[i] - r[i]) * (g[i] - r[i]);
      dodd += (g[i] + r[i]) * (g[i] + r[i]);
    }
    auto& a = m.axes[static_cast<std::size_t>(axis)];
    a.even = std::sqrt(de) / m.norm;
    a.odd = std::sqrt(dodd) / m.norm;
    if (a.even <= tol && a.odd > tol)
      bits[axis] = 0;
    else if (a.odd <= tol && a.even > tol)
      bits[axis] = 1;
    else
      ok = false;
  }
  if (m.const_residual <= tol)
    m.label = PartLabel::constant();
  else if (ok)
    m.label = PartLabel::of(Parity(bits[0], bits[1], bits[2]));
  return m;
}

Real3 part_values(const Grid3& f, bool imag) {
  Real3 out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = imag ? f[i].imag() : f[i].real();
  return out;
}

bool part_consistent(const PartLabel& measured, const PartLabel& expected) {
  return measured.is_zero() || measured == expected;
}

/// Random real band-limited field with |k_i| <= kmax, in spectral form.
SpectralGrid random_band_limited(int n, int kmax, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralGrid s(n);
  for (int k3 = -kmax; k3 <= kmax; ++k3)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int k1 = -kmax; k1 <= kmax; ++k1) {
        const double re = normal(rng);
        const double im = normal(rng);
        s((k1 + n) % n, (k2 + n) % n, (k3 + n) % n) = cplx(re, im);
      }
  // Taking the real part in physical space keeps the band limit.
  return forward(real_part(inverse(s)));
}

/// One real part (re or im) of a random field of kind t. Returns false when
/// a free component's sector came out empty.
bool draw_part(const TypeTuple& t, bool imag, int n, std::mt19937_64& rng, std::array<Grid3, 3>& out) {
  std::array<PartLabel, 3> labels;
  std::array<bool, 3> free{};
  for (int l = 0; l < 3; ++l) {
    labels[static_cast<std::size_t>(l)] = imag ? t[l].im() : t[l].re();
    free[static_cast<std::size_t>(l)] = labels[static_cast<std::size_t>(l)].flag == PartFlag::none;
  }

  SpectralVector v(n);
  for (int l = 0; l < 3; ++l)
    if (free[static_cast<std::size_t>(l)]) v[l] = random_band_limited(n, n / 4, rng);

  // Leray projection restricted to the free components.
  for (std::size_t i = 0; i < v[0].size(); ++i) {
    const std::size_t un = static_cast<std::size_t>(n);
    const int j[3] = {static_cast<int>(i % un), static_cast<int>((i / un) % un), static_cast<int>(i / (un * un))};
    double k[3];
    double kk = 0.0;
    for (int l = 0; l < 3; ++l) {
      k[l] = free[static_cast<std::size_t>(l)] ? derivative_wavenumber(j[l], n) : 0.0;
      kk += k[l] * k[l];
    }
    if (kk == 0.0) continue;
    const cplx kv = (k[0] * v[0][i] + k[1] * v[1][i] + k[2] * v[2][i]) / kk;
    for (int l = 0; l < 3; ++l) v[l][i] -= k[l] * kv;
  }

  std::uniform_real_distribution<double> unif(0.5, 1.0);
  for (int l = 0; l < 3; ++l) {
    const PartLabel& p = labels[static_cast<std::size_t>(l)];
    Grid3 g(n);
    if (p.is_constant()) {
      const double sign = unif(rng) < 0.75 ? 1.0 : -1.0;
      const double value = sign * unif(rng);
      for (auto& x : g.values()) x = value;
    } else if (!p.is_zero()) {
      const Grid3 raw = real_part(inverse(v[l]));
      g = parity_project(raw, p.parity);
      if (l2_norm(g) <= 1e-8 * l2_norm(raw)) return false;
    }
    out[static_cast<std::size_t>(l)] = std::move(g);
  }
  return true;
}

}  // namespace

Grid3 sample(int n, const std::function<cplx(double, double, double)>& f) {
  Grid3 g(n);
  for (int j3 = 0; j3 < n; ++j3)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j1 = 0; j1 < n; ++j1) g(j1, j2, j3) = f(grid_coord(j1, n), grid_coord(j2, n), grid_coord(j3, n));
  return g;
}

Grid3 random_smooth_field(int n, int kmax, std::uint64_t seed) {
  require_grid_size(n);
  std::mt19937_64 rng(seed);
  return real_part(inverse(random_band_limited(n, kmax, rng)));
}

Grid3 real_part(const Grid3& f) {
  Grid3 out(f.n());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
  return out;
}

Grid3 imag_part(const Grid3& f) {
  Grid3 out(f.n());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].imag();
  return out;
}

Grid3 combine(const Grid3& re, const Grid3& im) {
  Grid3 out(re.n());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = cplx(re[i].real(), im[i].real());
  return out;
}

Grid3 reflect(const Grid3& f, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  Grid3 out(f.n());
  out.values() = reflect_values(f.values(), f.n(), axis);
  return out;
}

Grid3 reflect(const Grid3& f, Parity s) {
  Grid3 out = f;
  for (int axis = 0; axis < 3; ++axis)
    if (s.bit(axis)) out = reflect(out, axis);
  return out;
}

Grid3 parity_project(const Grid3& f, Parity a) {
  Grid3 out = f;
  for (int axis = 0; axis < 3; ++axis) {
    const Grid3 r = reflect(out, axis);
    const double sign = a.bit(axis) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (out[i] + sign * r[i]);
  }
  return out;
}

double zero_threshold(int n) { return 1e-14 * std::pow(static_cast<double>(n), 1.5); }

ParityMeasurement measure_parity(const Grid3& f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  ParityMeasurement m;
  m.tol = tol;
  m.re = measure_part(part_values(f, false), f.n(), tol);
  m.im = measure_part(part_values(f, true), f.n(), tol);
  if (m.re.label && m.im.label) {
    if (m.im.label->is_zero())
      m.label = SymLabel::real(*m.re.label);
    else
      m.label = SymLabel::complex(*m.re.label, *m.im.label);
  }
  return m;
}

std::optional<TypeTuple> measure_tuple(const VectorField& u, double tol) {
  TypeTuple t;
  for (int l = 0; l < 3; ++l) {
    auto m = measure_parity(u[l], tol);
    if (!m.label) return std::nullopt;
    t[l] = *m.label;
  }
  return t;
}

bool label_consistent(const SymLabel& measured, const SymLabel& expected) {
  return part_consistent(measured.re(), expected.re()) && part_consistent(measured.im(), expected.im());
}

bool tuple_consistent(const TypeTuple& measured, const TypeTuple& expected) {
  for (int l = 0; l < 3; ++l)
    if (!label_consistent(measured[l], expected[l])) return false;
  return true;
}

Grid3 divergence(const VectorField& u) {
  SpectralGrid acc(u.n());
  for (int l = 0; l < 3; ++l) {
    MultiIndex e{0, 0, 0};
    e[static_cast<std::size_t>(l)] = 1;
    acc += derivative(forward(u[l]), e);
  }
  return inverse(acc);
}

double l2_norm(const Grid3& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  const double h = kTwoPi / f.n();
  return std::sqrt(h * h * h * s);
}

double l2_norm(const VectorField& u) {
  const double a = l2_norm(u[0]), b = l2_norm(u[1]), c = l2_norm(u[2]);
  return std::sqrt(a * a + b * b + c * c);
}

double max_abs(const VectorField& u) {
  double m = 0.0;
  for (int l = 0; l < 3; ++l)
    for (const auto& v : u[l].values()) m = std::max(m, std::abs(v));
  return m;
}

double relative_divergence(const VectorField& u) {
  const double nu = l2_norm(u);
  return nu == 0.0 ? 0.0 : l2_norm(divergence(u)) / nu;
}

double energy(const VectorField& u) {
  const double nu = l2_norm(u);
  return 0.5 * nu * nu;
}

EnergySplit energy_split(const VectorField& u, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  const int n = u.n();
  const std::size_t un = static_cast<std::size_t>(n);
  const double h = kTwoPi / n;
  const double w = 0.5 * h * h * h;
  EnergySplit s;
  for (std::size_t i = 0; i < u[0].size(); ++i) {
    const std::size_t j[3] = {i % un, (i / un) % un, i / (un * un)};
    const int ja = static_cast<int>(j[axis]);
    const double d = w * (std::norm(u[0][i]) + std::norm(u[1][i]) + std::norm(u[2][i]));
    if (ja == 0 || ja == n / 2)
      s.planes += d;
    else if (ja < n / 2)
      s.lower += d;
    else
      s.upper += d;
  }
  return s;
}

VectorField random_symmetric_solenoidal(const TypeTuple& t, int n, std::uint64_t seed) {
  require_grid_size(n);
  const Admissibility adm = admissible(t);
  if (!adm.admissible) throw std::invalid_argument("kind " + to_string(t) + " is not a solenoidal kind");
  const TypeTuple& kind = *adm.kind;
  const bool cplx_kind = !kind.is_real();

  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 8;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::array<Grid3, 3> re, im;
    if (!draw_part(kind, false, n, rng, re)) continue;
    if (cplx_kind) {
      if (!draw_part(kind, true, n, rng, im)) continue;
    } else {
      im = {Grid3(n), Grid3(n), Grid3(n)};
    }
    VectorField u(combine(re[0], im[0]), combine(re[1], im[1]), combine(re[2], im[2]));
    const double m = max_abs(u);
    if (m == 0.0) continue;
    u *= 1.0 / m;
    return u;
  }
  throw DegenerateDraw("sector of kind " + to_string(kind) + " is empty at n=" + std::to_string(n));
}

TypeTuple matched_part_tuple(Parity alpha, Parity beta) { return solenoidal_tuple(alpha, alpha + beta); }

std::array<VectorField, 8> decompose_matched(const VectorField& u, Parity beta, double div_tol) {
  const double rel = relative_divergence(u);
  if (rel > div_tol)
    throw NotSolenoidal("relative divergence " + std::to_string(rel) + " exceeds " + std::to_string(div_tol));
  std::array<Grid3, 3> re, im;
  for (int l = 0; l < 3; ++l) {
    re[static_cast<std::size_t>(l)] = real_part(u[l]);
    im[static_cast<std::size_t>(l)] = imag_part(u[l]);
  }
  std::array<VectorField, 8> parts;
  for (Parity alpha : all_parities()) {
    VectorField p(u.n());
    for (int l = 0; l < 3; ++l) {
      const Parity e = Parity::unit(l);
      p[l] = combine(parity_project(re[static_cast<std::size_t>(l)], e + alpha),
                     parity_project(im[static_cast<std::size_t>(l)], e + alpha + beta));
    }
    parts[alpha.mask()] = std::move(p);
  }
  return parts;
}

}  // namespace parityns
