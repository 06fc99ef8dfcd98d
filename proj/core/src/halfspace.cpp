#include "parityns/halfspace.hpp"

#include <cmath>
#include <stdexcept>

#include "parityns/errors.hpp"
#include "parityns/spectral.hpp"

namespace parityns {

namespace {

std::array<double, 3> reflection_signs(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::symmetric: return {1.0, 1.0, -1.0};
    case ExtensionKind::antisymmetric: return {-1.0, -1.0, 1.0};
    case ExtensionKind::zero: break;
  }
  return {0.0, 0.0, 0.0};
}

}  // namespace

HalfField::HalfField(int n_) : n(n_) {
  require_grid_size(n);
  for (auto& c : data) c.assign(raw_component_size(n, true), cplx(0.0));
}

std::size_t HalfField::index(int j1, int j2, int j3) const {
  const std::size_t un = static_cast<std::size_t>(n);
  return static_cast<std::size_t>(j1) + un * (static_cast<std::size_t>(j2) + un * static_cast<std::size_t>(j3 - 1));
}

std::string to_string(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::zero: return "zero";
    case ExtensionKind::antisymmetric: return "antisym";
    case ExtensionKind::symmetric: return "sym";
  }
  return "?";
}

std::optional<ExtensionKind> parse_extension(std::string_view s) {
  if (s == "zero") return ExtensionKind::zero;
  if (s == "antisym" || s == "antisymmetric") return ExtensionKind::antisymmetric;
  if (s == "sym" || s == "symmetric") return ExtensionKind::symmetric;
  return std::nullopt;
}

HalfField restrict_half(const VectorField& u) {
  const int n = u.n();
  HalfField h(n);
  for (int l = 0; l < 3; ++l)
    for (int j3 = 1; j3 < n / 2; ++j3)
      for (int j2 = 0; j2 < n; ++j2)
        for (int j1 = 0; j1 < n; ++j1) h.at(l, j1, j2, j3) = u[l](j1, j2, j3);
  return h;
}

RawField to_raw(const HalfField& h) {
  RawField f;
  f.n = h.n;
  f.half = true;
  f.comps = h.data;
  return f;
}

HalfField from_raw(const RawField& f) {
  if (!f.half) throw std::invalid_argument("field file does not hold half-domain data");
  HalfField h(f.n);
  for (std::size_t l = 0; l < 3; ++l) {
    if (f.comps[l].size() != h.data[l].size()) throw std::invalid_argument("half field has the wrong size");
    h.data[l] = f.comps[l];
  }
  return h;
}

double trace_indicator(const HalfField& h, int l) {
  const int n = h.n;
  Grid3 g(n);
  for (int j3 = 1; j3 < n / 2; ++j3)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j1 = 0; j1 < n; ++j1) {
        g(j1, j2, j3) = h.at(l, j1, j2, j3);
        g(j1, j2, n - j3) = -h.at(l, j1, j2, j3);
      }
  const SpectralGrid s = forward(g);
  double total = 0.0, top = 0.0;
  const int kt = n / 2 - 1;
  for (int j3 = 0; j3 < n; ++j3)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j1 = 0; j1 < n; ++j1) {
        const double e = std::norm(s(j1, j2, j3));
        total += e;
        if (std::abs(wavenumber(j3, n)) == kt) top += e;
      }
  return total == 0.0 ? 0.0 : top / total;
}

VectorField extend(const HalfField& h, ExtensionKind kind, double trace_tol) {
  const int n = h.n;
  const int m = n / 2;
  const auto sign = reflection_signs(kind);
  if (kind != ExtensionKind::zero)
    for (int l = 0; l < 3; ++l) {
      if (sign[static_cast<std::size_t>(l)] > 0) continue;
      const double ind = trace_indicator(h, l);
      if (ind > trace_tol)
        throw NotCompatible("component " + std::to_string(l + 1) + " has trace indicator " + std::to_string(ind) +
                            " > " + std::to_string(trace_tol));
    }

  VectorField u(n);
  const double s_m = m % 2 == 0 ? 1.0 : -1.0;
  for (int l = 0; l < 3; ++l) {
    const double sg = sign[static_cast<std::size_t>(l)];
    for (int j2 = 0; j2 < n; ++j2)
      for (int j1 = 0; j1 < n; ++j1) {
        double alt = -1.0;
        cplx s1 = 0.0, s2 = 0.0;
        for (int j3 = 1; j3 < m; ++j3, alt = -alt) {
          const cplx f = h.at(l, j1, j2, j3);
          u[l](j1, j2, j3) = f;
          if (kind == ExtensionKind::zero) continue;
          u[l](j1, j2, n - j3) = sg * f;
          s1 += 2.0 * alt * f;
          s2 += 2.0 * alt * std::cos(grid_coord(j3, n)) * f;
        }
        if (kind != ExtensionKind::zero && sg > 0) {
          // Even extension: the plane values that zero the modes |k3| = m, m - 1.
          u[l](j1, j2, 0) = -(s1 + s2) / 2.0;
          u[l](j1, j2, m) = s_m * (s2 - s1) / 2.0;
        }
      }
  }
  return u;
}

bool check_omsy(const VectorField& u0, double tol) {
  const int want[3][2] = {{1, 0}, {0, 1}, {0, 0}};
  for (int l = 0; l < 3; ++l) {
    const ParityMeasurement m = measure_parity(u0[l], tol);
    for (const PartMeasurement* part : {&m.re, &m.im}) {
      if (part->label && part->label->is_zero()) continue;
      for (int axis = 0; axis < 2; ++axis) {
        const auto& r = part->axes[static_cast<std::size_t>(axis)];
        const double residual = want[l][axis] ? r.odd : r.even;
        if (!(residual <= tol)) return false;
      }
    }
  }
  return true;
}

HalfField omsy_half_data(int n, double amplitude, std::uint64_t seed) {
  VectorField u = random_symmetric_solenoidal(parse_tuple("(100,010,001)"), n, seed);
  u *= amplitude;
  return restrict_half(u);
}

HalfField antisym_half_data(int n, double amplitude, std::uint64_t seed) {
  VectorField u = random_symmetric_solenoidal(parse_tuple("(101,011,000)"), n, seed);
  u *= amplitude;
  return restrict_half(u);
}

HalfspaceReport halfspace_run(const HalfField& h, ExtensionKind kind, const SolverConfig& cfg, double split_tol) {
  VectorField u0 = extend(h, kind);
  if (kind == ExtensionKind::zero) u0 = leray(u0);
  SolverConfig sc = cfg;
  sc.n = h.n;

  HalfspaceReport rep;
  rep.kind = kind;
  rep.omsy = check_omsy(u0, sc.parity_tol);
  rep.initial_kind = measure_tuple(u0, sc.parity_tol);
  if (rep.initial_kind) rep.b_label = bilinear_B_label(*rep.initial_kind, *rep.initial_kind);

  PicardResult res = picard_solve(u0, sc);
  rep.history = res.history;
  rep.converged = res.converged;
  rep.times = res.trajectory.times();
  rep.labels_preserved = rep.initial_kind.has_value();
  for (std::size_t k = 0; k < rep.times.size(); ++k) {
    const VectorField& s = res.trajectory.states()[k];
    const EnergySplit sp = energy_split(s, 2);
    const double e = sp.lower + sp.upper + sp.planes;
    const double imb = e > 0.0 ? std::abs(sp.upper - sp.lower) / e : 0.0;
    rep.splits.push_back(sp);
    rep.imbalance.push_back(imb);
    rep.max_imbalance = std::max(rep.max_imbalance, imb);
    auto labels = measure_tuple(s, sc.parity_tol);
    if (!labels || !rep.initial_kind || *labels != *rep.initial_kind) rep.labels_preserved = false;
    rep.labels.push_back(std::move(labels));
  }
  rep.outside_energy_first = rep.splits.size() > 1 ? rep.splits[1].upper : 0.0;
  rep.split_equal = rep.max_imbalance <= split_tol;
  return rep;
}

}  // namespace parityns
