#include "parityns/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parityns/enumerate.hpp"
#include "parityns/errors.hpp"
#include "parityns/hash.hpp"
#include "parityns/spectral.hpp"

namespace parityns {

void BeltramiProfile::validate() const {
  if (modes.empty()) throw std::invalid_argument("Beltrami profile needs at least one mode");
  if (modes.size() != coeffs.size()) throw std::invalid_argument("modes and coeffs differ in length");
  const int shell = modes[0].first * modes[0].first + modes[0].second * modes[0].second;
  if (shell == 0) throw std::invalid_argument("mode (0,0) carries no velocity");
  for (const auto& [a, b] : modes)
    if (a * a + b * b != shell) throw std::invalid_argument("all modes must satisfy a^2 + b^2 = " + std::to_string(shell));
  if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
}

VectorField beltrami_field(const BeltramiProfile& p, int n) {
  p.validate();
  require_grid_size(n);
  const auto u1 = sample(n, [&](double x1, double x2, double) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.modes.size(); ++i) {
      const auto [a, b] = p.modes[i];
      s -= p.coeffs[i] * b * std::cos(a * x1) * std::sin(b * x2);
    }
    return cplx(s);
  });
  const auto u2 = sample(n, [&](double x1, double x2, double) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.modes.size(); ++i) {
      const auto [a, b] = p.modes[i];
      s += p.coeffs[i] * a * std::sin(a * x1) * std::cos(b * x2);
    }
    return cplx(s);
  });
  VectorField u(u1, u2, Grid3(n));
  const double m = max_abs(u);
  if (m == 0.0) throw std::invalid_argument("Beltrami profile produces the zero field");
  u *= p.amplitude / m;
  return u;
}

double beltrami_residual(const VectorField& u, double t, Dealias d) {
  const VectorField h = heat(u, t);
  const double nu = l2_norm(u);
  return l2_norm(C_op(h, h, d)) / (nu * nu);
}

TypeTuple beltrami_kind() {
  return {{SymLabel::real(Parity(0, 1, 0)), SymLabel::real(Parity(1, 0, 0)), SymLabel::real(PartLabel::zero())}};
}

Example41 example41_pair(int n, std::uint64_t seed) {
  require_grid_size(n);
  const int kmax = n / 4;
  const Grid3 rho = parity_project(random_smooth_field(n, kmax, seed), Parity{});
  const Grid3 rho2 = parity_project(random_smooth_field(n, kmax, seed ^ 0x9e3779b97f4a7c15ull), Parity{});

  auto build = [](const Grid3& r) {
    const SpectralGrid h = forward(r);
    Grid3 c3 = inverse(derivative(h, {2, 0, 0}) + derivative(h, {0, 2, 0}));
    c3 *= -1.0;
    return VectorField(real_part(inverse(derivative(h, {1, 0, 1}))), real_part(inverse(derivative(h, {0, 1, 1}))),
                       real_part(c3));
  };
  const VectorField ure = build(rho);
  const VectorField uim = build(rho2);

  VectorField d3re(n);
  for (int l = 0; l < 3; ++l) d3re[l] = real_part(derivative(ure[l], {0, 0, 1}));

  Example41 ex{VectorField(n), VectorField(n)};
  for (int l = 0; l < 3; ++l) {
    ex.u[l] = combine(ure[l], uim[l]);
    ex.v[l] = combine(d3re[l], uim[l]);
  }
  const double m = max_abs(ex.u);
  ex.u *= 1.0 / m;
  ex.v *= 1.0 / m;
  return ex;
}

void RigidityConfig::validate() const {
  require_grid_size(n);
  if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  if (quad_points < 2) throw std::invalid_argument("quad_points must be >= 2");
  if (!(beltrami_tol > 0.0) || !(parity_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
}

RigidityReport rigidity_scan(const std::vector<TypeTuple>& kinds, const RigidityConfig& cfg, std::string mode) {
  cfg.validate();
  SolverConfig sc;
  sc.n = cfg.n;
  sc.quad_points = cfg.quad_points;
  sc.dealias = cfg.dealias;

  RigidityReport report;
  report.mode = std::move(mode);
  for (const TypeTuple& kind : kinds) {
    KindResult r;
    r.kind = kind;
    r.b_label = bilinear_B_label(kind, kind);
    r.type_preserved = r.b_label && *r.b_label == kind;
    bool all_small = true;
    try {
      for (std::uint64_t seed : cfg.seeds) {
        const VectorField u0 = random_symmetric_solenoidal(kind, cfg.n, fnv1a(to_string(kind), seed));
        const Trajectory traj = Trajectory::from_function(cfg.t, [u0](double s) { return heat(u0, s); });
        const VectorField b = duhamel_B(traj, traj, cfg.t, sc);
        const double nu = l2_norm(u0);
        const double rel = l2_norm(b) / (nu * nu);
        r.b_norm_rel.push_back(rel);
        all_small = all_small && rel <= cfg.beltrami_tol;
        auto measured = measure_tuple(b, cfg.parity_tol);
        if (r.b_label) r.numeric_consistent = r.numeric_consistent && measured && tuple_consistent(*measured, *r.b_label);
        r.measured.push_back(std::move(measured));
      }
    } catch (const DegenerateDraw& e) {
      r.error = e.what();
      all_small = false;
    }
    r.beltrami_escape = !r.type_preserved && all_small && r.error.empty();
    r.preserved = r.type_preserved || r.beltrami_escape;
    report.per_kind.push_back(std::move(r));
  }
  std::sort(report.per_kind.begin(), report.per_kind.end(),
            [](const KindResult& a, const KindResult& b) { return to_string(a.kind) < to_string(b.kind); });
  for (const auto& r : report.per_kind) {
    if (r.type_preserved) report.preserved_by_type.push_back(r.kind);
    if (r.beltrami_escape) report.beltrami_escapes.push_back(r.kind);
    if (r.preserved) report.preserved_kinds.push_back(r.kind);
  }
  return report;
}

RigidityReport rigidity_scan_real(const RigidityConfig& cfg) {
  const auto& tuples = census_real().tuples;
  return rigidity_scan(std::vector<TypeTuple>(tuples.begin(), tuples.end()), cfg, "real");
}

RigidityReport rigidity_scan_complex(const RigidityConfig& cfg) {
  const auto kinds = generate_case(CaseId::C0);
  return rigidity_scan(std::vector<TypeTuple>(kinds.begin(), kinds.end()), cfg, "complex");
}

}  // namespace parityns
