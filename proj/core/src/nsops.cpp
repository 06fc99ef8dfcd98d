#include "parityns/nsops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parityns/errors.hpp"
#include "parityns/spectral.hpp"

namespace parityns {

namespace {

MultiIndex unit_index(int a) {
  MultiIndex e{0, 0, 0};
  e[static_cast<std::size_t>(a)] = 1;
  return e;
}

Grid3 pointwise_product(const Grid3& a, const Grid3& b) {
  Grid3 out(a.n());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

SpectralVector heat_hat(SpectralVector u, double t) {
  apply_heat(u, t);
  return u;
}

struct Prepared {
  VectorField u, v;
  SpectralVector vh;
  int kmax = -1;  // -1: no truncation
};

Prepared prepare(const VectorField& u, const VectorField& v, Dealias d) {
  if (u.n() != v.n()) throw std::invalid_argument("fields live on different grids");
  Prepared p;
  SpectralVector uh = forward(u);
  p.vh = forward(v);
  if (d == Dealias::two_thirds) {
    p.kmax = two_thirds_cutoff(u.n());
    truncate(uh, p.kmax);
    truncate(p.vh, p.kmax);
  }
  p.u = inverse(uh);
  p.v = inverse(p.vh);
  return p;
}

SpectralVector advect_hat(const Prepared& p) {
  SpectralVector out(p.u.n());
  for (int l = 0; l < 3; ++l) {
    Grid3 acc(p.u.n());
    for (int j = 0; j < 3; ++j) acc += pointwise_product(p.u[j], inverse(derivative(p.vh[l], unit_index(j))));
    out[l] = forward(acc);
    if (p.kmax >= 0) truncate(out[l], p.kmax);
  }
  return out;
}

SpectralGrid g_hat(const Prepared& p) {
  SpectralGrid acc(p.u.n());
  for (int l = 0; l < 3; ++l)
    for (int lp = 0; lp < 3; ++lp) {
      SpectralGrid prod = forward(pointwise_product(p.u[l], p.v[lp]));
      if (p.kmax >= 0) truncate(prod, p.kmax);
      MultiIndex idx{0, 0, 0};
      idx[static_cast<std::size_t>(l)] += 1;
      idx[static_cast<std::size_t>(lp)] += 1;
      acc += derivative(prod, idx);
    }
  return acc;
}

double relative_change(const VectorField& now, const VectorField& before) {
  const double d = l2_norm(now - before);
  const double base = l2_norm(now);
  if (base == 0.0) return d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return d / base;
}

}  // namespace

std::string to_string(QuadRule q) { return q == QuadRule::trapezoid ? "trapezoid" : "midpoint"; }
std::string to_string(Dealias d) { return d == Dealias::two_thirds ? "two_thirds" : "none"; }

std::optional<QuadRule> parse_quad_rule(std::string_view s) {
  if (s == "trapezoid") return QuadRule::trapezoid;
  if (s == "midpoint") return QuadRule::midpoint;
  return std::nullopt;
}

std::optional<Dealias> parse_dealias(std::string_view s) {
  if (s == "two_thirds" || s == "2/3") return Dealias::two_thirds;
  if (s == "none") return Dealias::none;
  return std::nullopt;
}

void SolverConfig::validate() const {
  require_grid_size(n);
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= dt)) throw std::invalid_argument("t_end must be >= dt");
  if (quad_points < 2) throw std::invalid_argument("quad_points must be >= 2");
  if (picard_iters < 1) throw std::invalid_argument("picard_iters must be >= 1");
  if (!(tol > 0.0) || !(div_tol > 0.0) || !(parity_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
  steps();
}

int SolverConfig::steps() const {
  const double k = t_end / dt;
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9 * std::max(1.0, k)) throw std::invalid_argument("t_end must be a multiple of dt");
  return static_cast<int>(r);
}

VectorField heat(const VectorField& u0, double t) {
  if (t < 0.0) throw std::invalid_argument("heat: t must be >= 0");
  if (t == 0.0) return u0;
  return inverse(heat_hat(forward(u0), t));
}

VectorField leray(const VectorField& v) {
  SpectralVector h = forward(v);
  apply_leray(h);
  return inverse(h);
}

VectorField advect_A(const VectorField& u, const VectorField& v, Dealias d) {
  return inverse(advect_hat(prepare(u, v, d)));
}

Grid3 G_op(const VectorField& u, const VectorField& v, Dealias d) { return inverse(g_hat(prepare(u, v, d))); }

SpectralVector C_hat(const VectorField& u, const VectorField& v, Dealias d) {
  const Prepared p = prepare(u, v, d);
  SpectralVector c = advect_hat(p);
  SpectralGrid q = g_hat(p);
  apply_inverse_laplacian(q);
  for (int l = 0; l < 3; ++l) c[l] += derivative(q, unit_index(l));
  return c;
}

VectorField C_op(const VectorField& u, const VectorField& v, Dealias d) { return inverse(C_hat(u, v, d)); }

StateDiagnostics diagnose(const VectorField& u, double parity_tol) {
  StateDiagnostics s;
  s.energy = energy(u);
  s.divergence = relative_divergence(u);
  for (int l = 0; l < 3; ++l) s.labels[static_cast<std::size_t>(l)] = measure_parity(u[l], parity_tol).label;
  return s;
}

// --- Trajectory ---------------------------------------------------------------

Trajectory::Trajectory(std::vector<double> times, std::vector<VectorField> states)
    : times_(std::move(times)), states_(std::move(states)) {
  if (times_.size() != states_.size()) throw std::invalid_argument("times and states differ in length");
  if (times_.empty()) throw std::invalid_argument("empty trajectory");
  if (times_.front() != 0.0) throw std::invalid_argument("trajectory must start at t = 0");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i] > times_[i - 1])) throw std::invalid_argument("trajectory times must increase");
}

Trajectory Trajectory::from_function(double t_end, std::function<VectorField(double)> f) {
  Trajectory t;
  t.generator_ = std::move(f);
  t.gen_end_ = t_end;
  return t;
}

double Trajectory::t_begin() const { return 0.0; }

double Trajectory::t_end() const {
  if (generator_) return gen_end_;
  return times_.empty() ? 0.0 : times_.back();
}

bool Trajectory::covers(double t) const {
  if (!generator_ && times_.empty()) return false;
  const double slack = 1e-12 * std::max(1.0, t_end());
  return t >= -slack && t <= t_end() + slack;
}

VectorField Trajectory::at(double s) const {
  if (!covers(s))
    throw InsufficientCoverage("time " + std::to_string(s) + " outside [0, " + std::to_string(t_end()) + "]");
  if (generator_) return generator_(s);

  const double slack = 1e-12 * std::max(1.0, t_end());
  auto it = std::lower_bound(times_.begin(), times_.end(), s - slack);
  if (it != times_.end() && std::abs(*it - s) <= slack) return states_[static_cast<std::size_t>(it - times_.begin())];

  const std::size_t m = times_.size();
  const std::size_t width = std::min<std::size_t>(4, m);
  const std::size_t upper = static_cast<std::size_t>(it - times_.begin());  // first time > s
  std::size_t first = upper >= width / 2 ? upper - width / 2 : 0;
  first = std::min(first, m - width);

  VectorField out(states_.front().n());
  for (std::size_t a = first; a < first + width; ++a) {
    double w = 1.0;
    for (std::size_t b = first; b < first + width; ++b)
      if (b != a) w *= (s - times_[b]) / (times_[a] - times_[b]);
    out += states_[a] * w;
  }
  return out;
}

// --- Duhamel term -------------------------------------------------------------

void quadrature(QuadRule rule, int points, double t, std::vector<double>& nodes, std::vector<double>& weights) {
  if (points < 2) throw std::invalid_argument("quadrature needs at least 2 points");
  nodes.assign(static_cast<std::size_t>(points), 0.0);
  weights.assign(static_cast<std::size_t>(points), 0.0);
  if (rule == QuadRule::trapezoid) {
    const double h = t / (points - 1);
    for (int i = 0; i < points; ++i) {
      nodes[static_cast<std::size_t>(i)] = i == points - 1 ? t : i * h;
      weights[static_cast<std::size_t>(i)] = (i == 0 || i == points - 1) ? h / 2 : h;
    }
  } else {
    const double h = t / points;
    for (int i = 0; i < points; ++i) {
      nodes[static_cast<std::size_t>(i)] = (i + 0.5) * h;
      weights[static_cast<std::size_t>(i)] = h;
    }
  }
}

VectorField duhamel_B(const Trajectory& u, const Trajectory& v, double t, const SolverConfig& cfg) {
  if (t < 0.0) throw std::invalid_argument("duhamel_B: t must be >= 0");
  if (!u.covers(t) || !v.covers(t))
    throw InsufficientCoverage("trajectory does not span [0, " + std::to_string(t) + "]");
  const int n = u.at(0.0).n();
  if (t == 0.0) return VectorField(n);

  std::vector<double> nodes, weights;
  quadrature(cfg.quad_rule, cfg.quad_points, t, nodes, weights);
  SpectralVector acc(n);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    SpectralVector c = C_hat(u.at(nodes[i]), v.at(nodes[i]), cfg.dealias);
    apply_heat(c, t - nodes[i]);
    c *= weights[i];
    acc += c;
  }
  return inverse(acc);
}

// --- Picard iteration -----------------------------------------------------------

PicardResult picard_solve(const VectorField& u0, const SolverConfig& cfg) {
  cfg.validate();
  if (u0.n() != cfg.n)
    throw std::invalid_argument("field has n=" + std::to_string(u0.n()) + " but config has n=" + std::to_string(cfg.n));
  const double div0 = relative_divergence(u0);
  if (div0 > cfg.div_tol) throw NotSolenoidal("initial data has relative divergence " + std::to_string(div0));

  const int steps = cfg.steps();
  const std::size_t count = static_cast<std::size_t>(steps) + 1;
  std::vector<double> times(count);
  for (std::size_t k = 0; k < count; ++k) times[k] = k + 1 == count ? cfg.t_end : static_cast<double>(k) * cfg.dt;

  const SpectralVector u0h = forward(u0);
  std::vector<SpectralVector> base(count);
  std::vector<VectorField> state(count);
  for (std::size_t k = 0; k < count; ++k) {
    base[k] = heat_hat(u0h, times[k]);
    state[k] = inverse(base[k]);
  }

  PicardResult result;
  std::optional<double> prev_diff;
  int non_contracting = 0;
  for (int iter = 1; iter <= cfg.picard_iters; ++iter) {
    // Running sums: S_k = e^{dt Delta} S_{k-1} + C_k (trapezoid) or
    // M_k = e^{dt Delta} M_{k-1} + e^{dt Delta / 2} C_{k-1/2} (midpoint).
    std::vector<SpectralVector> bh(count, SpectralVector(cfg.n));
    if (cfg.quad_rule == QuadRule::trapezoid) {
      SpectralVector s;
      for (std::size_t k = 0; k < count; ++k) {
        SpectralVector c = C_hat(state[k], state[k], cfg.dealias);
        if (k == 0) {
          s = c * 0.5;
          continue;
        }
        apply_heat(s, cfg.dt);
        s += c;
        bh[k] = (s - c * 0.5) * cfg.dt;
      }
    } else {
      const Trajectory traj(times, state);
      SpectralVector m(cfg.n);
      for (std::size_t k = 1; k < count; ++k) {
        const double mid = 0.5 * (times[k - 1] + times[k]);
        SpectralVector c = C_hat(traj.at(mid), traj.at(mid), cfg.dealias);
        apply_heat(m, times[k] - times[k - 1]);
        apply_heat(c, times[k] - mid);
        m += c;
        bh[k] = m * (times[k] - times[k - 1]);
      }
    }

    IterateRecord rec;
    rec.iter = iter;
    std::vector<VectorField> next(count);
    for (std::size_t k = 0; k < count; ++k) {
      next[k] = inverse(base[k] - bh[k]);
      rec.diff = std::max(rec.diff, relative_change(next[k], state[k]));
      rec.max_divergence = std::max(rec.max_divergence, relative_divergence(next[k]));
    }
    rec.labels_end = measure_tuple(next.back(), cfg.parity_tol);
    if (prev_diff) {
      rec.ratio = *prev_diff > 0.0 ? rec.diff / *prev_diff : (rec.diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
      non_contracting = *rec.ratio >= 1.0 ? non_contracting + 1 : 0;
    }
    prev_diff = rec.diff;
    state = std::move(next);
    result.history.push_back(rec);

    if (rec.diff <= cfg.tol) {
      result.converged = true;
      break;
    }
    if (non_contracting >= 3)
      throw NoContraction("difference ratio >= 1 for 3 consecutive iterates (last diff " + std::to_string(rec.diff) + ")");
  }

  result.trajectory = Trajectory(times, std::move(state));
  for (const auto& s : result.trajectory.states()) result.trajectory.diagnostics().push_back(diagnose(s, cfg.parity_tol));
  return result;
}

}  // namespace parityns
