#pragma once

// Pseudo-spectral Navier-Stokes operators in integral (mild) form:
//   A(u,v) = u.grad v,  G(u,v) = sum_{l,l'} d_l d_l' (u_l v_l'),
//   C(u,v) = P grad(u (x) v) = A + (-Delta)^{-1} grad G,
//   B(u,v)(t) = int_0^t e^{(t-s) Delta} C(u(s), v(s)) ds,
// and the Picard iteration u^{k+1} = e^{t Delta} u0 - B(u^k, u^k).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parityns/field.hpp"
#include "parityns/grid.hpp"

namespace parityns {

enum class QuadRule { trapezoid, midpoint };
enum class Dealias { two_thirds, none };

std::string to_string(QuadRule q);
std::string to_string(Dealias d);
std::optional<QuadRule> parse_quad_rule(std::string_view s);
std::optional<Dealias> parse_dealias(std::string_view s);

struct SolverConfig {
  int n = 16;
  double dt = 0.1 / 32;
  double t_end = 0.1;
  QuadRule quad_rule = QuadRule::trapezoid;
  int quad_points = 33;  // nodes for a standalone duhamel_B
  Dealias dealias = Dealias::two_thirds;
  int picard_iters = 20;
  double tol = 1e-12;
  double div_tol = 1e-10;
  double parity_tol = kDefaultParityTol;

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
  /// Number of dt steps in [0, t_end]; t_end must be a multiple of dt.
  int steps() const;
};

VectorField heat(const VectorField& u0, double t);
VectorField leray(const VectorField& v);
VectorField advect_A(const VectorField& u, const VectorField& v, Dealias d = Dealias::two_thirds);
Grid3 G_op(const VectorField& u, const VectorField& v, Dealias d = Dealias::two_thirds);
VectorField C_op(const VectorField& u, const VectorField& v, Dealias d = Dealias::two_thirds);
/// C_op in spectral form.
SpectralVector C_hat(const VectorField& u, const VectorField& v, Dealias d = Dealias::two_thirds);

struct StateDiagnostics {
  double energy = 0.0;
  double divergence = 0.0;  // |div u| / |u|
  std::array<std::optional<SymLabel>, 3> labels;
};

StateDiagnostics diagnose(const VectorField& u, double parity_tol = kDefaultParityTol);

/// A time-dependent field: recorded states, or a closed-form generator.
class Trajectory {
 public:
  Trajectory() = default;
  /// States at increasing times starting at 0.
  Trajectory(std::vector<double> times, std::vector<VectorField> states);
  /// Closed-form trajectory valid on [0, t_end].
  static Trajectory from_function(double t_end, std::function<VectorField(double)> f);

  const std::vector<double>& times() const { return times_; }
  const std::vector<VectorField>& states() const { return states_; }
  std::vector<StateDiagnostics>& diagnostics() { return diagnostics_; }
  const std::vector<StateDiagnostics>& diagnostics() const { return diagnostics_; }

  double t_begin() const;
  double t_end() const;
  bool covers(double t) const;

  /// Exact state at a recorded time, cubic Lagrange interpolation between
  /// them. Throws InsufficientCoverage outside [t_begin, t_end].
  VectorField at(double s) const;

 private:
  std::vector<double> times_;
  std::vector<VectorField> states_;
  std::vector<StateDiagnostics> diagnostics_;
  std::function<VectorField(double)> generator_;
  double gen_end_ = 0.0;
};

/// Quadrature nodes and weights on [0, t] for the configured rule.
void quadrature(QuadRule rule, int points, double t, std::vector<double>& nodes, std::vector<double>& weights);

/// B(u, v)(t) with cfg.quad_points nodes of cfg.quad_rule.
VectorField duhamel_B(const Trajectory& u, const Trajectory& v, double t, const SolverConfig& cfg);

struct IterateRecord {
  int iter = 0;
  double diff = 0.0;                 // max over times of |new - old| / |new|
  std::optional<double> ratio;       // diff / previous diff
  double max_divergence = 0.0;
  std::optional<TypeTuple> labels_end;  // measured kind at t_end
};

struct PicardResult {
  Trajectory trajectory;
  std::vector<IterateRecord> history;
  bool converged = false;
};

/// Picard iteration on the uniform grid t_k = k dt; B(t_k) uses the composite
/// rule over the same nodes (midpoints interpolated for the midpoint rule).
/// Throws NotSolenoidal for divergent data and NoContraction when the
/// difference ratio stays >= 1 for three consecutive iterates.
PicardResult picard_solve(const VectorField& u0, const SolverConfig& cfg);

}  // namespace parityns
