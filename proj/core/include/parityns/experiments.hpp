#pragma once

// Drivers for the named examples and the rigidity scans.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parityns/field.hpp"
#include "parityns/nsops.hpp"
#include "parityns/symtype.hpp"

namespace parityns {

/// Stream function psi = sum_i c_i cos(a_i x1) cos(b_i x2), all modes on one
/// Laplacian shell a_i^2 + b_i^2 = const. The field is (d2 psi, -d1 psi, 0)
/// scaled to max |u| = amplitude.
struct BeltramiProfile {
  std::vector<std::pair<int, int>> modes{{1, 2}, {2, 1}};
  std::vector<double> coeffs{1.0, 0.5};
  double amplitude = 1.0;

  /// Throws std::invalid_argument for empty, mismatched or off-shell modes.
  void validate() const;
};

VectorField beltrami_field(const BeltramiProfile& p, int n);

/// |C(e^{t Delta} u, e^{t Delta} u)| / |u|^2.
double beltrami_residual(const VectorField& u, double t, Dealias d = Dealias::two_thirds);

/// Labels the construction gives: (010, 100, zero).
TypeTuple beltrami_kind();

struct Example41 {
  VectorField u;
  VectorField v;
};

/// u = u_re + i u_im, v = d3 u_re + i u_im with
/// u_re = (d1 d3 rho, d2 d3 rho, -(d1^2 + d2^2) rho) and u_im built the same
/// way from a second profile; rho and its partner are random band-limited
/// even functions.
Example41 example41_pair(int n, std::uint64_t seed);

struct RigidityConfig {
  int n = 16;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  double t = 0.1;
  int quad_points = 9;
  Dealias dealias = Dealias::two_thirds;
  double beltrami_tol = 1e-8;
  double parity_tol = kDefaultParityTol;

  void validate() const;
};

struct KindResult {
  TypeTuple kind;
  std::optional<TypeTuple> b_label;  // nullopt: no symmetric B at type level
  bool type_preserved = false;       // b_label == kind
  std::vector<double> b_norm_rel;    // per seed, |B(u,u)(t)| / |u0|^2
  std::vector<std::optional<TypeTuple>> measured;  // per seed
  bool beltrami_escape = false;  // not type-preserved, all seeds below beltrami_tol
  bool preserved = false;
  bool numeric_consistent = true;  // measured B agrees with b_label where defined
  std::string error;               // DegenerateDraw message, if any
};

struct RigidityReport {
  std::string mode;  // "real" or "complex"
  std::vector<KindResult> per_kind;  // sorted by serialized kind
  std::vector<TypeTuple> preserved_by_type;
  std::vector<TypeTuple> beltrami_escapes;
  std::vector<TypeTuple> preserved_kinds;  // union of the two
};

/// All 30 real kinds.
RigidityReport rigidity_scan_real(const RigidityConfig& cfg);
/// The 64 kinds with no constant parts.
RigidityReport rigidity_scan_complex(const RigidityConfig& cfg);
/// Scan over an explicit list of kinds.
RigidityReport rigidity_scan(const std::vector<TypeTuple>& kinds, const RigidityConfig& cfg, std::string mode);

}  // namespace parityns
