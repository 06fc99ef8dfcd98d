#pragma once

// Parity reflections, sector projections and symmetry measurement of grid
// fields, plus divergence, norms and energy.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "parityns/grid.hpp"
#include "parityns/symtype.hpp"

namespace parityns {

/// Samples f(x1, x2, x3) at the grid points.
Grid3 sample(int n, const std::function<cplx(double, double, double)>& f);

Grid3 real_part(const Grid3& f);
Grid3 imag_part(const Grid3& f);
/// re + i*im, both taken as real grids.
Grid3 combine(const Grid3& re, const Grid3& im);

/// x_axis -> -x_axis, i.e. index j -> (n - j) mod n. axis in {0, 1, 2}.
Grid3 reflect(const Grid3& f, int axis);
/// Reflects every axis whose bit is set in s.
Grid3 reflect(const Grid3& f, Parity s);

/// Component of f with parity a: the product over axes of (I +/- R_axis)/2.
Grid3 parity_project(const Grid3& f, Parity a);

struct AxisResiduals {
  double even = 0.0;  // |g - Rg| / |g|
  double odd = 0.0;   // |g + Rg| / |g|
};

struct PartMeasurement {
  std::optional<PartLabel> label;
  std::array<AxisResiduals, 3> axes{};
  double norm = 0.0;           // discrete l2 norm of the part
  double const_residual = 0.0;  // |g - mean| / |g|
};

struct ParityMeasurement {
  std::optional<SymLabel> label;
  PartMeasurement re;
  PartMeasurement im;
  double tol = 0.0;
};

constexpr double kDefaultParityTol = 1e-8;

/// Zero threshold for the discrete l2 norm of a part.
double zero_threshold(int n);

ParityMeasurement measure_parity(const Grid3& f, double tol = kDefaultParityTol);
/// Labels of the three components; nullopt if any component has none.
std::optional<TypeTuple> measure_tuple(const VectorField& u, double tol = kDefaultParityTol);

/// A measured label is consistent with an expected one when every part
/// agrees, a measured zero part standing in for any expected part.
bool label_consistent(const SymLabel& measured, const SymLabel& expected);
bool tuple_consistent(const TypeTuple& measured, const TypeTuple& expected);

Grid3 divergence(const VectorField& u);

/// Continuum L2 norm sqrt((2 pi / n)^3 sum |f|^2).
double l2_norm(const Grid3& f);
double l2_norm(const VectorField& u);
double max_abs(const VectorField& u);
/// |div u| / |u| (0 for the zero field).
double relative_divergence(const VectorField& u);

/// (2 pi / n)^3 sum |u|^2 / 2.
double energy(const VectorField& u);

struct EnergySplit {
  double lower = 0.0;   // x_axis in (0, pi)
  double upper = 0.0;   // x_axis in (pi, 2 pi)
  double planes = 0.0;  // x_axis in {0, pi}
};
EnergySplit energy_split(const VectorField& u, int axis);

/// Random real band-limited field (|k_i| <= kmax) with no symmetry.
Grid3 random_smooth_field(int n, int kmax, std::uint64_t seed);

/// Random nonzero field of the given admissible kind, band-limited to
/// |k_i| <= n/4, divergence-free and scaled to max |u| = 1.
/// Throws std::invalid_argument for inadmissible kinds and DegenerateDraw
/// when the sector keeps coming out empty.
VectorField random_symmetric_solenoidal(const TypeTuple& t, int n, std::uint64_t seed);

/// Labels of part alpha: component l has real label m(e_l + alpha) and
/// imaginary label m(e_l + alpha + beta).
TypeTuple matched_part_tuple(Parity alpha, Parity beta);

/// Splits a solenoidal u into 8 parts indexed by alpha (array index =
/// alpha.mask()). Throws NotSolenoidal when |div u| / |u| > div_tol.
std::array<VectorField, 8> decompose_matched(const VectorField& u, Parity beta, double div_tol = 1e-10);

}  // namespace parityns
