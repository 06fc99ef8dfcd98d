#pragma once

// Half-domain data on x3 in (0, pi) of the torus, its zero / antisymmetric /
// symmetric extensions across x3 = 0, and energy-split runs of the solver.
// Reflection through x3 = 0 is the grid map j3 -> n - j3.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parityns/field.hpp"
#include "parityns/field_io.hpp"
#include "parityns/nsops.hpp"

namespace parityns {

/// Samples on planes j3 = 1 .. n/2 - 1 only; index j1 + n (j2 + n (j3 - 1)).
struct HalfField {
  int n = 0;
  std::array<std::vector<cplx>, 3> data;

  explicit HalfField(int n = 8);
  std::size_t index(int j1, int j2, int j3) const;
  cplx& at(int l, int j1, int j2, int j3) { return data[static_cast<std::size_t>(l)][index(j1, j2, j3)]; }
  const cplx& at(int l, int j1, int j2, int j3) const { return data[static_cast<std::size_t>(l)][index(j1, j2, j3)]; }
};

enum class ExtensionKind { zero, antisymmetric, symmetric };

std::string to_string(ExtensionKind k);
std::optional<ExtensionKind> parse_extension(std::string_view s);

HalfField restrict_half(const VectorField& u);
RawField to_raw(const HalfField& h);
HalfField from_raw(const RawField& f);

constexpr double kTraceTol = 1e-6;

/// Relative energy of the odd (x3) extension of component l in the modes
/// |k3| = n/2 - 1; large when the component has a nonzero trace on x3 = 0.
double trace_indicator(const HalfField& h, int l);

/// Fills the upper half by the kind's reflection rule. Components that the
/// rule makes odd in x3 vanish on the planes x3 = 0, pi; even components get
/// the plane values that keep the two highest x3 modes empty. Zero extension
/// sets everything outside the half domain to 0. Throws NotCompatible when an
/// odd component has trace indicator above trace_tol.
VectorField extend(const HalfField& h, ExtensionKind kind, double trace_tol = kTraceTol);

/// (om.sy): u1 odd in x1 and even in x2, u2 even in x1 and odd in x2, u3
/// even in x1 and x2.
bool check_omsy(const VectorField& u0, double tol = kDefaultParityTol);

/// Half data of kind (e1, e2, e3), scaled to max |u| = amplitude.
HalfField omsy_half_data(int n, double amplitude, std::uint64_t seed);
/// Half data of kind (101, 011, 000), the natural input of the
/// antisymmetric extension.
HalfField antisym_half_data(int n, double amplitude, std::uint64_t seed);

struct HalfspaceReport {
  ExtensionKind kind = ExtensionKind::symmetric;
  std::vector<double> times;
  std::vector<EnergySplit> splits;
  std::vector<double> imbalance;  // |E+ - E-| / E
  std::vector<std::optional<TypeTuple>> labels;
  std::optional<TypeTuple> initial_kind;
  std::optional<TypeTuple> b_label;  // type-level B label of the initial kind
  double max_imbalance = 0.0;
  double outside_energy_first = 0.0;  // energy in x3 in (pi, 2 pi) at times[1]
  bool split_equal = false;           // max_imbalance <= split_tol
  bool labels_preserved = false;      // labels equal the initial kind at every time
  bool omsy = false;
  std::vector<IterateRecord> history;
  bool converged = false;
};

/// Extends, projects the zero extension onto divergence-free fields, runs
/// picard_solve and measures the split on axis 3 at every recorded time.
HalfspaceReport halfspace_run(const HalfField& h, ExtensionKind kind, const SolverConfig& cfg, double split_tol = 1e-8);

}  // namespace parityns
