#pragma once

// Binary field dumps: little-endian (re, im) double pairs, x1 fastest, the
// three components concatenated. A JSON sidecar at <path>.json records
// {n, components: 3, layout: "x1-fastest", domain: "torus-2pi"} and, for
// half-domain data, "half": "x3-lower" (planes j3 = 1 .. n/2 - 1 only).

#include <array>
#include <string>
#include <vector>

#include "parityns/grid.hpp"

namespace parityns {

struct RawField {
  int n = 0;
  bool half = false;
  std::array<std::vector<cplx>, 3> comps;
};

/// Values per component: n^3, or n^2 (n/2 - 1) for half data.
std::size_t raw_component_size(int n, bool half);

void write_raw(const std::string& path, const RawField& f);
/// Throws std::runtime_error on missing files, bad sidecars or size mismatch.
RawField read_raw(const std::string& path);

void write_field(const std::string& path, const VectorField& u);
VectorField read_field(const std::string& path);

}  // namespace parityns
