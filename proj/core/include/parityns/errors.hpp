#pragma once

#include <stdexcept>
#include <string>

namespace parityns {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input field fails the divergence-free precondition.
struct NotSolenoidal : Error {
  using Error::Error;
};

/// Random witness generation kept producing an empty sector.
struct DegenerateDraw : Error {
  using Error::Error;
};

/// A trajectory was queried outside its recorded time range.
struct InsufficientCoverage : Error {
  using Error::Error;
};

/// Picard differences stopped shrinking.
struct NoContraction : Error {
  using Error::Error;
};

/// Half-domain data has a trace the chosen extension cannot accommodate.
struct NotCompatible : Error {
  using Error::Error;
};

}  // namespace parityns
