#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sepcirc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size or search cap was exceeded (desk-scale oracles refuse large inputs).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Relative slack for comparing a computed real bound against an exact
// quantity. Only absorbs floating-point rounding (e.g. pow(8, 2/3) landing a
// few ulps below 4); it is not a modelling tolerance.
inline constexpr double kRoundingSlack = 1e-12;

inline bool le_rounded(double lhs, double rhs) {
  return lhs <= rhs + kRoundingSlack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

inline bool ge_rounded(double lhs, double rhs) { return le_rounded(rhs, lhs); }

/// x * log2(x) with the 0 log 0 = 0 convention.
inline double xlog2x(double x) { return x == 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace sepcirc
