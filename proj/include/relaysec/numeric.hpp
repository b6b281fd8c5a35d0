#pragma once

#include <algorithm>
#include <cmath>

namespace relaysec {

// Relative tolerance below which two distribution parameters are treated as
// equal and the dedicated equal-parameter branch of a two-case formula is
// taken. The general branches subtract nearly identical exponentials there.
inline constexpr double kEqualMeansTol = 1e-9;

inline bool nearly_equal_rel(double a, double b, double tol = kEqualMeansTol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace relaysec
