#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

#include "tordip/common.hpp"

namespace tordip {

// Equal-spaced trapezoid rule on [0, 2pi); spectrally accurate for smooth
// periodic integrands. Returns the plain integral (no 1/2pi normalization).
cplx trapezoid_periodic(const std::function<cplx(double)>& f, int points);

struct QuadratureResult {
  cplx value{};
  cplx previous{};   // value at half the final point count
  int points = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, cplx last, cplx previous)
      : std::runtime_error(what), last_value(last), previous_value(previous) {}
  cplx last_value;
  cplx previous_value;
};

inline constexpr double kQuadEps = 1e-13;
inline constexpr int kQuadStartPoints = 64;
inline constexpr int kQuadMaxPoints = 1 << 18;

// Doubles the point count until two successive results differ by less than
// eps * max(1, |value|), starting from start_points (a power of two, >= 8).
// Throws QuadratureError with the last two values on non-convergence.
QuadratureResult refine_periodic(const std::function<cplx(double)>& f,
                                 double eps = kQuadEps,
                                 int start_points = kQuadStartPoints,
                                 int max_points = kQuadMaxPoints);

}  // namespace tordip
