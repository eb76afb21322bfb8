#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tordip {

inline constexpr const char* kVersion = "0.1.0";

using cplx = std::complex<double>;

// CODATA 2018 values, used only by the SI conversion helper.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double mu0 = 1.25663706212e-6;        // kg m / (s^2 A^2)
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double proton_mass = 1.67262192369e-27;      // kg
}  // namespace constants

// Integer power by repeated multiplication; exponent >= 0.
inline double ipow(double base, int exponent) {
  double result = 1.0;
  double factor = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

// sgn with sgn(0) = 0 (convention used throughout).
inline int sgn0(int n) { return (n > 0) - (n < 0); }

inline double kdelta(int n) { return n == 0 ? 1.0 : 0.0; }

}  // namespace tordip
