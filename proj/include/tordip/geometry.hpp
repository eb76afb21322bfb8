#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "tordip/common.hpp"

namespace tordip {

// Aspect ratios below 1 + 1e-9 are rejected: the torus degenerates and
// sqrt(a^2-1) cancellation makes every integral in the family meaningless.
inline constexpr double kMinAspect = 1.0 + 1e-9;

inline void require_aspect(double a) {
  if (!(a >= kMinAspect)) {
    throw std::domain_error("aspect ratio a = " + std::to_string(a) +
                            " out of domain (need a >= 1 + 1e-9)");
  }
}

// Torus surface threaded by an axial wire of length L. All simulation
// quantities are dimensionless: energies in hbar^2/(2 m R^2), dipoles in
// hbar R/(10 m), currents in I0 = pi hbar/(mu0 q R). R enters only through
// L/R and the SI conversion helper.
struct Geometry {
  double a = 2.0;          // aspect ratio R/r, > 1
  double R_nm = 250.0;     // major radius [nm]
  double L_over_R = 8.0;   // wire length over major radius (L = 2000 nm default)

  // lambda = log(2 a L / R), natural log.
  double lambda() const { return std::log(2.0 * a * L_over_R); }

  void validate() const {
    require_aspect(a);
    if (!(L_over_R > 0.0)) throw std::domain_error("L/R must be positive");
    if (!(R_nm > 0.0)) throw std::domain_error("R must be positive");
    if (!(lambda() > 0.0) || !std::isfinite(lambda()))
      throw std::domain_error("log(2aL/R) must be finite and positive");
  }
};

enum class BasisKind { SignedLambda, Parity };
enum class Parity { Plus, Minus };

// Truncated angular basis at fixed angular momentum m.
// SignedLambda: n in [-n_max, n_max], flat index k -> n = k - n_max.
// Parity: (+, n=0..n_max) then (-, n=1..n_max); same total dimension.
struct BasisSpec {
  int m = 0;
  int n_max = 60;
  BasisKind kind = BasisKind::SignedLambda;

  int dim() const { return 2 * n_max + 1; }

  void validate() const {
    if (n_max < 1) throw std::domain_error("n_max must be positive");
  }

  // SignedLambda index mapping.
  int index_of(int n) const { return n + n_max; }
  int n_of(int k) const { return k - n_max; }

  // Parity index mapping: flat index -> (parity, n).
  Parity parity_of(int k) const { return k <= n_max ? Parity::Plus : Parity::Minus; }
  int parity_n_of(int k) const { return k <= n_max ? k : k - n_max; }
  int parity_index(Parity p, int n) const {
    return p == Parity::Plus ? n : n_max + n;
  }
};

// SI values of the three dimensionless scales; pure arithmetic.
struct SiScales {
  double current_A;   // I0 = pi hbar / (mu0 q R)
  double energy_J;    // hbar^2 / (2 m R^2)
  double dipole_SI;   // hbar R / (10 m)   [m^3 A / (unit charge) convention of T/q]
};

inline SiScales si_scales(double R_nm, double mass_kg = constants::electron_mass,
                          double charge_C = constants::elementary_charge) {
  const double R = R_nm * 1e-9;
  SiScales s;
  s.current_A = M_PI * constants::hbar / (constants::mu0 * charge_C * R);
  s.energy_J = constants::hbar * constants::hbar / (2.0 * mass_kg * R * R);
  s.dipole_SI = constants::hbar * R / (10.0 * mass_kg);
  return s;
}

}  // namespace tordip
