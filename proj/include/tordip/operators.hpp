#pragma once

#include <Eigen/Dense>
#include <complex>

#include "tordip/geometry.hpp"
#include "tordip/integrals.hpp"

namespace tordip {

enum class OperatorLabel { FreeH, InteractionH, TotalH, T3 };

// Dense operator matrix with its basis labeling. TotalH is symmetrized on
// assembly; T3 is stored as transcribed and only its Hermitian part enters
// expectation values.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  BasisSpec basis;
  OperatorLabel label = OperatorLabel::TotalH;
  Geometry geometry;
  double current = 0.0;           // i = I/I0
  double presym_residual = 0.0;   // max|M - M^dag| before symmetrization

  Eigen::MatrixXcd hermitian_part() const {
    return 0.5 * (entries + entries.adjoint());
  }
};

// --- element closed forms (signed-index Lambda basis) ---------------------

// <F_{n1,m}|H_free|F_{n2,m}>, dimensionless; symmetric in (n1, n2).
double free_element(double a, int m, int n1, int n2);

// Same-parity element of H_free in the (+/-) basis; cross-parity elements
// vanish identically and are not representable here.
// Valid ranges: Plus needs n1,n2 >= 0; Minus needs n1,n2 >= 1.
double free_parity_element(double a, int m, Parity p, int n1, int n2);

// <F_{n2-n,m}|H_I|F_{n2,m}> for current i = I/I0; independent of m.
cplx interaction_element(const Geometry& g, int n2, int n, double i);

// <F_{n2-n}|T3^{(j,0)}|F_{n2}> : zero-field probability-current part.
double t3_free_element(double a, int n2, int n);

// <F_{n1}|T3^{(theta)}|F_{n1... n2}> : the five-diagonal band form of the
// theta component (diagnostic operator; same-parity elements vanish).
double t3_theta_element(double a, int n1, int n2);

// <F_{n2-n}|T3^{(j,I)}|F_{n2}> : current-proportional part; independent of n2.
double t3_current_element(const Geometry& g, int n, double i);

// --- operator-application quadrature oracles -------------------------------

// Apply the differential operator analytically to the basis function and
// integrate against the bra by refined periodic quadrature.
cplx free_element_oracle(double a, int m, int n1, int n2);
cplx interaction_element_oracle(const Geometry& g, int n1, int n2, double i);
cplx t3_element_oracle(const Geometry& g, int n1, int n2, double i);   // T3^{(j)}
cplx t3_theta_element_oracle(double a, int n1, int n2);

// --- assembly ---------------------------------------------------------------

// Unitary U with H_parity = U H_Lambda U^dag, parity index layout of BasisSpec.
Eigen::MatrixXcd parity_transform(int n_max);

OperatorMatrix assemble_free(const Geometry& g, const BasisSpec& basis);
OperatorMatrix assemble_interaction(const Geometry& g, const BasisSpec& basis, double i);

// Total H = H_free + H_I, symmetrized to 0.5(M + M^dag) after assembly.
// Throws if the pre-symmetrization residual exceeds 1e-8 (transcription fault).
OperatorMatrix assemble_hamiltonian(const Geometry& g, const BasisSpec& basis, double i);

// T3 = T3^{(j,0)} + T3^{(j,I)} in the requested basis, as transcribed.
OperatorMatrix assemble_t3(const Geometry& g, const BasisSpec& basis, double i);

inline constexpr double kPresymResidualLimit = 1e-8;

}  // namespace tordip
