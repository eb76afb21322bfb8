#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tordip/operators.hpp"

namespace tordip {

// Full spectrum of a Hermitian operator matrix. Levels are indexed by eta in
// ascending energy order; eigenvectors are orthonormal columns with a
// deterministic phase (largest-magnitude component real positive).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  BasisSpec basis;
  Geometry geometry;
  double current = 0.0;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Deterministic dense Hermitian eigendecomposition. Parity-basis matrices
// with exactly zero cross-parity blocks are solved block-wise so degenerate
// pairs never mix across parity. Throws on non-Hermitian input.
Spectrum eigendecompose(const OperatorMatrix& H);

// Re(v_eta^dag Herm(T3) v_eta); basis of t3 must match the spectrum's.
double expectation_t3(const Spectrum& spec, const OperatorMatrix& t3, int eta);

// E_{eta=2n} - E_{eta=2n-1}; the quasi-degenerate pair splitting, n >= 1.
double level_split(const Spectrum& spec, int n);

// The top_k largest-|amplitude| coefficients of eigenstate eta in the Lambda
// basis, as (n, amplitude) pairs sorted by descending magnitude.
std::vector<std::pair<int, cplx>> coefficients(const Spectrum& spec, int eta, int top_k);

// Lambda-basis representation of eigenvector eta (identity for Lambda spectra).
Eigen::VectorXcd lambda_vector(const Spectrum& spec, int eta);

}  // namespace tordip
