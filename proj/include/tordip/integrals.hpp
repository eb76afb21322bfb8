#pragma once

#include <complex>

#include "tordip/common.hpp"
#include "tordip/geometry.hpp"

namespace tordip {

// The angular integral family behind every matrix element. All functions are
// pure and memoized per (a, n); a is keyed on its exact bit pattern and the
// cache is safe for concurrent use.

// I_n(a) = (1/2pi) oint e^{in t} / (a + cos t) dt
//        = (-a + sqrt(a^2-1))^|n| / sqrt(a^2-1); even in n.
double fourier_in(double a, int n);

// I^(ln)_n(a) = (1/2pi) oint e^{in t} ln(a + cos t) dt
//   n != 0: (I_{n-1} - I_{n+1}) / (2n);  n = 0: ln((a + sqrt(a^2-1))/2).
// Even in n.
double log_in(double a, int n);

// I^(ln2)_n(a) = (1/2pi) oint cos(n t) ln^2(a + cos t) dt.
// No closed form; evaluated by refined periodic quadrature (eps 1e-13).
double log2_in(double a, int n);

// Large-a truncated series for I^(ln2)_n: leading term ln^2(a) delta_n plus
// the lowest-order 1/a^m tail per |n|, summed up to max_order.
double taylor_log2_in(double a, int n, int max_order = 40);

// K1(n2, n; a): the polynomial kernel of the T3 derivative element; purely
// imaginary, supported on n in {-2,...,2}.
cplx kernel_k1(int n2, int n, double a);

// K2(n; a) = -i sgn(n) ((a^2-1)/2) (sqrt(a^2-1) - a)^|n|, sgn(0) = 0.
// Antisymmetric in n.
cplx kernel_k2(int n, double a);

// Quadrature oracles evaluating the defining integrals directly; independent
// of the closed forms above (test + CLI cross-check path).
double oracle_in(double a, int n);
double oracle_log_in(double a, int n);
double oracle_log2_in(double a, int n);
cplx oracle_k1(int n2, int n, double a);
cplx oracle_k2(int n, double a);

}  // namespace tordip
