// Floating-point root utilities: a Durand-Kerner solver used for
// cross-checks, and the real-root estimate tau used by the growth bounds.
#pragma once

#include <complex>
#include <vector>

#include "salemscope/intpoly.hpp"

namespace salemscope {

// All complex roots of p in double precision (Durand-Kerner iteration with a
// Cauchy-bound initial circle).  Intended for cross-checks, not certification.
// Returns an empty vector when the iteration fails to converge.
std::vector<std::complex<double>> find_roots(const IntPolynomial& p);

// Largest real root of p in (1, infinity), refined to machine precision by
// safeguarded Newton/bisection seeded at the Cauchy bound 1 + max|a_k|.
// Returns NaN when no such root is found.
double tau_estimate(const IntPolynomial& p);

// Natural log of |v| for big integers, without overflow.
double log_abs(const mpz_class& v);

}  // namespace salemscope
