// Probability that a random power's polynomial satisfies the certification
// inequality: exact value for d = 4, a definite-integral evaluation for
// d = 6, a grid estimator for general even d, and empirical frequencies over
// actual power scans.
#pragma once

#include <string>
#include <vector>

#include "salemscope/intpoly.hpp"

namespace salemscope {

enum class ProbMethod { ExactD4, IntegralD6, Grid };

std::string to_string(ProbMethod m);

struct ProbEstimate {
    int d = 0;
    ProbMethod method = ProbMethod::Grid;
    double value = 0;
    long m = 0;                    // grid nodes per axis are t_j = j*pi/m, j = 0..m
    double h = 0;                  // spacing pi/m
    double big_d = 0;              // spectral-gap surrogate D
    bool symmetry_factor = false;  // true when the H! symmetry restriction was used
    long long n_c = 0;             // counted hits (raw, before the H! factor)
    double total = 0;              // (m+1)^H
    double error_estimate = 0;
};

// Exactly 1/3 (analytic value for degree 4).
ProbEstimate prob_d4();

// Evaluates the two-piece definite integral for degree 6 by adaptive Simpson
// quadrature to the requested absolute tolerance (>= 1e-10).
ProbEstimate prob_d6_integral(double abs_tol);

// Grid estimator: nodes t_j = j*pi/m per axis, polynomial
// (x^2 - Dx + 1) * prod_i (x^2 - 2 cos(t_i) x + 1) in doubles, hit test with
// a relative margin of 1e-9.  With restrict_symmetry the scan is confined to
// a box around the point whose coordinates are the arguments of the roots of
// x^{d-2} + 1, and the count is multiplied by H!; the box boundary shell is
// verified hit-free (growing the box if needed).  Optional CSV dump of the
// hit tuples (t_1..t_H).
ProbEstimate prob_grid(int d, long m, double big_d, bool restrict_symmetry, int workers = 1,
                       const std::string& csv_hits_path = "");

struct FrequencyResult {
    long n_from = 0;
    long n_to = 0;
    std::vector<long> hits;    // every n in [n_from, n_to] whose P_n satisfies the inequality
    std::string frequency;     // "hits/total", unreduced
    bool salem_verified = false;  // direct certification outcome for p
};

// Scans n in [n_from, n_to] with the incremental companion-power engine and
// returns every n whose P_n satisfies the l=1 inequality (exact integers).
FrequencyResult empirical_frequency(const IntPolynomial& p, long n_from, long n_to);

}  // namespace salemscope
