// Salem certification: the power-polynomial criterion, the exact direct
// certifier, coefficient-growth invariant checks, and periodicity-based
// detection of cyclotomic products.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "salemscope/intpoly.hpp"
#include "salemscope/powerpoly.hpp"

namespace salemscope {

enum class Verdict { Salem, NotSalem, Inconclusive };
enum class Method { PowerCriterion, Direct, Both };

std::string to_string(Verdict v);
std::string to_string(Method m);

// Outcome of the unimodular-root coefficient inequality for index l:
// satisfied iff 2*(d-2l)*|a_{d-l}| > d * sum_{k != l, d-l} |a_k|,
// the integer cross-multiplied form of the Vieira condition.
struct VieiraCheck {
    int l = 0;
    mpz_class lhs;          // |a_{d-l}|
    mpz_class rhs_doubled;  // d * sum_{k != l, d-l} |a_k|
    bool satisfied = false;
};

// Evaluates the strict inequality exactly; l = 1 is the certification case.
VieiraCheck vieira_condition(const IntPolynomial& p, int l);

// Per-n outcome of the coefficient growth bounds, plus the two root
// estimators derived from |a_{d-1,n}| (Graeffe-style).
struct BoundCheckRecord {
    long n = 0;
    bool b_ok = true;         // tau^n + tau^-n <= |a_{d-1,n}| + d - 2  (float tau, slack)
    bool c_ok = true;         // binomial bound for k = 1..d-3, exact integers
    double ratio = 0;         // a_{d-1,n} / a_{d-1,n-1}; NaN when undefined
    double root_est = 0;      // |a_{d-1,n}|^{1/n}; NaN when a_{d-1,n} = 0
    std::vector<bool> c_each; // per-k outcomes, k = 1..d-3
};

// Checks the growth bounds for P_n against tau estimated from p (or supplied).
// P_prev, when given, is P_{n-1} and feeds the ratio estimator.
BoundCheckRecord growth_checks(const IntPolynomial& p, long n, const IntPolynomial& P_n,
                               const IntPolynomial* P_prev);
BoundCheckRecord growth_checks_with_tau(double tau, long n, const IntPolynomial& P_n,
                                        const IntPolynomial* P_prev);

struct CertificateReport {
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::PowerCriterion;
    std::optional<long> witness_n;    // least n >= 2 passing all checks
    int unimodular_count = -1;        // -1 when not computed
    int roots_above_one = -1;
    bool cyclotomic_free = false;
    double tau_estimate = 0;
    std::string failure_reason;       // nonempty iff verdict == NotSalem
    std::vector<BoundCheckRecord> bounds;
};

// Certifies via the power criterion: scans n in [2, max_n] for the least n
// such that P_n is reciprocal of degree d, squarefree, cyclotomic-free and
// satisfies the l=1 inequality.  Early NotSalem exits: p not reciprocal, odd
// degree, degree < 4, not squarefree, cyclotomic factor, no single real root
// above 1, or any growth-bound violation along the scan.  Exhausting max_n
// yields Inconclusive.
CertificateReport certify_power_criterion(const IntPolynomial& p, long max_n);

// Exact classical certification: reciprocal, even degree >= 4, squarefree,
// cyclotomic-free, exactly one real root above 1, and d-2 unimodular roots.
CertificateReport certify_direct(const IntPolynomial& p);

// Runs both certifiers; verdicts must agree whenever the power criterion is
// conclusive.  The report carries the direct evidence plus the witness.
CertificateReport certify_both(const IntPolynomial& p, long max_n);

// True iff the sequence P_1, P_2, ... repeats within the bound, which happens
// exactly when every root of p is a root of unity.  period_bound <= 0 selects
// the default 2*d^2 + 4, which exceeds the lcm of the possible root orders
// for every degree <= 32.
bool detect_cyclotomic_by_periodicity(const IntPolynomial& p, long period_bound = 0);

}  // namespace salemscope
