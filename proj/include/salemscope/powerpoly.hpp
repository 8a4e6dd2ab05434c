// Power polynomials P_n(x) = det(xI - C^n) for the companion matrix C of a
// monic integer polynomial, in exact integer arithmetic.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "salemscope/intpoly.hpp"

namespace salemscope {

// Square matrix of arbitrary-precision integers, row-major.
class BigIntMatrix {
public:
    explicit BigIntMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, 0) {}
    static BigIntMatrix identity(int dim);

    int dim() const { return dim_; }
    mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

    BigIntMatrix operator*(const BigIntMatrix& other) const;
    bool operator==(const BigIntMatrix&) const = default;
    mpz_class trace() const;

private:
    int dim_;
    std::vector<mpz_class> e_;
};

// Companion matrix of a monic polynomial: ones on the superdiagonal, last row
// (-a_0, -a_1, ..., -a_{d-1}).  Requires monic and degree >= 2.
BigIntMatrix companion(const IntPolynomial& p);

// Exact M^n by binary exponentiation, n >= 1.
BigIntMatrix mat_pow(const BigIntMatrix& M, long n);

// Characteristic polynomial det(xI - M) via Newton's identities over the
// traces t_k = tr(M^k), k = 1..d.  All divisions are asserted exact.
IntPolynomial char_poly(const BigIntMatrix& M);

struct PowerPolyResult {
    long n = 0;
    IntPolynomial poly;                 // P_n, monic of degree d
    std::vector<mpz_class> trace_sums;  // power sums p_1..p_d of the roots of P_n
};

// P_n via char_poly(mat_pow(companion(p), n)).  P_n is the characteristic
// polynomial of the n-th powers of the roots of p; it is the minimal
// polynomial of those powers exactly when it is irreducible.
PowerPolyResult power_min_poly(const IntPolynomial& p, long n);

// Incremental scan over n = 1, 2, 3, ...: each next() advances C^{n+1} = C^n * C
// and returns the corresponding PowerPolyResult.
class PowerScan {
public:
    explicit PowerScan(const IntPolynomial& p);
    PowerPolyResult next();
    long current_n() const { return n_; }

private:
    BigIntMatrix c_;
    BigIntMatrix w_;
    long n_ = 0;
};

}  // namespace salemscope
