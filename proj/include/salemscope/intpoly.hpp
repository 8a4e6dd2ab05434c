// Exact integer polynomials: arithmetic, reciprocity, squarefreeness,
// cyclotomic generation and trial division.
#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "salemscope/errors.hpp"

namespace salemscope {

// Dense integer polynomial with arbitrary-precision coefficients stored in
// ascending order (index k holds the coefficient of x^k).  Canonical form
// trims trailing zeros; the zero polynomial has an empty coefficient vector
// and degree -1.  Values are immutable after construction.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    // Parses whitespace-separated integers in ascending order, e.g.
    // "1 -1 -1 -1 1" for x^4-x^3-x^2-x+1.  With half_form=true the input
    // lists a_0..a_{d/2} and the upper half is mirrored (a_{d-k} = a_k).
    static IntPolynomial parse(const std::string& text, bool half_form = false);
    std::string to_string() const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool monic() const { return !c_.empty() && c_.back() == 1; }
    // Coefficient of x^k; zero outside the stored range.
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const;

    bool operator==(const IntPolynomial&) const = default;
    IntPolynomial operator+(const IntPolynomial& q) const;
    IntPolynomial operator-(const IntPolynomial& q) const;
    IntPolynomial operator*(const IntPolynomial& q) const;
    IntPolynomial operator-() const;

    mpz_class evaluate(const mpz_class& x) const;
    IntPolynomial derivative() const;

    // True iff a_k = a_{d-k} for all k.
    bool is_reciprocal() const;
    // True iff gcd(p, p') is constant, by exact fraction-free Euclid.
    bool is_squarefree() const;

    // Exact quotient if divisor divides *this over the integers, else nullopt.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// GCD of integer polynomials by the primitive polynomial remainder sequence;
// result is primitive with positive leading coefficient.
IntPolynomial gcd_primitive(IntPolynomial a, IntPolynomial b);

// Euler's totient, by trial factorization.
unsigned long euler_phi(unsigned long k);

// The k-th cyclotomic polynomial, by exact division of x^k - 1 by the
// cyclotomic polynomials of the proper divisors of k.  Results are cached.
IntPolynomial cyclotomic(unsigned long k);

// True iff no cyclotomic polynomial Phi_k with phi(k) <= deg p divides p.
// Candidates are enumerated over k <= 2*d^2, which covers phi(k) <= d.
bool cyclotomic_free(const IntPolynomial& p);

}  // namespace salemscope
