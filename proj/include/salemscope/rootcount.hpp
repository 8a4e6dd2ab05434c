// Exact root location: Sturm chains over rationals, the trace transform
// y = x + 1/x for reciprocal polynomials, and derived root counts.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "salemscope/intpoly.hpp"

namespace salemscope {

// Dense polynomial with exact rational coefficients, ascending order,
// canonical (trailing zeros trimmed, denominators positive via mpq).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coeffs);
    explicit RationalPolynomial(const IntPolynomial& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& leading() const;

    RationalPolynomial derivative() const;
    mpq_class evaluate(const mpq_class& x) const;
    // Remainder of *this divided by divisor over the rationals.
    RationalPolynomial remainder(const RationalPolynomial& divisor) const;
    // Scales by a positive rational so coefficients become coprime integers.
    RationalPolynomial normalized_primitive() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// An interval endpoint: finite rational or +/- infinity.
struct RatBound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    mpq_class value;

    static RatBound neg_inf() { return {Kind::NegInf, 0}; }
    static RatBound pos_inf() { return {Kind::PosInf, 0}; }
    static RatBound finite(mpq_class v) { return {Kind::Finite, std::move(v)}; }
};

// Sturm chain: q, q', then each next the negated remainder of the previous
// two, stopping at zero.  Sign variations V(a) - V(b) count the distinct real
// roots of squarefree q in (a, b].
class SturmChain {
public:
    explicit SturmChain(const RationalPolynomial& q);
    const std::vector<RationalPolynomial>& polys() const { return polys_; }
    int sign_variations(const RatBound& at) const;
    // Distinct real roots of the (squarefree) chain root in (lo, hi].
    int count_roots(const RatBound& lo, const RatBound& hi) const;

private:
    std::vector<RationalPolynomial> polys_;
};

// Q of degree d/2 with P(x)/x^{d/2} = Q(x + 1/x), for reciprocal P of even
// degree, via the recurrence T_0 = 2, T_1 = y, T_j = y*T_{j-1} - T_{j-2}.
IntPolynomial trace_transform(const IntPolynomial& p);

// Distinct real roots of q in (lo, hi]; the squarefree part is counted, so
// multiplicities are stripped.
int count_real_roots(const IntPolynomial& q, const RatBound& lo, const RatBound& hi);
int count_real_roots(const RationalPolynomial& q, const RatBound& lo, const RatBound& hi);

// Number of roots of p on the unit circle, from the trace transform on the
// open interval (-2, 2) plus explicit checks at x = 1 and x = -1.
// Requires p reciprocal, of even degree, and squarefree.
int unimodular_root_count(const IntPolynomial& p);

// Distinct real roots of p in (1, infinity).
int count_roots_above_one(const IntPolynomial& p);

}  // namespace salemscope
