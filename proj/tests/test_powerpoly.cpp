#include <doctest.h>

#include <complex>

#include "salemscope/errors.hpp"
#include "salemscope/intpoly.hpp"
#include "salemscope/powerpoly.hpp"
#include "salemscope/roots.hpp"

using salemscope::BigIntMatrix;
using salemscope::IntPolynomial;

namespace {
const IntPolynomial kRow1 = IntPolynomial::parse("1 -1 -1", true);
const IntPolynomial kRow6 = IntPolynomial::parse("1 0 -1 0 0 -1", true);
}

TEST_CASE("companion matrix layout") {
    const BigIntMatrix c2 = salemscope::companion(IntPolynomial({1, -3, 1}));  // x^2-3x+1
    CHECK(c2.at(0, 0) == 0);
    CHECK(c2.at(0, 1) == 1);
    CHECK(c2.at(1, 0) == -1);
    CHECK(c2.at(1, 1) == 3);

    const BigIntMatrix c4 = salemscope::companion(kRow1);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i + 1 < 4; ++i) CHECK(c4.at(i, j) == (j == i + 1 ? 1 : 0));
    CHECK(c4.at(3, 0) == -1);  // last row -a_0, -a_1, -a_2, -a_3
    CHECK(c4.at(3, 1) == 1);
    CHECK(c4.at(3, 2) == 1);
    CHECK(c4.at(3, 3) == 1);

    CHECK_THROWS_AS(salemscope::companion(IntPolynomial({1, 1})), salemscope::Error);
    CHECK_THROWS_AS(salemscope::companion(IntPolynomial({1, -3, 2})), salemscope::NonMonicError);
}

TEST_CASE("mat_pow") {
    const BigIntMatrix m = salemscope::companion(IntPolynomial({1, -3, 1}));
    CHECK(salemscope::mat_pow(m, 1) == m);
    const BigIntMatrix m2 = salemscope::mat_pow(m, 2);
    CHECK(m2.at(0, 0) == -1);
    CHECK(m2.at(0, 1) == 3);
    CHECK(m2.at(1, 0) == -3);
    CHECK(m2.at(1, 1) == 8);
    // Roots of x^2-1 are +-1, so the square of its companion is the identity.
    const BigIntMatrix r = salemscope::companion(IntPolynomial({-1, 0, 1}));
    CHECK(salemscope::mat_pow(r, 2) == BigIntMatrix::identity(2));
    CHECK_THROWS_AS(salemscope::mat_pow(m, 0), salemscope::Error);
}

TEST_CASE("char_poly") {
    CHECK(salemscope::char_poly(salemscope::companion(kRow1)) == kRow1);
    CHECK(salemscope::char_poly(BigIntMatrix::identity(2)) == IntPolynomial({1, -2, 1}));
    const BigIntMatrix squared = salemscope::mat_pow(salemscope::companion(kRow1), 2);
    CHECK(salemscope::char_poly(squared) == IntPolynomial({1, -3, 1, -3, 1}));
}

TEST_CASE("power_min_poly basics") {
    CHECK(salemscope::power_min_poly(kRow1, 1).poly == kRow1);
    const auto p2 = salemscope::power_min_poly(kRow1, 2);
    CHECK(p2.poly == IntPolynomial({1, -3, 1, -3, 1}));
    REQUIRE(p2.trace_sums.size() == 4);
    CHECK(p2.trace_sums[0] == 3);
    CHECK(p2.trace_sums[1] == 7);
    CHECK(p2.trace_sums[2] == 27);
    CHECK(p2.trace_sums[3] == 79);
    CHECK_THROWS_AS(salemscope::power_min_poly(IntPolynomial({1, 2}), 3), salemscope::Error);
    CHECK_THROWS_AS(salemscope::power_min_poly(kRow1, 0), salemscope::Error);
}

TEST_CASE("power_min_poly reproduces stored columns") {
    const auto p43 = salemscope::power_min_poly(kRow6, 43);
    CHECK(p43.poly.coeff(9) == -21586);
    CHECK(p43.poly.coeff(8) == 3611);
    CHECK(p43.poly.coeff(7) == 688);
    CHECK(p43.poly.coeff(6) == 5418);
    CHECK(p43.poly.coeff(5) == -6193);
    const auto p200 = salemscope::power_min_poly(kRow6, 200);
    CHECK(p200.poly.coeff(9) == mpz_class("-144186527874521531930"));
}

TEST_CASE("PowerScan matches mat_pow route") {
    salemscope::PowerScan scan(kRow6);
    for (long n = 1; n <= 8; ++n) {
        const auto inc = scan.next();
        CHECK(inc.n == n);
        CHECK(inc.poly == salemscope::power_min_poly(kRow6, n).poly);
    }
}

TEST_CASE("P_n stays reciprocal with constant term one") {
    salemscope::PowerScan scan(kRow1);
    for (long n = 1; n <= 50; ++n) {
        const auto res = scan.next();
        CHECK(res.poly.is_reciprocal());
        CHECK(res.poly.coeff(0) == 1);
        CHECK(res.poly.degree() == 4);
    }
}

TEST_CASE("power multiplicativity on squarefree intermediates") {
    for (long n = 1; n <= 20; ++n) {
        const IntPolynomial pn = salemscope::power_min_poly(kRow1, n).poly;
        if (!pn.is_squarefree()) continue;
        CHECK(salemscope::power_min_poly(kRow1, 2 * n).poly ==
              salemscope::power_min_poly(pn, 2).poly);
    }
}

TEST_CASE("roots of P_n are n-th powers of the roots of p") {
    const auto base_roots = salemscope::find_roots(kRow1);
    REQUIRE(base_roots.size() == 4);
    for (long n : {2L, 5L, 9L}) {
        const auto pn = salemscope::power_min_poly(kRow1, n).poly;
        const auto pn_roots = salemscope::find_roots(pn);
        REQUIRE(pn_roots.size() == 4);
        // Every lambda^n must be (approximately) a root of P_n.
        for (const auto& lambda : base_roots) {
            const std::complex<double> target = std::pow(lambda, static_cast<double>(n));
            double best = 1e300;
            for (const auto& z : pn_roots)
                best = std::min(best, std::abs(z - target) / (1.0 + std::abs(target)));
            CHECK(best < 1e-6);
        }
    }
}
