#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "salemscope/corpus.hpp"
#include "salemscope/errors.hpp"
#include "salemscope/intpoly.hpp"
#include "salemscope/probability.hpp"

using salemscope::IntPolynomial;
using salemscope::ProbEstimate;

TEST_CASE("prob_d4 is exactly one third") {
    const ProbEstimate e = salemscope::prob_d4();
    CHECK(e.d == 4);
    CHECK(e.method == salemscope::ProbMethod::ExactD4);
    CHECK(e.value == 1.0 / 3.0);
    CHECK(e.error_estimate == 0.0);
}

TEST_CASE("prob_d6_integral") {
    const ProbEstimate e = salemscope::prob_d6_integral(1e-7);
    CHECK(e.d == 6);
    CHECK(e.method == salemscope::ProbMethod::IntegralD6);
    CHECK(std::abs(e.value - 0.0717258) < 1e-6);
    CHECK(e.error_estimate <= 1e-7);

    // Tightening the tolerance moves the answer by less than the looser one.
    const ProbEstimate finer = salemscope::prob_d6_integral(5e-9);
    CHECK(std::abs(finer.value - e.value) < 1e-7);

    CHECK_THROWS_AS(salemscope::prob_d6_integral(1e-11),
                    salemscope::ToleranceTooTightError);
}

TEST_CASE("prob_grid input validation") {
    CHECK_THROWS_AS(salemscope::prob_grid(5, 600, 1e9, true), salemscope::BadDegreeError);
    CHECK_THROWS_AS(salemscope::prob_grid(2, 600, 1e9, true), salemscope::BadDegreeError);
    CHECK_THROWS_AS(salemscope::prob_grid(14, 600, 1e9, true), salemscope::BadDegreeError);
    CHECK_THROWS_AS(salemscope::prob_grid(4, 99, 1e9, true), salemscope::GridTooCoarseError);
    CHECK_THROWS_AS(salemscope::prob_grid(4, 600, 1e5, true), salemscope::Error);
}

TEST_CASE("prob_grid degree 4 matches the analytic region") {
    // For degree 4 the hit region is 2 cos t strictly inside (-1, 1) up to
    // O(1/D) boundary shifts, so nodes j = 201..399 of 0..600 are the hits.
    const ProbEstimate full = salemscope::prob_grid(4, 600, 1e9, false);
    CHECK(!full.symmetry_factor);
    CHECK(full.n_c >= 198);
    CHECK(full.n_c <= 200);
    CHECK(full.value == doctest::Approx(full.n_c / 601.0));
    CHECK(std::abs(full.value - 1.0 / 3.0) < 5e-3);

    const ProbEstimate restricted = salemscope::prob_grid(4, 600, 1e9, true);
    CHECK(restricted.symmetry_factor);
    CHECK(restricted.value == doctest::Approx(full.value));
    CHECK(std::abs(restricted.value - 1.0 / 3.0) < 5e-3);
}

TEST_CASE("prob_grid degree 4 monotone in the gap surrogate") {
    const ProbEstimate lo = salemscope::prob_grid(4, 600, 1e6, false);
    const ProbEstimate hi = salemscope::prob_grid(4, 600, 1e9, false);
    CHECK(lo.n_c <= hi.n_c);
}

TEST_CASE("prob_grid degree 6 agrees with the integral") {
    const double reference = salemscope::prob_d6_integral(1e-8).value;
    const ProbEstimate full = salemscope::prob_grid(6, 600, 1e9, false);
    const ProbEstimate restricted = salemscope::prob_grid(6, 600, 1e9, true);
    CHECK(std::abs(full.value - reference) < 5e-3);
    CHECK(std::abs(restricted.value - reference) < 5e-3);
    CHECK(std::abs(restricted.value - full.value) < 5e-3);
    CHECK(restricted.m == 600);
    CHECK(restricted.h == doctest::Approx(std::numbers::pi / 600.0));
    CHECK(restricted.total == doctest::Approx(601.0 * 601.0));
}

TEST_CASE("empirical_frequency on the degree-4 reference row") {
    const IntPolynomial row1 = salemscope::corpus().rows[0].poly();
    const auto freq = salemscope::empirical_frequency(row1, 1, 50);
    const std::vector<long> expected{9, 13, 16, 17, 20, 24, 27, 31, 35, 38, 42, 45, 46, 49};
    CHECK(freq.hits == expected);
    CHECK(freq.frequency == "14/50");
    CHECK(freq.salem_verified);
    CHECK(freq.n_from == 1);
    CHECK(freq.n_to == 50);
}

TEST_CASE("empirical_frequency flags non-Salem inputs") {
    const auto freq = salemscope::empirical_frequency(salemscope::cyclotomic(5), 1, 30);
    CHECK(!freq.salem_verified);
}

TEST_CASE("empirical_frequency input validation") {
    CHECK_THROWS_AS(salemscope::empirical_frequency(IntPolynomial({1, -3, 2}), 1, 10),
                    salemscope::NonMonicError);
    const IntPolynomial row1 = salemscope::corpus().rows[0].poly();
    CHECK_THROWS_AS(salemscope::empirical_frequency(row1, 0, 10), salemscope::Error);
    CHECK_THROWS_AS(salemscope::empirical_frequency(row1, 5, 4), salemscope::Error);
}
