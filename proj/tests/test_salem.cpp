#include <doctest.h>

#include <cmath>

#include "salemscope/corpus.hpp"
#include "salemscope/errors.hpp"
#include "salemscope/intpoly.hpp"
#include "salemscope/powerpoly.hpp"
#include "salemscope/rootcount.hpp"
#include "salemscope/salem.hpp"

using salemscope::IntPolynomial;
using salemscope::Verdict;

namespace {
const IntPolynomial kRow1 = IntPolynomial::parse("1 -1 -1", true);
const IntPolynomial kRow2 = IntPolynomial::parse("1 -1 0 -1", true);
const IntPolynomial kRow6 = IntPolynomial::parse("1 0 -1 0 0 -1", true);
}

TEST_CASE("vieira_condition") {
    const IntPolynomial p2({1, -3, 1, -3, 1});  // P_2 of row 1: |a_3| = 3 vs 2 + |a_2| = 3
    CHECK(!salemscope::vieira_condition(p2, 1).satisfied);
    const IntPolynomial p9 = salemscope::power_min_poly(kRow1, 9).poly;
    CHECK(salemscope::vieira_condition(p9, 1).satisfied);
    CHECK(!salemscope::vieira_condition(IntPolynomial({1, 1, 1, 1, 1}), 1).satisfied);
    CHECK_THROWS_AS(salemscope::vieira_condition(p2, 2), salemscope::BadLError);
    CHECK_THROWS_AS(salemscope::vieira_condition(p2, -1), salemscope::BadLError);
    CHECK_THROWS_AS(salemscope::vieira_condition(IntPolynomial({2, -3, 1}), 1),
                    salemscope::NotReciprocalError);
}

TEST_CASE("vieira hit implies d-2 unimodular roots") {
    // Monotone consistency on a sample of power polynomials.
    for (long n : {9L, 13L, 16L}) {
        const IntPolynomial pn = salemscope::power_min_poly(kRow1, n).poly;
        REQUIRE(salemscope::vieira_condition(pn, 1).satisfied);
        CHECK(salemscope::unimodular_root_count(pn) == 2);
    }
}

TEST_CASE("certify_power_criterion on reference rows") {
    const auto r1 = salemscope::certify_power_criterion(kRow1, 50);
    CHECK(r1.verdict == Verdict::Salem);
    REQUIRE(r1.witness_n.has_value());
    CHECK(*r1.witness_n == 9);
    CHECK(r1.roots_above_one == 1);
    CHECK(r1.cyclotomic_free);
    CHECK(r1.tau_estimate == doctest::Approx(1.72208381).epsilon(1e-7));

    const auto r2 = salemscope::certify_power_criterion(kRow2, 50);
    CHECK(r2.verdict == Verdict::Salem);
    REQUIRE(r2.witness_n.has_value());
    CHECK(*r2.witness_n == 14);
}

TEST_CASE("certify_power_criterion is inconclusive when max_n is too small") {
    const auto r = salemscope::certify_power_criterion(kRow1, 8);  // first witness is 9
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(!r.witness_n.has_value());
    CHECK(r.failure_reason.empty());
}

TEST_CASE("certify_power_criterion rejects cyclotomic products") {
    const IntPolynomial p = salemscope::cyclotomic(5) * salemscope::cyclotomic(12);
    const auto r = salemscope::certify_power_criterion(p, 30);
    CHECK(r.verdict == Verdict::NotSalem);
    CHECK(r.failure_reason == "polynomial has a cyclotomic factor");
}

TEST_CASE("certify_direct") {
    CHECK(salemscope::certify_direct(kRow2).verdict == Verdict::Salem);
    const auto cyc = salemscope::certify_direct(IntPolynomial({1, 1, 1, 1, 1}));
    CHECK(cyc.verdict == Verdict::NotSalem);
    CHECK(cyc.failure_reason == "polynomial has a cyclotomic factor");

    // x^4-2x^3-2x+1: reciprocal, squarefree, one root above 1, two unimodular.
    const auto quartic = salemscope::certify_direct(IntPolynomial({1, -2, 0, -2, 1}));
    CHECK(quartic.verdict == Verdict::Salem);
    CHECK(quartic.unimodular_count == 2);
    CHECK(quartic.roots_above_one == 1);

    CHECK(salemscope::certify_direct(IntPolynomial({2, -3, 1})).verdict == Verdict::NotSalem);
    CHECK_THROWS_AS(salemscope::certify_direct(IntPolynomial({1, -3, 2})),
                    salemscope::NonMonicError);
}

TEST_CASE("structural rejections name the first failed check") {
    CHECK(salemscope::certify_direct(IntPolynomial({2, -3, 1})).failure_reason ==
          "polynomial is not self-reciprocal");
    CHECK(salemscope::certify_direct(IntPolynomial({1, 0, 0, 1})).failure_reason ==
          "degree is odd");
    CHECK(salemscope::certify_direct(IntPolynomial({1, -3, 1})).failure_reason ==
          "degree is less than four");
    const IntPolynomial nonsf = IntPolynomial({1, 1}) * IntPolynomial({1, 1}) *
                                IntPolynomial({1, 0, 1});
    CHECK(salemscope::certify_direct(nonsf).failure_reason == "polynomial is not squarefree");
}

TEST_CASE("mirrored Salem polynomials are rejected") {
    // p(-x) for row 1: the large root is -tau < -1, so there is no Salem root.
    const IntPolynomial mirrored({1, 1, -1, 1, 1});
    REQUIRE(mirrored.is_reciprocal());
    const auto direct = salemscope::certify_direct(mirrored);
    CHECK(direct.verdict == Verdict::NotSalem);
    CHECK(direct.roots_above_one == 0);
    const auto power = salemscope::certify_power_criterion(mirrored, 50);
    CHECK(power.verdict == Verdict::NotSalem);
}

TEST_CASE("certify_both agrees and keeps the witness") {
    const auto both = salemscope::certify_both(kRow1, 50);
    CHECK(both.verdict == Verdict::Salem);
    CHECK(both.method == salemscope::Method::Both);
    REQUIRE(both.witness_n.has_value());
    CHECK(*both.witness_n == 9);
    CHECK(both.unimodular_count == 2);
}

TEST_CASE("growth checks") {
    const IntPolynomial p1 = salemscope::power_min_poly(kRow1, 1).poly;
    const IntPolynomial p2 = salemscope::power_min_poly(kRow1, 2).poly;
    const auto rec = salemscope::growth_checks(kRow1, 2, p2, &p1);
    CHECK(rec.b_ok);
    CHECK(rec.c_ok);
    CHECK(std::isfinite(rec.ratio));
    CHECK(rec.root_est == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

    const IntPolynomial p43 = salemscope::power_min_poly(kRow6, 43).poly;
    const auto rec43 = salemscope::growth_checks(kRow6, 43, p43, nullptr);
    CHECK(rec43.c_ok);
    CHECK(rec43.b_ok);
    REQUIRE(rec43.c_each.size() == 7);  // k = 1..d-3
    for (bool ok : rec43.c_each) CHECK(ok);
}

TEST_CASE("detect_cyclotomic_by_periodicity") {
    CHECK(salemscope::detect_cyclotomic_by_periodicity(salemscope::cyclotomic(5)));
    CHECK(salemscope::detect_cyclotomic_by_periodicity(IntPolynomial({-1, 0, 1})));  // x^2-1
    CHECK(salemscope::detect_cyclotomic_by_periodicity(salemscope::cyclotomic(3) *
                                                       salemscope::cyclotomic(8)));
    CHECK(!salemscope::detect_cyclotomic_by_periodicity(kRow1));
    CHECK(!salemscope::detect_cyclotomic_by_periodicity(kRow6));
    CHECK_THROWS_AS(salemscope::detect_cyclotomic_by_periodicity(IntPolynomial({1, -3, 2})),
                    salemscope::NonMonicError);
}

TEST_CASE("periodicity matches cyclotomic_free on corpus-style factors") {
    for (const auto& indices : salemscope::corpus().cyclotomic_products) {
        const IntPolynomial p = salemscope::cyclotomic_product(indices);
        CHECK(salemscope::detect_cyclotomic_by_periodicity(p) == !salemscope::cyclotomic_free(p));
    }
}

TEST_CASE("corpus accessors") {
    const auto& c = salemscope::corpus();
    REQUIRE(c.rows.size() == 7);
    CHECK(c.rows[0].poly() == kRow1);
    CHECK(c.rows[6].degree == 10);
    CHECK(c.rows[6].witnesses == std::vector<long>{605});
    CHECK(c.frequency_scans.size() == 3);
    CHECK(c.power_columns.entries.size() == 4);
    CHECK(c.cyclotomic_products.size() == 10);
    for (const auto& row : c.rows) {
        CHECK(row.poly().degree() == row.degree);
        CHECK(row.poly().is_reciprocal());
    }
}
