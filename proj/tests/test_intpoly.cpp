#include <doctest.h>

#include <random>

#include "salemscope/intpoly.hpp"
#include "salemscope/roots.hpp"

using salemscope::IntPolynomial;

namespace {
const IntPolynomial kRow1 = IntPolynomial::parse("1 -1 -1", true);  // x^4-x^3-x^2-x+1
}

TEST_CASE("construction trims and reports degree") {
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial({1, 2, 0, 0}).degree() == 1);
    CHECK(IntPolynomial({0}).is_zero());
    CHECK(kRow1.degree() == 4);
    CHECK(kRow1.monic());
}

TEST_CASE("parse full and half forms") {
    const IntPolynomial full = IntPolynomial::parse("1 -1 -1 -1 1");
    CHECK(full == kRow1);
    const IntPolynomial row6 = IntPolynomial::parse("1 0 -1 0 0 -1", true);
    CHECK(row6.degree() == 10);
    CHECK(row6.coeff(10) == 1);
    CHECK(row6.coeff(5) == -1);
    CHECK(row6.coeff(8) == -1);  // mirror of a_2
    CHECK(row6.coeff(2) == -1);
    CHECK(row6.coeff(7) == 0);
    CHECK(row6.is_reciprocal());
    CHECK_THROWS_AS(IntPolynomial::parse("1 x 2"), salemscope::Error);
    CHECK_THROWS_AS(IntPolynomial::parse(""), salemscope::Error);
}

TEST_CASE("to_string round trip") {
    CHECK(IntPolynomial::parse(kRow1.to_string()) == kRow1);
    CHECK(kRow1.to_string() == "1 -1 -1 -1 1");
}

TEST_CASE("arithmetic identities") {
    const IntPolynomial a({1, -1, 1});  // x^2-x+1
    const IntPolynomial b({1, 1, 1});   // x^2+x+1
    CHECK(a * b == IntPolynomial({1, 0, 1, 0, 1}));  // x^4+x^2+1
    const IntPolynomial one({1});
    CHECK(kRow1 * one == kRow1);
    CHECK(kRow1 + (-kRow1) == IntPolynomial{});
    CHECK(kRow1 - kRow1 == IntPolynomial{});
}

TEST_CASE("evaluate and derivative") {
    CHECK(kRow1.evaluate(1) == -1);
    CHECK(kRow1.evaluate(0) == 1);
    CHECK(kRow1.derivative() == IntPolynomial({-1, -2, -3, 4}));
    CHECK(IntPolynomial({5}).derivative().is_zero());
}

TEST_CASE("is_reciprocal") {
    CHECK(kRow1.is_reciprocal());
    CHECK(IntPolynomial({1, 0, 0, 1}).is_reciprocal());   // x^3+1
    CHECK(!IntPolynomial({2, -3, 1}).is_reciprocal());    // x^2-3x+2
}

TEST_CASE("is_squarefree") {
    CHECK(kRow1.is_squarefree());
    CHECK(!IntPolynomial({1, -2, 1}).is_squarefree());  // (x-1)^2
    CHECK(IntPolynomial({1, 0, 1}).is_squarefree());    // x^2+1
    CHECK_THROWS_AS(IntPolynomial{}.is_squarefree(), salemscope::Error);
}

TEST_CASE("divide_exact") {
    const IntPolynomial product({1, 0, 1, 0, 1});
    const IntPolynomial factor({1, 1, 1});
    const auto q = product.divide_exact(factor);
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial({1, -1, 1}));
    CHECK(!product.divide_exact(IntPolynomial({1, 1})).has_value());  // x+1 does not divide
    CHECK(!IntPolynomial({1, 1, 1}).divide_exact(IntPolynomial({3, 3, 3})).has_value());
}

TEST_CASE("gcd_primitive") {
    const IntPolynomial a({-1, 0, 1});      // x^2-1
    const IntPolynomial b({1, -2, 1});      // (x-1)^2
    CHECK(salemscope::gcd_primitive(a, b) == IntPolynomial({-1, 1}));  // x-1
    CHECK(salemscope::gcd_primitive(kRow1, kRow1.derivative()).degree() == 0);
    // Content is stripped and the sign normalized.
    const IntPolynomial c({-2, 2});  // 2(x-1)
    const IntPolynomial d({-6, 6});  // 6(x-1)
    CHECK(salemscope::gcd_primitive(c, d) == IntPolynomial({-1, 1}));
}

TEST_CASE("euler_phi") {
    CHECK(salemscope::euler_phi(1) == 1);
    CHECK(salemscope::euler_phi(2) == 1);
    CHECK(salemscope::euler_phi(5) == 4);
    CHECK(salemscope::euler_phi(12) == 4);
    CHECK(salemscope::euler_phi(97) == 96);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(salemscope::cyclotomic(1) == IntPolynomial({-1, 1}));
    CHECK(salemscope::cyclotomic(5) == IntPolynomial({1, 1, 1, 1, 1}));
    CHECK(salemscope::cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));  // x^4-x^2+1
    CHECK_THROWS_AS(salemscope::cyclotomic(0), salemscope::Error);

    // prod_{j | k} Phi_j = x^k - 1, and deg Phi_k = phi(k).
    for (unsigned long k = 1; k <= 16; ++k) {
        IntPolynomial prod({1});
        for (unsigned long j = 1; j <= k; ++j)
            if (k % j == 0) prod = prod * salemscope::cyclotomic(j);
        std::vector<mpz_class> want(k + 1, 0);
        want[0] = -1;
        want[k] = 1;
        CHECK(prod == IntPolynomial(want));
        CHECK(static_cast<unsigned long>(salemscope::cyclotomic(k).degree()) ==
              salemscope::euler_phi(k));
    }
}

TEST_CASE("cyclotomic_free") {
    CHECK(salemscope::cyclotomic_free(kRow1));
    CHECK(!salemscope::cyclotomic_free(salemscope::cyclotomic(5)));
    const IntPolynomial with_phi1 = IntPolynomial({1, -3, 1}) * salemscope::cyclotomic(1);
    CHECK(!salemscope::cyclotomic_free(with_phi1));
}

TEST_CASE("reciprocity is closed under products") {
    const IntPolynomial p = IntPolynomial::parse("1 -1 0 -1", true);
    const IntPolynomial q = salemscope::cyclotomic(12);
    REQUIRE(p.is_reciprocal());
    REQUIRE(q.is_reciprocal());
    CHECK((p * q).is_reciprocal());
    CHECK((kRow1 * q).is_reciprocal());
}

TEST_CASE("is_squarefree agrees with a float root oracle") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> deg_dist(2, 10);
    std::uniform_int_distribution<long> coeff_dist(-5, 5);
    int decided = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = deg_dist(rng);
        std::vector<mpz_class> c;
        for (int i = 0; i < d; ++i) c.emplace_back(coeff_dist(rng));
        c.emplace_back(1);  // monic keeps the root finder well-behaved
        const IntPolynomial p{std::move(c)};

        const auto roots = salemscope::find_roots(p);
        if (roots.empty()) continue;  // oracle failed to converge; skip
        double min_dist = 1e300;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                min_dist = std::min(min_dist, std::abs(roots[i] - roots[j]));
        if (min_dist > 1e-6) {
            CHECK(p.is_squarefree());
            ++decided;
        } else if (min_dist < 1e-8) {
            CHECK(!p.is_squarefree());
            ++decided;
        }
    }
    CHECK(decided > 100);  // the oracle must actually decide most samples
}
