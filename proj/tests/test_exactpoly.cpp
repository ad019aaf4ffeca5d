#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonal/mpoly.hpp"
#include "zonal/rational.hpp"

using namespace zonal;

TEST_SUITE_BEGIN("exactpoly");

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return make_rational(num(rng), den(rng));
}

MPoly random_poly(std::mt19937& rng, int nvars, int max_exp, int terms) {
    MPoly p(nvars);
    std::uniform_int_distribution<int> exp(0, max_exp);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = exp(rng);
        p.add_term(e, random_rational(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(to_string(rational_from_string("82944/1925")) == "82944/1925");
    CHECK(to_string(rational_from_string("-4/6")) == "-2/3");
    CHECK(to_string(rational_from_string("7")) == "7");
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(1, -2)) == "-1/2");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic satisfies field axioms on random triples") {
    std::mt19937 rng(20240801);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
        CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
        CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
        CHECK(Rational(a + (-a)) == 0);
        if (b != 0) CHECK(Rational((a / b) * b) == a);
    }
}

TEST_CASE("pochhammer and factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(23, 2) == 253);
    CHECK(pochhammer(make_rational(1, 2), 3) == make_rational(15, 8));  // 1/2 * 3/2 * 5/2
    CHECK(pochhammer(Rational(4), 0) == 1);
    CHECK(inv_factorial_ext(-1) == 0);
    CHECK(inv_factorial_ext(3) == make_rational(1, 6));
}

TEST_CASE("mpoly arithmetic basics") {
    const MPoly y1 = MPoly::variable(2, 0);
    const MPoly y2 = MPoly::variable(2, 1);
    const MPoly square = (y1 + y2).pow(2);
    MPoly expected(2);
    expected.add_term({2, 0}, 1);
    expected.add_term({1, 1}, 2);
    expected.add_term({0, 2}, 1);
    CHECK(square == expected);

    CHECK((square * MPoly(2)).is_zero());
    CHECK(square * Rational(0) == MPoly(2));
    CHECK_THROWS_AS(y1 + MPoly::variable(3, 0), std::invalid_argument);
    CHECK(square.degree() == 2);
    CHECK(MPoly(2).degree() == -1);
}

TEST_CASE("mpoly product matches naive convolution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const MPoly f = random_poly(rng, 3, 4, 6);
        const MPoly g = random_poly(rng, 3, 4, 6);
        CHECK(oracles::to_plain_map(f * g) ==
              oracles::naive_product(oracles::to_plain_map(f), oracles::to_plain_map(g)));
    }
}

TEST_CASE("partial derivatives") {
    MPoly f(2);
    f.add_term({2, 1}, 1);  // y1^2 y2
    MPoly expected(2);
    expected.add_term({1, 1}, 2);
    CHECK(partial_derivative(f, 0) == expected);

    MPoly g(2);
    g.add_term({3, 0}, 1);
    CHECK(partial_derivative(g, 1).is_zero());
}

TEST_CASE("derivatives match the interpolation oracle at rational points") {
    std::mt19937 rng(99);
    const std::vector<Rational> point = {make_rational(3, 2), make_rational(-5, 7),
                                         make_rational(2, 3)};
    for (int trial = 0; trial < 10; ++trial) {
        const MPoly f = random_poly(rng, 3, 3, 8);
        for (int var = 0; var < 3; ++var) {
            const auto coeffs = oracles::univariate_restriction(f, var, point);
            const Rational d1 = coeffs.size() > 1 ? coeffs[1] : Rational(0);
            const Rational d2 = coeffs.size() > 2 ? Rational(coeffs[2] * 2) : Rational(0);
            CHECK(partial_derivative(f, var).evaluate(point) == d1);
            CHECK(partial_derivative(partial_derivative(f, var), var).evaluate(point) == d2);
        }
    }
}

TEST_CASE("exact division by a variable difference") {
    const MPoly y1 = MPoly::variable(2, 0);
    const MPoly y2 = MPoly::variable(2, 1);
    CHECK(exact_div_diff(y1 * y1 - y2 * y2, 0, 1) == y1 + y2);
    CHECK(exact_div_diff(y1 - y2, 0, 1) == MPoly::constant(2, 1));
    CHECK_THROWS_AS(exact_div_diff(y1, 0, 1), std::domain_error);
}

TEST_CASE("divided differences of symmetric polynomials: multiply-back") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 12; ++trial) {
        // Build a random symmetric polynomial from monomial symmetric
        // pieces of mixed weights.
        MPoly f(3);
        const auto p6 = partitions_of(6);
        const auto p4 = partitions_of(4);
        f += m_expand(p6[static_cast<std::size_t>(pick(rng))], 3) * random_rational(rng);
        f += m_expand(p4[static_cast<std::size_t>(pick(rng))], 3) * random_rational(rng);
        const MPoly y1 = MPoly::variable(3, 0);
        const MPoly y2 = MPoly::variable(3, 1);
        const MPoly numerator =
            y1 * y1 * partial_derivative(f, 0) - y2 * y2 * partial_derivative(f, 1);
        const MPoly quotient = exact_div_diff(numerator, 0, 1);
        CHECK(quotient * (y1 - y2) == numerator);
    }
}

TEST_CASE("monomial symmetric expansion") {
    // M_{(2,2,1)}(a,b,c) = a^2 b^2 c + a^2 b c^2 + a b^2 c^2
    MPoly expected(3);
    expected.add_term({2, 2, 1}, 1);
    expected.add_term({2, 1, 2}, 1);
    expected.add_term({1, 2, 2}, 1);
    CHECK(m_expand(Partition{2, 2, 1}, 3) == expected);

    // M_{(2,1)}(a,b,c) has six monomials
    MPoly expected21(3);
    expected21.add_term({2, 1, 0}, 1);
    expected21.add_term({2, 0, 1}, 1);
    expected21.add_term({1, 2, 0}, 1);
    expected21.add_term({0, 2, 1}, 1);
    expected21.add_term({1, 0, 2}, 1);
    expected21.add_term({0, 1, 2}, 1);
    CHECK(m_expand(Partition{2, 1}, 3) == expected21);

    CHECK(m_expand(Partition{1, 1, 1}, 2).is_zero());
    CHECK(m_expand(Partition{}, 2) == MPoly::constant(2, 1));
}

TEST_CASE("m_expand degree equals the weight") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = lambda.length(); m <= 4; ++m) {
                if (m < 1) continue;
                CHECK(m_expand(lambda, m).degree() == n);
            }
}

TEST_CASE("to_m_basis collects orbits") {
    const MPoly abc = MPoly::variable(3, 0) + MPoly::variable(3, 1) + MPoly::variable(3, 2);
    const SymM square = to_m_basis(abc.pow(2));
    CHECK(square.coefficient(Partition{2}) == 1);
    CHECK(square.coefficient(Partition{1, 1}) == 2);
    CHECK(square.coeffs().size() == 2);

    const MPoly two_vars = (MPoly::variable(2, 0) + MPoly::variable(2, 1)).pow(4);
    const SymM quartic = to_m_basis(two_vars);
    CHECK(quartic.coefficient(Partition{4}) == 1);
    CHECK(quartic.coefficient(Partition{3, 1}) == 4);
    CHECK(quartic.coefficient(Partition{2, 2}) == 6);
}

TEST_CASE("to_m_basis round-trips every monomial symmetric function") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int m : {2, 3, 4}) {
                if (lambda.length() > m) continue;
                const SymM coords = to_m_basis(m_expand(lambda, m));
                CHECK(coords.coeffs().size() == 1);
                CHECK(coords.coefficient(lambda) == 1);
            }
        }
    }
}

TEST_CASE("to_m_basis rejects non-symmetric and non-homogeneous input") {
    MPoly bad(2);
    bad.add_term({2, 0}, 1);
    bad.add_term({0, 2}, 2);  // unequal orbit coefficients
    CHECK_THROWS_AS(to_m_basis(bad), std::invalid_argument);

    MPoly incomplete(3);
    incomplete.add_term({2, 1, 0}, 1);  // missing the rest of the orbit
    CHECK_THROWS_AS(to_m_basis(incomplete), std::invalid_argument);

    MPoly inhomogeneous(2);
    inhomogeneous.add_term({2, 0}, 1);
    inhomogeneous.add_term({1, 0}, 1);
    CHECK_THROWS_AS(to_m_basis(inhomogeneous), std::invalid_argument);
}

TEST_CASE("elementary symmetric product basis") {
    const MPoly y1 = MPoly::variable(2, 0);
    const MPoly y2 = MPoly::variable(2, 1);
    CHECK(u_expand(Partition{4}, 2) == (y1 + y2).pow(4));
    CHECK(u_expand(Partition{3, 1}, 2) == y1 * y2 * (y1 + y2).pow(2));
    CHECK(u_expand(Partition{2, 2}, 2) == (y1 * y2).pow(2));
    CHECK_THROWS_AS(u_expand(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("u_expand stays symmetric and homogeneous") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int m : {3, 4}) {
                if (lambda.length() > m) continue;
                const MPoly u = u_expand(lambda, m);
                CHECK(u.degree() == n);
                CHECK(u.is_homogeneous());
                CHECK_NOTHROW(to_m_basis(u));
            }
        }
    }
}

TEST_CASE("polynomial rendering") {
    MPoly p(3);
    p.add_term({2, 1, 0}, make_rational(12, 5));
    p.add_term({1, 1, 1}, make_rational(18, 5));
    p.add_term({0, 0, 3}, -1);
    CHECK(p.to_string({"a", "b", "c"}) == "12/5*a^2*b + 18/5*a*b*c - c^3");
    CHECK(MPoly(2).to_string() == "0");
    CHECK(MPoly::constant(1, make_rational(-3, 4)).to_string() == "-3/4");
    CHECK(MPoly::variable(1, 0).to_string() == "y1");
}

TEST_SUITE_END();
