#include <doctest.h>

#include <random>

#include "zonal/hypergeometric.hpp"

using namespace zonal;

TEST_SUITE_BEGIN("hypermat");

TEST_CASE("generalized Pochhammer symbol") {
    // 2^4 (3/2)_{(4)} = 945
    CHECK(Rational(16 * gen_pochhammer(make_rational(3, 2), Partition{4})) == 945);
    CHECK(gen_pochhammer(make_rational(3, 2), Partition{}) == 1);
    for (int n = 0; n <= 6; ++n) {
        const Rational a = make_rational(7, 3);
        const Partition row = n ? Partition{n} : Partition{};
        CHECK(gen_pochhammer(a, row) == pochhammer(a, n));
    }
    // The eigenvalue diagonal of the published example: 2^4 (3/2)_lambda.
    CHECK(Rational(16 * gen_pochhammer(make_rational(3, 2), Partition{3, 1})) == 210);
    CHECK(Rational(16 * gen_pochhammer(make_rational(3, 2), Partition{2, 2})) == 120);
    // Double arithmetic follows the exact value.
    CHECK(gen_pochhammer(1.5, Partition{4}) == doctest::Approx(945.0 / 16.0));
}

TEST_CASE("scalar series basics") {
    PfqSpec<Rational> trivial;
    trivial.order = 0;
    CHECK(scalar_pfq(trivial, make_rational(5, 3)) == 1);

    // 0F0 is the truncated exponential.
    PfqSpec<Rational> exp_spec;
    exp_spec.order = 7;
    const Rational z = make_rational(1, 2);
    Rational expected = 0;
    for (int k = 0; k <= 7; ++k) {
        Rational term = 1;
        for (int i = 0; i < k; ++i) term *= z;
        expected += term / Rational(factorial(k));
    }
    CHECK(scalar_pfq(exp_spec, z) == expected);

    // 2F1(1,1;2;z) truncates to sum z^k/(k+1).
    PfqSpec<Rational> gauss;
    gauss.upper = {Rational(1), Rational(1)};
    gauss.lower = {Rational(2)};
    gauss.order = 9;
    Rational series = 0;
    for (int k = 0; k <= 9; ++k) {
        Rational term = 1;
        for (int i = 0; i < k; ++i) term *= z;
        series += term / Rational(k + 1);
    }
    CHECK(scalar_pfq(gauss, z) == series);
}

TEST_CASE("scalar series rejects lower-parameter singularities") {
    PfqSpec<Rational> spec;
    spec.lower = {Rational(-2)};
    spec.order = 5;  // (-2)_3 = 0
    CHECK_THROWS_AS(scalar_pfq(spec, Rational(1)), std::domain_error);
    spec.order = 2;  // truncated before the zero factor
    CHECK_NOTHROW(scalar_pfq(spec, Rational(1)));
}

TEST_CASE("matrix argument reduces to the scalar series at m=1") {
    std::mt19937 rng(20240812);
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 6);
    ZonalCache cache;
    for (int trial = 0; trial < 8; ++trial) {
        PfqSpec<Rational> spec;
        // Positive parameters cannot produce singularities.
        spec.upper = {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
        spec.lower = {make_rational(num(rng), den(rng))};
        spec.order = 12;
        const Rational z = make_rational(num(rng), 7 * den(rng));
        CHECK(matrix_pfq(spec, std::vector<Rational>{z}, cache) == scalar_pfq(spec, z));
    }
}

TEST_CASE("matrix argument: exponential collapse") {
    PfqSpec<Rational> spec;
    spec.order = 10;
    ZonalCache cache;

    CHECK(matrix_pfq(spec, std::vector<Rational>{Rational(0)}, cache) == 1);
    CHECK(matrix_pfq(spec, std::vector<Rational>{Rational(0), Rational(0), Rational(0)}, cache) ==
          1);

    for (int m = 1; m <= 4; ++m) {
        std::vector<Rational> eigs;
        for (int i = 1; i <= m; ++i) eigs.push_back(make_rational(i, 5));
        Rational trace = 0;
        for (const auto& e : eigs) trace += e;
        Rational expected = 0;
        for (int k = 0; k <= 10; ++k) {
            Rational term = 1;
            for (int i = 0; i < k; ++i) term *= trace;
            expected += term / Rational(factorial(k));
        }
        CHECK(matrix_pfq(spec, eigs, cache) == expected);
    }

    CHECK_THROWS_AS(matrix_pfq(spec, std::vector<Rational>{}, cache), std::invalid_argument);
}

TEST_CASE("partial sums are monotone for positive data") {
    ZonalCache cache;
    const std::vector<Rational> eigs = {make_rational(1, 3), make_rational(1, 2)};
    Rational previous = -1;
    for (int order = 0; order <= 8; ++order) {
        PfqSpec<Rational> spec;
        spec.upper = {make_rational(3, 2)};
        spec.lower = {make_rational(5, 2)};
        spec.order = order;
        const Rational value = matrix_pfq(spec, eigs, cache);
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("matrix series in doubles tracks the exact series") {
    ZonalCache cache;
    PfqSpec<Rational> exact_spec;
    exact_spec.upper = {make_rational(1, 2), make_rational(3, 2)};
    exact_spec.lower = {make_rational(5, 2)};
    exact_spec.order = 8;
    const std::vector<Rational> eigs = {make_rational(1, 10), make_rational(1, 5)};

    PfqSpec<double> dspec;
    dspec.upper = {0.5, 1.5};
    dspec.lower = {2.5};
    dspec.order = 8;
    const std::vector<double> deigs = {0.1, 0.2};

    CHECK(matrix_pfq(dspec, deigs, cache) ==
          doctest::Approx(to_double(matrix_pfq(exact_spec, eigs, cache))).epsilon(1e-12));
}

TEST_SUITE_END();
