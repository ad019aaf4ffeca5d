#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonal/laplace_beltrami.hpp"
#include "zonal/zonal_polynomials.hpp"

using namespace zonal;

TEST_SUITE_BEGIN("laplace");

namespace {

// Pointwise evaluation of the operator through the interpolation oracle:
// derivatives at the point come from exact univariate restrictions, the
// singular terms from rational arithmetic at distinct coordinates.
Rational delta_at_point(const MPoly& f, const std::vector<Rational>& point) {
    const int m = f.nvars();
    Rational total = 0;
    for (int i = 0; i < m; ++i) {
        const auto coeffs = oracles::univariate_restriction(f, i, point);
        const Rational d1 = coeffs.size() > 1 ? coeffs[1] : Rational(0);
        const Rational d2 = coeffs.size() > 2 ? Rational(coeffs[2] * 2) : Rational(0);
        const Rational& yi = point[static_cast<std::size_t>(i)];
        total += yi * yi * d2;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            total += yi * yi / (yi - point[static_cast<std::size_t>(j)]) * d1;
        }
    }
    return total;
}

MPoly random_symmetric(std::mt19937& rng, int m) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<int> weight(1, 5);
    MPoly f(m);
    for (int piece = 0; piece < 3; ++piece) {
        const int n = weight(rng);
        const auto parts = partitions_of(n);
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        f += m_expand(parts[pick(rng)], m) * make_rational(num(rng), den(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("one variable: Euler-free quadratic scaling") {
    for (int n = 1; n <= 7; ++n) {
        MPoly yn(1);
        yn.add_term({n}, 1);
        CHECK(apply_delta_y(yn) == yn * Rational(static_cast<long>(n) * (n - 1)));
    }
}

TEST_CASE("two variables: first power sum is an eigenfunction with eigenvalue 1") {
    const MPoly f = MPoly::variable(2, 0) + MPoly::variable(2, 1);
    CHECK(apply_delta_y(f) == f);
    CHECK(rho(Partition{1}) + (2 - 1) * 1 == 1);
}

TEST_CASE("operator agrees with the pointwise oracle on random symmetric input") {
    std::mt19937 rng(314159);
    const std::vector<std::vector<Rational>> points = {
        {make_rational(3, 2), make_rational(-2, 3), make_rational(5, 7)},
        {make_rational(1, 4), make_rational(7, 3), make_rational(-4, 5)},
    };
    for (int trial = 0; trial < 8; ++trial) {
        const MPoly f = random_symmetric(rng, 3);
        const MPoly image = apply_delta_y(f);
        for (const auto& point : points) CHECK(image.evaluate(point) == delta_at_point(f, point));
    }
}

TEST_CASE("non-symmetric input is rejected") {
    CHECK_THROWS_AS(apply_delta_y(MPoly::variable(2, 0)), std::domain_error);
    MPoly f(3);
    f.add_term({2, 1, 0}, 1);
    CHECK_THROWS_AS(apply_delta_y(f), std::domain_error);
}

TEST_CASE("linearity on symmetric pairs") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 6; ++trial) {
        const MPoly f = random_symmetric(rng, 3);
        const MPoly g = random_symmetric(rng, 3);
        const Rational alpha = make_rational(4, 3);
        const Rational beta = make_rational(-7, 2);
        CHECK(apply_delta_y(f * alpha + g * beta) ==
              apply_delta_y(f) * alpha + apply_delta_y(g) * beta);
    }
}

TEST_CASE("degree and symmetry are preserved on homogeneous input") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            if (lambda.length() > 3) continue;
            const MPoly f = m_expand(lambda, 3);
            const MPoly image = apply_delta_y(f);
            if (image.is_zero()) continue;
            CHECK(image.degree() == n);
            CHECK(image.is_homogeneous());
            CHECK_NOTHROW(to_m_basis(image));
        }
    }
}

TEST_CASE("eigen-equation on published cases") {
    const auto check21 = check_eigen(Partition{2, 1}, 3);
    CHECK(check21.holds);
    CHECK(check21.eigenvalue == 7);  // rho = 1 plus (3-1)*3

    for (int n = 1; n <= 6; ++n) {
        const auto result = check_eigen(Partition{n}, 1);
        CHECK(result.holds);
        CHECK(result.eigenvalue == static_cast<long long>(n) * (n - 1));
    }
}

TEST_CASE("eigen-equation sweep up to weight five") {
    for (int n = 1; n <= 5; ++n) {
        CoeffTable table(n);
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = std::max(1, lambda.length()); m <= 5; ++m) {
                const auto result = check_eigen(lambda, m, table);
                CHECK(result.holds);
                CHECK(result.eigenvalue == rho(lambda) + static_cast<long long>(m - 1) * n);
            }
        }
    }
}

TEST_SUITE_END();
