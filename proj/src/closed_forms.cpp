#include "zonal/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonal {

namespace {

Rational half_int(long twice) { return Rational(twice, 2); }  // twice/2, canonical

Integer pow2(long e) {
    if (e < 0) throw std::invalid_argument("negative power of two in closed form");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2u, static_cast<unsigned long>(e));
    return r;
}

// Index of a corner shape among the lexicographically largest partitions:
// (n) (n-1,1) (n-2,2) (n-2,1,1) (n-3,3) (n-3,2,1).
int corner_shape_index(const Partition& shape) {
    static const std::vector<Partition> shapes = {
        Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{3}, Partition{2, 1}};
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (shape == shapes[i]) return static_cast<int>(i);
    return -1;
}

// The summand of the unit-sum identity: zero whenever a factorial in the
// denominator has a negative argument.
Rational sumid2_term(long a, long b, long d) {
    if (d < 0) return 0;
    const Rational inv_den = inv_factorial_ext(d) * inv_factorial_ext(a - b - d) * inv_factorial_ext(b + d);
    if (inv_den == 0) return 0;
    Rational value = Rational(factorial(a)) * Rational(factorial(a - b));
    value *= half_int(2 * b + 4 * d + 1);
    value *= pochhammer(half_int(1), d);
    value *= inv_den;
    value /= pochhammer(half_int(2 * (b + d) + 1), a - b + 1);
    return value;
}

// First telescoping companion: g1(d) =
// -a!(a-b)!(1/2)_d / ((d-1)!(b+d-1)!(a-b-d+1)!(b+d+1/2)_{a-b+1}).
Rational wz_g1(long a, long b, long d) {
    if (d <= 0) return 0;
    const Rational inv_den =
        inv_factorial_ext(d - 1) * inv_factorial_ext(b + d - 1) * inv_factorial_ext(a - b - d + 1);
    if (inv_den == 0) return 0;
    Rational value = Rational(factorial(a)) * Rational(factorial(a - b));
    value *= pochhammer(half_int(1), d);
    value *= inv_den;
    value /= pochhammer(half_int(2 * (b + d) + 1), a - b + 1);
    return -value;
}

// Second telescoping companion (defined for a > b): g2(d) =
// a!(a-b-1)!(1/2)_d / ((d-1)!(b+d)!(a-b-d)!(b+d+1/2)_{a-b}).
Rational wz_g2(long a, long b, long d) {
    if (d <= 0) return 0;
    const Rational inv_den =
        inv_factorial_ext(d - 1) * inv_factorial_ext(b + d) * inv_factorial_ext(a - b - d);
    if (inv_den == 0) return 0;
    Rational value = Rational(factorial(a)) * Rational(factorial(a - b - 1));
    value *= pochhammer(half_int(1), d);
    value *= inv_den;
    value /= pochhammer(half_int(2 * (b + d) + 1), a - b);
    return value;
}

}  // namespace

Rational cf_row1(long n, long m) {
    if (n < 0 || m < 0 || 2 * m > n) throw std::invalid_argument("cf_row1 requires 0 <= 2m <= n");
    Rational value(binomial(n, m));
    value *= pochhammer(half_int(1), m);
    value /= pochhammer(half_int(2 * (n - m) + 1), m);
    return value;
}

Rational cf_corner_largest(const Partition& shape_kappa, const Partition& shape_lambda, long n) {
    const int row = corner_shape_index(shape_kappa);
    const int col = corner_shape_index(shape_lambda);
    if (row < 0 || col < 0) throw std::invalid_argument("no closed form stored");
    if (n < 6) throw std::invalid_argument("corner closed forms are stored for n >= 6 only");
    const Rational N(n);
    auto prod = [&](std::initializer_list<long> offsets) {
        Rational r(1);
        for (long off : offsets) r *= N + off;
        return r;
    };
    switch (row * 6 + col) {
        case 0 * 6 + 0: return 1;
        case 0 * 6 + 1: return N / (2 * N - 1);
        case 0 * 6 + 2: return 3 * prod({-1, 0}) / (2 * (2 * N - 3) * (2 * N - 1));
        case 0 * 6 + 3: return prod({-1, 0}) / ((2 * N - 3) * (2 * N - 1));
        case 0 * 6 + 4:
            return 5 * prod({-2, -1, 0}) / (2 * (2 * N - 5) * (2 * N - 3) * (2 * N - 1));
        case 0 * 6 + 5:
            return 3 * prod({-2, -1, 0}) / (2 * (2 * N - 5) * (2 * N - 3) * (2 * N - 1));
        case 1 * 6 + 1: return 2 * prod({-1, 0}) / (2 * N - 1);
        case 1 * 6 + 2: return 2 * prod({-2, -1, 0}) / ((2 * N - 5) * (2 * N - 1));
        case 1 * 6 + 3:
            return 2 * N * (2 * N * N - 6 * N + 3) / ((2 * N - 5) * (2 * N - 1));
        case 1 * 6 + 4:
            return 3 * prod({-3, -2, -1, 0}) / ((2 * N - 7) * (2 * N - 5) * (2 * N - 1));
        case 1 * 6 + 5:
            return prod({-2, 0}) * (5 * N * N - 20 * N + 11) /
                   ((2 * N - 7) * (2 * N - 5) * (2 * N - 1));
        case 2 * 6 + 2: return 2 * prod({-3, -2, -1, 0}) / ((2 * N - 5) * (2 * N - 3));
        case 2 * 6 + 3: return 4 * prod({-3, -2, -1, 0}) / (3 * (2 * N - 5) * (2 * N - 3));
        case 2 * 6 + 4:
            return 2 * prod({-4, -3, -2, -1, 0}) / ((2 * N - 9) * (2 * N - 5) * (2 * N - 3));
        case 2 * 6 + 5:
            return 2 * prod({-3, -1, 0}) * (5 * N * N - 30 * N + 36) /
                   (3 * (2 * N - 9) * (2 * N - 5) * (2 * N - 3));
        case 3 * 6 + 3: return Rational(2, 3) * prod({-2, 0});
        case 3 * 6 + 4: return 0;
        case 3 * 6 + 5: return 2 * prod({-3, -2, 0}) / (3 * (2 * N - 7));
        case 4 * 6 + 4:
            return 4 * prod({-5, -4, -3, -2, -1, 0}) /
                   (3 * (2 * N - 9) * (2 * N - 7) * (2 * N - 5));
        case 4 * 6 + 5:
            return 4 * prod({-5, -4, -3, -2, -1, 0}) /
                   (5 * (2 * N - 9) * (2 * N - 7) * (2 * N - 5));
        case 5 * 6 + 5: return 4 * prod({-4, -3, -1, 0}) / (5 * (2 * N - 7));
        default: return 0;  // below the diagonal
    }
}

Rational cf_corner_smallest(int a_kappa, int a_lambda, long n) {
    if (a_kappa < 0 || a_kappa > 4 || a_lambda < 0 || a_lambda > 4)
        throw std::invalid_argument("no closed form stored");
    if (n < 2 * std::max(a_kappa, a_lambda) || n < 1)
        throw std::invalid_argument("n too small for these partitions");
    if (a_lambda > a_kappa) return 0;  // lambda > kappa in lex order
    const Rational N(n);
    auto prod = [&](std::initializer_list<long> offsets) {
        Rational r(1);
        for (long off : offsets) r *= N + off;
        return r;
    };
    const int key = a_kappa * 5 + a_lambda;
    switch (key) {
        case 4 * 5 + 4: return Rational(pow2(n - 3)) * prod({-6, -5, 0}) / 15;
        case 4 * 5 + 3: return Rational(pow2(n - 3)) * prod({-7, -6, -6, 0}) / 15;
        case 4 * 5 + 2: return Rational(pow2(n - 4)) * prod({-7, -6, -6, -5, 0}) / 15;
        case 4 * 5 + 1: return Rational(pow2(n - 4)) * prod({-7, -6, -6, -5, -2, 0}) / 45;
        case 4 * 5 + 0: return Rational(pow2(n - 6)) * prod({-7, -6, -6, -5, -1, 0, 0}) / 45;
        case 3 * 5 + 3: return Rational(pow2(n - 3)) * prod({-4, -3}) / 3;
        case 3 * 5 + 2: return Rational(pow2(n - 3)) * prod({-5, -4, -4}) / 3;
        case 3 * 5 + 1: return Rational(pow2(n - 4)) * prod({-5, -4, -4, -3}) / 3;
        case 3 * 5 + 0: return Rational(pow2(n - 4)) * prod({-5, -4, -4, -3, 0}) / 9;
        case 2 * 5 + 2: return Rational(pow2(n - 1)) * prod({-2, -1}) / (3 * (N + 1));
        case 2 * 5 + 1: return Rational(pow2(n - 1)) * prod({-3, -2, -2}) / (3 * (N + 1));
        case 2 * 5 + 0: return Rational(pow2(n - 2)) * prod({-3, -2, -2, -1}) / (3 * (N + 1));
        case 1 * 5 + 1: return Rational(pow2(n - 1)) * N / (N + 2);
        case 1 * 5 + 0: return Rational(pow2(n - 1)) * prod({-1, 0, 0}) / ((N + 1) * (N + 2));
        case 0 * 5 + 0: return Rational(pow2(n)) / (N + 1);
        default: throw std::logic_error("unreachable");
    }
}

Rational cf_two_part(long a, long b, long d) {
    if (a < 0 || b < 0 || b > a || d < 0 || 2 * d > b)
        throw std::invalid_argument("cf_two_part requires 0 <= b <= a and 0 <= 2d <= b");
    Rational value(factorial(2 * a - b));
    value *= half_int(2 * b + 1);
    value *= pochhammer(half_int(1), d);
    value /= Rational(factorial(d)) * Rational(factorial(a - b)) * Rational(factorial(b - d));
    value /= pochhammer(half_int(2 * (b - d) + 1), a - b + d + 1);
    return value;
}

Rational cf_two_part_ratio(long b, long d) {
    if (b < 0 || d < 0 || 2 * d > b)
        throw std::invalid_argument("cf_two_part_ratio requires 0 <= 2d <= b");
    Rational value(binomial(b, d));
    value *= pochhammer(half_int(1), d);
    value /= pochhammer(half_int(2 * (b - d) + 1), d);
    return value;
}

Rational conj_diag3(long a, long b, long c) {
    if (!(0 <= b && b <= c && c <= a))
        throw std::invalid_argument("conj_diag3 requires 0 <= b <= c <= a");
    const long n = 3 * a - b - c;
    const long d1 = b, d2 = c - b, d3 = a - c;
    Rational value = Rational(factorial(c + 1)) / Rational(factorial(a + 1));
    value *= Rational(factorial(n));
    value /= Rational(factorial(d1)) * Rational(factorial(d2)) * Rational(factorial(d3));
    value /= pochhammer(half_int(2 * d1 + 3), d2);
    value /= pochhammer(half_int(2 * d2 + 3), d3);
    return value;
}

Rational conj_diag4(long a, long b, long c, long d) {
    if (!(0 <= b && b <= c && c <= d && d <= a))
        throw std::invalid_argument("conj_diag4 requires 0 <= b <= c <= d <= a");
    const long n = 4 * a - b - c - d;
    const long d1 = b, d2 = c - b, d3 = d - c, d4 = a - d;
    Rational value = Rational(factorial(c + 1)) * Rational(factorial(d - b + 1));
    value /= Rational(factorial(a - b + 1)) * Rational(factorial(d + 1));
    value /= pochhammer(half_int(2 * d + 5), a - d);
    value *= Rational(factorial(n));
    value /= Rational(factorial(d1)) * Rational(factorial(d2)) * Rational(factorial(d3)) *
             Rational(factorial(d4));
    value /= pochhammer(half_int(2 * d1 + 3), d2);
    value /= pochhammer(half_int(2 * d2 + 3), d3);
    value /= pochhammer(half_int(2 * d3 + 3), d4);
    return value;
}

Rational conj_limit(const Partition& lambda_prime) {
    Rational value(1);
    for (int p : lambda_prime.parts()) {
        value *= pochhammer(Rational(p), p);
        value /= Rational(factorial(p)) * Rational(pow2(2 * p - 1));
    }
    return value;
}

IdentityReport verify_identities(int a_max) {
    if (a_max < 1) throw std::invalid_argument("verify_identities requires a_max >= 1");
    IdentityReport report;
    auto fail = [&report](const std::string& what) { report.failures.push_back(what); };

    for (long a = 0; a <= a_max; ++a) {
        for (long b = 0; b <= a; ++b) {
            // Unit sum.
            Rational sum = 0;
            for (long d = 0; d <= a - b; ++d) sum += sumid2_term(a, b, d);
            ++report.checked;
            if (sum != 1)
                fail("unit sum != 1 at a=" + std::to_string(a) + " b=" + std::to_string(b));

            // Difference pairs, term by term (zero beyond d = a-b by the
            // factorial convention; check a little past the boundary).
            for (long d = 0; d <= a - b + 2; ++d) {
                ++report.checked;
                const Rational lhs1 = sumid2_term(a + 1, b, d) - sumid2_term(a, b, d);
                const Rational rhs1 = wz_g1(a, b, d + 1) - wz_g1(a, b, d);
                if (lhs1 != rhs1)
                    fail("first difference pair fails at a=" + std::to_string(a) +
                         " b=" + std::to_string(b) + " d=" + std::to_string(d));
                if (a > b) {
                    ++report.checked;
                    const Rational lhs2 = sumid2_term(a, b + 1, d) - sumid2_term(a, b, d);
                    const Rational rhs2 = wz_g2(a, b, d + 1) - wz_g2(a, b, d);
                    if (lhs2 != rhs2)
                        fail("second difference pair fails at a=" + std::to_string(a) +
                             " b=" + std::to_string(b) + " d=" + std::to_string(d));
                }
            }
        }
    }

    // Telescoping certificate for the ratio identity, term by term.
    for (long b = 0; b <= a_max; ++b) {
        for (long d = 1; 2 * d <= b; ++d) {
            const Rational scale = Rational(1) / (Rational(d) * half_int(2 * (2 * b - 2 * d + 1)));
            auto f = [&](long j) {
                Rational r(binomial(b, j));
                r *= Rational(b - 2 * j) * pochhammer(half_int(1), j);
                r /= pochhammer(half_int(2 * (b - j) + 1), j);
                return Rational(r * scale);
            };
            auto g = [&](long j) {
                Rational r(binomial(b, j));
                r *= Rational(j) * half_int(2 * (2 * b - 2 * j + 1)) * pochhammer(half_int(1), j);
                r /= pochhammer(half_int(2 * (b - j) + 1), j);
                return Rational(r * scale);
            };
            ++report.checked;
            if (g(0) != 0)
                fail("certificate g(0) != 0 at b=" + std::to_string(b) + " d=" + std::to_string(d));
            bool telescoped = true;
            for (long j = 0; j < d; ++j) {
                ++report.checked;
                if (g(j + 1) - g(j) != f(j)) {
                    telescoped = false;
                    fail("certificate step fails at b=" + std::to_string(b) +
                         " d=" + std::to_string(d) + " j=" + std::to_string(j));
                }
            }
            ++report.checked;
            if (telescoped && g(d) != cf_two_part_ratio(b, d))
                fail("certificate endpoint mismatch at b=" + std::to_string(b) +
                     " d=" + std::to_string(d));
        }
    }
    return report;
}

}  // namespace zonal
