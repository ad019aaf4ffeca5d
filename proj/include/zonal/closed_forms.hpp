#pragma once

#include <string>
#include <vector>

#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

/// First-row closed form c_{(n),(n-m,m)} = binom(n,m) (1/2)_m / (n-m+1/2)_m.
/// Requires 0 <= 2m <= n.
Rational cf_row1(long n, long m);

/// Closed forms for the upper-left corner of the coefficient matrix:
/// kappa = (n - |shape_kappa|, shape_kappa) and lambda likewise, with the
/// shapes drawn from (), (1), (2), (1,1), (3), (2,1). The stored entries
/// are rational functions of n valid for n >= 6; smaller n or other shapes
/// raise an error rather than extrapolate.
Rational cf_corner_largest(const Partition& shape_kappa, const Partition& shape_lambda, long n);

/// Closed forms for the lower-right corner: kappa = (2^{a_kappa}, 1^{n-2 a_kappa})
/// and lambda likewise, 0 <= a <= 4. Requires n >= 2*max(a_kappa, a_lambda).
Rational cf_corner_smallest(int a_kappa, int a_lambda, long n);

/// Complete two-part closed form c_{(a,a-b),(a-d,a-b+d)} for 0 <= b <= a and
/// 0 <= 2d <= b; b = a is accepted via the (a,0) = (a) convention and then
/// reduces to cf_row1.
Rational cf_two_part(long a, long b, long d);

/// The a-independent ratio c_{(a,a-b),(a-d,a-b+d)} / c_{(a,a-b),(a,a-b)}
/// = binom(b,d) (1/2)_d / (b-d+1/2)_d. Requires 0 <= 2d <= b.
Rational cf_two_part_ratio(long b, long d);

/// Conjectural diagonal coefficient c_{kappa,kappa} for kappa = (a,a-b,a-c),
/// 0 <= b <= c <= a. Not a theorem: the verification suites cross-check it
/// against the recurrence and report counterexamples loudly.
Rational conj_diag3(long a, long b, long c);

/// Conjectural diagonal coefficient for kappa = (a,a-b,a-c,a-d),
/// 0 <= b <= c <= d <= a. Not a theorem; see conj_diag3.
Rational conj_diag4(long a, long b, long c, long d);

/// Conjectural limit of c_{(n),(n-n',lambda')} as n -> infinity,
/// prod_i (p_i)_{p_i} / (p_i! 2^{2 p_i - 1}) over the parts of lambda'.
Rational conj_limit(const Partition& lambda_prime);

struct IdentityReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Exact verification, over 0 <= b <= a <= a_max, of the summation identity
/// behind the two-part closed form (sums to 1), of its telescoping
/// certificate term by term, and of both difference-pair identities used in
/// the proof. Violations become report entries, never exceptions.
IdentityReport verify_identities(int a_max);

}  // namespace zonal
