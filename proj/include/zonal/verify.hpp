#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

/// Shared result shape of every verification suite. `range` records the
/// sweep bounds the caller chose; `failures` is empty on success and the
/// suites keep going after a failure so the report is complete.
struct VerifyReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> range;
    long checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Trace-power identity: sum of all zonal polynomials of weight n equals
/// (y_1 + ... + y_m)^n, exactly, for n <= n_max and m <= m_max.
VerifyReport verify_trace(int n_max, int m_max, int threads = 1);

/// Eigen-equation sweep for every partition of n <= n_max and every m from
/// len(lambda) to m_max.
VerifyReport verify_laplace(int n_max, int m_max = 6);

/// Closed forms against the recurrence: first row (n <= row1_n_max),
/// two-part coefficients (2a-b <= twopart_max), upper-left corner entries
/// (6 <= n <= corner_largest_n_max) and lower-right corner entries
/// (8 <= n <= corner_smallest_n_max), plus the ratio relation.
VerifyReport verify_closed_forms(int row1_n_max = 20, int twopart_max = 24,
                                 int corner_largest_n_max = 18, int corner_smallest_n_max = 20);

/// Conjectured diagonal closed forms against the recurrence diagonal, plus
/// the first-row limit conjecture's convergence behaviour.
VerifyReport verify_conjectures(int diag3_a_max = 8, int diag4_a_max = 6);

/// Wraps verify_identities into the shared report shape.
VerifyReport verify_identities_suite(int a_max = 25);

/// Monte-Carlo Wishart check; fails on any |z| > 5.
VerifyReport verify_wishart(int n, int m, int nu, const std::vector<Rational>& y, long samples,
                            std::uint64_t seed, int threads = 1);

}  // namespace zonal
