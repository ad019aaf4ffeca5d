#include "zonal/verify.hpp"

#include <algorithm>
#include <cmath>

#include "zonal/closed_forms.hpp"
#include "zonal/coefficients.hpp"
#include "zonal/laplace_beltrami.hpp"
#include "zonal/mpoly.hpp"
#include "zonal/wishart.hpp"
#include "zonal/zonal_polynomials.hpp"

namespace zonal {

namespace {

Partition corner_largest_partition(const Partition& shape, long n) {
    std::vector<int> parts;
    parts.push_back(static_cast<int>(n) - shape.weight());
    for (int p : shape.parts()) parts.push_back(p);
    return Partition::from_unsorted(std::move(parts));
}

Partition two_one_partition(int twos, int n) {
    std::vector<int> parts(static_cast<std::size_t>(twos), 2);
    parts.resize(static_cast<std::size_t>(twos) + static_cast<std::size_t>(n - 2 * twos), 1);
    return Partition(std::move(parts));
}

Partition drop_zeros(std::vector<int> parts) { return Partition::from_unsorted(std::move(parts)); }

const std::vector<Partition>& corner_shapes() {
    static const std::vector<Partition> shapes = {
        Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{3}, Partition{2, 1}};
    return shapes;
}

}  // namespace

VerifyReport verify_trace(int n_max, int m_max, int threads) {
    VerifyReport report;
    report.suite = "trace";
    report.range = {{"n_max", std::to_string(n_max)}, {"m_max", std::to_string(m_max)}};
    for (int n = 0; n <= n_max; ++n) {
        CoeffTable table(n);
        table.build_all(threads);
        for (int m = 1; m <= m_max; ++m) {
            MPoly sum(m);
            for (const Partition& lambda : table.partitions())
                sum += zonal_polynomial(lambda, m, table);
            MPoly trace(m);
            for (int i = 0; i < m; ++i) trace += MPoly::variable(m, i);
            ++report.checked;
            if (!(sum == trace.pow(n)))
                report.failures.push_back("trace identity fails at n=" + std::to_string(n) +
                                          " m=" + std::to_string(m));
        }
    }
    return report;
}

VerifyReport verify_laplace(int n_max, int m_max) {
    VerifyReport report;
    report.suite = "laplace";
    report.range = {{"n_max", std::to_string(n_max)}, {"m_max", std::to_string(m_max)}};
    for (int n = 1; n <= n_max; ++n) {
        CoeffTable table(n);
        for (const Partition& lambda : table.partitions()) {
            for (int m = lambda.length(); m <= m_max; ++m) {
                if (m < 1) continue;
                ++report.checked;
                const EigenCheckResult result = check_eigen(lambda, m, table);
                if (!result.holds)
                    report.failures.push_back("eigen-equation fails at lambda=" +
                                              lambda.to_string() + " m=" + std::to_string(m));
            }
        }
    }
    return report;
}

VerifyReport verify_closed_forms(int row1_n_max, int twopart_max, int corner_largest_n_max,
                                 int corner_smallest_n_max) {
    VerifyReport report;
    report.suite = "closed-forms";
    report.range = {{"row1_n_max", std::to_string(row1_n_max)},
                    {"twopart_max", std::to_string(twopart_max)},
                    {"corner_largest_n_max", std::to_string(corner_largest_n_max)},
                    {"corner_smallest_n_max", std::to_string(corner_smallest_n_max)}};
    ZonalCache cache;

    for (long n = 0; n <= row1_n_max; ++n) {
        CoeffTable& table = cache.table(static_cast<int>(n));
        for (long m = 0; 2 * m <= n; ++m) {
            ++report.checked;
            const Rational expected =
                table.coefficient(Partition{static_cast<int>(n)},
                                  drop_zeros({static_cast<int>(n - m), static_cast<int>(m)}));
            if (cf_row1(n, m) != expected)
                report.failures.push_back("row closed form fails at n=" + std::to_string(n) +
                                          " m=" + std::to_string(m));
        }
    }

    // Weight 2a-b <= twopart_max with b <= a means a <= twopart_max.
    for (long a = 1; a <= twopart_max; ++a) {
        for (long b = 0; b <= a; ++b) {
            if (2 * a - b > twopart_max) continue;
            CoeffTable& table = cache.table(static_cast<int>(2 * a - b));
            const Partition kappa = drop_zeros({static_cast<int>(a), static_cast<int>(a - b)});
            for (long d = 0; 2 * d <= b; ++d) {
                const Partition lambda =
                    drop_zeros({static_cast<int>(a - d), static_cast<int>(a - b + d)});
                ++report.checked;
                const Rational expected = table.coefficient(kappa, lambda);
                if (cf_two_part(a, b, d) != expected)
                    report.failures.push_back("two-part closed form fails at a=" + std::to_string(a) +
                                              " b=" + std::to_string(b) + " d=" + std::to_string(d));
                ++report.checked;
                if (cf_two_part(a, b, d) != cf_two_part_ratio(b, d) * cf_two_part(a, b, 0))
                    report.failures.push_back("two-part ratio relation fails at a=" +
                                              std::to_string(a) + " b=" + std::to_string(b) +
                                              " d=" + std::to_string(d));
            }
        }
    }

    for (long n = 6; n <= corner_largest_n_max; ++n) {
        CoeffTable& table = cache.table(static_cast<int>(n));
        for (const Partition& sk : corner_shapes()) {
            for (const Partition& sl : corner_shapes()) {
                ++report.checked;
                const Rational expected =
                    table.coefficient(corner_largest_partition(sk, n), corner_largest_partition(sl, n));
                if (cf_corner_largest(sk, sl, n) != expected)
                    report.failures.push_back("corner (largest) closed form fails at n=" +
                                              std::to_string(n) + " kappa shape " + sk.to_string() +
                                              " lambda shape " + sl.to_string());
            }
        }
    }

    for (long n = 8; n <= corner_smallest_n_max; ++n) {
        CoeffTable& table = cache.table(static_cast<int>(n));
        for (int ak = 0; ak <= 4; ++ak) {
            for (int al = 0; al <= 4; ++al) {
                ++report.checked;
                const Rational expected =
                    table.coefficient(two_one_partition(ak, static_cast<int>(n)),
                                      two_one_partition(al, static_cast<int>(n)));
                if (cf_corner_smallest(ak, al, n) != expected)
                    report.failures.push_back("corner (smallest) closed form fails at n=" +
                                              std::to_string(n) + " a_kappa=" + std::to_string(ak) +
                                              " a_lambda=" + std::to_string(al));
            }
        }
    }
    return report;
}

VerifyReport verify_conjectures(int diag3_a_max, int diag4_a_max) {
    VerifyReport report;
    report.suite = "conjectures";
    report.range = {{"diag3_a_max", std::to_string(diag3_a_max)},
                    {"diag4_a_max", std::to_string(diag4_a_max)}};
    ZonalCache cache;

    for (long a = 0; a <= diag3_a_max; ++a) {
        for (long c = 0; c <= a; ++c) {
            for (long b = 0; b <= c; ++b) {
                const Partition kappa = drop_zeros(
                    {static_cast<int>(a), static_cast<int>(a - b), static_cast<int>(a - c)});
                CoeffTable& table = cache.table(kappa.weight());
                ++report.checked;
                if (conj_diag3(a, b, c) != table.coefficient(kappa, kappa))
                    report.failures.push_back("three-part diagonal conjecture fails at a=" +
                                              std::to_string(a) + " b=" + std::to_string(b) +
                                              " c=" + std::to_string(c));
            }
        }
    }

    for (long a = 0; a <= diag4_a_max; ++a) {
        for (long d = 0; d <= a; ++d) {
            for (long c = 0; c <= d; ++c) {
                for (long b = 0; b <= c; ++b) {
                    const Partition kappa =
                        drop_zeros({static_cast<int>(a), static_cast<int>(a - b),
                                    static_cast<int>(a - c), static_cast<int>(a - d)});
                    CoeffTable& table = cache.table(kappa.weight());
                    ++report.checked;
                    if (conj_diag4(a, b, c, d) != table.coefficient(kappa, kappa))
                        report.failures.push_back("four-part diagonal conjecture fails at a=" +
                                                  std::to_string(a) + " b=" + std::to_string(b) +
                                                  " c=" + std::to_string(c) +
                                                  " d=" + std::to_string(d));
                }
            }
        }
    }

    // Convergence toward the conjectured limit along the first row, using
    // the stored corner closed forms.
    const std::vector<Partition> tails = {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3}};
    for (const Partition& tail : tails) {
        const Rational limit = conj_limit(tail);
        Rational previous_gap;
        bool have_previous = false;
        bool monotone = true;
        Rational final_gap;
        for (long n = 20; n <= 60; ++n) {
            Rational gap = cf_corner_largest(Partition{}, tail, n) - limit;
            if (gap < 0) gap = -gap;
            if (have_previous && !(gap < previous_gap)) monotone = false;
            previous_gap = gap;
            have_previous = true;
            final_gap = gap;
        }
        ++report.checked;
        if (!monotone)
            report.failures.push_back("limit gap not strictly decreasing for tail " +
                                      tail.to_string());
        ++report.checked;
        if (!(final_gap < Rational(1, 100)))
            report.failures.push_back("limit gap at n=60 not below 1/100 for tail " +
                                      tail.to_string());
    }
    return report;
}

VerifyReport verify_identities_suite(int a_max) {
    VerifyReport report;
    report.suite = "identities";
    report.range = {{"a_max", std::to_string(a_max)}};
    const IdentityReport inner = verify_identities(a_max);
    report.checked = inner.checked;
    report.failures = inner.failures;
    return report;
}

VerifyReport verify_wishart(int n, int m, int nu, const std::vector<Rational>& y, long samples,
                            std::uint64_t seed, int threads) {
    VerifyReport report;
    report.suite = "wishart";
    report.range = {{"n", std::to_string(n)},       {"m", std::to_string(m)},
                    {"nu", std::to_string(nu)},     {"samples", std::to_string(samples)},
                    {"seed", std::to_string(seed)}, {"threads", std::to_string(threads)}};
    const McReport mc = mc_expectation_u(n, m, nu, y, samples, seed, threads);
    for (std::size_t i = 0; i < mc.basis.size(); ++i) {
        ++report.checked;
        if (!(std::abs(mc.zscores[i]) <= 5.0))
            report.failures.push_back("z-score " + std::to_string(mc.zscores[i]) +
                                      " out of band for basis element " + mc.basis[i].to_string());
    }
    return report;
}

}  // namespace zonal
