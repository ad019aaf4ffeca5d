#include "zonal/wishart.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "zonal/hypergeometric.hpp"
#include "zonal/mpoly.hpp"

namespace zonal {

namespace {

// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
RationalMatrix invert(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size();
    RationalMatrix out(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j] == 0) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr long kChunk = 4096;

}  // namespace

Rational d_constant(const Partition& lambda) {
    const int k = lambda.length();
    const int n = lambda.weight();
    Rational value(1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            value *= 2 * lambda.part(i) - 2 * lambda.part(j) - (i + 1) + (j + 1);
    for (int i = 0; i < k; ++i)
        value /= Rational(factorial(2 * lambda.part(i) + k - (i + 1)));
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2u, static_cast<unsigned long>(n));
    value *= Rational(two_n) * Rational(factorial(n));
    value /= Rational(factorial(2 * n));
    return value;
}

std::vector<Partition> basis_partitions(int n, int m) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(n))
        if (p.length() <= m) out.push_back(p);
    return out;
}

RationalMatrix xi_matrix(int n, int m, CoeffTable& table) {
    if (m < 1) throw std::invalid_argument("xi_matrix requires m >= 1");
    const std::vector<Partition> basis = basis_partitions(n, m);
    const std::size_t size = basis.size();
    std::vector<int> col_index(table.size(), -1);
    for (std::size_t j = 0; j < size; ++j)
        col_index[static_cast<std::size_t>(table.index_of(basis[j]))] = static_cast<int>(j);

    // M-basis coordinates of Y_lambda = C_lambda / d_lambda, restricted to
    // partitions with at most m parts (the others vanish in m variables).
    RationalMatrix y(size, std::vector<Rational>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
        const Rational inv_d = Rational(1) / d_constant(basis[i]);
        const int row = table.index_of(basis[i]);
        for (std::size_t t = 0; t < table.size(); ++t) {
            const int col = col_index[t];
            if (col < 0 || static_cast<int>(t) < row) continue;
            const Rational& c = table.at(row, static_cast<int>(t));
            if (c != 0) y[i][static_cast<std::size_t>(col)] = c * inv_d;
        }
    }

    // M-basis coordinates of each U basis element.
    RationalMatrix u(size, std::vector<Rational>(size, 0));
    for (std::size_t j = 0; j < size; ++j) {
        const SymM coords = to_m_basis(u_expand(basis[j], m));
        for (const auto& [p, c] : coords.coeffs()) {
            const int col = col_index[static_cast<std::size_t>(table.index_of(p))];
            if (col < 0) throw std::logic_error("U expansion leaves the basis");
            u[j][static_cast<std::size_t>(col)] = c;
        }
    }

    return multiply(y, invert(std::move(u)));
}

RationalMatrix xi_matrix(int n, int m) {
    CoeffTable table(n);
    return xi_matrix(n, m, table);
}

TransitionData transition_matrix(int n, int m, int nu, CoeffTable& table) {
    if (nu < 1) throw std::invalid_argument("transition_matrix requires nu >= 1");
    TransitionData out;
    out.n = n;
    out.m = m;
    out.nu = nu;
    out.basis = basis_partitions(n, m);
    out.xi = xi_matrix(n, m, table);
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2u, static_cast<unsigned long>(n));
    out.lambda_diag.reserve(out.basis.size());
    for (const Partition& lambda : out.basis)
        out.lambda_diag.emplace_back(Rational(two_n) *
                                     gen_pochhammer(Rational(nu, 2), lambda));
    RationalMatrix scaled = out.xi;  // diag(lambda) * xi
    for (std::size_t i = 0; i < scaled.size(); ++i)
        for (auto& v : scaled[i]) v *= out.lambda_diag[i];
    out.transition = multiply(invert(out.xi), scaled);
    return out;
}

TransitionData transition_matrix(int n, int m, int nu) {
    CoeffTable table(n);
    return transition_matrix(n, m, nu, table);
}

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed ^ mix64(stream * kGolden + 1))) {}

std::uint64_t GaussianStream::next_word() {
    state_ += kGolden;
    return mix64(state_);
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Uniforms strictly inside (0,1): (w >> 11) + 0.5 scaled by 2^-53.
    const double u1 = (static_cast<double>(next_word() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(next_word() >> 11) + 0.5) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<double> sample_wishart(int m, int nu, std::uint64_t seed, std::uint64_t index) {
    if (m < 1 || nu < 1) throw std::invalid_argument("sample_wishart requires m, nu >= 1");
    GaussianStream g(seed, index);
    std::vector<double> x(static_cast<std::size_t>(nu) * static_cast<std::size_t>(m));
    for (auto& v : x) v = g.next();
    std::vector<double> w(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    for (int r = 0; r < nu; ++r)
        for (int i = 0; i < m; ++i) {
            const double xi = x[static_cast<std::size_t>(r) * m + i];
            for (int j = i; j < m; ++j)
                w[static_cast<std::size_t>(i) * m + j] += xi * x[static_cast<std::size_t>(r) * m + j];
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            w[static_cast<std::size_t>(i) * m + j] = w[static_cast<std::size_t>(j) * m + i];
    return w;
}

double u_value(const Partition& lambda, const std::vector<double>& matrix, int m) {
    if (lambda.length() > m) throw std::invalid_argument("u_value: more parts than dimension");
    if (matrix.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
        throw std::invalid_argument("u_value: matrix size mismatch");
    // Power sums p_k = tr(A^k) for k = 1..m.
    std::vector<double> power(static_cast<std::size_t>(m), 0.0);
    std::vector<double> current = matrix;
    for (int k = 0; k < m; ++k) {
        double trace = 0.0;
        for (int i = 0; i < m; ++i) trace += current[static_cast<std::size_t>(i) * m + i];
        power[static_cast<std::size_t>(k)] = trace;
        if (k + 1 < m) {
            std::vector<double> nxt(current.size(), 0.0);
            for (int i = 0; i < m; ++i)
                for (int l = 0; l < m; ++l) {
                    const double a = current[static_cast<std::size_t>(i) * m + l];
                    if (a == 0.0) continue;
                    for (int j = 0; j < m; ++j)
                        nxt[static_cast<std::size_t>(i) * m + j] +=
                            a * matrix[static_cast<std::size_t>(l) * m + j];
                }
            current = std::move(nxt);
        }
    }
    // Newton identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
    std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= m; ++k) {
        double acc = 0.0;
        double sign = 1.0;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[static_cast<std::size_t>(k - i)] * power[static_cast<std::size_t>(i - 1)];
            sign = -sign;
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    double result = 1.0;
    const int parts = lambda.length();
    for (int r = 1; r <= parts; ++r) {
        const int exponent = lambda.part(r - 1) - lambda.part(r);
        for (int t = 0; t < exponent; ++t) result *= e[static_cast<std::size_t>(r)];
    }
    return result;
}

McReport mc_expectation_u(int n, int m, int nu, const std::vector<Rational>& y, long samples,
                          std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("mc_expectation_u requires samples >= 1");
    if (static_cast<int>(y.size()) != m) throw std::invalid_argument("y must have m entries");
    McReport report;
    report.n = n;
    report.m = m;
    report.nu = nu;
    report.samples = samples;
    report.seed = seed;
    report.y = y;

    CoeffTable table(n);
    const TransitionData td = transition_matrix(n, m, nu, table);
    report.basis = td.basis;
    const std::size_t size = td.basis.size();

    // Exact targets: rows of T applied to U, evaluated at y.
    std::vector<Rational> u_at_y(size);
    for (std::size_t j = 0; j < size; ++j) u_at_y[j] = u_expand(td.basis[j], m).evaluate(y);
    for (std::size_t i = 0; i < size; ++i) {
        Rational target = 0;
        for (std::size_t j = 0; j < size; ++j) target += td.transition[i][j] * u_at_y[j];
        report.targets.push_back(to_double(target));
    }

    std::vector<double> yd(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) yd[i] = to_double(y[i]);

    const long chunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::vector<double>> chunk_sum(static_cast<std::size_t>(chunks),
                                               std::vector<double>(size, 0.0));
    std::vector<std::vector<double>> chunk_sumsq(static_cast<std::size_t>(chunks),
                                                 std::vector<double>(size, 0.0));
    auto run_chunk = [&](long c) {
        const long lo = c * kChunk;
        const long hi = std::min(samples, lo + kChunk);
        auto& sums = chunk_sum[static_cast<std::size_t>(c)];
        auto& sumsqs = chunk_sumsq[static_cast<std::size_t>(c)];
        std::vector<double> scaled(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
        for (long s = lo; s < hi; ++s) {
            const std::vector<double> w = sample_wishart(m, nu, seed, static_cast<std::uint64_t>(s));
            for (int r = 0; r < m; ++r)
                for (int col = 0; col < m; ++col)
                    scaled[static_cast<std::size_t>(r) * m + col] =
                        yd[static_cast<std::size_t>(r)] * w[static_cast<std::size_t>(r) * m + col];
            for (std::size_t i = 0; i < size; ++i) {
                const double v = u_value(td.basis[i], scaled, m);
                sums[i] += v;
                sumsqs[i] += v * v;
            }
        }
    };

    threads = std::max(1, std::min(threads, static_cast<int>(std::min<long>(chunks, 1024))));
    if (threads == 1) {
        for (long c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next_chunk{0};
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (long c = next_chunk.fetch_add(1); c < chunks; c = next_chunk.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& t : pool) t.join();
    }

    // Fixed reduction order over chunks.
    std::vector<double> sum(size, 0.0), sumsq(size, 0.0);
    for (long c = 0; c < chunks; ++c)
        for (std::size_t i = 0; i < size; ++i) {
            sum[i] += chunk_sum[static_cast<std::size_t>(c)][i];
            sumsq[i] += chunk_sumsq[static_cast<std::size_t>(c)][i];
        }

    report.pass = true;
    const double count = static_cast<double>(samples);
    for (std::size_t i = 0; i < size; ++i) {
        const double mean = sum[i] / count;
        double stderr_i = 0.0;
        if (samples > 1) {
            const double variance = std::max(0.0, (sumsq[i] - count * mean * mean) / (count - 1.0));
            stderr_i = std::sqrt(variance / count);
        }
        double z = 0.0;
        if (stderr_i > 0.0) {
            z = (mean - report.targets[i]) / stderr_i;
        } else if (mean != report.targets[i]) {
            z = std::numeric_limits<double>::infinity();
        }
        report.means.push_back(mean);
        report.stderrs.push_back(stderr_i);
        report.zscores.push_back(z);
        if (!(std::abs(z) <= 5.0)) report.pass = false;
    }
    return report;
}

}  // namespace zonal
