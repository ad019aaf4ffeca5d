#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "zonal/coefficients.hpp"
#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

/// Parameters and truncation order for a hypergeometric series. The
/// truncation is by weight class: every partition of weight <= order
/// contributes, never a partial class. T is Rational (exact end to end)
/// or double.
template <typename T>
struct PfqSpec {
    std::vector<T> upper;
    std::vector<T> lower;
    int order = 0;
};

template <typename T>
T rational_cast(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>)
        return r;
    else
        return static_cast<T>(r.get_d());
}

/// Rising factorial (a)_k in T arithmetic.
template <typename T>
T rising(const T& a, int k) {
    T result(1);
    T term = a;
    for (int i = 0; i < k; ++i) {
        result *= term;
        term += T(1);
    }
    return result;
}

/// Generalized Pochhammer symbol (a)_lambda = prod_i (a - (i-1)/2)_{lambda_i}.
template <typename T>
T gen_pochhammer(const T& a, const Partition& lambda) {
    T result(1);
    for (int i = 0; i < lambda.length(); ++i) {
        T base = a - T(i) / T(2);
        for (int k = 0; k < lambda.part(i); ++k) {
            result *= base;
            base += T(1);
        }
    }
    return result;
}

/// Partial sum of the scalar hypergeometric series up to z^order.
/// Throws std::domain_error when a lower parameter annihilates a
/// denominator Pochhammer within the truncation range.
template <typename T>
T scalar_pfq(const PfqSpec<T>& spec, const T& z) {
    if (spec.order < 0) throw std::invalid_argument("negative truncation order");
    T sum(0);
    T zpow(1);
    T kfact(1);
    for (int k = 0; k <= spec.order; ++k) {
        if (k > 0) {
            zpow *= z;
            kfact *= T(k);
        }
        T num(1);
        for (const T& a : spec.upper) num *= rising(a, k);
        T den(1);
        for (const T& b : spec.lower) {
            T p = rising(b, k);
            if (p == T(0)) throw std::domain_error("lower parameter singularity");
            den *= p;
        }
        sum += num * zpow / (den * kfact);
    }
    return sum;
}

/// Monomial symmetric value M_mu at a point, by direct orbit summation.
template <typename T>
T m_value(const Partition& mu, const std::vector<T>& point) {
    const int m = static_cast<int>(point.size());
    if (mu.length() > m) return T(0);
    std::vector<int> exps(point.size(), 0);
    for (int i = 0; i < mu.length(); ++i) exps[static_cast<std::size_t>(i)] = mu.part(i);
    std::sort(exps.begin(), exps.end());
    T sum(0);
    do {
        T term(1);
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int k = 0; k < exps[i]; ++k) term *= point[i];
        sum += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return sum;
}

/// C_lambda evaluated at the given eigenvalues, via the coefficient row and
/// orbit sums (no intermediate polynomial is built).
template <typename T>
T zonal_value(const Partition& lambda, const std::vector<T>& point, CoeffTable& table) {
    const int m = static_cast<int>(point.size());
    if (lambda.length() > m) return T(0);
    const int i = table.index_of(lambda);
    const auto& parts = table.partitions();
    T sum(0);
    for (int j = i; j < static_cast<int>(parts.size()); ++j) {
        const Partition& mu = parts[static_cast<std::size_t>(j)];
        if (mu.length() > m) continue;
        const Rational& c = table.at(i, j);
        if (c == 0) continue;
        sum += rational_cast<T>(c) * m_value(mu, point);
    }
    return sum;
}

/// Partial double sum of the hypergeometric function of a matrix argument,
/// over weights n <= order and partitions with at most m parts. Exact when
/// all inputs are exact.
template <typename T>
T matrix_pfq(const PfqSpec<T>& spec, const std::vector<T>& eigs, ZonalCache& cache) {
    if (spec.order < 0) throw std::invalid_argument("negative truncation order");
    if (eigs.empty()) throw std::invalid_argument("empty eigenvalue list");
    const int m = static_cast<int>(eigs.size());
    T sum(0);
    T nfact(1);
    for (int n = 0; n <= spec.order; ++n) {
        if (n > 0) nfact *= T(n);
        CoeffTable& table = cache.table(n);
        T weight_sum(0);
        for (const Partition& lambda : table.partitions()) {
            if (lambda.length() > m) continue;
            T num(1);
            for (const T& a : spec.upper) num *= gen_pochhammer(a, lambda);
            T den(1);
            for (const T& b : spec.lower) {
                T p = gen_pochhammer(b, lambda);
                if (p == T(0)) throw std::domain_error("lower parameter singularity");
                den *= p;
            }
            weight_sum += num * zonal_value(lambda, eigs, table) / den;
        }
        sum += weight_sum / nfact;
    }
    return sum;
}

template <typename T>
T matrix_pfq(const PfqSpec<T>& spec, const std::vector<T>& eigs) {
    ZonalCache cache;
    return matrix_pfq(spec, eigs, cache);
}

}  // namespace zonal
