#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "zonal/mpoly.hpp"
#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace oracles {

// Partition count by the complementary recurrence p(n, k) = p(n-k, k) +
// p(n, k-1) over "parts <= k", memoized; structurally unlike the
// descending-lex generator.
inline long long partition_count(int n) {
    static std::map<std::pair<int, int>, long long> memo;
    struct Count {
        static long long eval(int n, int k, std::map<std::pair<int, int>, long long>& memo) {
            if (n == 0) return 1;
            if (k == 0 || n < 0) return 0;
            auto key = std::make_pair(n, k);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            const long long value = eval(n - k, k, memo) + eval(n, k - 1, memo);
            memo.emplace(key, value);
            return value;
        }
    };
    return Count::eval(n, n, memo);
}

// Naive convolution product over plain sorted maps; no canonicalization
// tricks shared with MPoly.
inline std::map<std::vector<int>, zonal::Rational> naive_product(
    const std::map<std::vector<int>, zonal::Rational>& a,
    const std::map<std::vector<int>, zonal::Rational>& b) {
    std::map<std::vector<int>, zonal::Rational> out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

inline std::map<std::vector<int>, zonal::Rational> to_plain_map(const zonal::MPoly& f) {
    std::map<std::vector<int>, zonal::Rational> out;
    for (const auto& [e, c] : f.terms()) out.emplace(e, c);
    return out;
}

// Exact coefficients of t -> f(point + t e_var) by Lagrange interpolation
// at t = 0..deg; coefficient [1] is the first partial derivative at the
// point, 2*[2] the second.
inline std::vector<zonal::Rational> univariate_restriction(const zonal::MPoly& f, int var,
                                                           const std::vector<zonal::Rational>& point) {
    const int deg = std::max(f.degree(), 0);
    std::vector<zonal::Rational> values;
    for (int t = 0; t <= deg; ++t) {
        std::vector<zonal::Rational> shifted = point;
        shifted[static_cast<std::size_t>(var)] += t;
        values.push_back(f.evaluate(shifted));
    }
    // Newton forward differences to monomial coefficients via synthetic
    // expansion of prod (t - j).
    std::vector<zonal::Rational> divided = values;
    for (int level = 1; level <= deg; ++level)
        for (int i = deg; i >= level; --i)
            divided[static_cast<std::size_t>(i)] =
                (divided[static_cast<std::size_t>(i)] - divided[static_cast<std::size_t>(i - 1)]) /
                zonal::Rational(level);
    std::vector<zonal::Rational> coeffs(static_cast<std::size_t>(deg) + 1, zonal::Rational(0));
    std::vector<zonal::Rational> basis(1, zonal::Rational(1));  // prod_{j<k} (t - j)
    for (int k = 0; k <= deg; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            coeffs[i] += divided[static_cast<std::size_t>(k)] * basis[i];
        // multiply the basis polynomial by (t - k)
        basis.push_back(0);
        for (std::size_t i = basis.size() - 1; i > 0; --i)
            basis[i] = basis[i - 1] - zonal::Rational(static_cast<long>(k)) * basis[i];
        basis[0] = -zonal::Rational(static_cast<long>(k)) * basis[0];
    }
    return coeffs;
}

}  // namespace oracles
