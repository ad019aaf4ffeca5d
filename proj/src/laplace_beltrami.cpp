#include "zonal/laplace_beltrami.hpp"

#include <stdexcept>

#include "zonal/zonal_polynomials.hpp"

namespace zonal {

MPoly apply_delta_y(const MPoly& f) {
    const int m = f.nvars();
    MPoly out(m);
    std::vector<MPoly> weighted;  // y_i^2 * df/dy_i
    weighted.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const MPoly yi = MPoly::variable(m, i);
        const MPoly yi2 = yi * yi;
        const MPoly di = partial_derivative(f, i);
        out += yi2 * partial_derivative(di, i);
        weighted.push_back(yi2 * di);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            try {
                out += exact_div_diff(weighted[static_cast<std::size_t>(i)] -
                                          weighted[static_cast<std::size_t>(j)],
                                      i, j);
            } catch (const std::domain_error&) {
                throw std::domain_error("input not symmetric");
            }
        }
    }
    return out;
}

EigenCheckResult check_eigen(const Partition& lambda, int m, CoeffTable& table) {
    const long long eigenvalue =
        rho(lambda) + static_cast<long long>(m - 1) * lambda.weight();
    const MPoly c = zonal_polynomial(lambda, m, table);
    const MPoly lhs = apply_delta_y(c);
    const bool holds = lhs == c * Rational(static_cast<long>(eigenvalue));
    return EigenCheckResult{eigenvalue, holds};
}

EigenCheckResult check_eigen(const Partition& lambda, int m) {
    CoeffTable table(lambda.weight());
    return check_eigen(lambda, m, table);
}

}  // namespace zonal
