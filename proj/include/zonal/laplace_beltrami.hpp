#pragma once

#include "zonal/coefficients.hpp"
#include "zonal/mpoly.hpp"
#include "zonal/partition.hpp"

namespace zonal {

/// The reduced Laplace-Beltrami operator on eigenvalue space,
///   sum_i y_i^2 d^2/dy_i^2 + sum_{i<j} (y_i^2 d_i f - y_j^2 d_j f)/(y_i - y_j),
/// where the pairwise-combined second sum replaces the singular terms
/// y_i^2/(y_i - y_j) d_i; for symmetric input each numerator is exactly
/// divisible, so the result stays polynomial. Non-symmetric input raises
/// std::domain_error("input not symmetric").
MPoly apply_delta_y(const MPoly& f);

struct EigenCheckResult {
    long long eigenvalue;  // rho_lambda + (m-1) n
    bool holds;
};

/// Verifies the eigen-equation Delta_Y C_lambda = (rho_lambda + (m-1) n) C_lambda
/// as an exact polynomial identity in m variables.
EigenCheckResult check_eigen(const Partition& lambda, int m, CoeffTable& table);
EigenCheckResult check_eigen(const Partition& lambda, int m);

}  // namespace zonal
