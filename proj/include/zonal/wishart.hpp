#pragma once

#include <cstdint>
#include <vector>

#include "zonal/coefficients.hpp"
#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

/// The normalization constant d_lambda relating the zonal polynomial to the
/// eigenvector basis of the expectation operator: C_lambda = d_lambda * Y_lambda.
Rational d_constant(const Partition& lambda);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Partitions of n with at most m parts, descending lex order — the index
/// set of the U and Y bases.
std::vector<Partition> basis_partitions(int n, int m);

/// Change-of-basis matrix from the elementary-symmetric product basis U to
/// the scaled zonal basis Y = C/d, solved exactly from the M-basis
/// expansions of both sides. The solver performs general elimination; upper
/// triangularity is a property to assert, not an assumption.
RationalMatrix xi_matrix(int n, int m, CoeffTable& table);
RationalMatrix xi_matrix(int n, int m);

struct TransitionData {
    int n = 0;
    int m = 0;
    int nu = 0;
    std::vector<Partition> basis;
    RationalMatrix xi;                 // Y = xi * U
    std::vector<Rational> lambda_diag; // 2^n (nu/2)_lambda per basis element
    RationalMatrix transition;         // T = xi^{-1} diag(lambda) xi
};

/// The expectation operator's matrix over the U basis, with its exact
/// diagonalization data.
TransitionData transition_matrix(int n, int m, int nu, CoeffTable& table);
TransitionData transition_matrix(int n, int m, int nu);

/// Deterministic Gaussian stream: per-stream splitmix64 state derived from
/// (seed, stream), uniforms mapped into (0,1), Box-Muller pairs. Identical
/// seeds reproduce identical sample sequences.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream);
    double next();

private:
    std::uint64_t next_word();
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// One Wishart draw W = X^T X with nu independent standard-normal rows of
/// length m; returned row-major m*m. Sample `index` is self-contained: the
/// value depends only on (seed, index), never on evaluation order.
std::vector<double> sample_wishart(int m, int nu, std::uint64_t seed, std::uint64_t index);

/// U_lambda of the eigenvalues of a (row-major m*m) matrix, computed from
/// characteristic-polynomial data: power sums by traces, then elementary
/// symmetric values by the Newton identities. No eigendecomposition.
double u_value(const Partition& lambda, const std::vector<double>& matrix, int m);

struct McReport {
    int n = 0;
    int m = 0;
    int nu = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::vector<Rational> y;
    std::vector<Partition> basis;
    std::vector<double> targets;   // exact T*U evaluated at y
    std::vector<double> means;
    std::vector<double> stderrs;
    std::vector<double> zscores;
    bool pass = false;  // all |z| <= 5
};

/// Monte-Carlo estimate of the expectation operator applied to the U basis,
/// evaluated at Y = diag(y), against the exact transition-matrix targets.
/// Accumulation runs in fixed 4096-sample chunks reduced in order, so the
/// report is identical for any thread count.
McReport mc_expectation_u(int n, int m, int nu, const std::vector<Rational>& y, long samples,
                          std::uint64_t seed, int threads = 1);

}  // namespace zonal
