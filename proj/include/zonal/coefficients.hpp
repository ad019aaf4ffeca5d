#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

/// Full characterization of vanishing coefficients: c_{kappa,lambda} = 0
/// iff some prefix sum of (kappa_i - lambda_i) is negative, partitions
/// zero-padded. Requires lambda <= kappa of equal weight.
bool is_zero_coefficient(const Partition& kappa, const Partition& lambda);

/// Memoized table of zonal polynomial coefficients c_{kappa,lambda} for a
/// fixed weight n. Rows and columns are indexed by partitions_of(n) in
/// descending lex order; entries are computed on demand.
///
/// Evaluation is well-founded without fixpoint iteration: an off-diagonal
/// entry needs only entries of the same row at lex-larger columns, and a
/// diagonal entry needs only the same column in rows strictly above.
/// Entries where the prefix predicate holds are pruned before any
/// recursion. The lazy path is single-writer; after build_all() the table
/// may be read concurrently.
class CoeffTable {
public:
    explicit CoeffTable(int n);
    CoeffTable(CoeffTable&&) = default;
    CoeffTable& operator=(CoeffTable&&) = default;

    int weight() const { return n_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    /// Index into partitions(); throws when the partition has the wrong
    /// weight.
    int index_of(const Partition& p) const;

    /// c_{kappa,lambda} with kappa = partitions()[i], lambda =
    /// partitions()[j]; returns 0 when j < i (lambda > kappa).
    const Rational& at(int kappa_idx, int lambda_idx);

    Rational coefficient(const Partition& kappa, const Partition& lambda);

    /// Forces every entry. With threads > 1 the column sweep is
    /// parallelized; exact arithmetic makes the result identical for any
    /// thread count.
    void build_all(int threads = 1);

private:
    struct Row {
        std::vector<Rational> vals;   // columns base..P-1
        std::vector<uint8_t> known;
    };

    Row& row(int i);
    bool zero_by_prefix(int i, int j) const;
    void ensure(int i, int j);
    // Moves out of column j, merged by resulting partition index and
    // sorted by it ascending; every index is < j.
    const std::vector<std::pair<int, long>>& merged_moves(int j);

    int n_;
    std::vector<Partition> parts_;
    std::unordered_map<Partition, int, PartitionHash> index_;
    std::vector<long long> rho_;
    std::vector<Rational> multinomial_;
    std::vector<std::unique_ptr<Row>> rows_;
    std::vector<std::unique_ptr<std::vector<std::pair<int, long>>>> moves_;
    Rational zero_;
};

/// One-shot convenience; prefer the cache-aware overload in loops.
Rational coefficient(const Partition& kappa, const Partition& lambda);
Rational coefficient(const Partition& kappa, const Partition& lambda, CoeffTable& table);

/// The fully built coefficient table for weight n.
CoeffTable coefficient_table(int n, int threads = 1);

/// Per-weight table cache shared across evaluations.
class ZonalCache {
public:
    CoeffTable& table(int n);

private:
    std::map<int, std::unique_ptr<CoeffTable>> tables_;
};

}  // namespace zonal
