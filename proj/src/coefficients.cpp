#include "zonal/coefficients.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace zonal {

namespace {

void require_same_weight(const Partition& kappa, const Partition& lambda) {
    if (kappa.weight() != lambda.weight())
        throw std::invalid_argument("coefficient requires partitions of equal weight");
}

// Runs fn(i) for i in [begin, end) on up to `threads` workers. Static
// block split; caller guarantees the iterations are independent.
template <typename Fn>
void parallel_for(int begin, int end, int threads, Fn&& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const int chunk = (count + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

bool is_zero_coefficient(const Partition& kappa, const Partition& lambda) {
    require_same_weight(kappa, lambda);
    const int len = std::max(kappa.length(), lambda.length());
    long long prefix = 0;
    bool before_first_difference = true;
    for (int i = 0; i < len; ++i) {
        const int diff = kappa.part(i) - lambda.part(i);
        if (before_first_difference && diff != 0) {
            // lambda > kappa in lex order is outside this predicate's domain.
            if (diff < 0) throw std::invalid_argument("out of triangle");
            before_first_difference = false;
        }
        prefix += diff;
        if (prefix < 0) return true;
    }
    return false;
}

CoeffTable::CoeffTable(int n) : n_(n), parts_(partitions_of(n)) {
    if (n < 0) throw std::invalid_argument("coefficient table requires n >= 0");
    const int count = static_cast<int>(parts_.size());
    index_.reserve(parts_.size());
    rho_.reserve(parts_.size());
    multinomial_.reserve(parts_.size());
    for (int i = 0; i < count; ++i) {
        index_.emplace(parts_[static_cast<std::size_t>(i)], i);
        rho_.push_back(rho(parts_[static_cast<std::size_t>(i)]));
        multinomial_.emplace_back(multinomial(parts_[static_cast<std::size_t>(i)]));
    }
    rows_.resize(parts_.size());
    moves_.resize(parts_.size());
}

int CoeffTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("partition of wrong weight for this table");
    return it->second;
}

CoeffTable::Row& CoeffTable::row(int i) {
    auto& slot = rows_[static_cast<std::size_t>(i)];
    if (!slot) {
        const std::size_t width = parts_.size() - static_cast<std::size_t>(i);
        slot = std::make_unique<Row>();
        slot->vals.resize(width);
        slot->known.assign(width, 0);
    }
    return *slot;
}

bool CoeffTable::zero_by_prefix(int i, int j) const {
    const Partition& kappa = parts_[static_cast<std::size_t>(i)];
    const Partition& lambda = parts_[static_cast<std::size_t>(j)];
    const int len = std::max(kappa.length(), lambda.length());
    long long prefix = 0;
    for (int p = 0; p < len; ++p) {
        prefix += kappa.part(p) - lambda.part(p);
        if (prefix < 0) return true;
    }
    return false;
}

const std::vector<std::pair<int, long>>& CoeffTable::merged_moves(int j) {
    auto& slot = moves_[static_cast<std::size_t>(j)];
    if (!slot) {
        std::map<int, long> merged;
        const auto& parts = parts_[static_cast<std::size_t>(j)].parts();
        const int k = static_cast<int>(parts.size());
        std::vector<int> scratch;
        for (int r = 0; r < k; ++r) {
            for (int s = r + 1; s < k; ++s) {
                for (int t = 1; t <= parts[static_cast<std::size_t>(s)]; ++t) {
                    scratch.assign(parts.begin(), parts.end());
                    scratch[static_cast<std::size_t>(r)] += t;
                    scratch[static_cast<std::size_t>(s)] -= t;
                    std::sort(scratch.begin(), scratch.end(), std::greater<int>());
                    while (!scratch.empty() && scratch.back() == 0) scratch.pop_back();
                    auto it = index_.find(Partition(scratch));
                    const int numerator =
                        (parts[static_cast<std::size_t>(r)] + t) - (parts[static_cast<std::size_t>(s)] - t);
                    merged[it->second] += numerator;
                }
            }
        }
        slot = std::make_unique<std::vector<std::pair<int, long>>>(merged.begin(), merged.end());
    }
    return *slot;
}

void CoeffTable::ensure(int i, int j) {
    Row& r = row(i);
    const std::size_t offset = static_cast<std::size_t>(j - i);
    if (r.known[offset]) return;
    Rational value;
    if (i == j) {
        // Diagonal from the column-sum identity: the multinomial minus the
        // column above.
        value = multinomial_[static_cast<std::size_t>(i)];
        for (int above = 0; above < i; ++above) {
            if (zero_by_prefix(above, i)) continue;
            value -= at(above, i);
        }
    } else if (rho_[static_cast<std::size_t>(i)] <= rho_[static_cast<std::size_t>(j)]) {
        // Degenerate denominator; the characterization forces zero here, so
        // never divide.
        value = 0;
    } else {
        const auto& mv = merged_moves(j);
        auto it = std::lower_bound(mv.begin(), mv.end(), i,
                                   [](const std::pair<int, long>& e, int v) { return e.first < v; });
        Rational sum = 0;
        for (; it != mv.end(); ++it) {
            const Rational& c = at(i, it->first);
            if (c != 0) sum += it->second * c;
        }
        sum /= Rational(static_cast<long>(rho_[static_cast<std::size_t>(i)] -
                                          rho_[static_cast<std::size_t>(j)]));
        value = std::move(sum);
    }
    r.vals[offset] = std::move(value);
    r.known[offset] = 1;
}

const Rational& CoeffTable::at(int kappa_idx, int lambda_idx) {
    const int count = static_cast<int>(parts_.size());
    if (kappa_idx < 0 || lambda_idx < 0 || kappa_idx >= count || lambda_idx >= count)
        throw std::out_of_range("coefficient index out of range");
    if (lambda_idx < kappa_idx) return zero_;              // lambda > kappa
    if (zero_by_prefix(kappa_idx, lambda_idx)) return zero_;
    ensure(kappa_idx, lambda_idx);
    return rows_[static_cast<std::size_t>(kappa_idx)]->vals[static_cast<std::size_t>(lambda_idx - kappa_idx)];
}

Rational CoeffTable::coefficient(const Partition& kappa, const Partition& lambda) {
    require_same_weight(kappa, lambda);
    return at(index_of(kappa), index_of(lambda));
}

void CoeffTable::build_all(int threads) {
    const int count = static_cast<int>(parts_.size());
    for (int i = 0; i < count; ++i) row(i);
    for (int j = 0; j < count; ++j) {
        merged_moves(j);
        // Cells above the diagonal of column j depend only on earlier
        // columns, so they are independent of each other.
        parallel_for(0, j, threads, [this, j](int i) {
            if (!zero_by_prefix(i, j)) ensure(i, j);
        });
        ensure(j, j);
    }
}

Rational coefficient(const Partition& kappa, const Partition& lambda) {
    require_same_weight(kappa, lambda);
    CoeffTable table(kappa.weight());
    return table.coefficient(kappa, lambda);
}

Rational coefficient(const Partition& kappa, const Partition& lambda, CoeffTable& table) {
    return table.coefficient(kappa, lambda);
}

CoeffTable coefficient_table(int n, int threads) {
    CoeffTable table(n);
    table.build_all(threads);
    return table;
}

CoeffTable& ZonalCache::table(int n) {
    auto it = tables_.find(n);
    if (it == tables_.end()) it = tables_.emplace(n, std::make_unique<CoeffTable>(n)).first;
    return *it->second;
}

}  // namespace zonal
