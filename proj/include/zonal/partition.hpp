#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

/// An integer partition: a weakly decreasing tuple of positive integers.
/// The empty partition is the unique partition of 0. Values are immutable
/// once constructed and safe to share across threads.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    /// Builds a partition from parts in any order; sorts descending and
    /// drops zeros. Negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part at 0-based index i, zero-padded beyond the last part.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    std::string to_string() const;  // "(3,1)", "()" for empty

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in strictly descending lexicographic order:
/// (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(int n);

/// Lexicographic comparison after zero-padding, defined only between
/// partitions of equal weight; throws otherwise.
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

/// rho = sum_i lambda_i (lambda_i - i), 1-based i; appending zero parts
/// does not change the value.
long long rho(const Partition& lambda);

/// n! / (lambda_1! ... lambda_k!)
Integer multinomial(const Partition& lambda);

/// One step of the coefficient recurrence: move t units from part s to
/// part r (0-based positions, r < s), then reorder descending.
struct MuMove {
    Partition result;  // the reordered mu
    int numerator;     // (lambda_r + t) - (lambda_s - t)
    int r = 0;
    int s = 0;
    int t = 0;
};

/// All moves (r < s, 1 <= t <= lambda_s) whose reordered result mu
/// satisfies lambda < mu <= kappa. Distinct (r,s,t) with the same sorted
/// result are reported separately; the recurrence sums over all of them.
std::vector<MuMove> mu_moves(const Partition& lambda, const Partition& kappa);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.parts()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Strict weak order "a > b in lex" for same-weight map keys, so that
/// iteration runs in descending lexicographic order.
struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const {
        const int len = std::max(a.length(), b.length());
        for (int i = 0; i < len; ++i) {
            if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
        }
        return false;
    }
};

}  // namespace zonal
