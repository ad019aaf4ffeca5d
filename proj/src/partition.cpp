#include "zonal/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zonal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending-lex enumeration: always try the largest admissible part first.
    std::function<void(int, int)> emit = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            emit(remaining - p, p);
            current.pop_back();
        }
    };
    emit(n, n);
    return out;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) throw std::invalid_argument("incomparable weights");
    const int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) < b.part(i) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

long long rho(const Partition& lambda) {
    long long sum = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const long long p = parts[i];
        sum += p * (p - static_cast<long long>(i + 1));
    }
    return sum;
}

Integer multinomial(const Partition& lambda) {
    Integer result = factorial(lambda.weight());
    for (int p : lambda.parts()) result /= factorial(p);
    return result;
}

std::vector<MuMove> mu_moves(const Partition& lambda, const Partition& kappa) {
    if (lex_compare(lambda, kappa) == std::strong_ordering::greater)
        throw std::invalid_argument("mu_moves requires lambda <= kappa");
    std::vector<MuMove> out;
    const auto& parts = lambda.parts();
    const int k = lambda.length();
    std::vector<int> scratch;
    for (int r = 0; r < k; ++r) {
        for (int s = r + 1; s < k; ++s) {
            for (int t = 1; t <= parts[static_cast<std::size_t>(s)]; ++t) {
                scratch.assign(parts.begin(), parts.end());
                scratch[static_cast<std::size_t>(r)] += t;
                scratch[static_cast<std::size_t>(s)] -= t;
                Partition mu = Partition::from_unsorted(scratch);
                // Any move strictly increases lex order, so only mu <= kappa
                // needs checking.
                if (lex_compare(mu, kappa) == std::strong_ordering::greater) continue;
                const int numerator = (parts[static_cast<std::size_t>(r)] + t) -
                                      (parts[static_cast<std::size_t>(s)] - t);
                out.push_back(MuMove{std::move(mu), numerator, r, s, t});
            }
        }
    }
    return out;
}

}  // namespace zonal
