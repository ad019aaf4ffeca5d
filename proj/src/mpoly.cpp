#include "zonal/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zonal {

namespace {

void require_same_vars(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("mixed variable counts in polynomial arithmetic");
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

}  // namespace

MPoly::MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    MPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    // First key has maximal total degree under the graded order.
    return total_degree(terms_.begin()->first);
}

void MPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector width mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& other) {
    require_same_vars(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
    require_same_vars(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
    return *this;
}

MPoly MPoly::operator+(const MPoly& other) const {
    MPoly out = *this;
    out += other;
    return out;
}

MPoly MPoly::operator-(const MPoly& other) const {
    MPoly out = *this;
    out -= other;
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rational(-c));
    return out;
}

MPoly MPoly::operator*(const MPoly& other) const {
    require_same_vars(*this, other);
    MPoly out(nvars_);
    Exponents e(static_cast<std::size_t>(nvars_), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, Rational(ca * cb));
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& other) {
    *this = *this * other;
    return *this;
}

MPoly MPoly::operator*(const Rational& scalar) const {
    MPoly out(nvars_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rational(c * scalar));
    return out;
}

MPoly MPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative power of a polynomial");
    MPoly result = MPoly::constant(nvars_, 1);
    MPoly base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool MPoly::operator==(const MPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point width mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != d) return false;
    }
    return true;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (!names.empty() && static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("variable name list width mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += '*';
            monomial += names.empty() ? "y" + std::to_string(i + 1) : names[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            out += zonal::to_string(abs_c);
        } else {
            if (abs_c != 1) out += zonal::to_string(abs_c) + "*";
            out += monomial;
        }
    }
    return out;
}

MPoly partial_derivative(const MPoly& f, int var) {
    if (var < 0 || var >= f.nvars()) throw std::invalid_argument("variable index out of range");
    MPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        const int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<std::size_t>(var)] = k - 1;
        out.add_term(d, Rational(c * k));
    }
    return out;
}

MPoly exact_div_diff(const MPoly& f, int i, int j) {
    if (i < 0 || j < 0 || i >= f.nvars() || j >= f.nvars() || i == j)
        throw std::invalid_argument("bad variable pair for divided difference");
    // Synthetic division by (y_i - y_j), treating y_i as the main variable:
    // with f = sum_k a_k y_i^k, the quotient satisfies b_{d-1} = a_d and
    // b_{k-1} = a_k + y_j b_k; the remainder a_0 + y_j b_0 must vanish.
    int d = 0;
    for (const auto& [e, c] : f.terms()) d = std::max(d, e[static_cast<std::size_t>(i)]);
    std::vector<MPoly> a(static_cast<std::size_t>(d) + 1, MPoly(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        Exponents reduced = e;
        const int k = reduced[static_cast<std::size_t>(i)];
        reduced[static_cast<std::size_t>(i)] = 0;
        a[static_cast<std::size_t>(k)].add_term(reduced, c);
    }
    const MPoly yj = MPoly::variable(f.nvars(), j);
    std::vector<MPoly> b(static_cast<std::size_t>(std::max(d, 1)), MPoly(f.nvars()));
    if (d >= 1) {
        b[static_cast<std::size_t>(d - 1)] = a[static_cast<std::size_t>(d)];
        for (int k = d - 1; k >= 1; --k)
            b[static_cast<std::size_t>(k - 1)] = a[static_cast<std::size_t>(k)] + yj * b[static_cast<std::size_t>(k)];
    }
    MPoly remainder = a[0];
    if (d >= 1) remainder += yj * b[0];
    if (!remainder.is_zero()) throw std::domain_error("not divisible");
    MPoly out(f.nvars());
    for (int k = 0; k < d; ++k) {
        for (const auto& [e, c] : b[static_cast<std::size_t>(k)].terms()) {
            Exponents lifted = e;
            lifted[static_cast<std::size_t>(i)] += k;
            out.add_term(lifted, c);
        }
    }
    return out;
}

MPoly m_expand(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("m_expand requires at least one variable");
    MPoly out(m);
    if (lambda.length() > m) return out;  // more parts than variables
    Exponents exps(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < lambda.length(); ++i) exps[static_cast<std::size_t>(i)] = lambda.part(i);
    std::sort(exps.begin(), exps.end());
    do {
        out.add_term(exps, 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

MPoly elementary_symmetric(int m, int r) {
    if (r < 0 || r > m) throw std::invalid_argument("elementary symmetric index out of range");
    MPoly out(m);
    // Iterate r-subsets as a sorted index vector.
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (r == 0) return MPoly::constant(m, 1);
    while (true) {
        Exponents e(static_cast<std::size_t>(m), 0);
        for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
        out.add_term(e, 1);
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - r + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < r; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

MPoly u_expand(const Partition& lambda, int m) {
    if (lambda.length() > m)
        throw std::invalid_argument("u_expand: more parts than variables");
    MPoly out = MPoly::constant(m, 1);
    const int k = lambda.length();
    for (int r = 1; r <= k; ++r) {
        const int exponent = lambda.part(r - 1) - lambda.part(r);
        if (exponent > 0) out *= elementary_symmetric(m, r).pow(exponent);
    }
    return out;
}

SymM::SymM(std::map<Partition, Rational, LexGreater> coeffs) {
    for (auto& [p, c] : coeffs) add_term(p, c);
}

Rational SymM::coefficient(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymM::add_term(const Partition& lambda, const Rational& coeff) {
    if (coeff == 0) return;
    if (weight_ >= 0 && !coeffs_.empty() && lambda.weight() != weight_)
        throw std::invalid_argument("mixed weights in M-basis element");
    weight_ = lambda.weight();
    auto [it, inserted] = coeffs_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
    if (coeffs_.empty()) weight_ = -1;
}

SymM& SymM::operator+=(const SymM& other) {
    for (const auto& [p, c] : other.coeffs_) add_term(p, c);
    return *this;
}

SymM SymM::operator*(const Rational& scalar) const {
    SymM out;
    if (scalar == 0) return out;
    for (const auto& [p, c] : coeffs_) out.add_term(p, Rational(c * scalar));
    return out;
}

bool SymM::operator==(const SymM& other) const { return coeffs_ == other.coeffs_; }

MPoly SymM::expand(int m) const {
    MPoly out(m);
    for (const auto& [p, c] : coeffs_) out += m_expand(p, m) * c;
    return out;
}

SymM to_m_basis(const MPoly& f) {
    if (!f.is_homogeneous()) throw std::invalid_argument("to_m_basis requires a homogeneous polynomial");
    SymM out;
    std::map<Exponents, std::pair<Rational, std::size_t>> orbits;  // representative -> (coeff, seen count)
    for (const auto& [e, c] : f.terms()) {
        Exponents sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        auto [it, inserted] = orbits.emplace(sorted, std::make_pair(c, std::size_t{1}));
        if (!inserted) {
            if (it->second.first != c)
                throw std::invalid_argument("to_m_basis requires a symmetric polynomial");
            ++it->second.second;
        }
    }
    for (const auto& [rep, info] : orbits) {
        // Orbit size = multinomial of exponent multiplicities; a symmetric
        // polynomial must contain every monomial of the orbit.
        std::size_t orbit_size = 1;
        {
            Exponents e = rep;
            std::sort(e.begin(), e.end());
            std::size_t count = 0;
            do {
                ++count;
            } while (std::next_permutation(e.begin(), e.end()));
            orbit_size = count;
        }
        if (info.second != orbit_size)
            throw std::invalid_argument("to_m_basis requires a symmetric polynomial");
        std::vector<int> parts;
        for (int v : rep)
            if (v > 0) parts.push_back(v);
        out.add_term(Partition(std::move(parts)), info.first);
    }
    return out;
}

}  // namespace zonal
