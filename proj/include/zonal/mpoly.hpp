#pragma once

#include <map>
#include <string>
#include <vector>

#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

using Exponents = std::vector<int>;

/// Graded-lex order, descending: higher total degree first, ties broken by
/// lexicographically larger exponent vector. Fixed so that term iteration
/// (and therefore serialized output) is deterministic.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Rational in a fixed number of
/// variables y_1..y_m. No zero coefficients are ever stored. The variable
/// count is part of the value; operations on mismatched counts throw.
class MPoly {
public:
    explicit MPoly(int nvars = 0);
    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);  // y_{index+1}, 0-based index

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    const std::map<Exponents, Rational, GrlexGreater>& terms() const { return terms_; }

    void add_term(const Exponents& exps, const Rational& coeff);
    Rational coefficient(const Exponents& exps) const;

    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    MPoly operator+(const MPoly& other) const;
    MPoly operator-(const MPoly& other) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& other) const;
    MPoly& operator*=(const MPoly& other);
    MPoly operator*(const Rational& scalar) const;
    MPoly pow(int exponent) const;
    bool operator==(const MPoly& other) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// True iff every term has the same total degree; the zero polynomial
    /// is homogeneous of any degree.
    bool is_homogeneous() const;

    /// Renders in the style "12/5*a^2*b + 18/5*a*b*c - c^3". Default
    /// variable names are y1..ym.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<Exponents, Rational, GrlexGreater> terms_;
};

inline MPoly operator*(const Rational& scalar, const MPoly& p) { return p * scalar; }

MPoly partial_derivative(const MPoly& f, int var);

/// Exact quotient f / (y_i - y_j); throws std::domain_error("not divisible")
/// when the remainder is nonzero.
MPoly exact_div_diff(const MPoly& f, int i, int j);

/// Monomial symmetric polynomial M_lambda in m variables: the orbit sum of
/// y_1^{l_1}...y_k^{l_k}. Zero (not an error) when lambda has more parts
/// than variables.
MPoly m_expand(const Partition& lambda, int m);

/// Elementary symmetric polynomial u_r in m variables.
MPoly elementary_symmetric(int m, int r);

/// Product basis U_lambda = u_1^{l1-l2} u_2^{l2-l3} ... u_k^{lk}.
/// Throws when lambda has more parts than variables (u_k vanishes
/// identically there, so the basis element is undefined).
MPoly u_expand(const Partition& lambda, int m);

/// A symmetric homogeneous polynomial stored by coordinates over the
/// monomial symmetric basis: sum coeffs[lambda] * M_lambda. Keys are
/// partitions of a common weight, iterated in descending lex order.
class SymM {
public:
    SymM() = default;
    explicit SymM(std::map<Partition, Rational, LexGreater> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Common weight of the keys; -1 when empty.
    int weight() const { return weight_; }
    const std::map<Partition, Rational, LexGreater>& coeffs() const { return coeffs_; }
    Rational coefficient(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rational& coeff);

    SymM& operator+=(const SymM& other);
    SymM operator*(const Rational& scalar) const;
    bool operator==(const SymM& other) const;

    /// Realizes the polynomial in m variables.
    MPoly expand(int m) const;

private:
    std::map<Partition, Rational, LexGreater> coeffs_;
    int weight_ = -1;
};

/// Collects a symmetric homogeneous polynomial into M-basis coordinates by
/// grouping monomials into orbits of their sorted exponent vectors. Throws
/// when f is not symmetric (incomplete orbit or unequal coefficients within
/// one) or not homogeneous.
SymM to_m_basis(const MPoly& f);

}  // namespace zonal
