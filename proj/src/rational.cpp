#include "zonal/rational.hpp"

#include <cctype>

namespace zonal {

Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    bool digits = false;
    bool slash = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        }
    }
    if (!digits) throw std::invalid_argument("malformed rational literal: " + std::string(text));
    const std::string literal(text);
    Rational r(literal);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer with negative count");
    Rational result = 1;
    Rational term = a;
    for (long i = 0; i < k; ++i) {
        result *= term;
        term += 1;
    }
    return result;
}

Rational inv_factorial_ext(long m) {
    if (m < 0) return 0;
    return Rational(1) / Rational(factorial(m));
}

}  // namespace zonal
