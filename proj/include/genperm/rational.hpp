#pragma once

// Exact arbitrary-precision integers and rationals, backed by GMP.
// Rationals are always kept canonical: lowest terms, positive denominator.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace genperm {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer numerator, Integer denominator = 1) {
    if (denominator == 0) {
        throw std::invalid_argument("rational: zero denominator");
    }
    Rational q(std::move(numerator), std::move(denominator));
    q.canonicalize();
    return q;
}

namespace detail {

// Strict integer literal: optional sign, then digits only. GMP's own
// parser skips whitespace, which is too lax for wire formats.
inline bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace detail

inline Integer parse_integer(const std::string& text) {
    if (!detail::is_integer_literal(text)) {
        throw std::invalid_argument("not an integer literal: \"" + text + "\"");
    }
    return Integer(text, 10);
}

// Accepts "p" or "p/q" in base 10. No floats, no whitespace.
inline Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    return make_rational(std::move(num), std::move(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::invalid_argument("rational " + to_string(q) + " is not an integer");
    }
    return q.get_num();
}

// C(n, k) for any integer n (negative included) and k >= 0.
inline Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace genperm
