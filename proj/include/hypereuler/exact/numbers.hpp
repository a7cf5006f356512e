#pragma once

// Exact integer and rational scalars used by every combinatorial routine.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypereuler {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced fraction num/den. Throws std::domain_error on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// "num/den" with the denominator always present ("2/1", "-3/4", "0/1").
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// "num" for integers, "num/den" otherwise.
inline std::string to_short_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_fraction_string(q);
}

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline Integer pow_int(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
inline Rational pow_int(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return 1 / pow_int(base, -exp);
    }
    Rational out(pow_int(base.get_num(), static_cast<unsigned long>(exp)),
                 pow_int(base.get_den(), static_cast<unsigned long>(exp)));
    out.canonicalize();
    return out;
}

/// 1 / n^k as an exact rational, n != 0.
inline Rational inverse_power(long n, long k) { return pow_int(Rational(n), -k); }

/// (-1)^k
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace hypereuler
