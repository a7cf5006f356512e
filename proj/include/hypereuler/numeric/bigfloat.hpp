#pragma once

// Arbitrary-precision binary floating point over MPFR. Each value carries its
// own precision, so concurrent computations at different precisions never
// share mutable state. Binary operations round to the larger operand precision.

#include "hypereuler/exact/numbers.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hypereuler {

/// Decimal digits -> MPFR bits, with a few guard bits.
inline mpfr_prec_t digits_to_bits(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

class BigFloat {
public:
    static constexpr unsigned kMinDigits = 20;

    /// Zero at the given decimal precision.
    explicit BigFloat(unsigned digits = 60) : BigFloat(bits_tag{}, digits_to_bits(digits)) {
        mpfr_set_zero(value_, 1);
    }

    BigFloat(long v, unsigned digits) : BigFloat(digits) { mpfr_set_si(value_, v, MPFR_RNDN); }

    BigFloat(const Rational& q, unsigned digits) : BigFloat(digits) {
        mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const Integer& z, unsigned digits) : BigFloat(digits) {
        mpfr_set_z(value_, z.get_mpz_t(), MPFR_RNDN);
    }

    /// Parses decimal text such as "1.6449e0". Throws std::invalid_argument.
    static BigFloat parse(const std::string& text, unsigned digits) {
        BigFloat out(digits);
        if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("malformed decimal '" + text + "'");
        return out;
    }

    static BigFloat pi(unsigned digits) {
        BigFloat out(digits);
        mpfr_const_pi(out.value_, MPFR_RNDN);
        return out;
    }

    BigFloat(const BigFloat& other) : BigFloat(bits_tag{}, mpfr_get_prec(other.value_)) {
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& other) noexcept : BigFloat(bits_tag{}, mpfr_get_prec(other.value_)) {
        mpfr_swap(value_, other.value_);
    }

    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) {
            mpfr_set_prec(value_, mpfr_get_prec(other.value_));
            mpfr_set(value_, other.value_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& other) noexcept {
        mpfr_swap(value_, other.value_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(value_); }

    mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
    unsigned digits() const {
        return static_cast<unsigned>(std::floor((bits() - 8) / 3.3219280948873623));
    }

    BigFloat& operator+=(const BigFloat& o) { widen(o); mpfr_add(value_, value_, o.value_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { widen(o); mpfr_sub(value_, value_, o.value_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { widen(o); mpfr_mul(value_, value_, o.value_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { widen(o); mpfr_div(value_, value_, o.value_, MPFR_RNDN); return *this; }

    BigFloat& operator+=(long v) { mpfr_add_si(value_, value_, v, MPFR_RNDN); return *this; }
    BigFloat& operator-=(long v) { mpfr_sub_si(value_, value_, v, MPFR_RNDN); return *this; }
    BigFloat& operator*=(long v) { mpfr_mul_si(value_, value_, v, MPFR_RNDN); return *this; }
    BigFloat& operator/=(long v) { mpfr_div_si(value_, value_, v, MPFR_RNDN); return *this; }

    BigFloat& operator*=(const Rational& q) { mpfr_mul_q(value_, value_, q.get_mpq_t(), MPFR_RNDN); return *this; }
    BigFloat& operator+=(const Rational& q) { mpfr_add_q(value_, value_, q.get_mpq_t(), MPFR_RNDN); return *this; }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator+(BigFloat a, long b) { return a += b; }
    friend BigFloat operator-(BigFloat a, long b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
    friend BigFloat operator*(BigFloat a, const Rational& q) { return a *= q; }

    BigFloat operator-() const {
        BigFloat out(*this);
        mpfr_neg(out.value_, out.value_, MPFR_RNDN);
        return out;
    }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat out(a);
        mpfr_abs(out.value_, out.value_, MPFR_RNDN);
        return out;
    }

    friend BigFloat log(const BigFloat& a) {
        BigFloat out(a);
        mpfr_log(out.value_, out.value_, MPFR_RNDN);
        return out;
    }

    friend BigFloat pow(const BigFloat& a, long e) {
        BigFloat out(a);
        mpfr_pow_si(out.value_, a.value_, e, MPFR_RNDN);
        return out;
    }

    /// Largest of a and b in magnitude-independent ordering.
    friend const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Base-10 exponent e with 10^(e-1) <= |x| < 10^e, roughly; very negative for 0.
    long decimal_exponent() const {
        if (is_zero()) return -100000;
        long exp2 = 0;
        mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
        return static_cast<long>(std::floor(exp2 * 0.30102999566398120)) + 1;
    }

    /// Scientific notation with `sig` significant digits, e.g. "1.2345e-07".
    std::string to_string(int sig) const {
        sig = std::max(sig, 1);
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", sig - 1, value_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    const __mpfr_struct* raw() const { return value_; }
    __mpfr_struct* raw() { return value_; }

private:
    struct bits_tag {};
    BigFloat(bits_tag, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

    void widen(const BigFloat& o) {
        if (mpfr_get_prec(o.value_) > mpfr_get_prec(value_))
            mpfr_prec_round(value_, mpfr_get_prec(o.value_), MPFR_RNDN);
    }

    mpfr_t value_;
};

inline std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(30); }

/// 10^e at the given precision.
inline BigFloat power_of_ten(long e, unsigned digits) { return pow(BigFloat(10, digits), e); }

}  // namespace hypereuler
