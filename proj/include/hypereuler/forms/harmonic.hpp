#pragma once

// Sums with H_n or H_n^2 in the numerator.

#include "hypereuler/forms/reciprocal.hpp"

namespace hypereuler::forms {

/// sum_n H_n/(n^p (n+a)), p >= 1, a >= 1.
inline ZetaExpr h_linear(long p, long a) {
    if (p < 1 || a < 1) throw InvalidParameter("h_linear" + detail::args({p, a}) + " needs p >= 1, a >= 1");
    return detail::memo(detail::kHLinear, {p, a}, [p, a] {
        ZetaExpr out;
        for (long m = 1; m <= p - 1; ++m) out += ZH(p + 1 - m) * (sgn(m - 1) * inverse_power(a, m));
        out += b2(0, a) * (sgn(p - 1) * inverse_power(a, p - 1));
        return out;
    });
}

/// sum_n H_n/(n^p C(n+l,l)), p + l >= 2.
inline ZetaExpr h_binom(long p, long l) {
    if (p < 0 || l < 0 || p + l < 2) throw InvalidParameter("h_binom" + detail::args({p, l}) + " diverges (p+l >= 2)");
    if (l == 0) return ZH(p);
    if (p == 0) throw NotReducibleByThisRoute("h_binom" + detail::args({p, l}) + " needs p >= 1");
    return detail::memo(detail::kHBinom, {p, l}, [p, l] {
        ZetaExpr out;
        if (p == 1) {
            for (long a = 1; a <= l; ++a) out += h_linear(1, a) * (sgn(a - 1) * C(l, a) * R(a));
            return out;
        }
        out = ZH(p);
        for (long a = 1; a <= l; ++a) {
            ZetaExpr inner;
            for (long m = 1; m <= p - 2; ++m) inner += ZH(p - m) * (sgn(m - 1) * inverse_power(a, m));
            const Rational ha = H(a - 1);
            inner += (Z(2) * R(2) + ZetaExpr(ha * ha + H(a - 1, 2))) * (sgn(p) * inverse_power(a, p - 1) / 2);
            out += inner * (C(l, a) * sgn(a));
        }
        return out;
    });
}

/// sum_n H_n/(n^p (n+j) C(n+l,l)), p >= 1, j >= 1.
inline ZetaExpr h_shift_binom(long p, long j, long l) {
    if (p < 0 || j < 1 || l < 0) throw InvalidParameter("h_shift_binom" + detail::args({p, j, l}) + " out of domain");
    if (p == 0) throw NotReducibleByThisRoute("h_shift_binom" + detail::args({p, j, l}) + " needs p >= 1");
    return detail::memo(detail::kHShiftBinom, {p, j, l}, [p, j, l] {
        ZetaExpr out;
        for (long m = 1; m <= p - 1; ++m) {
            ZetaExpr inner = ZH(p + 1 - m);
            for (long a = 1; a <= l; ++a) inner += h_linear(p - m, a) * (C(l, a) * sgn(a));
            out += inner * (sgn(m - 1) * inverse_power(j, m));
        }
        ZetaExpr tail;
        for (long s = 0; s <= l; ++s) tail += b2(s, j) * (sgn(s) * C(l, s));
        out += tail * (sgn(p - 1) * inverse_power(j, p - 1));
        return out;
    });
}

/// zeta(p,1,1) for p >= 2 as a polynomial in zeta values (coefficient of y^3
/// in the generating function of zeta(p, {1}^k)).
inline ZetaExpr triple_zeta_p11(long p) {
    if (p < 2) throw InvalidParameter("zeta(p,1,1) needs p >= 2");
    return detail::memo(detail::kTripleZeta, {p}, [p] {
        ZetaExpr out = Z(p + 2) * R((p + 1) * p, 6);
        for (long a = 1; a <= p - 2; ++a) {
            const long b = p - 1 - a;
            out -= zeta_product(a + 1, b + 2) * R(b + 1, 2);
        }
        for (long a = 1; a <= p - 3; ++a)
            for (long b = 1; a + b <= p - 2; ++b) {
                const long c = p - 1 - a - b;
                out += Z(a + 1) * Z(b + 1) * Z(c + 1) * R(1, 6);
            }
        return out;
    });
}

/// sum_n H_n^2/n^p, p >= 2:
///   zeta_{H^(2)}(p) + 2 zeta(p,1,1) + 2 (zeta_H(p+1) - zeta(p+2)).
inline ZetaExpr h2(long p) {
    if (p < 2) throw InvalidParameter("h2" + detail::args({p}) + " diverges (p >= 2)");
    return detail::memo(detail::kH2, {p}, [p] {
        return ZetaExpr::euler_lin(2, p) + triple_zeta_p11(p) * R(2) + (ZH(p + 1) - Z(p + 2)) * R(2);
    });
}

/// The quadratic sum exactly as transcribed in the source; kept for the audit.
inline ZetaExpr h2_as_printed(long p) {
    if (p < 2) throw InvalidParameter("h2" + detail::args({p}) + " diverges (p >= 2)");
    ZetaExpr out = ZetaExpr::euler_lin(2, p) + Z(p + 2) * R(p * p + p - 3, 3) + zeta_product(2, p);
    ZetaExpr pairs, triples;
    for (long k = 0; k <= p - 2; ++k) {
        pairs += zeta_product(p - k, k + 2);
        for (long j = 1; j <= k - 1; ++j) triples += Z(p - k) * Z(j + 1) * Z(k + 1 - j);
    }
    return out - pairs * R(p, 2) + triples * R(1, 3);
}

/// sum_n H_n^2/(n (n+a)), a >= 1.
inline ZetaExpr h2_linear(long a) {
    if (a < 1) throw InvalidParameter("h2_linear" + detail::args({a}) + " needs a >= 1");
    return detail::memo(detail::kH2Linear, {a}, [a] {
        const Rational ha = H(a), ha2 = H(a, 2), ha3 = H(a, 3);
        Rational lower = 0;
        for (long i = 1; i < a; ++i) lower += H(i) * inverse_power(i, 2);
        Rational rational = (ha * ha * ha + 3 * ha * ha2 + 2 * ha3) / R(3 * a) - (ha * ha + ha2) / R(a * a) - lower / R(a);
        return Z(3) * R(3, a) + Z(2) * (H(a - 1) / R(a)) + ZetaExpr(rational);
    });
}

namespace detail {

inline ZetaExpr h2_binom_expansion(long p, long l, bool printed) {
    ZetaExpr out;
    for (long a = 1; a <= l; ++a) {
        for (long m = 1; m <= p - 1; ++m) {
            const long e = printed ? m - 1 : 1 - m;  // power of a
            out += h2(p + 1 - m) * (sgn(a + m) * pow_int(Rational(a), e) * C(l, a));
        }
        out += h2_linear(a) * (sgn(a + p) * pow_int(Rational(a), 2 - p) * C(l, a));
    }
    return out;
}

}  // namespace detail

/// sum_n H_n^2/(n^p C(n+l,l)), p + l >= 2.
inline ZetaExpr h2_binom(long p, long l) {
    if (p < 0 || l < 0 || p + l < 2) throw InvalidParameter("h2_binom" + detail::args({p, l}) + " diverges (p+l >= 2)");
    if (l == 0) return h2(p);
    if (p == 0) throw NotReducibleByThisRoute("h2_binom" + detail::args({p, l}) + " needs p >= 1");
    return detail::memo(detail::kH2Binom, {p, l}, [p, l] { return detail::h2_binom_expansion(p, l, false); });
}

/// The binomial quadratic reduction with the transcribed power a^(m-1).
inline ZetaExpr h2_binom_as_printed(long p, long l) {
    if (p < 1 || l < 1) throw InvalidParameter("h2_binom_as_printed needs p >= 1, l >= 1");
    return detail::h2_binom_expansion(p, l, true);
}

}  // namespace hypereuler::forms
