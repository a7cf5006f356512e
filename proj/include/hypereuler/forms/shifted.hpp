#pragma once

// Shifted and Hurwitz-type sums.

#include "hypereuler/forms/hyper.hpp"

namespace hypereuler::forms {

/// sum_k zeta(p,k)/(r+k), p >= 2, r >= 1.
inline ZetaExpr hurwitz_series(long p, long r) {
    if (p < 2 || r < 1) throw InvalidParameter("hurwitz_series" + detail::args({p, r}) + " needs p >= 2, r >= 1");
    ZetaExpr out = ZH(p);
    for (long j = 2; j <= p - 1; ++j) out += Z(p + 1 - j) * (sgn(j - 1) * H(r, j));
    Rational tail = 0;
    for (long j = 1; j <= r; ++j) tail += H(j) * inverse_power(j, p);
    return out + ZetaExpr(sgn(p - 1) * tail);
}

/// sum_{n>r} H_n/(n-r)^p, p >= 2, r >= 1.
inline ZetaExpr xu_li_shifted(long p, long r) {
    if (p < 2 || r < 1) throw InvalidParameter("xu_li_shifted" + detail::args({p, r}) + " needs p >= 2, r >= 1");
    ZetaExpr out = ZH(p);
    for (long m = 1; m <= p - 1; ++m) out -= Z(p + 1 - m) * (sgn(m) * H(r, m));
    Rational tail = 0;
    for (long m = 1; m <= r; ++m) tail += H(m) * inverse_power(m, p);
    return out - ZetaExpr(sgn(p) * tail);
}

/// sum_k zeta(p,k)/k = zeta_H(p), in the Hurwitz-series form:
///   ((p+2) zeta(p+1) - sum_{n=1}^{p-2} zeta(p-n) zeta(n+1)) / 2.
inline ZetaExpr hzs(long p) {
    if (p < 2) throw InvalidParameter("hzs" + detail::args({p}) + " needs p >= 2");
    ZetaExpr out = Z(p + 1) * R(p + 2, 2);
    for (long n = 1; n <= p - 2; ++n) out -= zeta_product(p - n, n + 1) * R(1, 2);
    return out;
}

namespace detail {

inline ZetaExpr shifted_h_binom_with_sign(long p, long r, long q, int sign) {
    ZetaExpr out = hyper_binom(r + 1, p, q + r) * (1 / C(r + q, q));
    ZetaExpr corr;
    for (long a = 1; a <= q; ++a) {
        ZetaExpr brace;
        for (long m = 1; m <= p - 1; ++m) brace += Z(p + 1 - m) * (sgn(m) * inverse_power(r + a, m));
        brace += ZetaExpr(sgn(p) * H(r + a) * inverse_power(r + a, p));
        corr += brace * (sgn(a) * C(q, a) * R(a));
    }
    return out + corr * (sign * H(r));
}

}  // namespace detail

/// sum_{n>r} H_n/((n-r)^p C(n+q,q)), r >= 0, q >= 1, p + q > 1.
inline ZetaExpr shifted_h_binom(long p, long r, long q) {
    if (p < 0 || r < 0 || q < 1 || p + q <= 1)
        throw InvalidParameter("shifted_h_binom" + detail::args({p, r, q}) + " needs r >= 0, q >= 1, p+q > 1");
    return detail::shifted_h_binom_with_sign(p, r, q, +1);
}

/// Same with the transcribed minus sign in front of the H_r correction.
inline ZetaExpr shifted_h_binom_as_printed(long p, long r, long q) {
    return detail::shifted_h_binom_with_sign(p, r, q, -1);
}

/// sum_{n>q+l} C(n,q) H_n/(n-l-q)^p, q >= 1, l >= 0, p > q+1.
inline ZetaExpr shifted_h_top(long p, long q, long l) {
    if (q < 1 || l < 0 || p <= q + 1)
        throw InvalidParameter("shifted_h_top" + detail::args({p, q, l}) + " needs q >= 1, l >= 0, p > q+1");
    ZetaExpr out = hyper_binom(q + l + 1, p, l) * C(q + l, l);
    ZetaExpr zs;
    for (long k = 0; k <= q; ++k) zs += Z(p - k) * Rational(r_stirling1(q, k, l + 1));
    return out + zs * (H(q + l) / Rational(factorial(static_cast<unsigned long>(q))));
}

}  // namespace hypereuler::forms
