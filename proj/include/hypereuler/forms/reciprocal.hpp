#pragma once

// Sums without harmonic numbers in the numerator:
//   sum 1/(n^p C(n+l,l)),  sum 1/(n^p (n+j) C(n+l,l)),
//   sum 1/(n^p (n+m)(n+j) C(n+l,l)).
// All rest on 1/C(n+l,l) = sum_{s=0}^l (-1)^s C(l,s) n/(n+s).

#include "hypereuler/forms/tables.hpp"

namespace hypereuler::forms {

/// sum_n 1/(n^p C(n+l,l)), p + l >= 2.
inline ZetaExpr inv_binom(long p, long l) {
    if (p < 0 || l < 0 || p + l < 2) throw InvalidParameter("inv_binom" + detail::args({p, l}) + " diverges (p+l >= 2)");
    if (l == 0) return Z(p);
    if (p == 0) throw NotReducibleByThisRoute("inv_binom" + detail::args({p, l}) + " needs p >= 1");
    return detail::memo(detail::kInvBinom, {p, l}, [p, l] {
        ZetaExpr out;
        for (long a = 1; a <= l; ++a) {
            ZetaExpr inner;
            for (long m = 1; m <= p - 1; ++m) inner += Z(p + 1 - m) * (sgn(a + m) * inverse_power(a, m - 1));
            inner += ZetaExpr(sgn(a + p) * H(a) * inverse_power(a, p - 1));
            out += inner * C(l, a);
        }
        return out;
    });
}

/// sum_n 1/(n^p (n+j) C(n+l,l)), p >= 1, j >= 1.
inline ZetaExpr inv_shift_binom(long p, long j, long l) {
    if (p < 0 || j < 1 || l < 0) throw InvalidParameter("inv_shift_binom" + detail::args({p, j, l}) + " out of domain");
    if (p == 0) throw NotReducibleByThisRoute("inv_shift_binom" + detail::args({p, j, l}) + " needs p >= 1");
    return detail::memo(detail::kInvShiftBinom, {p, j, l}, [p, j, l] {
        ZetaExpr out;
        for (long m = 1; m <= p - 1; ++m) {
            ZetaExpr inner = Z(p + 1 - m);
            for (long a = 1; a <= l; ++a) inner += mu(p - m, a) * (C(l, a) * sgn(a));
            out += inner * (sgn(m - 1) * inverse_power(j, m));
        }
        ZetaExpr tail;
        for (long s = 0; s <= l; ++s) tail += b1(s, j) * (sgn(s) * C(l, s));
        out += tail * (sgn(p - 1) * inverse_power(j, p - 1));
        return out;
    });
}

namespace detail {

// sum_n 1/(n^p (n+m)^2 (n+s)), p >= 1, m, s >= 1, built from the degenerate
// two-shift reduction and B3. `v_start` is 0 for the complete form.
inline ZetaExpr two_shift_square(long p, long m, long s, long v_start = 0) {
    ZetaExpr out;
    const Rational hm = H(m), hm2 = H(m, 2);
    for (long v = v_start; v <= p - 1; ++v) {
        ZetaExpr brace = Z(2) - ZetaExpr(hm2 + R(v + 1) * hm / R(m));
        for (long n = 0; n <= v - 1; ++n) brace += Z(n + 2) * (pow_int(Rational(-m), n) * R(v - n));
        out += brace * (sgn(p) * inverse_power(s, p - v) * inverse_power(m, v + 1));
    }
    out += b3(m, s) * (sgn(p) * inverse_power(s, p));
    return out;
}

}  // namespace detail

/// sum_n 1/(n^p (n+m)(n+j) C(n+l,l)), p >= 1, m, j >= 1.
inline ZetaExpr inv_two_shift_binom(long p, long m, long j, long l) {
    if (p < 0 || m < 1 || j < 1 || l < 0)
        throw InvalidParameter("inv_two_shift_binom" + detail::args({p, m, j, l}) + " out of domain");
    if (p == 0) throw NotReducibleByThisRoute("inv_two_shift_binom" + detail::args({p, m, j, l}) + " needs p >= 1");
    return detail::memo(detail::kInvTwoShift, {p, m, j, l}, [p, m, j, l] {
        if (m != j) return (inv_shift_binom(p, m, l) - inv_shift_binom(p, j, l)) * R(1, j - m);
        if (l == 0) return shifted_power_pair(0, p, m, 2);
        ZetaExpr out;
        for (long s = 1; s <= l; ++s) out += detail::two_shift_square(p, m, s) * (sgn(s - 1) * C(l, s) * R(s));
        return out;
    });
}

}  // namespace hypereuler::forms
