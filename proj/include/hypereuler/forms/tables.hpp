#pragma once

// Building blocks shared by every closed form: zeta values that refuse the
// divergent argument, mu(p,j), the B1/B2/B3 case tables and the partial
// fraction sum over two shifted powers.

#include "hypereuler/algebra/euler_reduce.hpp"
#include "hypereuler/exact/combinatorics.hpp"

#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace hypereuler::forms {

namespace detail {

inline std::string args(std::initializer_list<long> v) {
    std::string out = "(";
    bool first = true;
    for (long x : v) {
        out += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return out + ")";
}

// Memo for sub-results keyed by (operation tag, integer arguments).
inline ZetaExpr memo(int tag, std::vector<long> key, const std::function<ZetaExpr()>& compute) {
    static MemoTable<std::pair<int, std::vector<long>>, ZetaExpr> table;
    return table.get_or_compute({tag, std::move(key)}, compute);
}

enum Tag {
    kMu,
    kB1,
    kB2,
    kB3,
    kPair,
    kInvBinom,
    kInvShiftBinom,
    kInvTwoShift,
    kHLinear,
    kHBinom,
    kHShiftBinom,
    kH2,
    kH2Linear,
    kH2Binom,
    kHes,
    kNegEuler,
    kHyperBinom,
    kNegHyperBinom,
    kHyperShifted,
    kHyperHBinom,
    kHyperLinearBinom,
    kHyperPair,
    kTripleZeta,
};

}  // namespace detail

/// zeta(k) for k >= 2; zeta(1) means the chosen route cannot reduce the series.
inline ZetaExpr Z(long k) {
    if (k < 2) throw NotReducibleByThisRoute("route would need zeta(" + std::to_string(k) + ")");
    return ZetaExpr::zeta(k);
}

/// zeta_H(k) reduced to zeta values; k < 2 is not reducible.
inline ZetaExpr ZH(long k) {
    if (k < 2) throw NotReducibleByThisRoute("route would need zeta_H(" + std::to_string(k) + ")");
    return euler_reduce(k);
}

inline Rational R(long a, long b = 1) { return make_rational(a, b); }
inline Rational C(long n, long k) { return Rational(binomial(n, k)); }
inline Rational H(long n, long r = 1) { return harmonic(n, r); }
inline int sgn(long k) { return sign_power(k); }

/// mu(p,j) = sum_n 1/(n^p (n+j)), p >= 1, j >= 1.
inline ZetaExpr mu(long p, long j) {
    if (p < 1 || j < 1) throw InvalidParameter("mu" + detail::args({p, j}) + " needs p >= 1, j >= 1");
    return detail::memo(detail::kMu, {p, j}, [p, j] {
        ZetaExpr out;
        for (long n = 1; n <= p - 1; ++n) out += Z(p + 1 - n) * (sgn(n - 1) * inverse_power(j, n));
        out += ZetaExpr(sgn(p - 1) * H(j) * inverse_power(j, p));
        return out;
    });
}

/// B1(s,j) = sum_n 1/((n+s)(n+j)), s >= 0, j >= 1.
inline ZetaExpr b1(long s, long j) {
    if (s < 0 || j < 1) throw InvalidParameter("b1" + detail::args({s, j}) + " needs s >= 0, j >= 1");
    if (s == j) return Z(2) - ZetaExpr(H(j, 2));
    return ZetaExpr((H(s) - H(j)) / R(s - j));
}

/// B2(s,j) = sum_n H_n/((n+s)(n+j)), s >= 0, j >= 1.
inline ZetaExpr b2(long s, long j) {
    if (s < 0 || j < 1) throw InvalidParameter("b2" + detail::args({s, j}) + " needs s >= 0, j >= 1");
    return detail::memo(detail::kB2, {s, j}, [s, j] {
        const Rational hj = H(j - 1), hj2 = H(j - 1, 2);
        if (s == 0) return (Z(2) * R(2) + ZetaExpr(hj * hj + hj2)) * R(1, 2 * j);
        if (s == j) return Z(3) + Z(2) * hj - ZetaExpr(hj * hj2 + H(j - 1, 3));
        const Rational hs = H(s - 1), hs2 = H(s - 1, 2);
        return ZetaExpr((hj * hj + hj2 - hs * hs - hs2) / R(2 * (j - s)));
    });
}

/// B3(m,s) = sum_n 1/((n+m)^2 (n+s)), m >= 0, s >= 0.
inline ZetaExpr b3(long m, long s) {
    if (m < 0 || s < 0) throw InvalidParameter("b3" + detail::args({m, s}) + " needs m >= 0, s >= 0");
    if (m == s) return Z(3) - ZetaExpr(H(m, 3));
    const Rational d(s - m);
    return Z(2) * (1 / d) + ZetaExpr((H(m) - H(s)) / (d * d) - H(m, 2) / d);
}

/// sum_n 1/((n+b)^s (n+c)^t) for distinct shifts b, c >= 0 and s, t >= 1,
/// by partial fractions over y = n+b, d = c-b:
///   1/(y^s (y+d)^t) = sum_i C(s+t-i-1, t-1)(-1)^(s-i)/d^(s+t-i) / y^i
///                   + sum_i C(s+t-i-1, s-1)(-1)^s/d^(s+t-i) / (y+d)^i.
inline ZetaExpr shifted_power_pair(long b, long s, long c, long t) {
    if (b < 0 || c < 0 || b == c || s < 1 || t < 1)
        throw InvalidParameter("shifted_power_pair" + detail::args({b, s, c, t}) + " out of domain");
    return detail::memo(detail::kPair, {b, s, c, t}, [b, s, c, t] {
        const long d = c - b;
        ZetaExpr out;
        Rational simple = 0;  // coefficient of 1/(n+b); that of 1/(n+c) is its negative
        for (long i = 1; i <= s; ++i) {
            const Rational coeff = C(s + t - i - 1, t - 1) * sgn(s - i) * inverse_power(d, s + t - i);
            if (i == 1)
                simple = coeff;
            else
                out += (Z(i) - ZetaExpr(H(b, i))) * coeff;
        }
        for (long i = 2; i <= t; ++i) {
            const Rational coeff = C(s + t - i - 1, s - 1) * sgn(s) * inverse_power(d, s + t - i);
            out += (Z(i) - ZetaExpr(H(c, i))) * coeff;
        }
        // sum_n (1/(n+b) - 1/(n+c)) = H_c - H_b
        out += ZetaExpr(simple * (H(c) - H(b)));
        return out;
    });
}

}  // namespace hypereuler::forms
