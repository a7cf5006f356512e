#pragma once

// Hyperharmonic families. Positive orders are expanded with
//   h_n^(r+1) = (1/r!) sum_k [r+1,k+1] n^k (H_{n+r} - H_r),
//   H_{n+r} = H_n + sum_{v=1}^r 1/(n+v),
// negative orders through the two-branch formula for h_n^(-r).

#include "hypereuler/forms/harmonic.hpp"

namespace hypereuler::forms {

/// [r+1, k+1]: weight of n^k in r! h_n^(r+1) / (H_{n+r} - H_r).
inline Rational order_weight(long r, long k) { return Rational(stirling_weight(r, k)); }

namespace detail {

// Route guard shared by the order-expanded families: the lowest power after
// expansion is p - (r-1), and every piece must stay reducible.
inline void require_expandable(const char* name, long r, long p, long l) {
    const long low = p - (r - 1);
    if (low < 1 || (l == 0 && low < 2))
        throw NotReducibleByThisRoute(std::string(name) + args({r, p, l}) +
                                      ": expansion needs p-(r-1) >= 1, and >= 2 when l = 0");
}

// (1/rr!) sum_k [rr+1,k+1] piece(p-k)
// A piece outside its own domain means this route cannot split the series.
template <class Piece>
ZetaExpr expand_order(long rr, long p, Piece&& piece) {
    ZetaExpr out;
    try {
        for (long k = 0; k <= rr; ++k) out += piece(p - k) * order_weight(rr, k);
    } catch (const InvalidParameter& e) {
        throw NotReducibleByThisRoute(std::string("order expansion leaves a divergent piece: ") + e.what());
    }
    return out * (1 / Rational(factorial(static_cast<unsigned long>(rr))));
}

}  // namespace detail

/// zeta_{h^(r+1)}(p) = sum_n h_n^(r+1)/n^p, r >= 0, p > r+1.
inline ZetaExpr hes(long r, long p) {
    if (r < 0 || p <= r + 1) throw InvalidParameter("hes" + detail::args({r, p}) + " needs r >= 0 and p > r+1");
    return detail::memo(detail::kHes, {r, p}, [r, p] {
        return detail::expand_order(r, p, [r](long q) {
            ZetaExpr brace = ZH(q) - Z(q) * H(r);
            for (long j = 1; j <= r; ++j) brace += mu(q, j);
            return brace;
        });
    });
}

/// zeta_{h^(-r)}(p) = sum_n h_n^(-r)/n^p, r >= 1, p >= 1.
inline ZetaExpr neg_euler(long r, long p) {
    if (r < 1 || p < 1) throw InvalidParameter("neg_euler" + detail::args({r, p}) + " needs r >= 1, p >= 1");
    return detail::memo(detail::kNegEuler, {r, p}, [r, p] {
        ZetaExpr out = Z(p + 1);
        for (long k = 1; k <= r; ++k) {
            ZetaExpr brace(H(k) * inverse_power(k, p));
            for (long j = 2; j <= p; ++j) brace += (ZetaExpr(H(k, j)) - Z(j)) * inverse_power(k, p + 1 - j);
            out += brace * (sgn(k) * C(r, k));
        }
        return out;
    });
}

/// sum_n h_n^(r)/(n^p C(n+l,l)), r >= 1, p + l > r.
inline ZetaExpr hyper_binom(long r, long p, long l) {
    if (r < 1 || p < 0 || l < 0 || p + l <= r)
        throw InvalidParameter("hyper_binom" + detail::args({r, p, l}) + " needs r >= 1 and p+l > r");
    if (r == 1) return h_binom(p, l);
    detail::require_expandable("hyper_binom", r, p, l);
    return detail::memo(detail::kHyperBinom, {r, p, l}, [r, p, l] {
        const long rr = r - 1;
        return detail::expand_order(rr, p, [rr, l](long q) {
            ZetaExpr brace = h_binom(q, l) - inv_binom(q, l) * H(rr);
            for (long v = 1; v <= rr; ++v) brace += inv_shift_binom(q, v, l);
            return brace;
        });
    });
}

/// sum_{n=1}^r 1/(n^(p+1) C(n+l,l)), summed directly.
inline Rational neg_finite_sum_1(long r, long p, long l) {
    Rational out = 0;
    for (long n = 1; n <= r; ++n) out += inverse_power(n, p + 1) / C(n + l, l);
    return out;
}

/// sum_{n=k+1}^r 1/((n-k) n^p C(n+l,l)), summed directly.
inline Rational neg_finite_sum_2(long r, long k, long p, long l) {
    Rational out = 0;
    for (long n = k + 1; n <= r; ++n) out += inverse_power(n, p) / (R(n - k) * C(n + l, l));
    return out;
}

/// Closed form of neg_finite_sum_1.
inline Rational neg_finite_sum_1_closed(long r, long p, long l) {
    Rational out = H(r, p + 1);
    for (long a = 1; a <= l; ++a) {
        Rational brace = 0;
        for (long j = 1; j <= p; ++j) brace += sgn(p + j) * H(r, j) * inverse_power(a, p + 1 - j);
        brace += sgn(p) * (H(a + r) - H(a)) * inverse_power(a, p);
        out += sgn(a) * C(l, a) * brace;
    }
    return out;
}

/// Closed form of neg_finite_sum_2 as transcribed. The a-sum is empty at
/// l = 0, where it does not reproduce the finite sum; see the degenerate form.
inline Rational neg_finite_sum_2_closed(long r, long k, long p, long l) {
    Rational out = 0;
    for (long a = 1; a <= l; ++a) {
        Rational brace = H(r - k) * inverse_power(k, p);
        for (long j = 1; j <= p; ++j) {
            const Rational diff = H(r, j) - H(k, j);
            brace -= diff * inverse_power(k, p + 1 - j);
            brace -= sgn(p + j) * diff * inverse_power(a, p + 1 - j);
        }
        brace -= sgn(p) * (H(r + a) - H(a + k)) * inverse_power(a, p);
        out += C(l, a) * sgn(a - 1) * R(a, a + k) * brace;
    }
    return out;
}

/// Closed form of neg_finite_sum_2 at l = 0.
inline Rational neg_finite_sum_2_closed_l0(long r, long k, long p) {
    Rational out = H(r - k) * inverse_power(k, p);
    for (long j = 1; j <= p; ++j) out -= (H(r, j) - H(k, j)) * inverse_power(k, p + 1 - j);
    return out;
}

/// sum_n h_n^(-r)/(n^p C(n+l,l)), r >= 1, p >= 1, l >= 0. The finite sums
/// are summed directly; their closed forms are checked against them in tests.
inline ZetaExpr neg_hyper_binom(long r, long p, long l) {
    if (r < 1 || p < 1 || l < 0) throw InvalidParameter("neg_hyper_binom" + detail::args({r, p, l}) + " needs r, p >= 1, l >= 0");
    return detail::memo(detail::kNegHyperBinom, {r, p, l}, [r, p, l] {
        Rational finite = neg_finite_sum_1(r, p, l) - H(r, p + 1);
        for (long k = 1; k <= r - 1; ++k) finite += C(r, k) * sgn(k) * neg_finite_sum_2(r, k, p, l);
        ZetaExpr out = Z(p + 1) + ZetaExpr(finite);

        ZetaExpr tail;
        for (long a = 0; a <= r + l; ++a) {
            if (a == r) continue;
            const long d = r - a;
            ZetaExpr brace((H(r) - H(a)) * pow_int(Rational(d), -p));
            for (long j = 2; j <= p; ++j) brace += (ZetaExpr(H(r, j)) - Z(j)) * pow_int(Rational(d), -(p - j + 1));
            tail += brace * (C(r + l, a) * sgn(a));
        }
        out += tail * (sgn(r) / C(r + l, l));
        return out;
    });
}

/// sum_n h_n^(r)/((n+m)^p C(n+m+l,l)) for any integer order r, m >= 0, by the
/// binomial transform sum_k C(m,k)(-1)^k sum_n h_n^(r-k)/(n^p C(n+l,l)).
inline ZetaExpr hyper_shifted(long r, long m, long p, long l) {
    if (m < 0 || p < 0 || l < 0 || p + l - r + 1 < 2)
        throw InvalidParameter("hyper_shifted" + detail::args({r, m, p, l}) + " needs m, p, l >= 0 and p+l > r");
    return detail::memo(detail::kHyperShifted, {r, m, p, l}, [r, m, p, l] {
        ZetaExpr out;
        for (long k = 0; k <= m; ++k) {
            const long order = r - k;
            ZetaExpr piece;
            if (order >= 1)
                piece = hyper_binom(order, p, l);
            else if (order == 0)
                piece = inv_binom(p + 1, l);
            else if (p >= 1)
                piece = neg_hyper_binom(-order, p, l);
            else
                throw NotReducibleByThisRoute("hyper_shifted" + detail::args({r, m, p, l}) + ": negative orders need p >= 1");
            out += piece * (C(m, k) * sgn(k));
        }
        return out;
    });
}

/// sum_n h_n^(r) H_n/(n^p C(n+l,l)), r >= 1, p + l > r.
inline ZetaExpr hyper_h_binom(long r, long p, long l) {
    if (r < 1 || p < 0 || l < 0 || p + l <= r)
        throw InvalidParameter("hyper_h_binom" + detail::args({r, p, l}) + " needs r >= 1 and p+l > r");
    if (r == 1) return h2_binom(p, l);
    detail::require_expandable("hyper_h_binom", r, p, l);
    return detail::memo(detail::kHyperHBinom, {r, p, l}, [r, p, l] {
        const long rr = r - 1;
        return detail::expand_order(rr, p, [rr, l](long q) {
            ZetaExpr brace = h2_binom(q, l) - h_binom(q, l) * H(rr);
            for (long v = 1; v <= rr; ++v) brace += h_shift_binom(q, v, l);
            return brace;
        });
    });
}

/// sum_n h_n^(r)/(n^p (n+m) C(n+l,l)), r >= 1, m >= 1.
inline ZetaExpr hyper_linear_binom(long r, long p, long m, long l) {
    if (r < 1 || p < 0 || m < 1 || l < 0 || p + l + 1 <= r)
        throw InvalidParameter("hyper_linear_binom" + detail::args({r, p, m, l}) + " needs r, m >= 1 and p+l+1 > r");
    if (r == 1) return h_shift_binom(p, m, l);
    if (p < r)
        throw NotReducibleByThisRoute("hyper_linear_binom" + detail::args({r, p, m, l}) + ": expansion needs p >= r");
    return detail::memo(detail::kHyperLinearBinom, {r, p, m, l}, [r, p, m, l] {
        const long rr = r - 1;
        return detail::expand_order(rr, p, [rr, m, l](long q) {
            ZetaExpr brace = h_shift_binom(q, m, l) - inv_shift_binom(q, m, l) * H(rr);
            for (long j = 1; j <= rr; ++j) brace += inv_two_shift_binom(q, m, j, l);
            return brace;
        });
    });
}

/// sum_n h_n^(r) h_n^(q)/(n^p C(n+l,l)), r, q >= 1, p + l >= r + q. The
/// larger order is expanded; the result is symmetric in (r, q).
inline ZetaExpr hyper_pair_binom(long r, long q, long p, long l) {
    if (r < 1 || q < 1 || p < 0 || l < 0 || p + l < r + q)
        throw InvalidParameter("hyper_pair_binom" + detail::args({r, q, p, l}) + " needs r, q >= 1 and p+l >= r+q");
    const long big = std::max(r, q), small = std::min(r, q);
    if (big == 1) return h2_binom(p, l);
    return detail::memo(detail::kHyperPair, {big, small, p, l}, [big, small, p, l] {
        const long rr = big - 1;
        return detail::expand_order(rr, p, [rr, small, l](long s) {
            ZetaExpr brace = hyper_h_binom(small, s, l) - hyper_binom(small, s, l) * H(rr);
            for (long v = 1; v <= rr; ++v) brace += hyper_linear_binom(small, s, v, l);
            return brace;
        });
    });
}

}  // namespace hypereuler::forms
