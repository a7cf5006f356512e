#pragma once

#include "hypereuler/algebra/zeta_expr.hpp"
#include "hypereuler/exact/memo.hpp"

namespace hypereuler {

/// Euler's reduction of zeta_H(p) = sum_n H_n / n^p:
///   zeta_H(p) = ((p+2) zeta(p+1) - sum_{j=1}^{p-2} zeta(p-j) zeta(j+1)) / 2.
inline ZetaExpr euler_reduce(long p) {
    if (p < 2) throw InvalidParameter("zeta_H(" + std::to_string(p) + ") diverges (p >= 2)");
    static MemoTable<long, ZetaExpr> table;
    return table.get_or_compute(p, [p] {
        ZetaExpr out = ZetaExpr::zeta(p + 1) * Rational(p + 2);
        for (long j = 1; j <= p - 2; ++j) out -= zeta_product(p - j, j + 1);
        return out * Rational(1, 2);
    });
}

/// Two-argument spelling; only r = 1 has a reduction here.
inline ZetaExpr euler_reduce(long r, long p) {
    if (r != 1) throw InvalidParameter("euler_reduce applies to r = 1 only");
    return euler_reduce(p);
}

/// zeta_{H^(r)}(p) for r >= 1, p >= 2: reduced when r = 1, atomic otherwise.
inline ZetaExpr euler_lin(long r, long p) {
    if (r == 1) return euler_reduce(p);
    return ZetaExpr::euler_lin(r, p);
}

}  // namespace hypereuler
