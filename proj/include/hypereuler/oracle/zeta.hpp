#pragma once

// Numeric values of the atoms: zeta(k) and zeta_{H^(r)}(p), both by
// Euler-Maclaurin summation.

#include "hypereuler/algebra/zeta_expr.hpp"
#include "hypereuler/exact/combinatorics.hpp"
#include "hypereuler/exact/memo.hpp"
#include "hypereuler/numeric/bigfloat.hpp"

#include <utility>

namespace hypereuler::oracle {

namespace detail {

// B_{2k} / (2k)! for k = 1..count.
inline const std::vector<Rational>& bernoulli_weights(std::size_t count) {
    static std::shared_mutex mutex;
    static std::vector<Rational> weights;
    {
        std::shared_lock lock(mutex);
        if (weights.size() >= count) return weights;
    }
    std::unique_lock lock(mutex);
    while (weights.size() < count) {
        const long k = static_cast<long>(weights.size()) + 1;
        weights.push_back(bernoulli(2 * k) / Rational(factorial(static_cast<unsigned long>(2 * k))));
    }
    return weights;
}

}  // namespace detail

/// sum_{n >= start} n^-s for integer s >= 2, start >= 1, to `digits` digits.
/// Sums directly up to a cutoff comparable to the precision, then applies
/// Euler-Maclaurin with the Bernoulli correction series.
inline BigFloat hurwitz_tail(long s, long start, unsigned digits) {
    if (s < 2 || start < 1) throw InvalidParameter("hurwitz_tail needs s >= 2, start >= 1");
    const unsigned work = digits + 10;
    const long cutoff = std::max<long>(start, static_cast<long>(digits) + 10);
    BigFloat sum(work);
    for (long n = start; n < cutoff; ++n) sum += pow(BigFloat(n, work), -s);

    const BigFloat M(cutoff, work);
    const BigFloat inv_m = BigFloat(1, work) / M;
    const BigFloat m_pow = pow(M, -s);  // M^-s
    sum += m_pow * M / (s - 1);
    sum += m_pow / 2;

    const BigFloat eps = power_of_ten(-static_cast<long>(work), work);
    const BigFloat inv_m2 = inv_m * inv_m;
    // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * M^(-s-2k+1)
    BigFloat rising(s, work);    // (s)_{2k-1}
    BigFloat power = m_pow * inv_m;  // M^(-s-1)
    const std::size_t max_k = 4 * static_cast<std::size_t>(work) + 20;
    for (std::size_t k = 1; k <= max_k; ++k) {
        const auto& w = detail::bernoulli_weights(k);
        BigFloat term = rising * power * w[k - 1];
        sum += term;
        if (abs(term) < eps * abs(sum)) break;
        const long kk = static_cast<long>(k);
        rising *= (s + 2 * kk - 1);
        rising *= (s + 2 * kk);
        power *= inv_m2;
    }
    return sum;
}

/// Riemann zeta(k), k >= 2; cached per (k, digits).
inline BigFloat zeta_value(long k, unsigned digits) {
    if (k < 2) throw InvalidParameter("zeta(" + std::to_string(k) + ") diverges");
    static MemoTable<std::pair<long, unsigned>, BigFloat> cache;
    return cache.get_or_compute({k, digits}, [k, digits] { return hurwitz_tail(k, 1, digits); });
}

/// zeta_{H^(r)}(p) = sum_n H_n^(r)/n^p, r >= 2, p >= 2.
///
/// The head n <= N is summed directly. For the tail, H_n^(r) = zeta(r) - zeta(r, n+1)
/// and zeta(r, n+1) is replaced by its asymptotic expansion
///   n^(1-r)/(r-1) - n^-r/2 + sum_j B_2j/(2j)! (r)_{2j-1} n^(-r-2j+1),
/// which turns the tail into a finite combination of zeta tails.
inline BigFloat euler_lin_value(long r, long p, unsigned digits) {
    if (r < 2 || p < 2) throw InvalidParameter("eulerlin needs r >= 2, p >= 2");
    static MemoTable<std::tuple<long, long, unsigned>, BigFloat> cache;
    return cache.get_or_compute({r, p, digits}, [r, p, digits] {
        const unsigned work = digits + 10;
        const long N = 40 * static_cast<long>(digits) + 200;

        BigFloat head(work), h(work);
        for (long n = 1; n <= N; ++n) {
            const BigFloat bn(n, work);
            h += pow(bn, -r);
            head += h * pow(bn, -p);
        }

        const long start = N + 1;
        BigFloat tail = zeta_value(r, work) * hurwitz_tail(p, start, work);
        BigFloat correction = hurwitz_tail(p + r - 1, start, work) / (r - 1);
        correction -= hurwitz_tail(p + r, start, work) / 2;

        // Coefficients shrink like (2j)! / (2 pi N)^(2j); stop once negligible.
        const BigFloat eps = power_of_ten(-static_cast<long>(work) - 5, work);
        const BigFloat scale = pow(BigFloat(N, work), -(p + r - 1));
        BigFloat rising(r, work);  // (r)_{2j-1}
        for (std::size_t j = 1; j <= 4 * static_cast<std::size_t>(work); ++j) {
            const long jj = static_cast<long>(j);
            const BigFloat c = rising * detail::bernoulli_weights(j)[j - 1];
            const BigFloat est = abs(c) * scale * pow(BigFloat(N, work), -2 * jj);
            if (est < eps) break;
            correction += c * hurwitz_tail(p + r + 2 * jj - 1, start, work);
            rising *= (r + 2 * jj - 1);
            rising *= (r + 2 * jj);
        }
        return head + tail - correction;
    });
}

/// Atom evaluator for eval_expr.
inline BigFloat eval_atom(const Atom& a, unsigned digits) {
    if (a.is_zeta()) return zeta_value(a.first(), digits);
    return euler_lin_value(a.first(), a.second(), digits);
}

}  // namespace hypereuler::oracle
