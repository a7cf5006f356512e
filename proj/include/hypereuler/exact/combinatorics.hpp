#pragma once

// Exact combinatorial quantities: binomials, generalized harmonic numbers,
// hyperharmonic numbers of every integer order, r-Stirling numbers of the
// first kind and Bernoulli numbers. Everything is a pure function of its
// arguments; the caches only trade memory for time.

#include "hypereuler/exact/memo.hpp"
#include "hypereuler/exact/numbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypereuler {

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace detail {

// Rows of prefix-defined sequences: row(order)[n] for n = 0..size-1.
class PrefixRows {
public:
    std::optional<Rational> try_get(long order, long n) const {
        std::shared_lock lock(mutex_);
        auto it = rows_.find(order);
        if (it != rows_.end() && static_cast<long>(it->second.size()) > n) return it->second[n];
        return std::nullopt;
    }

    long size(long order) const {
        std::shared_lock lock(mutex_);
        auto it = rows_.find(order);
        return it == rows_.end() ? 0 : static_cast<long>(it->second.size());
    }

    template <class Extend>
    Rational get(long order, long n, Extend&& extend) {
        {
            std::shared_lock lock(mutex_);
            auto it = rows_.find(order);
            if (it != rows_.end() && static_cast<long>(it->second.size()) > n) return it->second[n];
        }
        std::unique_lock lock(mutex_);
        auto& row = rows_[order];
        if (row.empty()) row.emplace_back(0);
        while (static_cast<long>(row.size()) <= n) {
            const long k = static_cast<long>(row.size());
            row.push_back(row.back() + extend(k));
        }
        return row[n];
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<long, std::vector<Rational>> rows_;
};

inline PrefixRows& harmonic_rows() {
    static PrefixRows rows;
    return rows;
}

inline PrefixRows& hyperharmonic_rows() {
    static PrefixRows rows;
    return rows;
}

}  // namespace detail

/// Generalized harmonic number H_n^(r) = sum_{k=1}^n 1/k^r, with H_n^(0) = n.
inline Rational harmonic(long n, long r = 1) {
    if (n < 0) throw std::invalid_argument("harmonic: n must be non-negative");
    if (r < 0) throw std::invalid_argument("harmonic: order must be non-negative");
    if (r == 0) return Rational(n);
    return detail::harmonic_rows().get(r, n, [r](long k) { return inverse_power(k, r); });
}

/// Hyperharmonic number h_n^(r), r >= 1, by iterated partial sums of H_n.
/// h_0^(r) = 0.
inline Rational hyperharmonic(long n, long r) {
    if (n < 0) throw std::invalid_argument("hyperharmonic: n must be non-negative");
    if (r < 1) throw std::invalid_argument("hyperharmonic: order must be >= 1");
    if (r == 1) return harmonic(n, 1);
    if (n == 0) return 0;
    auto& rows = detail::hyperharmonic_rows();
    if (auto cached = rows.try_get(r, n)) return *cached;
    // Materialize the missing part of the lower row first so the extension
    // below never re-enters the table while holding its lock.
    const long start = std::max(rows.size(r), 1L);
    std::vector<Rational> lower;
    for (long k = start; k <= n; ++k) lower.push_back(hyperharmonic(k, r - 1));
    return rows.get(r, n, [&lower, start](long k) { return lower[k - start]; });
}

/// Hyperharmonic number of negative order h_n^(-r), n >= 1, r >= 1.
inline Rational hyperharmonic_neg(long n, long r) {
    if (n < 1) throw std::invalid_argument("hyperharmonic_neg: n must be >= 1");
    if (r < 1) throw std::invalid_argument("hyperharmonic_neg: order must be >= 1");
    if (n > r) {
        Rational denom(Integer(n - r) * binomial(n, r));
        return Rational(sign_power(r)) / denom;
    }
    Rational sum = 0;
    for (long k = 0; k <= n - 1; ++k)
        sum += Rational(binomial(r, k) * sign_power(k)) / Rational(n - k);
    return sum;
}

/// h_n^(r) for any integer order: r >= 1 iterated sums, r = 0 gives 1/n,
/// r < 0 the negative-order extension. h_0^(r) = 0 for every r.
inline Rational hyperharmonic_any(long n, long r) {
    if (n < 0) throw std::invalid_argument("hyperharmonic_any: n must be non-negative");
    if (n == 0) return 0;
    if (r >= 1) return hyperharmonic(n, r);
    if (r == 0) return Rational(1, static_cast<unsigned long>(n));
    return hyperharmonic_neg(n, -r);
}

/// Coefficients of x^k in (x+r)(x+r+1)...(x+r+n-1), k = 0..n.
inline std::vector<Integer> r_stirling1_row(long n, long r) {
    if (n < 0 || r < 0) throw std::invalid_argument("r_stirling1: arguments must be non-negative");
    static MemoTable<std::pair<long, long>, std::vector<Integer>> table;
    return table.get_or_compute({n, r}, [n, r] {
        std::vector<Integer> poly{1};
        for (long i = 0; i < n; ++i) {
            const Integer shift(r + i);
            std::vector<Integer> next(poly.size() + 1, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += shift * poly[k];
                next[k + 1] += poly[k];
            }
            poly = std::move(next);
        }
        return poly;
    });
}

/// r-Stirling number of the first kind [n, k]_r.
inline Integer r_stirling1(long n, long k, long r) {
    if (k < 0 || k > n) return 0;
    return r_stirling1_row(n, r)[static_cast<std::size_t>(k)];
}

/// Weight [r+1, k+1] = [r, k]_1 multiplying n^k in
/// h_n^(r+1) = (1/r!) sum_k [r+1, k+1] n^k (H_{n+r} - H_r).
inline Integer stirling_weight(long r, long k) { return r_stirling1(r, k, 1); }

/// Bernoulli number B_n with B_1 = -1/2.
inline Rational bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: index must be non-negative");
    static std::shared_mutex mutex;
    static std::vector<Rational> values{Rational(1)};
    {
        std::shared_lock lock(mutex);
        if (static_cast<long>(values.size()) > n) return values[n];
    }
    std::unique_lock lock(mutex);
    while (static_cast<long>(values.size()) <= n) {
        const long m = static_cast<long>(values.size());
        Rational acc = 0;
        for (long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * values[k];
        values.push_back(-acc / Rational(m + 1));
    }
    return values[n];
}

}  // namespace hypereuler
