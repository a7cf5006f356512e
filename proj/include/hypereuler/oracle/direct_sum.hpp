#pragma once

// Brute-force summation of a series with a tail estimate.
//
// Plain mode trusts the partial sum S_N and bounds the remainder by
// 2 |t_N| N / (d-1), valid once N >= 1000 for d-decay with log factors.
//
// Accelerated mode fits S_N = S + sum_{i,j} c_ij (log N)^j / N^(d-1+i) on
// geometrically spaced checkpoints (a generalized Richardson extrapolation).
// Its bound is ten times the spread between three fits: the newest window,
// the window two checkpoints earlier, and the newest window one order lower.

#include "hypereuler/oracle/series.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace hypereuler::oracle {

enum class SumMode { Auto, Plain, Accelerated };

inline std::string to_string(SumMode m) {
    switch (m) {
        case SumMode::Auto: return "auto";
        case SumMode::Plain: return "plain";
        case SumMode::Accelerated: return "accelerated";
    }
    return "?";
}

inline SumMode parse_mode(const std::string& s) {
    if (s == "auto") return SumMode::Auto;
    if (s == "plain") return SumMode::Plain;
    if (s == "accelerated") return SumMode::Accelerated;
    throw InvalidParameter("unknown summation mode '" + s + "'");
}

struct OracleConfig {
    unsigned digits = 60;
    long max_terms = 200000;
    int tol_digits = 25;        // target: tail bound <= 10^-tol_digits
    SumMode mode = SumMode::Auto;
    bool require_target = true;  // throw BudgetExceeded instead of returning a weaker bound
};

struct OracleResult {
    BigFloat value;        // best estimate of the full sum
    BigFloat partial_sum;  // S_N at the last index summed
    BigFloat tail_bound;   // bound on |sum - value|
    BigFloat plain_bound;  // 2 |t_N| N / (d-1) at the last index summed
    long terms_used = 0;
    SumMode mode = SumMode::Plain;  // method that produced `value`
};

namespace detail {

// Solves A x = b in place by Gaussian elimination with partial pivoting.
inline std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> A, std::vector<BigFloat> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        if (A[c][c].is_zero()) throw BudgetExceeded("singular extrapolation system");
        for (std::size_t r = c + 1; r < n; ++r) {
            BigFloat f = A[r][c] / A[c][c];
            if (f.is_zero()) continue;
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<BigFloat> x(n, BigFloat(b[0].digits()));
    for (std::size_t i = n; i-- > 0;) {
        BigFloat s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

struct Sample {
    long n;
    BigFloat s;
};

// Limit of S_N from samples[end-m .. end) with `orders` inverse powers
// starting at N^-(d-1), each carrying log powers 0..J. Columns are scaled by
// the newest sample so entries stay near 1.
inline BigFloat fit_limit(const std::vector<Sample>& samples, std::size_t end, long d, long J, long orders) {
    const std::size_t m = 1 + static_cast<std::size_t>(orders * (J + 1));
    const std::size_t begin = end - m;
    const unsigned digits = samples[end - 1].s.digits();
    const BigFloat n_ref(samples[end - 1].n, digits);
    const BigFloat log_ref = log(n_ref);
    std::vector<std::vector<BigFloat>> A;
    std::vector<BigFloat> b;
    for (std::size_t k = begin; k < end; ++k) {
        const BigFloat u = n_ref / samples[k].n;  // >= 1
        const BigFloat lg = log(BigFloat(samples[k].n, digits)) / log_ref;
        std::vector<BigFloat> row;
        row.emplace_back(1, digits);
        BigFloat up = pow(u, d - 1);
        for (long i = 0; i < orders; ++i) {
            BigFloat cell = up;
            for (long j = 0; j <= J; ++j) {
                row.push_back(cell);
                cell *= lg;
            }
            up *= u;
        }
        A.push_back(std::move(row));
        b.push_back(samples[k].s);
    }
    return solve(std::move(A), std::move(b))[0];
}

// Inverse-power orders used by the fit for a given log power.
inline long fit_orders(long J) { return J == 0 ? 14 : (J == 1 ? 9 : 7); }

struct Extrapolation {
    BigFloat value;
    BigFloat bound;
};

inline std::optional<Extrapolation> extrapolate(const std::vector<Sample>& samples, long d, long J) {
    const long orders = fit_orders(J);
    const std::size_t m = 1 + static_cast<std::size_t>(orders * (J + 1));
    const std::size_t shift = 2;
    if (samples.size() < m + shift) return std::nullopt;
    const std::size_t end = samples.size();
    BigFloat a = fit_limit(samples, end, d, J, orders);
    BigFloat b = fit_limit(samples, end - shift, d, J, orders);
    BigFloat c = fit_limit(samples, end, d, J, orders - 1);
    BigFloat spread = max(abs(a - b), abs(a - c));
    return Extrapolation{a, spread * 10};
}

}  // namespace detail

/// Sums the series of `spec` term by term. Deterministic: the same inputs give
/// bit-identical results.
inline OracleResult direct_sum(const SumSpec& spec, const OracleConfig& cfg = {}) {
    if (cfg.max_terms < 1000) throw InvalidParameter("max_terms must be at least 1000");
    if (cfg.digits < 10) throw InvalidParameter("digits must be at least 10");
    const long d = spec.decay();
    const long J = spec.log_power();
    const unsigned work = cfg.digits + 30;
    const BigFloat target = power_of_ten(-cfg.tol_digits, work);

    TermStream stream(spec, work);
    BigFloat S(work), t(work);
    std::vector<detail::Sample> samples;
    double next_sample = 100;
    long last_fit = 0;

    OracleResult best;
    bool have_best = false;
    auto keep = [&](OracleResult r) {
        if (!have_best || r.tail_bound < best.tail_bound) best = std::move(r);
        have_best = true;
    };

    const bool try_plain = cfg.mode != SumMode::Accelerated;
    const bool try_fit = cfg.mode != SumMode::Plain;

    for (long n = 1; n <= cfg.max_terms; ++n) {
        t = stream.next();
        S += t;
        const bool last = n == cfg.max_terms;
        if (n < static_cast<long>(next_sample) && !last) continue;
        while (next_sample <= n) next_sample = std::max(next_sample * 1.1, next_sample + 1);
        samples.push_back({n, S});
        if (n < 1000 && !last) continue;

        BigFloat plain = abs(t) * n * 2 / (d - 1);
        if (try_plain) {
            OracleResult r{S, S, plain, plain, n, SumMode::Plain};
            if (plain <= target) return r;
            keep(std::move(r));
        }
        if (try_fit && (last || n >= last_fit + last_fit / 2)) {
            last_fit = n;
            if (auto ex = detail::extrapolate(samples, d, J)) {
                OracleResult r{ex->value, S, ex->bound, plain, n, SumMode::Accelerated};
                // a margin below the target keeps the heuristic bound honest
                if (ex->bound * 100 <= target) return r;
                keep(std::move(r));
            }
        }
    }
    if (have_best && best.tail_bound <= target) return best;
    if (cfg.require_target || !have_best) {
        std::ostringstream msg;
        msg << spec.to_string() << ": tail bound ";
        msg << (have_best ? best.tail_bound.to_string(3) : std::string("n/a"));
        msg << " above 1e-" << cfg.tol_digits << " after " << cfg.max_terms << " terms";
        throw BudgetExceeded(msg.str());
    }
    return best;
}

}  // namespace hypereuler::oracle
