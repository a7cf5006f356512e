#pragma once

// General terms of every series family: exactly (through exact-core) and as a
// floating stream driven by its own running recurrences. The stream never
// touches the closed forms or the exact caches, so it serves as independent
// ground truth.

#include "hypereuler/exact/combinatorics.hpp"
#include "hypereuler/numeric/bigfloat.hpp"
#include "hypereuler/oracle/zeta.hpp"
#include "hypereuler/sum_spec.hpp"

#include <vector>

namespace hypereuler::oracle {

/// Exact n-th term. For the Hurwitz family the term is
/// value + zeta_coeff * zeta(p); zeta_coeff is 0 for every other family.
struct ExactTerm {
    Rational value;
    Rational zeta_coeff;
};

/// Exact general term; indices below a shifted family's range give 0.
inline ExactTerm term(const SumSpec& spec, long n) {
    if (n < 1) throw InvalidParameter("term index must be >= 1");
    const auto& v = spec.params();
    auto binom_inv = [](long top, long l) -> Rational { return 1 / Rational(binomial(top + l, l)); };
    auto inv = [](long x, long p) -> Rational { return inverse_power(x, p); };
    const Rational Hn = harmonic(n);
    switch (spec.family()) {
        case Family::InvBinom: return {inv(n, v[0]) * binom_inv(n, v[1]), 0};
        case Family::InvShiftBinom: return {inv(n, v[0]) * inv(n + v[1], 1) * binom_inv(n, v[2]), 0};
        case Family::InvTwoShiftBinom: return {inv(n, v[0]) * inv(n + v[1], 1) * inv(n + v[2], 1) * binom_inv(n, v[3]), 0};
        case Family::HBinom: return {Hn * inv(n, v[0]) * binom_inv(n, v[1]), 0};
        case Family::HShiftBinom: return {Hn * inv(n, v[0]) * inv(n + v[1], 1) * binom_inv(n, v[2]), 0};
        case Family::HLinear: return {Hn * inv(n, v[0]) * inv(n + v[1], 1), 0};
        case Family::H2: return {Hn * Hn * inv(n, v[0]), 0};
        case Family::H2Linear: return {Hn * Hn * inv(n, 1) * inv(n + v[0], 1), 0};
        case Family::H2Binom: return {Hn * Hn * inv(n, v[0]) * binom_inv(n, v[1]), 0};
        case Family::Mu: return {inv(n, v[0]) * inv(n + v[1], 1), 0};
        case Family::EulerLinR1: return {Hn * inv(n, v[0]), 0};
        case Family::Hes: return {hyperharmonic(n, v[0] + 1) * inv(n, v[1]), 0};
        case Family::NegEuler: return {hyperharmonic_neg(n, v[0]) * inv(n, v[1]), 0};
        case Family::HyperBinom: return {hyperharmonic(n, v[0]) * inv(n, v[1]) * binom_inv(n, v[2]), 0};
        case Family::NegHyperBinom: return {hyperharmonic_neg(n, v[0]) * inv(n, v[1]) * binom_inv(n, v[2]), 0};
        case Family::HyperShifted:
            return {hyperharmonic_any(n, v[0]) * inv(n + v[1], v[2]) * binom_inv(n + v[1], v[3]), 0};
        case Family::HyperHBinom: return {hyperharmonic(n, v[0]) * Hn * inv(n, v[1]) * binom_inv(n, v[2]), 0};
        case Family::HyperLinearBinom:
            return {hyperharmonic(n, v[0]) * inv(n, v[1]) * inv(n + v[2], 1) * binom_inv(n, v[3]), 0};
        case Family::HyperPairBinom:
            return {hyperharmonic(n, v[0]) * hyperharmonic(n, v[1]) * inv(n, v[2]) * binom_inv(n, v[3]), 0};
        case Family::HurwitzSeries: {
            // zeta(p, n) = zeta(p) - H_{n-1}^(p)
            const Rational w = inv(v[1] + n, 1);
            return {-harmonic(n - 1, v[0]) * w, w};
        }
        case Family::ShiftedHBinom:
            if (n <= v[1]) return {0, 0};
            return {Hn * inv(n - v[1], v[0]) * binom_inv(n, v[2]), 0};
        case Family::ShiftedHTop:
            if (n <= v[1] + v[2]) return {0, 0};
            return {Rational(binomial(n, v[1])) * Hn * inv(n - v[1] - v[2], v[0]), 0};
        case Family::XuLiShifted:
            if (n <= v[1]) return {0, 0};
            return {Hn * inv(n - v[1], v[0]), 0};
    }
    throw InvalidParameter("unknown family");
}

/// Floating terms t_1, t_2, ... of one series at a fixed working precision.
class TermStream {
public:
    TermStream(const SumSpec& spec, unsigned digits)
        : spec_(spec), digits_(digits), one_(1, digits), h1_(digits), hp_(digits), zeta_p_(digits) {
        const auto& v = spec.params();
        switch (spec.family()) {
            case Family::Hes: order_ = v[0] + 1; break;
            case Family::HyperBinom:
            case Family::HyperHBinom:
            case Family::HyperLinearBinom: order_ = v[0]; break;
            case Family::HyperPairBinom: order_ = std::max(v[0], v[1]); break;
            case Family::HyperShifted: order_ = std::max(v[0], 0L); break;
            case Family::HurwitzSeries: zeta_p_ = zeta_value(v[0], digits); break;
            default: break;
        }
        hyp_.assign(static_cast<std::size_t>(order_ + 1), BigFloat(digits));
    }

    long index() const { return n_; }

    /// Advances to the next index and returns its term.
    BigFloat next() {
        ++n_;
        const long n = n_;
        const BigFloat inv_n = one_ / n;
        h1_ += inv_n;
        if (order_ >= 1) {
            hyp_[1] = h1_;
            for (long k = 2; k <= order_; ++k) hyp_[k] += hyp_[k - 1];
        }
        const auto& v = spec_.params();
        switch (spec_.family()) {
            case Family::InvBinom: return ipow(inv_n, v[0]) / binom(n, v[1]);
            case Family::InvShiftBinom: return ipow(inv_n, v[0]) / (binom(n, v[2]) * (n + v[1]));
            case Family::InvTwoShiftBinom: return ipow(inv_n, v[0]) / (binom(n, v[3]) * (n + v[1]) * (n + v[2]));
            case Family::HBinom: return h1_ * ipow(inv_n, v[0]) / binom(n, v[1]);
            case Family::HShiftBinom: return h1_ * ipow(inv_n, v[0]) / (binom(n, v[2]) * (n + v[1]));
            case Family::HLinear: return h1_ * ipow(inv_n, v[0]) / (n + v[1]);
            case Family::H2: return h1_ * h1_ * ipow(inv_n, v[0]);
            case Family::H2Linear: return h1_ * h1_ * inv_n / (n + v[0]);
            case Family::H2Binom: return h1_ * h1_ * ipow(inv_n, v[0]) / binom(n, v[1]);
            case Family::Mu: return ipow(inv_n, v[0]) / (n + v[1]);
            case Family::EulerLinR1: return h1_ * ipow(inv_n, v[0]);
            case Family::Hes: return hyp_[order_] * ipow(inv_n, v[1]);
            case Family::NegEuler: return neg_order(n, v[0]) * ipow(inv_n, v[1]);
            case Family::HyperBinom: return hyp_[v[0]] * ipow(inv_n, v[1]) / binom(n, v[2]);
            case Family::NegHyperBinom: return neg_order(n, v[0]) * ipow(inv_n, v[1]) / binom(n, v[2]);
            case Family::HyperShifted: {
                const long r = v[0];
                BigFloat h = r >= 1 ? hyp_[r] : (r == 0 ? inv_n : neg_order(n, -r));
                return h * ipow(one_ / (n + v[1]), v[2]) / binom(n + v[1], v[3]);
            }
            case Family::HyperHBinom: return hyp_[v[0]] * h1_ * ipow(inv_n, v[1]) / binom(n, v[2]);
            case Family::HyperLinearBinom: return hyp_[v[0]] * ipow(inv_n, v[1]) / (binom(n, v[3]) * (n + v[2]));
            case Family::HyperPairBinom: return hyp_[v[0]] * hyp_[v[1]] * ipow(inv_n, v[2]) / binom(n, v[3]);
            case Family::HurwitzSeries: {
                BigFloat t = (zeta_p_ - hp_) / (n + v[1]);
                hp_ += ipow(inv_n, v[0]);  // now H_n^(p)
                return t;
            }
            case Family::ShiftedHBinom:
                if (n <= v[1]) return BigFloat(digits_);
                return h1_ * ipow(one_ / (n - v[1]), v[0]) / binom(n, v[2]);
            case Family::ShiftedHTop:
                if (n <= v[1] + v[2]) return BigFloat(digits_);
                return falling_binom(n, v[1]) * h1_ * ipow(one_ / (n - v[1] - v[2]), v[0]);
            case Family::XuLiShifted:
                if (n <= v[1]) return BigFloat(digits_);
                return h1_ * ipow(one_ / (n - v[1]), v[0]);
        }
        throw InvalidParameter("unknown family");
    }

private:
    static BigFloat ipow(const BigFloat& x, long e) {
        BigFloat out(1, x.digits());
        BigFloat base = x;
        while (e > 0) {
            if (e & 1) out *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return out;
    }

    // C(n+l, l) = prod_{i=1}^l (n+i)/i
    BigFloat binom(long n, long l) const {
        BigFloat out = one_;
        for (long i = 1; i <= l; ++i) {
            out *= (n + i);
            out /= i;
        }
        return out;
    }

    // C(n, q) = prod_{i=0}^{q-1} (n-i)/(i+1)
    BigFloat falling_binom(long n, long q) const {
        BigFloat out = one_;
        for (long i = 0; i < q; ++i) {
            out *= (n - i);
            out /= (i + 1);
        }
        return out;
    }

    // h_n^(-r): (-1)^r / ((n-r) C(n,r)) for n > r, a short alternating sum otherwise.
    BigFloat neg_order(long n, long r) const {
        if (n > r) {
            BigFloat d = falling_binom(n, r) * (n - r);
            return (r % 2 == 0 ? one_ : -one_) / d;
        }
        BigFloat out(digits_);
        BigFloat c = one_;  // C(r,k)
        for (long k = 0; k <= n - 1; ++k) {
            BigFloat t = c / (n - k);
            if (k % 2) out -= t; else out += t;
            c *= (r - k);
            c /= (k + 1);
        }
        return out;
    }

    SumSpec spec_;
    unsigned digits_;
    long n_ = 0;
    long order_ = 0;
    BigFloat one_;
    BigFloat h1_;
    BigFloat hp_;      // H_{n-1}^(p), Hurwitz family only
    BigFloat zeta_p_;  // zeta(p), Hurwitz family only
    std::vector<BigFloat> hyp_;  // hyp_[k] = h_n^(k)
};

}  // namespace hypereuler::oracle
