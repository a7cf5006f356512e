#pragma once

#include "hypereuler/forms/shifted.hpp"
#include "hypereuler/sum_spec.hpp"

namespace hypereuler::forms {

/// Closed form of the series described by `spec`. Throws
/// NotReducibleByThisRoute when the series converges but the route would need
/// zeta(1) or a divergent Euler sum.
inline ZetaExpr closed_form(const SumSpec& spec) {
    const auto& v = spec.params();
    switch (spec.family()) {
        case Family::InvBinom: return inv_binom(v[0], v[1]);
        case Family::InvShiftBinom: return inv_shift_binom(v[0], v[1], v[2]);
        case Family::InvTwoShiftBinom: return inv_two_shift_binom(v[0], v[1], v[2], v[3]);
        case Family::HBinom: return h_binom(v[0], v[1]);
        case Family::HShiftBinom: return h_shift_binom(v[0], v[1], v[2]);
        case Family::HLinear: return h_linear(v[0], v[1]);
        case Family::H2: return h2(v[0]);
        case Family::H2Linear: return h2_linear(v[0]);
        case Family::H2Binom: return h2_binom(v[0], v[1]);
        case Family::Mu: return mu(v[0], v[1]);
        case Family::EulerLinR1: return euler_reduce(v[0]);
        case Family::Hes: return hes(v[0], v[1]);
        case Family::NegEuler: return neg_euler(v[0], v[1]);
        case Family::HyperBinom: return hyper_binom(v[0], v[1], v[2]);
        case Family::NegHyperBinom: return neg_hyper_binom(v[0], v[1], v[2]);
        case Family::HyperShifted: return hyper_shifted(v[0], v[1], v[2], v[3]);
        case Family::HyperHBinom: return hyper_h_binom(v[0], v[1], v[2]);
        case Family::HyperLinearBinom: return hyper_linear_binom(v[0], v[1], v[2], v[3]);
        case Family::HyperPairBinom: return hyper_pair_binom(v[0], v[1], v[2], v[3]);
        case Family::HurwitzSeries: return hurwitz_series(v[0], v[1]);
        case Family::ShiftedHBinom: return shifted_h_binom(v[0], v[1], v[2]);
        case Family::ShiftedHTop: return shifted_h_top(v[0], v[1], v[2]);
        case Family::XuLiShifted: return xu_li_shifted(v[0], v[1]);
    }
    throw InvalidParameter("unknown family");
}

/// Atoms a family's result may contain: zeta values only, or zeta values and
/// zeta_{H^(2)}(p).
inline bool allows_euler_lin(Family f) {
    switch (f) {
        case Family::H2:
        case Family::H2Linear:
        case Family::H2Binom:
        case Family::HyperHBinom:
        case Family::HyperPairBinom:
            return true;
        default:
            return false;
    }
}

inline bool atoms_permitted(Family f, const ZetaExpr& e) {
    for (const auto& a : e.atoms()) {
        if (a.is_zeta()) continue;
        if (!allows_euler_lin(f) || a.first() != 2) return false;
    }
    return true;
}

}  // namespace hypereuler::forms
