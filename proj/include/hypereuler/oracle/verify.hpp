#pragma once

// Closed form against brute force for one series.

#include "hypereuler/algebra/evaluate.hpp"
#include "hypereuler/algebra/render.hpp"
#include "hypereuler/forms/closed_form.hpp"
#include "hypereuler/oracle/direct_sum.hpp"

#include <optional>

namespace hypereuler::oracle {

enum class Verdict { Pass, Fail, Skipped };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

struct VerifyConfig {
    unsigned digits = 60;
    long max_terms = 200000;
    std::optional<int> tol_digits;  // unset: the default table below
    SumMode mode = SumMode::Auto;
};

/// Budgets below this many terms use the relaxed fast-family tolerance.
inline constexpr long kRelaxedBelow = 10000;

/// Default tolerance (decimal digits) for a series:
///   decay >= 3: 25, or 20 when max_terms < kRelaxedBelow;
///   decay <  3: 8.
inline int default_tolerance(const SumSpec& spec, long max_terms) {
    if (spec.is_slow()) return 8;
    return max_terms < kRelaxedBelow ? 20 : 25;
}

inline int tolerance_for(const SumSpec& spec, const VerifyConfig& cfg) {
    return cfg.tol_digits ? *cfg.tol_digits : default_tolerance(spec, cfg.max_terms);
}

struct VerificationReport {
    SumSpec spec;
    std::string anchor;
    std::string closed_form;  // text rendering; empty when skipped
    std::optional<BigFloat> closed_numeric;
    std::optional<OracleResult> oracle;
    std::optional<BigFloat> abs_err;
    int tol_digits = 0;
    Verdict verdict = Verdict::Skipped;
    std::string reason;
};

/// Evaluates the closed form and the direct sum and compares them:
/// pass iff |closed - oracle| <= tail_bound + 10^-tol.
/// A closed form that is not reducible by its route gives a skipped report;
/// InvalidParameter and BudgetExceeded propagate.
inline VerificationReport verify(const SumSpec& spec, const VerifyConfig& cfg = {}) {
    VerificationReport rep{spec, spec.info().anchor, {}, {}, {}, {}, tolerance_for(spec, cfg), Verdict::Skipped, {}};
    if (cfg.digits < static_cast<unsigned>(rep.tol_digits + 10))
        throw InvalidParameter("precision " + std::to_string(cfg.digits) + " below tolerance + 10 = " +
                               std::to_string(rep.tol_digits + 10));
    ZetaExpr closed;
    try {
        closed = forms::closed_form(spec);
    } catch (const NotReducibleByThisRoute& e) {
        rep.reason = e.what();
        return rep;
    }
    rep.closed_form = render(closed, Format::Text);
    const BigFloat value = eval_expr(closed, cfg.digits, eval_atom);

    OracleConfig oc;
    oc.digits = cfg.digits;
    oc.max_terms = cfg.max_terms;
    oc.tol_digits = rep.tol_digits;
    oc.mode = cfg.mode;
    OracleResult res = direct_sum(spec, oc);

    const BigFloat err = abs(value - res.value);
    const BigFloat allowed = res.tail_bound + power_of_ten(-rep.tol_digits, cfg.digits);
    rep.verdict = err <= allowed ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Fail) rep.reason = "closed form and direct sum disagree beyond the tail bound";
    rep.closed_numeric = value;
    rep.abs_err = err;
    rep.oracle = std::move(res);
    return rep;
}

}  // namespace hypereuler::oracle
