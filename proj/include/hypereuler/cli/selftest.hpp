#pragma once

// Self-test suites: the golden values, the standard-grid sweep and the exact
// invariants. Shared by the `selftest` subcommand and the acceptance binary.

#include "hypereuler/cli/sweep.hpp"

#include <chrono>
#include <functional>

namespace hypereuler::cli {

struct SuiteResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

namespace suites {

inline const char* kWorkedExample =
    "-(3/2)*zeta(5) - (1/2)*zeta(3)^2 + (5/4)*zeta(3) + (1/12)*pi^2*zeta(3) + (1/540)*pi^6"
    " - (11/1440)*pi^4 - (9/32)*pi^2 + 15/8";
inline const char* kShiftedExample =
    "(19/2)*zeta(5) + (3/2)*zeta(3)^2 + (15/2)*zeta(3) - (11/12)*pi^2*zeta(3) - (1/420)*pi^6"
    " - (43/1440)*pi^4 - (7/24)*pi^2 - 533/256";

template <class F>
SuiteResult timed(std::string name, F body) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{std::move(name), false, {}, 0};
    try {
        std::tie(r.ok, r.detail) = body();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Closed form vs a displayed expression (to 1e-25) and vs the oracle.
inline std::pair<bool, std::string> golden(const char* spec_text, const char* shown, const RunConfig& cfg) {
    const SumSpec spec = SumSpec::parse(spec_text);
    oracle::VerifyConfig vc = cfg.verify_config();
    vc.tol_digits = cfg.tol_digits.value_or(25);  // golden values are held to 1e-25 under any budget
    const auto rep = oracle::verify(spec, vc);
    const BigFloat displayed = eval_expr(parse_text(shown), cfg.digits, oracle::eval_atom);
    const BigFloat gap = abs(*rep.closed_numeric - displayed);
    const bool same = gap <= power_of_ten(-25, cfg.digits);
    const bool ok = same && rep.verdict == oracle::Verdict::Pass;
    std::ostringstream d;
    d << spec_text << ": |closed - displayed| = " << gap.to_string(2) << ", |closed - oracle| = " << rep.abs_err->to_string(2)
      << " (bound " << rep.oracle->tail_bound.to_string(2) << ", tol 1e-" << rep.tol_digits << ", "
      << rep.oracle->terms_used << " terms)";
    return {ok, d.str()};
}

inline SuiteResult golden_worked_example(const RunConfig& cfg) {
    return timed("golden value HyperBinom(2,5,2)", [&] { return golden("HyperBinom(2,5,2)", kWorkedExample, cfg); });
}

inline SuiteResult golden_shifted_example(const RunConfig& cfg) {
    return timed("golden value HyperShifted(2,4,5,2)", [&] { return golden("HyperShifted(2,4,5,2)", kShiftedExample, cfg); });
}

inline SuiteResult classical_anchors(const RunConfig& cfg) {
    return timed("classical anchors", [&]() -> std::pair<bool, std::string> {
        const unsigned D = std::max(cfg.digits, 60u);
        const bool es2 = euler_reduce(2) == ZetaExpr::zeta(3) * make_rational(2, 1);
        const BigFloat pi = BigFloat::pi(D);
        const BigFloat es3 = abs(eval_expr(euler_reduce(3), D, oracle::eval_atom) - pow(pi, 4) / 72);
        const BigFloat ne = eval_expr(forms::neg_euler(1, 2), D, oracle::eval_atom);
        const BigFloat expect = oracle::zeta_value(2, D) + oracle::zeta_value(3, D) - BigFloat(2, D);
        const BigFloat ne_gap = abs(ne - expect);
        // telescoping oracle: h_n^(-1) = -1/(n(n-1)) for n >= 2, so the series is 1 - sum_{m>=1} 1/(m (m+1)^3)
        oracle::OracleConfig oc;
        oc.digits = D;
        oc.max_terms = cfg.max_terms;
        oc.tol_digits = 40;
        oc.require_target = false;
        const auto direct = oracle::direct_sum(SumSpec::parse("NegEuler(1,2)"), oc);
        const BigFloat ne_oracle = abs(direct.value - ne);
        const BigFloat tight = power_of_ten(-40, D);
        const bool ok = es2 && es3 < tight && ne_gap < tight && ne_oracle <= direct.tail_bound + tight;
        std::ostringstream d;
        d << "zeta_H(2) = 2 zeta(3): " << (es2 ? "yes" : "no") << "; |zeta_H(3) - pi^4/72| = " << es3.to_string(2)
          << "; |neg_euler(1,2) - (zeta(2)+zeta(3)-2)| = " << ne_gap.to_string(2) << "; vs direct sum "
          << ne_oracle.to_string(2) << " (bound " << direct.tail_bound.to_string(2) << ")";
        return {ok, d.str()};
    });
}

inline SuiteResult oracle_sweep(const RunConfig& cfg, std::vector<Outcome>* keep = nullptr) {
    return timed("oracle-equivalence sweep", [&]() -> std::pair<bool, std::string> {
        std::vector<std::pair<Family, std::vector<long>>> pts;
        for (const auto& info : family_table())
            for (auto& p : grid_points(standard_grid(info.family))) pts.emplace_back(info.family, std::move(p));
        auto out = run_points(pts, cfg);
        const Summary s = summarize(out);
        long fast = 0, slow = 0;
        std::ostringstream fails;
        for (const auto& o : out) {
            if (o.status == "pass") (o.report->spec.is_slow() ? slow : fast)++;
            if (o.status == "fail") fails << ' ' << o.label;
        }
        std::ostringstream d;
        d << s.pass << " pass (" << fast << " fast, " << slow << " slow), " << s.fail << " fail, " << s.skipped
          << " not reducible by route, " << s.invalid << " outside preconditions";
        if (s.fail) d << "; failing:" << fails.str();
        if (keep) *keep = std::move(out);
        return {s.fail == 0 && s.pass >= 150, d.str()};
    });
}

inline SuiteResult finite_sum_duality() {
    return timed("finite-sum duality", []() -> std::pair<bool, std::string> {
        long checked = 0, bad = 0;
        for (long r = 1; r <= 5; ++r)
            for (long p = 1; p <= 4; ++p)
                for (long l = 0; l <= 4; ++l) {
                    ++checked;
                    if (forms::neg_finite_sum_1_closed(r, p, l) != forms::neg_finite_sum_1(r, p, l)) ++bad;
                    for (long k = 1; k < r; ++k) {
                        ++checked;
                        const Rational direct = forms::neg_finite_sum_2(r, k, p, l);
                        const Rational closed =
                            l == 0 ? forms::neg_finite_sum_2_closed_l0(r, k, p) : forms::neg_finite_sum_2_closed(r, k, p, l);
                        if (closed != direct) ++bad;
                    }
                }
        return {bad == 0, std::to_string(checked) + " exact comparisons, " + std::to_string(bad) + " mismatches (l = 0 uses the degenerate form)"};
    });
}

inline SuiteResult structural_consistency() {
    return timed("structural consistency", []() -> std::pair<bool, std::string> {
        using namespace forms;
        long checked = 0;
        std::ostringstream bad;
        auto check = [&](bool same, const std::string& what) {
            ++checked;
            if (!same) bad << ' ' << what;
        };
        auto reducible = [](auto f) {
            try {
                f();
                return true;
            } catch (const NotReducibleByThisRoute&) {
                return false;
            } catch (const InvalidParameter&) {
                return false;
            }
        };
        for (long r = 0; r <= 4; ++r)
            for (long p = r + 2; p <= r + 5; ++p)
                if (reducible([&] { hyper_binom(r + 1, p, 0); }))
                    check(hes(r, p) == hyper_binom(r + 1, p, 0), "hes" + forms::detail::args({r, p}));
        for (long r = 1; r <= 4; ++r)
            for (long p = 0; p <= 5; ++p)
                for (long l = 0; l <= 4; ++l)
                    if (reducible([&] { hyper_binom(r, p, l); }))
                        check(hyper_shifted(r, 0, p, l) == hyper_binom(r, p, l), "hyper_shifted" + forms::detail::args({r, 0, p, l}));
        for (long p = 2; p <= 10; ++p) check(hzs(p) == euler_reduce(p), "hzs" + forms::detail::args({p}));
        for (long r = 1; r <= 5; ++r)
            for (long p = 1; p <= 5; ++p)
                check(neg_hyper_binom(r, p, 0) == neg_euler(r, p), "neg_hyper_binom" + forms::detail::args({r, p, 0}));
        // numeric symmetry of the pair family
        for (long r = 1; r <= 3; ++r)
            for (long q = r + 1; q <= 4; ++q)
                for (long p = 2; p <= 6; ++p)
                    for (long l = 0; l <= 2; ++l) {
                        if (p + l < r + q || !reducible([&] { hyper_pair_binom(r, q, p, l); }) ||
                            !reducible([&] { hyper_pair_binom(q, r, p, l); }))
                            continue;
                        const BigFloat a = eval_expr(hyper_pair_binom(r, q, p, l), 50, oracle::eval_atom);
                        const BigFloat b = eval_expr(hyper_pair_binom(q, r, p, l), 50, oracle::eval_atom);
                        check(abs(a - b) < power_of_ten(-40, 50), "pair symmetry" + forms::detail::args({r, q, p, l}));
                    }
        // permitted atoms over the standard grid
        for (const auto& info : family_table())
            for (const auto& pt : grid_points(standard_grid(info.family))) {
                std::optional<ZetaExpr> e;
                try {
                    e = closed_form(SumSpec::make(info.family, pt));
                } catch (const InvalidParameter&) {
                } catch (const NotReducibleByThisRoute&) {
                }
                if (e) check(atoms_permitted(info.family, *e), "atoms of " + label_of(info.family, pt));
            }
        const std::string b = bad.str();
        return {b.empty(), std::to_string(checked) + " checks" + (b.empty() ? "" : "; mismatches:" + b)};
    });
}

inline SuiteResult exact_core_identities() {
    return timed("exact-core identities", []() -> std::pair<bool, std::string> {
        long checked = 0, bad = 0;
        for (long n = 1; n <= 30; ++n)
            for (long r = 1; r <= 8; ++r) {
                ++checked;
                if (hyperharmonic(n, r) != Rational(binomial(n + r - 1, r - 1)) * (harmonic(n + r - 1) - harmonic(r - 1))) ++bad;
            }
        for (long n = 1; n <= 20; ++n)
            for (long r = -3; r <= 6; ++r)
                for (long m = 0; m <= r + 3; ++m) {
                    Rational rhs = 0;
                    for (long k = 0; k <= std::min(n, m); ++k)
                        rhs += Rational(binomial(m, k) * sign_power(k)) * hyperharmonic_any(n - k, r);
                    ++checked;
                    if (hyperharmonic_any(n, r - m) != rhs) ++bad;
                }
        for (long r = 0; r <= 4; ++r)
            for (long n = 1; n <= 15; ++n)
                for (long k = 0; k <= n; ++k) {
                    ++checked;
                    if (r_stirling1(n, k, r) != r_stirling1(n - 1, k - 1, r) + Integer(n - 1 + r) * r_stirling1(n - 1, k, r)) ++bad;
                }
        return {bad == 0, std::to_string(checked) + " exact identities (closed form of h_n^(r), order downshift, r-Stirling recurrence), " +
                              std::to_string(bad) + " mismatches"};
    });
}

inline SuiteResult formula_audit(const RunConfig& cfg) {
    return timed("formula audit", [&]() -> std::pair<bool, std::string> {
        const auto& ledger = oracle::typo_ledger();
        long corrected = 0;
        for (const auto& e : ledger) corrected += e.status == "corrected";
        // H2(2) against (17/4) zeta(4) and against direct summation
        const unsigned D = std::max(cfg.digits, 50u);
        const BigFloat closed = eval_expr(forms::closed_form(SumSpec::parse("H2(2)")), D, oracle::eval_atom);
        const BigFloat classical = oracle::zeta_value(4, D) * make_rational(17, 4);
        oracle::OracleConfig oc;
        oc.digits = D;
        oc.max_terms = cfg.max_terms;
        oc.tol_digits = 20;
        const auto direct = oracle::direct_sum(SumSpec::parse("H2(2)"), oc);
        const BigFloat gap = abs(closed - classical), gap_direct = abs(direct.value - classical);
        const BigFloat tol = power_of_ten(-20, D);
        const bool ok = !ledger.empty() && gap < tol && gap_direct <= direct.tail_bound + tol;
        std::ostringstream d;
        d << ledger.size() << " ledger entries (" << corrected << " corrected); H2(2) - (17/4) zeta(4) = " << gap.to_string(2)
          << ", direct sum - (17/4) zeta(4) = " << gap_direct.to_string(2) << " (bound " << direct.tail_bound.to_string(2) << ")";
        return {ok, d.str()};
    });
}

inline SuiteResult oracle_invariants(const RunConfig& cfg) {
    return timed("oracle invariants", [&]() -> std::pair<bool, std::string> {
        std::ostringstream bad;
        long checked = 0;
        // monotone refinement in plain mode
        for (const char* s : {"InvBinom(1,1)", "HBinom(2,1)", "NegEuler(2,1)", "H2(2)"}) {
            std::optional<BigFloat> prev;
            for (long n = 1000; n <= cfg.max_terms && n <= 64000; n *= 4) {
                oracle::OracleConfig oc;
                oc.digits = cfg.digits;
                oc.max_terms = n;
                oc.tol_digits = 60;
                oc.mode = oracle::SumMode::Plain;
                oc.require_target = false;
                const auto r = oracle::direct_sum(SumSpec::parse(s), oc);
                ++checked;
                if (prev && r.tail_bound > *prev) bad << " monotone:" << s;
                prev = r.tail_bound;
            }
        }
        // telescoping limits within the bound
        for (auto [s, num, den] : std::vector<std::tuple<const char*, long, long>>{{"InvBinom(1,1)", 1, 1}, {"InvTwoShiftBinom(1,1,2,0)", 1, 4}}) {
            for (auto mode : {oracle::SumMode::Plain, oracle::SumMode::Accelerated}) {
                oracle::OracleConfig oc;
                oc.digits = cfg.digits;
                oc.max_terms = cfg.max_terms;
                oc.tol_digits = 25;
                oc.mode = mode;
                oc.require_target = false;
                const auto r = oracle::direct_sum(SumSpec::parse(s), oc);
                ++checked;
                if (abs(r.value - BigFloat(make_rational(num, den), cfg.digits)) > r.tail_bound) bad << " telescoping:" << s;
            }
        }
        // exact terms against the floating stream
        for (const char* s : {"HyperBinom(2,5,2)", "NegHyperBinom(3,2,1)", "HurwitzSeries(3,2)", "ShiftedHTop(5,2,1)"}) {
            const SumSpec spec = SumSpec::parse(s);
            const unsigned D = cfg.digits + 20;
            oracle::TermStream stream(spec, D);
            BigFloat floating(D);
            Rational exact = 0, zc = 0;
            for (long n = 1; n <= 200; ++n) {
                floating += stream.next();
                const auto t = oracle::term(spec, n);
                exact += t.value;
                zc += t.zeta_coeff;
            }
            BigFloat rec(exact, D);
            if (zc != 0) rec += oracle::zeta_value(spec[0], D) * BigFloat(zc, D);
            ++checked;
            if (abs(rec - floating) > power_of_ten(-static_cast<long>(cfg.digits), D)) bad << " term:" << s;
        }
        // precision soundness: same verdicts at 40 and at the configured precision
        for (const char* s : {"HyperBinom(3,4,2)", "HyperHBinom(2,3,1)", "InvTwoShiftBinom(3,2,2,2)", "XuLiShifted(2,4)"}) {
            RunConfig lo = cfg;
            lo.digits = 40;
            if (!lo.tol_digits || *lo.tol_digits + 10 > 40) lo.tol_digits = std::min(oracle::default_tolerance(SumSpec::parse(s), cfg.max_terms), 30);
            RunConfig hi = cfg;
            hi.tol_digits = lo.tol_digits;
            ++checked;
            const auto a = run_point(SumSpec::parse(s).family(), SumSpec::parse(s).params(), lo);
            const auto b = run_point(SumSpec::parse(s).family(), SumSpec::parse(s).params(), hi);
            if (a.status != b.status) bad << " precision:" << s;
        }
        const std::string b = bad.str();
        return {b.empty(), std::to_string(checked) + " checks" + (b.empty() ? "" : "; failing:" + b)};
    });
}

}  // namespace suites

/// Every suite in a fixed order.
inline std::vector<SuiteResult> run_selftest(const RunConfig& cfg, std::vector<Outcome>* sweep = nullptr) {
    std::vector<SuiteResult> out;
    out.push_back(suites::golden_worked_example(cfg));
    out.push_back(suites::golden_shifted_example(cfg));
    out.push_back(suites::classical_anchors(cfg));
    out.push_back(suites::oracle_sweep(cfg, sweep));
    out.push_back(suites::finite_sum_duality());
    out.push_back(suites::structural_consistency());
    out.push_back(suites::exact_core_identities());
    out.push_back(suites::formula_audit(cfg));
    out.push_back(suites::oracle_invariants(cfg));
    return out;
}

}  // namespace hypereuler::cli
