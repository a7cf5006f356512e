#include "hypereuler/oracle/audit.hpp"

#include <gtest/gtest.h>

using namespace hypereuler;
using namespace hypereuler::oracle;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

BigFloat closed_value(const char* spec, unsigned digits = 60) {
    return eval_expr(forms::closed_form(SumSpec::parse(spec)), digits, eval_atom);
}

OracleConfig config(long max_terms, int tol, SumMode mode, bool strict = true) {
    OracleConfig c;
    c.max_terms = max_terms;
    c.tol_digits = tol;
    c.mode = mode;
    c.require_target = strict;
    return c;
}

// Accelerated limit of sum f(n) through the same fit the oracle uses.
template <class F>
BigFloat limit_of(F f, long d, long J, long N = 20000, unsigned digits = 80) {
    std::vector<oracle::detail::Sample> samples;
    BigFloat S(digits);
    double next = 100;
    for (long n = 1; n <= N; ++n) {
        S += f(n, digits);
        if (n >= static_cast<long>(next)) {
            samples.push_back({n, S});
            next = std::max(next * 1.1, next + 1);
        }
    }
    return oracle::detail::extrapolate(samples, d, J)->value;
}

}  // namespace

TEST(Term, Examples) {
    EXPECT_EQ(term(SumSpec::parse("HyperBinom(2,5,2)"), 1).value, q(1, 3));
    EXPECT_EQ(term(SumSpec::parse("NegEuler(1,2)"), 1).value, q(1));
    EXPECT_EQ(term(SumSpec::parse("XuLiShifted(2,1)"), 1).value, q(0));
    const ExactTerm h = term(SumSpec::parse("HurwitzSeries(2,1)"), 3);  // (zeta(2) - 1 - 1/4)/4
    EXPECT_EQ(h.value, q(-5, 16));
    EXPECT_EQ(h.zeta_coeff, q(1, 4));
    EXPECT_THROW(term(SumSpec::parse("Mu(2,1)"), 0), InvalidParameter);
}

TEST(Term, StreamMatchesExactPartialSums) {
    const char* specs[] = {"InvBinom(2,3)",         "InvShiftBinom(1,2,2)",   "InvTwoShiftBinom(2,1,3,1)",
                           "HBinom(2,2)",           "HShiftBinom(1,3,1)",     "HLinear(2,3)",
                           "H2(3)",                 "H2Linear(2)",            "H2Binom(1,2)",
                           "Mu(3,2)",               "EulerLinR1(3)",          "Hes(2,5)",
                           "NegEuler(3,2)",         "HyperBinom(3,4,1)",      "NegHyperBinom(4,1,2)",
                           "HyperShifted(-2,3,2,1)", "HyperShifted(0,2,2,1)", "HyperShifted(3,1,4,2)",
                           "HyperHBinom(2,3,2)",    "HyperLinearBinom(3,4,2,1)", "HyperPairBinom(2,3,6,1)",
                           "HurwitzSeries(3,2)",    "ShiftedHBinom(2,3,2)",   "ShiftedHTop(5,2,1)",
                           "XuLiShifted(3,4)"};
    const unsigned digits = 80;
    for (const char* s : specs) {
        const SumSpec spec = SumSpec::parse(s);
        TermStream stream(spec, digits);
        BigFloat floating(digits);
        Rational exact = 0, zc = 0;
        for (long n = 1; n <= 200; ++n) {
            floating += stream.next();
            const ExactTerm t = term(spec, n);
            exact += t.value;
            zc += t.zeta_coeff;
        }
        BigFloat recomputed(exact, digits);
        if (zc != 0) recomputed += zeta_value(spec[0], digits) * BigFloat(zc, digits);
        EXPECT_LT(abs(floating - recomputed), power_of_ten(-70, digits)) << s;
    }
}

TEST(DirectSum, Examples) {
    const auto inv = direct_sum(SumSpec::parse("InvBinom(1,1)"), config(100000, 25, SumMode::Auto));
    EXPECT_LE(abs(inv.value - BigFloat(1, 60)), inv.tail_bound);
    const auto mu = direct_sum(SumSpec::parse("Mu(2,1)"), config(100000, 25, SumMode::Auto));
    EXPECT_LE(abs(mu.value - (zeta_value(2, 60) - BigFloat(1, 60))), mu.tail_bound);
    const auto gold = direct_sum(SumSpec::parse("HyperBinom(2,5,2)"), config(100000, 25, SumMode::Auto));
    EXPECT_LE(abs(gold.value - closed_value("HyperBinom(2,5,2)")), gold.tail_bound + power_of_ten(-25, 60));
    EXPECT_GE(gold.terms_used, 1000);
}

TEST(DirectSum, PlainModeIsMonotone) {
    for (const char* s : {"InvBinom(1,1)", "HBinom(2,1)", "NegEuler(2,1)", "H2(2)", "ShiftedHTop(4,1,0)"}) {
        const SumSpec spec = SumSpec::parse(s);
        BigFloat previous(0, 60);
        bool first = true;
        for (long n : {1000L, 2000L, 5000L, 20000L, 50000L}) {
            const auto r = direct_sum(spec, config(n, 60, SumMode::Plain, false));
            EXPECT_EQ(r.mode, SumMode::Plain);
            EXPECT_EQ(r.terms_used, n);
            if (!first) EXPECT_LE(r.tail_bound, previous) << s << " at " << n;
            previous = r.tail_bound;
            first = false;
        }
    }
}

TEST(DirectSum, TelescopingLimitsWithinBound) {
    struct Case {
        const char* spec;
        Rational limit;
    };
    for (const Case& c : {Case{"InvBinom(1,1)", q(1)}, Case{"InvTwoShiftBinom(1,1,2,0)", q(1, 4)},
                          Case{"InvBinom(1,2)", q(1, 2)}, Case{"Mu(1,2)", q(3, 4)}}) {
        const BigFloat exact(c.limit, 60);
        for (SumMode mode : {SumMode::Plain, SumMode::Accelerated, SumMode::Auto})
            for (long n : {1000L, 10000L, 100000L}) {
                const auto r = direct_sum(SumSpec::parse(c.spec), config(n, 25, mode, false));
                EXPECT_LE(abs(r.value - exact), r.tail_bound) << c.spec << ' ' << to_string(mode) << ' ' << n;
                EXPECT_LE(abs(r.partial_sum - exact), r.plain_bound) << c.spec << ' ' << n;
            }
    }
}

TEST(DirectSum, Deterministic) {
    const SumSpec spec = SumSpec::parse("HyperPairBinom(2,1,3,1)");
    const auto a = direct_sum(spec, config(200000, 25, SumMode::Auto));
    const auto b = direct_sum(spec, config(200000, 25, SumMode::Auto));
    EXPECT_EQ(a.value.to_string(80), b.value.to_string(80));
    EXPECT_EQ(a.tail_bound.to_string(20), b.tail_bound.to_string(20));
    EXPECT_EQ(a.terms_used, b.terms_used);
}

TEST(DirectSum, BudgetAndConfigErrors) {
    EXPECT_THROW(direct_sum(SumSpec::parse("H2(2)"), config(5000, 25, SumMode::Plain)), BudgetExceeded);
    EXPECT_THROW(direct_sum(SumSpec::parse("H2(2)"), config(500, 8, SumMode::Auto)), InvalidParameter);
}

TEST(Extrapolation, DegenerateBranchesMatchSeries) {
    const unsigned D = 80;
    auto tol = power_of_ten(-30, D);
    for (long j = 1; j <= 4; ++j) {
        // B1(j,j) = sum 1/(n+j)^2; B2(j,j) = sum H_n/(n+j)^2; B3(j,j) = sum 1/(n+j)^3
        BigFloat b1 = limit_of([j](long n, unsigned d) { return BigFloat(1, d) / pow(BigFloat(n + j, d), 2); }, 2, 0);
        BigFloat h(D);
        long hn = 0;
        BigFloat b2 = limit_of(
            [&](long n, unsigned d) {
                for (; hn < n; ++hn) h += BigFloat(1, d) / (hn + 1);
                return h / pow(BigFloat(n + j, d), 2);
            },
            2, 1);
        BigFloat b3 = limit_of([j](long n, unsigned d) { return BigFloat(1, d) / pow(BigFloat(n + j, d), 3); }, 3, 0);
        EXPECT_LT(abs(b1 - eval_expr(forms::b1(j, j), D, eval_atom)), tol) << j;
        EXPECT_LT(abs(b2 - eval_expr(forms::b2(j, j), D, eval_atom)), tol) << j;
        EXPECT_LT(abs(b3 - eval_expr(forms::b3(j, j), D, eval_atom)), tol) << j;
        // non-degenerate neighbours
        const long s = j + 1;
        BigFloat b1s = limit_of([j, s](long n, unsigned d) { return BigFloat(1, d) / (BigFloat(n + j, d) * (n + s)); }, 2, 0);
        EXPECT_LT(abs(b1s - eval_expr(forms::b1(s, j), D, eval_atom)), tol) << j;
    }
}

TEST(Verify, Examples) {
    for (const char* s : {"HyperBinom(2,5,2)", "HyperShifted(2,4,5,2)", "EulerLinR1(2)", "Mu(3,2)", "H2(2)"}) {
        const auto rep = verify(SumSpec::parse(s));
        EXPECT_EQ(rep.verdict, Verdict::Pass) << s << ": " << rep.reason;
        ASSERT_TRUE(rep.abs_err.has_value());
    }
    VerifyConfig strict;
    strict.tol_digits = 25;
    EXPECT_EQ(verify(SumSpec::parse("HyperBinom(2,5,2)"), strict).tol_digits, 25);
    EXPECT_EQ(verify(SumSpec::parse("HyperBinom(2,5,2)"), strict).verdict, Verdict::Pass);
    EXPECT_EQ(verify(SumSpec::parse("H2(2)"), strict).verdict, Verdict::Pass);
}

TEST(Verify, SkipsAndRejects) {
    const auto rep = verify(SumSpec::parse("HyperBinom(2,1,2)"));
    EXPECT_EQ(rep.verdict, Verdict::Skipped);
    EXPECT_FALSE(rep.reason.empty());
    EXPECT_THROW(SumSpec::parse("Hes(1,2)"), InvalidParameter);
    VerifyConfig low;
    low.digits = 20;
    EXPECT_THROW(verify(SumSpec::parse("Mu(3,2)"), low), InvalidParameter);
}

TEST(Verify, WrongClosedFormFails) {
    // the printed quadratic reduction must not pass against the oracle
    const SumSpec spec = SumSpec::parse("H2(2)");
    const BigFloat printed = eval_expr(forms::h2_as_printed(2), 60, eval_atom);
    const auto r = direct_sum(spec, config(200000, 25, SumMode::Auto));
    EXPECT_GT(abs(printed - r.value), r.tail_bound + power_of_ten(-25, 60));
}

TEST(Verify, PrecisionSoundness) {
    const char* grid[] = {"InvBinom(2,2)", "HBinom(1,3)", "H2Binom(2,2)", "Hes(1,4)", "NegEuler(2,2)",
                          "HyperBinom(3,4,2)", "NegHyperBinom(3,2,1)", "HyperShifted(-1,2,2,2)", "HyperHBinom(2,3,1)",
                          "HyperLinearBinom(2,3,2,1)", "HyperPairBinom(2,2,4,1)", "HurwitzSeries(4,3)",
                          "ShiftedHBinom(3,2,1)", "ShiftedHTop(4,2,0)", "XuLiShifted(2,4)", "InvTwoShiftBinom(3,2,2,2)"};
    for (const char* s : grid) {
        VerifyConfig a, b;
        a.digits = 40;
        b.digits = 60;
        const auto ra = verify(SumSpec::parse(s), a);
        const auto rb = verify(SumSpec::parse(s), b);
        EXPECT_EQ(ra.verdict, rb.verdict) << s;
        EXPECT_EQ(rb.verdict, Verdict::Pass) << s << ": " << rb.reason;
    }
}

TEST(Audit, LedgerContents) {
    const auto& ledger = typo_ledger();
    auto find = [&](const std::string& id) -> const LedgerEntry& {
        for (const auto& e : ledger)
            if (e.formula == id) return e;
        throw std::runtime_error("missing ledger entry " + id);
    };
    EXPECT_EQ(find("quadratic-harmonic-sum").status, "corrected");
    EXPECT_EQ(find("quadratic-harmonic-binomial").status, "corrected");
    EXPECT_EQ(find("shifted-binomial-harmonic").status, "corrected");
    EXPECT_EQ(find("quadratic-harmonic-linear").status, "original");
    EXPECT_EQ(find("shifted-euler-sum").status, "original");
    EXPECT_EQ(find("worked-example-index").status, "corrected");
    for (const auto& e : ledger) {
        EXPECT_TRUE(e.status == "original" || e.status == "corrected") << e.formula;
        EXPECT_FALSE(e.evidence.empty()) << e.formula;
    }
    for (const auto& info : family_table())
        for (const auto& id : formulas_for(info.family)) EXPECT_NO_THROW(find(id)) << info.name;
}
