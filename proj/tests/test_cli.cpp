#include "hypereuler/cli/commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace hypereuler;
using namespace hypereuler::cli;

namespace {

SpecRequest spec(const std::string& s) { return {s, std::nullopt, {}}; }

SpecRequest fam(const std::string& f, std::map<std::string, std::string> p) { return {std::nullopt, f, std::move(p)}; }

RunConfig quick(Format f = Format::Text) {
    RunConfig c;
    c.format = f;
    c.jobs = 1;
    return c;
}

struct CmdResult {
    int code;
    std::string out, err;
};

template <class F>
CmdResult capture(F f) {
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

CmdResult eval(const SpecRequest& r, const RunConfig& c = quick()) {
    return capture([&](auto& o, auto& e) { return cmd_eval(r, c, o, e); });
}
CmdResult verify(const SpecRequest& r, const RunConfig& c = quick()) {
    return capture([&](auto& o, auto& e) { return cmd_verify(r, c, o, e); });
}
CmdResult sweep(const SpecRequest& r, const RunConfig& c = quick()) {
    return capture([&](auto& o, auto& e) { return cmd_sweep(r, c, o, e); });
}

}  // namespace

TEST(CliEval, Examples) {
    EXPECT_EQ(eval(fam("EulerLinR1", {{"p", "2"}})).out, "2*zeta(3)\n");
    EXPECT_EQ(eval(spec("EulerLinR1(2)")).out, "2*zeta(3)\n");
    const CmdResult bad = eval(spec("Hes(1,2)"));
    EXPECT_EQ(bad.code, kInvalid);
    EXPECT_NE(bad.err.find("p > r+1"), std::string::npos);
}

TEST(CliEval, RequestErrors) {
    EXPECT_EQ(eval(fam("Hes", {{"r", "1"}})).code, kInvalid);                               // missing p
    EXPECT_EQ(eval(fam("Hes", {{"r", "1"}, {"p", "4"}, {"l", "0"}})).code, kInvalid);        // extra l
    EXPECT_EQ(eval(fam("Hes", {{"r", "1"}, {"p", "4..5"}})).code, kInvalid);                 // range
    EXPECT_EQ(eval(fam("NoSuchFamily", {})).code, kInvalid);
    EXPECT_EQ(eval({"Hes(1,4)", "Hes", {}}).code, kInvalid);
    EXPECT_EQ(eval(spec("ShiftedHBinom(1,2,2)")).code, kInvalid);  // not reducible by the route
    EXPECT_EQ(eval(fam("Hes", {{"r", "1"}, {"p", "4"}})).code, kPass);
}

TEST(CliEval, JsonIsDeterministicAndRoundTrips) {
    const RunConfig c = quick(Format::Json);
    const CmdResult a = eval(spec("HyperBinom(2,5,2)"), c), b = eval(spec("HyperBinom(2,5,2)"), c);
    ASSERT_EQ(a.code, kPass);
    EXPECT_EQ(a.out, b.out);
    const auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["spec"], "HyperBinom(2,5,2)");
    EXPECT_EQ(doc["params"]["l"], 2);
    EXPECT_EQ(from_json(doc["expr"]), forms::hyper_binom(2, 5, 2));
    EXPECT_EQ(doc["rendered"], render(forms::hyper_binom(2, 5, 2), Format::Text));
    EXPECT_EQ(doc["value"].get<std::string>().substr(0, 12), "3.4878816965");
}

TEST(CliEval, OtherFormats) {
    RunConfig c = quick(Format::Latex);
    c.pi_form = true;
    EXPECT_EQ(eval(spec("EulerLinR1(3)"), c).out, "\\frac{1}{72}\\pi^{4}\n");
    c.format = Format::Csv;
    const std::string csv = eval(spec("Hes(1,4)"), c).out;
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "family,r,p,closed_form,value");
}

TEST(CliVerify, ExitCodes) {
    const CmdResult ok = verify(spec("HyperBinom(2,5,2)"));
    EXPECT_EQ(ok.code, kPass);
    EXPECT_NE(ok.out.find("HyperBinom(2,5,2)  pass"), std::string::npos);
    EXPECT_EQ(verify(spec("Hes(1,2)")).code, kInvalid);
    const CmdResult skip = verify(spec("ShiftedHBinom(1,2,2)"));
    EXPECT_EQ(skip.code, kInvalid);
    EXPECT_NE(skip.out.find("skipped"), std::string::npos);
    RunConfig low = quick();
    low.digits = 20;
    EXPECT_EQ(verify(spec("H2(2)"), low).code, kInvalid);
    low.digits = 60;
    low.max_terms = 999;
    EXPECT_EQ(verify(spec("H2(2)"), low).code, kInvalid);
}

TEST(CliVerify, BudgetShortfallIsAFail) {
    // a slow family at a tolerance no 1000-term sum can certify
    RunConfig c = quick(Format::Json);
    c.max_terms = 1000;
    c.tol_digits = 45;
    c.mode = oracle::SumMode::Plain;
    const CmdResult r = verify(spec("HBinom(1,1)"), c);
    EXPECT_EQ(r.code, kFail);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["results"][0]["verdict"], "fail");
    EXPECT_EQ(doc["summary"]["fail"], 1);
}

TEST(CliSweep, GridReport) {
    RunConfig c = quick(Format::Json);
    const CmdResult r = sweep(fam("HyperBinom", {{"r", "1..2"}, {"p", "3..4"}, {"l", "0..1"}}), c);
    ASSERT_EQ(r.code, kPass) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["results"].size(), 8u);
    EXPECT_EQ(doc["results"][0]["spec"], "HyperBinom(1,3,0)");
    EXPECT_EQ(doc["results"][7]["spec"], "HyperBinom(2,4,1)");
    EXPECT_EQ(doc["summary"]["pass"], 8);
    for (const auto& res : doc["results"]) {
        EXPECT_TRUE(res.contains("oracle"));
        EXPECT_TRUE(res.contains("abs_err"));
    }
    std::set<std::string> ids;
    for (const auto& e : doc["typo_ledger"]) ids.insert(e["formula"]);
    EXPECT_TRUE(ids.count("worked-example-index"));
    EXPECT_FALSE(ids.count("quadratic-harmonic-sum"));
}

TEST(CliSweep, MissingParametersUseTheStandardRange) {
    RunConfig c = quick(Format::Csv);
    const CmdResult r = sweep(fam("Hes", {{"r", "1"}}), c);
    EXPECT_EQ(r.code, kPass);
    // p = 0..4 with r = 1: only p = 3, 4 are inside the preconditions
    EXPECT_NE(r.out.find("Hes,1,3,"), std::string::npos);
    EXPECT_NE(r.out.find("Hes,1,0,,,,invalid"), std::string::npos);
}

TEST(CliSweep, EmptyGridAndMixedParallelOrder) {
    const CmdResult empty = sweep(fam("HyperBinom", {{"r", "3..1"}}));
    EXPECT_EQ(empty.code, kPass);
    EXPECT_EQ(empty.out, "summary: 0 points, 0 pass, 0 fail, 0 skipped, 0 invalid\n");
    RunConfig one = quick(Format::Json), four = quick(Format::Json);
    four.jobs = 4;
    const auto req = fam("InvTwoShiftBinom", {{"p", "1..2"}, {"m", "1..2"}, {"j", "1..2"}, {"l", "0..1"}});
    EXPECT_EQ(sweep(req, one).out, sweep(req, four).out);
}

TEST(CliOutput, WritesToFile) {
    const auto path = std::filesystem::temp_directory_path() / "hypereuler_cli_test.txt";
    RunConfig c = quick();
    c.output_path = path.string();
    const CmdResult r = eval(spec("EulerLinR1(2)"), c);
    EXPECT_EQ(r.code, kPass);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "2*zeta(3)");
    std::filesystem::remove(path);
    c.output_path = "/nonexistent-dir/x.txt";
    EXPECT_EQ(eval(spec("EulerLinR1(2)"), c).code, kInvalid);
}

TEST(CliSelftest, RelaxedBudget) {
    RunConfig c = quick(Format::Json);
    c.max_terms = 1000;
    const CmdResult r = capture([&](auto& o, auto& e) { return cmd_selftest(c, o, e); });
    ASSERT_EQ(r.code, kPass) << r.out << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["ok"].get<bool>());
    EXPECT_EQ(doc["suites"].size(), 9u);
    EXPECT_EQ(doc["typo_ledger"].size(), oracle::typo_ledger().size());
}

TEST(CliSelftest, RejectsLowPrecision) {
    RunConfig c = quick();
    c.digits = 20;
    const CmdResult r = capture([&](auto& o, auto& e) { return cmd_selftest(c, o, e); });
    EXPECT_EQ(r.code, kInvalid);
    EXPECT_NE(r.err.find("precision"), std::string::npos);
}

#ifdef HYPEREULER_CLI
TEST(CliBinary, ExitCodes) {
    const std::string cli = HYPEREULER_CLI;
    auto code = [&](const std::string& args) {
        const int s = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(code("eval --family EulerLinR1 --p 2"), 0);
    EXPECT_EQ(code("verify --spec 'Hes(1,4)'"), 0);
    EXPECT_EQ(code("verify --spec 'Hes(1,2)'"), 2);
    EXPECT_EQ(code("verify --spec 'H2(2)' --digits 20"), 2);
    EXPECT_EQ(code("verify --spec 'HBinom(1,1)' --max-terms 1000 --tol 45 --mode plain"), 1);
    EXPECT_EQ(code("sweep --family HyperBinom --r 3..1"), 0);
    EXPECT_EQ(code("eval --bogus"), 2);
    const int env = std::system(("HYPEREULER_DIGITS=20 " + cli + " verify --spec 'H2(2)' >/dev/null 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(env), 2);
}
#endif
