// Command-line front end: eval, verify, sweep, selftest.

#include "hypereuler/cli/commands.hpp"

#include "CLI11.hpp"

using namespace hypereuler;
using namespace hypereuler::cli;

namespace {

struct Options {
    std::optional<std::string> spec, family;
    std::map<std::string, std::string> params;
    unsigned digits = 60;
    long max_terms = 200000;
    std::optional<int> tol;
    std::string format = "text";
    bool pi = false;
    std::optional<std::string> out;
    std::string mode = "auto";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_run_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--digits,--precision", o.digits, "working precision in decimal digits (default $HYPEREULER_DIGITS or 60)");
    cmd->add_option("--max-terms", o.max_terms, "direct-sum budget N_max")->capture_default_str();
    cmd->add_option("--tol", o.tol, "tolerance exponent; default is per family");
    cmd->add_option("--format", o.format, "text | latex | json | csv")->capture_default_str();
    cmd->add_flag("--pi", o.pi, "show even zeta values as rational multiples of pi powers");
    cmd->add_option("--out", o.out, "write the report to this file");
    cmd->add_option("--mode", o.mode, "oracle summation: auto | plain | accelerated")->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "worker threads for sweeps");
}

void add_series_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--spec", o.spec, "series as Family(p1,...), e.g. HyperBinom(2,5,2)");
    cmd->add_option("--family", o.family, "family name; parameters come from the flags below");
    for (const char* name : {"r", "q", "p", "l", "m", "j", "a"})
        cmd->add_option_function<std::string>(
            std::string("--") + name, [&o, name](const std::string& v) { o.params[name] = v; }, "parameter value, or a..b in sweeps");
}

RunConfig to_config(const Options& o) {
    RunConfig c;
    c.digits = o.digits;
    c.max_terms = o.max_terms;
    c.tol_digits = o.tol;
    c.format = parse_format(o.format);
    c.pi_form = o.pi;
    c.output_path = o.out;
    c.mode = oracle::parse_mode(o.mode);
    c.jobs = o.jobs;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed forms of hyperharmonic and Euler-type series, checked against direct summation"};
    app.require_subcommand(1);
    Options o;
    try {
        o.digits = default_digits();
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }

    auto* eval = app.add_subcommand("eval", "print the closed form of one series");
    auto* verify = app.add_subcommand("verify", "compare a closed form with the direct-sum oracle");
    auto* sweep = app.add_subcommand("sweep", "verify every point of a parameter grid");
    auto* selftest = app.add_subcommand("selftest", "golden values, sweeps, invariants and the formula audit");
    for (auto* cmd : {eval, verify, sweep}) add_series_options(cmd, o);
    for (auto* cmd : {eval, verify, sweep, selftest}) add_run_options(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInvalid;
    }

    RunConfig cfg;
    try {
        cfg = to_config(o);
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    const SpecRequest req{o.spec, o.family, o.params};
    if (eval->parsed()) return cmd_eval(req, cfg);
    if (verify->parsed()) return cmd_verify(req, cfg);
    if (sweep->parsed()) return cmd_sweep(req, cfg);
    return cmd_selftest(cfg);
}
