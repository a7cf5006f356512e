#pragma once

// The four subcommands. Each writes its report to `out` (or to the configured
// file) and diagnostics to `err`, and returns the process exit code.

#include "hypereuler/cli/selftest.hpp"

#include <fstream>
#include <iostream>
#include <map>

namespace hypereuler::cli {

/// Which series a command is about: a spec string such as "HyperBinom(2,5,2)"
/// or a family name plus named parameters. Sweeps accept "a..b" values.
struct SpecRequest {
    std::optional<std::string> spec;
    std::optional<std::string> family;
    std::map<std::string, std::string> params;
};

namespace detail {

inline Family requested_family(const SpecRequest& req) {
    if (req.spec && req.family) throw InvalidParameter("give either --spec or --family, not both");
    if (req.spec) {
        if (!req.params.empty()) throw InvalidParameter("parameter flags cannot be combined with --spec");
        return SumSpec::parse(*req.spec).family();
    }
    if (!req.family) throw InvalidParameter("a series is required: --spec or --family");
    return parse_family(*req.family);
}

inline void check_names(Family f, const SpecRequest& req) {
    const auto& names = family_info(f).params;
    for (const auto& [name, value] : req.params)
        if (std::find_if(names.begin(), names.end(), [&](const char* n) { return name == n; }) == names.end())
            throw InvalidParameter(std::string(family_info(f).name) + " has no parameter '" + name + "'");
}

inline std::string join_params(Family f) {
    std::string s;
    for (const char* n : family_info(f).params) s += (s.empty() ? "" : ", ") + std::string(n);
    return s;
}

// Sends the text to the configured file, or to `out`.
inline void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    if (!cfg.output_path) {
        out << text;
        return;
    }
    std::ofstream f(*cfg.output_path, std::ios::binary);
    if (!f) throw InvalidParameter("cannot open output file " + *cfg.output_path);
    f << text;
    if (!f) throw InvalidParameter("cannot write output file " + *cfg.output_path);
}

template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const NotReducibleByThisRoute& e) {
        err << "not reducible: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFail;
    }
}

}  // namespace detail

/// A single series; every parameter must be present and single-valued.
inline SumSpec resolve_spec(const SpecRequest& req) {
    const Family f = detail::requested_family(req);
    if (req.spec) return SumSpec::parse(*req.spec);
    detail::check_names(f, req);
    std::vector<long> values;
    for (const char* n : family_info(f).params) {
        const auto it = req.params.find(n);
        if (it == req.params.end())
            throw InvalidParameter(std::string(family_info(f).name) + " needs parameters " + detail::join_params(f) + "; missing '" + n + "'");
        const Range r = parse_range(it->second);
        if (r.lo != r.hi) throw InvalidParameter(std::string("parameter '") + n + "' must be a single value here");
        values.push_back(r.lo);
    }
    return SumSpec::make(f, std::move(values));
}

/// The grid of a sweep. Parameters not given take their standard-grid range.
inline SweepGrid resolve_grid(const SpecRequest& req) {
    const Family f = detail::requested_family(req);
    SweepGrid g = standard_grid(f);
    if (req.spec) {
        const SumSpec s = SumSpec::parse(*req.spec);
        for (std::size_t i = 0; i < g.ranges.size(); ++i) g.ranges[i] = {s.params()[i], s.params()[i]};
        return g;
    }
    detail::check_names(f, req);
    const auto& names = family_info(f).params;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (const auto it = req.params.find(names[i]); it != req.params.end()) g.ranges[i] = parse_range(it->second);
    return g;
}

inline std::string eval_output(const SumSpec& spec, const ZetaExpr& e, const RunConfig& cfg) {
    const BigFloat value = eval_expr(e, cfg.digits, oracle::eval_atom);
    const int sig = sig_digits(cfg);
    switch (cfg.format) {
        case Format::Json: {
            Json j;
            j["spec"] = spec.to_string();
            j["family"] = spec.info().name;
            j["params"] = params_json(spec);
            j["anchor"] = spec.info().anchor;
            j["expr"] = Json::parse(to_json(e).dump());
            j["rendered"] = render(e, Format::Text, cfg.pi_form);
            j["value"] = value.to_string(sig);
            return j.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string head = "family", row = spec.info().name;
            for (std::size_t i = 0; i < spec.params().size(); ++i) {
                head += std::string(",") + spec.info().params[i];
                row += "," + std::to_string(spec.params()[i]);
            }
            std::string rendered = render(e, Format::Text, cfg.pi_form);
            return head + ",closed_form,value\n" + row + ",\"" + rendered + "\"," + value.to_string(sig) + "\n";
        }
        case Format::Latex: return render(e, Format::Latex, cfg.pi_form) + "\n";
        default: return render(e, Format::Text, cfg.pi_form) + "\n";
    }
}

inline int cmd_eval(const SpecRequest& req, const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        cfg.validate();
        const SumSpec spec = resolve_spec(req);
        detail::emit(eval_output(spec, forms::closed_form(spec), cfg), cfg, out);
        return int(kPass);
    });
}

inline int exit_code_for(const std::vector<Outcome>& outcomes) {
    const Summary s = summarize(outcomes);
    return s.fail ? kFail : kPass;
}

inline int cmd_verify(const SpecRequest& req, const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        cfg.validate();
        const SumSpec spec = resolve_spec(req);
        const Outcome o = run_point(spec.family(), spec.params(), cfg);
        detail::emit(render_report({o}, cfg), cfg, out);
        if (o.status == "pass") return int(kPass);
        if (o.status == "fail") return int(kFail);
        err << o.label << ": " << (o.error.empty() && o.report ? o.report->reason : o.error) << '\n';
        return int(kInvalid);
    });
}

inline int cmd_sweep(const SpecRequest& req, const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        cfg.validate();
        const auto outcomes = run_grid(resolve_grid(req), cfg);
        detail::emit(render_report(outcomes, cfg), cfg, out);
        return exit_code_for(outcomes);
    });
}

inline std::string selftest_output(const std::vector<SuiteResult>& suites, const RunConfig& cfg) {
    bool all = true;
    for (const auto& s : suites) all = all && s.ok;
    if (cfg.format == Format::Json) {
        Json doc;
        doc["config"] = config_json(cfg);
        Json arr = Json::array();
        for (const auto& s : suites) {
            Json j;
            j["suite"] = s.name;
            j["ok"] = s.ok;
            j["detail"] = s.detail;
            j["seconds"] = std::round(s.seconds * 100) / 100;
            arr.push_back(j);
        }
        doc["suites"] = arr;
        doc["ok"] = all;
        doc["typo_ledger"] = ledger_json({}, true);
        return doc.dump(2) + "\n";
    }
    std::ostringstream o;
    for (const auto& s : suites) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", s.seconds);
        o << (s.ok ? "[ok]   " : "[FAIL] ") << s.name << " (" << secs << "): " << s.detail << '\n';
    }
    o << "typo ledger:\n";
    for (const auto& e : oracle::typo_ledger())
        o << "  " << e.formula << "  " << e.status << "\n    " << e.note << "\n    " << e.evidence << '\n';
    o << (all ? "selftest passed\n" : "selftest FAILED\n");
    return o.str();
}

inline int cmd_selftest(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        cfg.validate();
        const auto suites = run_selftest(cfg);
        detail::emit(selftest_output(suites, cfg), cfg, out);
        for (const auto& s : suites)
            if (!s.ok) return int(kFail);
        return int(kPass);
    });
}

}  // namespace hypereuler::cli
