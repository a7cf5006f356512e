#pragma once

// Serialization of verification results: JSON documents, CSV rows, text.

#include "hypereuler/cli/config.hpp"
#include "hypereuler/oracle/audit.hpp"

#include "json.hpp"

#include <set>
#include <sstream>

namespace hypereuler::cli {

using Json = nlohmann::ordered_json;

/// One sweep or verify outcome; `report` is empty when the parameters were
/// rejected before a series existed.
struct Outcome {
    Family family;
    std::vector<long> params;
    std::string label;  // Family(p1,...) even when the tuple was rejected
    std::optional<oracle::VerificationReport> report;
    std::string error;  // InvalidParameter / BudgetExceeded message
    std::string status;  // pass | fail | skipped | invalid
};

inline int sig_digits(const RunConfig& cfg) { return static_cast<int>(std::min(cfg.digits, 40u)); }

inline Json config_json(const RunConfig& cfg) {
    Json j;
    j["precision_digits"] = cfg.digits;
    j["max_terms"] = cfg.max_terms;
    if (cfg.tol_digits)
        j["tol_digits"] = *cfg.tol_digits;
    else
        j["tol_digits"] = "default";
    j["mode"] = oracle::to_string(cfg.mode);
    j["pi_form"] = cfg.pi_form;
    return j;
}

inline Json params_json(const SumSpec& spec) {
    Json j = Json::object();
    for (std::size_t i = 0; i < spec.params().size(); ++i) j[spec.info().params[i]] = spec.params()[i];
    return j;
}

inline Json outcome_json(const Outcome& o, const RunConfig& cfg) {
    Json j;
    j["spec"] = o.label;
    j["verdict"] = o.status;
    if (!o.report) {
        j["reason"] = o.error;
        return j;
    }
    const auto& r = *o.report;
    const int sig = sig_digits(cfg);
    j["family"] = r.spec.info().name;
    j["params"] = params_json(r.spec);
    j["anchor"] = r.anchor;
    j["tol_digits"] = r.tol_digits;
    if (!r.closed_form.empty()) {
        j["closed_form"] = r.closed_form;
        if (cfg.pi_form) j["closed_form_pi"] = render(forms::closed_form(r.spec), Format::Text, true);
    }
    if (r.closed_numeric) j["closed_numeric"] = r.closed_numeric->to_string(sig);
    if (r.oracle) {
        Json oj;
        oj["value"] = r.oracle->value.to_string(sig);
        oj["partial_sum"] = r.oracle->partial_sum.to_string(sig);
        oj["tail_bound"] = r.oracle->tail_bound.to_string(3);
        oj["plain_bound"] = r.oracle->plain_bound.to_string(3);
        oj["terms_used"] = r.oracle->terms_used;
        oj["mode"] = oracle::to_string(r.oracle->mode);
        j["oracle"] = oj;
    }
    if (r.abs_err) j["abs_err"] = r.abs_err->to_string(3);
    const std::string reason = !o.error.empty() ? o.error : r.reason;
    if (!reason.empty()) j["reason"] = reason;
    Json formulas = Json::array();
    for (const auto& id : oracle::formulas_for(r.spec.family())) formulas.push_back(id);
    j["formulas"] = formulas;
    return j;
}

struct Summary {
    long points = 0, pass = 0, fail = 0, skipped = 0, invalid = 0;
};

inline Summary summarize(const std::vector<Outcome>& outcomes) {
    Summary s;
    for (const auto& o : outcomes) {
        ++s.points;
        if (o.status == "pass") ++s.pass;
        else if (o.status == "fail") ++s.fail;
        else if (o.status == "skipped") ++s.skipped;
        else ++s.invalid;
    }
    return s;
}

inline Json summary_json(const Summary& s) {
    Json j;
    j["points"] = s.points;
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["skipped"] = s.skipped;
    j["invalid"] = s.invalid;
    return j;
}

/// Ledger entries the given outcomes depend on, in ledger order; all of them
/// when `everything` is set.
inline Json ledger_json(const std::vector<Outcome>& outcomes, bool everything) {
    std::set<std::string> used;
    for (const auto& o : outcomes)
        if (o.report)
            for (const auto& id : oracle::formulas_for(o.report->spec.family())) used.insert(id);
    Json arr = Json::array();
    for (const auto& e : oracle::typo_ledger()) {
        if (!everything && !used.count(e.formula)) continue;
        Json j;
        j["formula"] = e.formula;
        j["status"] = e.status;
        j["note"] = e.note;
        j["evidence"] = e.evidence;
        arr.push_back(j);
    }
    return arr;
}

inline Json report_document(const std::vector<Outcome>& outcomes, const RunConfig& cfg, bool full_ledger = false) {
    Json doc;
    doc["config"] = config_json(cfg);
    Json results = Json::array();
    for (const auto& o : outcomes) results.push_back(outcome_json(o, cfg));
    doc["results"] = results;
    doc["summary"] = summary_json(summarize(outcomes));
    doc["typo_ledger"] = ledger_json(outcomes, full_ledger);
    return doc;
}

/// CSV with one row per outcome. A single-family table names its parameter
/// columns; a mixed table uses positional columns p1..p4.
inline std::string report_csv(const std::vector<Outcome>& outcomes, const RunConfig& cfg) {
    std::optional<Family> family;
    bool uniform = true;
    for (const auto& o : outcomes) {
        if (!family) family = o.family;
        else if (*family != o.family) uniform = false;
    }
    std::vector<std::string> names;
    if (family && uniform)
        for (const char* n : family_info(*family).params) names.emplace_back(n);
    else
        names = {"p1", "p2", "p3", "p4"};
    std::ostringstream out;
    out << "family";
    for (const auto& n : names) out << ',' << n;
    out << ",closed_numeric,oracle,abs_err,verdict\n";
    const int sig = sig_digits(cfg);
    for (const auto& o : outcomes) {
        out << family_info(o.family).name;
        for (std::size_t i = 0; i < names.size(); ++i) {
            out << ',';
            if (i < o.params.size()) out << o.params[i];
        }
        if (o.report) {
            const auto& r = *o.report;
            out << ',' << (r.closed_numeric ? r.closed_numeric->to_string(sig) : "");
            out << ',' << (r.oracle ? r.oracle->value.to_string(sig) : "");
            out << ',' << (r.abs_err ? r.abs_err->to_string(3) : "");
        } else {
            out << ",,,";
        }
        out << ',' << o.status << '\n';
    }
    return out.str();
}

/// Human-readable lines, one block per outcome.
inline std::string report_text(const std::vector<Outcome>& outcomes, const RunConfig& cfg) {
    std::ostringstream out;
    for (const auto& o : outcomes) {
        out << o.label << "  " << o.status;
        if (o.report && o.report->abs_err) {
            const auto& r = *o.report;
            out << "  abs_err=" << r.abs_err->to_string(3) << "  bound=" << r.oracle->tail_bound.to_string(3)
                << "  tol=1e-" << r.tol_digits << "  terms=" << r.oracle->terms_used << " ("
                << oracle::to_string(r.oracle->mode) << ")";
        }
        out << '\n';
        if (o.report && !o.report->closed_form.empty()) {
            const ZetaExpr e = forms::closed_form(o.report->spec);
            out << "  closed form: " << render(e, cfg.format == Format::Latex ? Format::Latex : Format::Text, cfg.pi_form)
                << '\n';
        }
        const std::string reason = !o.error.empty() ? o.error : (o.report ? o.report->reason : "");
        if (!reason.empty()) out << "  reason: " << reason << '\n';
    }
    const Summary s = summarize(outcomes);
    out << "summary: " << s.points << " points, " << s.pass << " pass, " << s.fail << " fail, " << s.skipped
        << " skipped, " << s.invalid << " invalid\n";
    return out.str();
}

inline std::string render_report(const std::vector<Outcome>& outcomes, const RunConfig& cfg, bool full_ledger = false) {
    switch (cfg.format) {
        case Format::Json: return report_document(outcomes, cfg, full_ledger).dump(2) + "\n";
        case Format::Csv: return report_csv(outcomes, cfg);
        default: return report_text(outcomes, cfg);
    }
}

}  // namespace hypereuler::cli
