#pragma once

// Parameter grids and their parallel verification.

#include "hypereuler/cli/report.hpp"

#include <atomic>
#include <thread>

namespace hypereuler::cli {

struct Range {
    long lo = 0, hi = -1;  // inclusive; lo > hi is empty
};

/// Parses "3" or "1..4".
inline Range parse_range(const std::string& text) {
    auto to_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InvalidParameter("bad parameter value '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = to_long(text);
        return {v, v};
    }
    return {to_long(text.substr(0, dots)), to_long(text.substr(dots + 2))};
}

struct SweepGrid {
    Family family;
    std::vector<Range> ranges;  // one per family parameter
};

/// Ranges of the standard grid: every parameter in 0..4, except the order of
/// the shifted hyperharmonic family, which also takes negative values.
inline SweepGrid standard_grid(Family f) {
    SweepGrid g{f, {}};
    for (const char* name : family_info(f).params) {
        Range r{0, 4};
        if (f == Family::HyperShifted && std::string(name) == "r") r.lo = -2;
        g.ranges.push_back(r);
    }
    return g;
}

/// Grid points in lexicographic order of the parameter tuple.
inline std::vector<std::vector<long>> grid_points(const SweepGrid& g) {
    std::vector<std::vector<long>> out;
    for (const auto& r : g.ranges)
        if (r.lo > r.hi) return out;
    std::vector<long> cur;
    for (const auto& r : g.ranges) cur.push_back(r.lo);
    for (;;) {
        out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (cur[i] < g.ranges[i].hi) {
                ++cur[i];
                for (std::size_t k = i + 1; k < cur.size(); ++k) cur[k] = g.ranges[k].lo;
                break;
            }
            if (i == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

inline std::string label_of(Family f, const std::vector<long>& params) {
    std::string s = std::string(family_info(f).name) + "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
}

/// Verifies one parameter tuple. Rejected tuples are "invalid", routes that
/// cannot reduce the series are "skipped", an oracle that cannot reach its
/// target is a "fail".
inline Outcome run_point(Family f, const std::vector<long>& params, const RunConfig& cfg) {
    Outcome o{f, params, label_of(f, params), std::nullopt, {}, {}};
    std::optional<SumSpec> spec;
    try {
        spec = SumSpec::make(f, params);
    } catch (const InvalidParameter& e) {
        o.error = e.what();
        o.status = "invalid";
        return o;
    }
    try {
        o.report = oracle::verify(*spec, cfg.verify_config());
        o.status = oracle::to_string(o.report->verdict);
    } catch (const BudgetExceeded& e) {
        oracle::VerificationReport rep{*spec, spec->info().anchor, {}, {}, {}, {}, oracle::tolerance_for(*spec, cfg.verify_config()),
                                       oracle::Verdict::Fail, e.what()};
        rep.closed_form = render(forms::closed_form(*spec), Format::Text);
        o.report = std::move(rep);
        o.error = e.what();
        o.status = "fail";
    } catch (const InvalidParameter& e) {
        o.error = e.what();
        o.status = "invalid";
    }
    return o;
}

/// Runs every point on `jobs` threads; the result order is the input order.
inline std::vector<Outcome> run_points(const std::vector<std::pair<Family, std::vector<long>>>& points, const RunConfig& cfg) {
    std::vector<std::optional<Outcome>> slots(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) slots[i] = run_point(points[i].first, points[i].second, cfg);
    };
    const unsigned n = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<Outcome> out;
    out.reserve(points.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

inline std::vector<Outcome> run_grid(const SweepGrid& g, const RunConfig& cfg) {
    std::vector<std::pair<Family, std::vector<long>>> pts;
    for (auto& p : grid_points(g)) pts.emplace_back(g.family, std::move(p));
    return run_points(pts, cfg);
}

}  // namespace hypereuler::cli
