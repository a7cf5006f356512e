#pragma once

#include "hypereuler/algebra/render.hpp"
#include "hypereuler/oracle/verify.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <thread>

namespace hypereuler::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kFail = 1, kInvalid = 2 };

/// Default precision; HYPEREULER_DIGITS overrides it.
inline unsigned default_digits() {
    if (const char* env = std::getenv("HYPEREULER_DIGITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) throw InvalidParameter(std::string("HYPEREULER_DIGITS is not a positive integer: ") + env);
        return static_cast<unsigned>(v);
    }
    return 60;
}

struct RunConfig {
    unsigned digits = 60;
    long max_terms = 200000;
    std::optional<int> tol_digits;  // unset: per-family defaults
    Format format = Format::Text;
    bool pi_form = false;
    std::optional<std::string> output_path;
    oracle::SumMode mode = oracle::SumMode::Auto;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    /// Largest tolerance any series may be checked at under this config.
    int strictest_tolerance() const { return tol_digits ? *tol_digits : (max_terms < oracle::kRelaxedBelow ? 20 : 25); }

    /// Throws InvalidParameter naming the violated invariant.
    void validate() const {
        if (digits < 20) throw InvalidParameter("precision must be at least 20 digits, got " + std::to_string(digits));
        if (max_terms < 1000) throw InvalidParameter("max_terms must be at least 1000, got " + std::to_string(max_terms));
        if (tol_digits && *tol_digits < 1) throw InvalidParameter("tolerance must be at least 1 digit");
        const int tol = strictest_tolerance();
        if (static_cast<long>(digits) < tol + 10)
            throw InvalidParameter("precision " + std::to_string(digits) + " is below tolerance + 10 = " + std::to_string(tol + 10));
        if (jobs < 1) throw InvalidParameter("jobs must be at least 1");
    }

    oracle::VerifyConfig verify_config() const {
        oracle::VerifyConfig v;
        v.digits = digits;
        v.max_terms = max_terms;
        v.tol_digits = tol_digits;
        v.mode = mode;
        return v;
    }
};

}  // namespace hypereuler::cli
