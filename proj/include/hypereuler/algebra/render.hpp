#pragma once

// Text, LaTeX and JSON serialization of ZetaExpr, the optional pi-power view of
// even zeta values, and parsers for the text and JSON forms.

#include "hypereuler/algebra/zeta_expr.hpp"
#include "hypereuler/exact/combinatorics.hpp"

#include "json.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace hypereuler {

enum class Format { Text, Latex, Json, Csv };

inline Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "latex") return Format::Latex;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw InvalidParameter("unknown format '" + name + "' (text|latex|json|csv)");
}

/// zeta(2m) = c_m * pi^(2m) with c_m = (-1)^(m+1) B_{2m} 2^(2m-1) / (2m)!.
inline Rational even_zeta_pi_coefficient(long two_m) {
    if (two_m < 2 || two_m % 2 != 0) throw InvalidParameter("even_zeta_pi_coefficient needs an even argument >= 2");
    const long m = two_m / 2;
    Rational c = bernoulli(two_m) * Rational(pow_int(Integer(2), static_cast<unsigned long>(two_m - 1)));
    c /= Rational(factorial(static_cast<unsigned long>(two_m)));
    return sign_power(m + 1) * c;
}

/// Folds every product of even zeta values into a single zeta(2M) through the
/// pi-power coefficients, so expressions that agree modulo those relations
/// compare equal. Display and comparison helper; normalize() keeps products.
inline ZetaExpr merge_even_zetas(const ZetaExpr& e) {
    std::vector<Monomial> out;
    for (const auto& m : e.monomials()) {
        Rational c = m.coeff;
        long weight = 0;
        std::vector<Atom> rest;
        for (const auto& a : m.atoms) {
            if (a.is_zeta() && a.first() % 2 == 0) {
                c *= even_zeta_pi_coefficient(a.first());
                weight += a.first();
            } else {
                rest.push_back(a);
            }
        }
        if (weight > 0) {
            c /= even_zeta_pi_coefficient(weight);
            rest.push_back(Atom::zeta(weight));
        }
        out.emplace_back(c, std::move(rest));
    }
    return normalize(std::move(out));
}

/// Equality modulo the relations among even zeta values.
inline bool equivalent(const ZetaExpr& a, const ZetaExpr& b) { return merge_even_zetas(a) == merge_even_zetas(b); }

namespace detail {

// One displayed term: coeff * pi^pi_power * atoms.
struct DisplayTerm {
    Rational coeff;
    long pi_power = 0;
    std::vector<Atom> atoms;
};

inline std::vector<DisplayTerm> display_terms(const ZetaExpr& e, bool pi_form) {
    std::vector<DisplayTerm> out;
    if (!pi_form) {
        for (const auto& m : e.monomials()) out.push_back({m.coeff, 0, m.atoms});
    } else {
        // Rewriting may merge monomials (zeta(4) and zeta(2)^2 are both pi^4).
        std::map<std::pair<std::vector<Atom>, long>, Rational> merged;
        for (const auto& m : e.monomials()) {
            Rational c = m.coeff;
            long pw = 0;
            std::vector<Atom> rest;
            for (const auto& a : m.atoms) {
                if (a.is_zeta() && a.first() % 2 == 0) {
                    c *= even_zeta_pi_coefficient(a.first());
                    pw += a.first();
                } else {
                    rest.push_back(a);
                }
            }
            merged[{rest, pw}] += c;
        }
        for (auto& [key, c] : merged)
            if (c != 0) out.push_back({c, key.second, key.first});
    }
    // Transcendental terms first (heavier pi powers first), constant last.
    std::stable_sort(out.begin(), out.end(), [](const DisplayTerm& a, const DisplayTerm& b) {
        const bool ca = a.atoms.empty() && a.pi_power == 0;
        const bool cb = b.atoms.empty() && b.pi_power == 0;
        if (ca != cb) return cb;
        if (a.atoms != b.atoms) {
            if (a.atoms.empty() != b.atoms.empty()) return b.atoms.empty();
            return a.atoms < b.atoms;
        }
        return a.pi_power > b.pi_power;
    });
    return out;
}

// Atoms grouped into (atom, multiplicity) runs; input is sorted.
inline std::vector<std::pair<Atom, int>> atom_runs(const std::vector<Atom>& atoms) {
    std::vector<std::pair<Atom, int>> runs;
    for (const auto& a : atoms) {
        if (!runs.empty() && runs.back().first == a)
            ++runs.back().second;
        else
            runs.emplace_back(a, 1);
    }
    return runs;
}

inline std::string text_atom(const Atom& a) {
    if (a.is_zeta()) return "zeta(" + std::to_string(a.first()) + ")";
    return "eulerlin(" + std::to_string(a.first()) + "," + std::to_string(a.second()) + ")";
}

inline std::string latex_atom(const Atom& a) {
    if (a.is_zeta()) return "\\zeta(" + std::to_string(a.first()) + ")";
    return "\\zeta_{H^{(" + std::to_string(a.first()) + ")}}(" + std::to_string(a.second()) + ")";
}

inline std::string render_text(const std::vector<DisplayTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Rational mag = abs(t.coeff);
        const bool neg = t.coeff < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::vector<std::string> factors;
        for (const auto& [a, k] : atom_runs(t.atoms))
            factors.push_back(text_atom(a) + (k > 1 ? "^" + std::to_string(k) : ""));
        if (t.pi_power > 0) factors.insert(factors.begin(), t.pi_power == 1 ? "pi" : "pi^" + std::to_string(t.pi_power));

        std::string c;
        if (mag.get_den() == 1)
            c = mag.get_num().get_str();
        else
            c = "(" + to_fraction_string(mag) + ")";
        if (factors.empty()) {
            out += (mag.get_den() == 1) ? c : to_fraction_string(mag);
            continue;
        }
        std::string body;
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
        out += (mag == 1) ? body : c + "*" + body;
    }
    return out;
}

inline std::string render_latex(const std::vector<DisplayTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Rational mag = abs(t.coeff);
        const bool neg = t.coeff < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::string body;
        if (t.pi_power > 0) body += t.pi_power == 1 ? "\\pi" : "\\pi^{" + std::to_string(t.pi_power) + "}";
        for (const auto& [a, k] : atom_runs(t.atoms))
            body += latex_atom(a) + (k > 1 ? "^{" + std::to_string(k) + "}" : "");

        std::string c;
        if (mag.get_den() == 1)
            c = mag.get_num().get_str();
        else
            c = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        if (body.empty())
            out += c;
        else
            out += (mag == 1) ? body : c + body;
    }
    return out;
}

}  // namespace detail

inline nlohmann::json to_json(const ZetaExpr& e) {
    nlohmann::json monomials = nlohmann::json::array();
    for (const auto& m : e.monomials()) {
        nlohmann::json atoms = nlohmann::json::array();
        for (const auto& a : m.atoms) {
            if (a.is_zeta())
                atoms.push_back({{"zeta", a.first()}});
            else
                atoms.push_back({{"eulerlin", {a.first(), a.second()}}});
        }
        monomials.push_back({{"coeff", to_fraction_string(m.coeff)}, {"atoms", atoms}});
    }
    return {{"monomials", monomials}};
}

inline ZetaExpr from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_array())
        throw InvalidParameter("expression JSON needs a \"monomials\" array");
    std::vector<Monomial> raw;
    for (const auto& m : j["monomials"]) {
        std::vector<Atom> atoms;
        for (const auto& a : m.at("atoms")) {
            if (a.contains("zeta"))
                atoms.push_back(Atom::zeta(a["zeta"].get<long>()));
            else if (a.contains("eulerlin"))
                atoms.push_back(Atom::euler_lin(a["eulerlin"].at(0).get<long>(), a["eulerlin"].at(1).get<long>()));
            else
                throw InvalidParameter("unknown atom in expression JSON: " + a.dump());
        }
        raw.emplace_back(parse_rational(m.at("coeff").get<std::string>()), std::move(atoms));
    }
    return normalize(std::move(raw));
}

/// Deterministic serialization. pi_form rewrites zeta(2m) as rational * pi^(2m)
/// for display; JSON always carries the internal form.
inline std::string render(const ZetaExpr& e, Format format, bool pi_form = false) {
    switch (format) {
        case Format::Json:
            return to_json(e).dump();
        case Format::Latex:
            return detail::render_latex(detail::display_terms(e, pi_form));
        case Format::Text:
        case Format::Csv:
            break;
    }
    return detail::render_text(detail::display_terms(e, pi_form));
}

namespace detail {

// Recursive-descent parser for the text form.
class TextParser {
public:
    explicit TextParser(std::string s) : s_(std::move(s)) {}

    ZetaExpr parse() {
        ZetaExpr out = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return out;
    }

private:
    ZetaExpr expr() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        ZetaExpr out = term();
        if (neg) out = -out;
        for (;;) {
            skip();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            ZetaExpr t = term();
            out = (c == '+') ? out + t : out - t;
        }
        return out;
    }

    ZetaExpr term() {
        ZetaExpr out = factor();
        for (;;) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            out = out * factor();
        }
        return out;
    }

    ZetaExpr factor() {
        skip();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ZetaExpr inner = expr();
            expect(')');
            return power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            skip();
            if (peek() == '/') {
                ++pos_;
                skip();
                Integer den(digits());
                return make_rational(num, den);
            }
            return Rational(num);
        }
        if (match("zeta")) {
            expect('(');
            const long k = integer();
            expect(')');
            return power(ZetaExpr::zeta(k));
        }
        if (match("eulerlin")) {
            expect('(');
            const long r = integer();
            expect(',');
            const long p = integer();
            expect(')');
            return power(ZetaExpr::euler_lin(r, p));
        }
        if (match("pi")) {
            long k = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                k = integer();
            }
            if (k < 2 || k % 2 != 0) fail("only even powers of pi are representable");
            return ZetaExpr::zeta(k) * (1 / even_zeta_pi_coefficient(k));
        }
        fail("unexpected character");
        return {};
    }

    ZetaExpr power(const ZetaExpr& base) {
        skip();
        if (peek() != '^') return base;
        ++pos_;
        const long k = integer();
        if (k < 0) fail("negative exponent");
        ZetaExpr out(1);
        for (long i = 0; i < k; ++i) out = out * base;
        return out;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    long integer() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        const long v = std::stol(digits());
        return neg ? -v : v;
    }

    bool match(const char* word) {
        skip();
        const std::string w(word);
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidParameter("cannot parse expression at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form, including pi powers from the pi view (pi^(2m) is
/// mapped back to zeta(2m) / c_m).
inline ZetaExpr parse_text(const std::string& text) { return detail::TextParser(text).parse(); }

}  // namespace hypereuler
