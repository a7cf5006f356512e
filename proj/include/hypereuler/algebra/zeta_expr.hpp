#pragma once

// Canonical rational-linear combinations of monomials in the transcendental
// atoms zeta(k) and zeta_{H^(r)}(p) = sum_n H_n^(r) / n^p.

#include "hypereuler/errors.hpp"
#include "hypereuler/exact/numbers.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hypereuler {

class Atom {
public:
    enum class Kind { Zeta = 0, EulerLin = 1 };

    static Atom zeta(long k) {
        if (k < 2) throw InvalidParameter("zeta(" + std::to_string(k) + ") is not a valid atom (k >= 2)");
        return Atom(Kind::Zeta, k, 0);
    }

    /// zeta_{H^(r)}(p). r = 1 is never atomic: it always reduces to zeta values.
    static Atom euler_lin(long r, long p) {
        if (r < 2) throw InvalidParameter("eulerlin(" + std::to_string(r) + "," + std::to_string(p) + ") needs r >= 2");
        if (p < 2) throw InvalidParameter("eulerlin(" + std::to_string(r) + "," + std::to_string(p) + ") diverges (p >= 2)");
        return Atom(Kind::EulerLin, r, p);
    }

    Kind kind() const { return kind_; }
    bool is_zeta() const { return kind_ == Kind::Zeta; }
    /// k for zeta(k), r for eulerlin(r,p).
    long first() const { return first_; }
    /// p for eulerlin(r,p); 0 for zeta.
    long second() const { return second_; }
    /// Weight k, or r+p.
    long weight() const { return first_ + second_; }

    friend auto operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;

private:
    Atom(Kind kind, long a, long b) : kind_(kind), first_(a), second_(b) {}

    Kind kind_;
    long first_;
    long second_;
};

struct Monomial {
    Rational coeff;
    std::vector<Atom> atoms;  // sorted multiset

    Monomial() : coeff(0) {}
    Monomial(Rational c, std::vector<Atom> a) : coeff(std::move(c)), atoms(std::move(a)) {
        std::sort(atoms.begin(), atoms.end());
    }
};

class ZetaExpr;
ZetaExpr normalize(std::vector<Monomial> raw);

class ZetaExpr {
public:
    ZetaExpr() = default;
    ZetaExpr(const Rational& c) {  // NOLINT: implicit constant lift is intended
        if (c != 0) monomials_.push_back(Monomial(c, {}));
    }
    ZetaExpr(long c) : ZetaExpr(Rational(c)) {}  // NOLINT
    ZetaExpr(const Atom& a) { monomials_.push_back(Monomial(1, {a})); }  // NOLINT

    static ZetaExpr zeta(long k) { return ZetaExpr(Atom::zeta(k)); }
    static ZetaExpr euler_lin(long r, long p) { return ZetaExpr(Atom::euler_lin(r, p)); }

    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }

    bool is_rational() const {
        return monomials_.empty() || (monomials_.size() == 1 && monomials_[0].atoms.empty());
    }

    /// The constant term (coefficient of the empty monomial).
    Rational constant() const {
        for (const auto& m : monomials_)
            if (m.atoms.empty()) return m.coeff;
        return 0;
    }

    /// Every atom that occurs, sorted, without repetition.
    std::vector<Atom> atoms() const {
        std::vector<Atom> out;
        for (const auto& m : monomials_) out.insert(out.end(), m.atoms.begin(), m.atoms.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    ZetaExpr& operator+=(const ZetaExpr& o) {
        std::vector<Monomial> all = monomials_;
        all.insert(all.end(), o.monomials_.begin(), o.monomials_.end());
        *this = normalize(std::move(all));
        return *this;
    }
    ZetaExpr& operator-=(const ZetaExpr& o) { return *this += -o; }
    ZetaExpr& operator*=(const Rational& c) {
        if (c == 0) {
            monomials_.clear();
            return *this;
        }
        for (auto& m : monomials_) m.coeff *= c;
        return *this;
    }

    ZetaExpr operator-() const {
        ZetaExpr out(*this);
        for (auto& m : out.monomials_) m.coeff = -m.coeff;
        return out;
    }

    friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
    friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
    friend ZetaExpr operator*(ZetaExpr a, const Rational& c) { return a *= c; }
    friend ZetaExpr operator*(const Rational& c, ZetaExpr a) { return a *= c; }

    friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b) {
        std::vector<Monomial> out;
        out.reserve(a.monomials_.size() * b.monomials_.size());
        for (const auto& x : a.monomials_)
            for (const auto& y : b.monomials_) {
                std::vector<Atom> atoms = x.atoms;
                atoms.insert(atoms.end(), y.atoms.begin(), y.atoms.end());
                out.emplace_back(x.coeff * y.coeff, std::move(atoms));
            }
        return normalize(std::move(out));
    }

    friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) {
        if (a.monomials_.size() != b.monomials_.size()) return false;
        for (std::size_t i = 0; i < a.monomials_.size(); ++i) {
            if (a.monomials_[i].coeff != b.monomials_[i].coeff) return false;
            if (a.monomials_[i].atoms != b.monomials_[i].atoms) return false;
        }
        return true;
    }

private:
    friend ZetaExpr normalize(std::vector<Monomial> raw);
    std::vector<Monomial> monomials_;
};

/// Merges equal atom multisets, drops zero coefficients and sorts by the atom
/// multiset (constant term first, then lexicographic on sorted atoms).
inline ZetaExpr normalize(std::vector<Monomial> raw) {
    std::map<std::vector<Atom>, Rational> merged;
    for (auto& m : raw) {
        std::sort(m.atoms.begin(), m.atoms.end());
        auto [it, inserted] = merged.try_emplace(std::move(m.atoms), m.coeff);
        if (!inserted) it->second += m.coeff;
    }
    ZetaExpr out;
    for (auto& [atoms, coeff] : merged)
        if (coeff != 0) out.monomials_.push_back(Monomial(coeff, atoms));
    return out;
}

inline ZetaExpr scale(const ZetaExpr& e, const Rational& c) { return e * c; }
inline ZetaExpr add(const ZetaExpr& a, const ZetaExpr& b) { return a + b; }
inline ZetaExpr mul(const ZetaExpr& a, const ZetaExpr& b) { return a * b; }

/// zeta(a) * zeta(b) as a one-monomial expression.
inline ZetaExpr zeta_product(long a, long b) { return ZetaExpr::zeta(a) * ZetaExpr::zeta(b); }

}  // namespace hypereuler
