#pragma once

#include "hypereuler/algebra/zeta_expr.hpp"
#include "hypereuler/numeric/bigfloat.hpp"

#include <functional>
#include <map>

namespace hypereuler {

/// Supplies the value of an atom to at least the requested number of digits.
using AtomEvaluator = std::function<BigFloat(const Atom&, unsigned digits)>;

/// Direct monomial-by-monomial evaluation. Each distinct atom is requested
/// once, with a few guard digits on top of `digits`.
inline BigFloat eval_expr(const ZetaExpr& e, unsigned digits, const AtomEvaluator& atom_eval) {
    const unsigned work = digits + 10;
    std::map<Atom, BigFloat> values;
    for (const auto& a : e.atoms()) values.emplace(a, atom_eval(a, work));

    BigFloat total(work);
    for (const auto& m : e.monomials()) {
        BigFloat term(m.coeff, work);
        for (const auto& a : m.atoms) term *= values.at(a);
        total += term;
    }
    return total;
}

}  // namespace hypereuler
