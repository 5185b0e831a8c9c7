#ifndef PARABEL_TESTS_LUK_SUPPORT_HPP
#define PARABEL_TESTS_LUK_SUPPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "parabel/luk_decide.hpp"

namespace parabel::test {

// Builds the branch completion the semantics dictates for an atom
// assignment, then verifies every row of the encoding and that an
// expression evaluates to the expected value. Kept independent of the
// branch-and-bound path; this is the oracle for encoder soundness.
inline bool completion_check(const PLEncoding& enc, const LinExpr& top, const LukFormula& f,
                             const std::map<std::string, Rational>& asg) {
    std::vector<Rational> value(enc.vars.size(), Rational(0));
    for (std::size_t i = 0; i < enc.vars.size(); ++i) {
        const PLVar& v = enc.vars[i];
        if (!v.formula) continue;
        const LukFormula& g = *v.formula;
        if (!v.is_branch) {
            value[i] = eval_luk(g, asg);
            continue;
        }
        const Rational l = eval_luk(g.lhs(), asg);
        const Rational r = g.is_unary() ? Rational(0) : eval_luk(g.rhs(), asg);
        switch (g.kind()) {
            case LukFormula::Kind::Imp: value[i] = (1 - l + r >= 1) ? 1 : 0; break;
            case LukFormula::Kind::Plus: value[i] = (l + r >= 1) ? 1 : 0; break;
            case LukFormula::Kind::Strong: value[i] = (l + r - 1 >= 0) ? 1 : 0; break;
            case LukFormula::Kind::Minus: value[i] = (l - r >= 0) ? 1 : 0; break;
            case LukFormula::Kind::Min: value[i] = (l <= r) ? 0 : 1; break;
            case LukFormula::Kind::Max: value[i] = (l >= r) ? 0 : 1; break;
            default: return false;
        }
    }
    auto eval_expr = [&](const LinExpr& e) {
        Rational acc = e.constant;
        for (const auto& [v, c] : e.terms) acc += c * value[static_cast<std::size_t>(v)];
        return acc;
    };
    for (const auto& row : enc.rows) {
        Rational lhs(0);
        for (const auto& [v, c] : row.terms) lhs += c * value[static_cast<std::size_t>(v)];
        const bool ok = row.rel == Rel::Le   ? lhs <= row.rhs
                        : row.rel == Rel::Ge ? lhs >= row.rhs
                                             : lhs == row.rhs;
        if (!ok) return false;
    }
    return eval_expr(top) == eval_luk(f, asg);
}

}  // namespace parabel::test

#endif  // PARABEL_TESTS_LUK_SUPPORT_HPP
