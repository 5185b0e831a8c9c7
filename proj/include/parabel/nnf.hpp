#ifndef PARABEL_NNF_HPP
#define PARABEL_NNF_HPP

#include <stdexcept>

#include "parabel/upper_formula.hpp"

namespace parabel {

namespace detail {

// Strong negation constructor that cancels a double ~ instead of stacking.
inline UpperFormula sneg_c(const UpperFormula& a) {
    if (a.kind() == UpperFormula::Kind::StrongNeg) return a.lhs();
    return UpperFormula::strong_neg(a);
}

inline UpperFormula nnf_pos(const UpperFormula& a);
inline UpperFormula nnf_neg(const UpperFormula& a);

inline UpperFormula nnf_pos(const UpperFormula& a) {
    switch (a.kind()) {
        case UpperFormula::Kind::ModalAtom: return a;
        case UpperFormula::Kind::StrongNeg: return sneg_c(nnf_pos(a.lhs()));
        case UpperFormula::Kind::Imp:
            return UpperFormula::imp(nnf_pos(a.lhs()), nnf_pos(a.rhs()));
        case UpperFormula::Kind::BNeg: return nnf_neg(a.lhs());
        default:
            throw DialectError("negation normal form is defined on the lukneg dialect only");
    }
}

// nnf of !a, using the provable rewrites
//   !~a = ~!a,   !!a = a,   !(a -> b) = ~(~!a -> ~!b).
inline UpperFormula nnf_neg(const UpperFormula& a) {
    switch (a.kind()) {
        case UpperFormula::Kind::ModalAtom: return UpperFormula::bneg(a);
        case UpperFormula::Kind::BNeg: return nnf_pos(a.lhs());
        case UpperFormula::Kind::StrongNeg: return sneg_c(nnf_neg(a.lhs()));
        case UpperFormula::Kind::Imp:
            return sneg_c(UpperFormula::imp(sneg_c(nnf_neg(a.lhs())),
                                            sneg_c(nnf_neg(a.rhs()))));
        default:
            throw DialectError("negation normal form is defined on the lukneg dialect only");
    }
}

}  // namespace detail

// Negation normal form: ! occurs only directly above belief atoms, and no
// double ~ remains. Value-preserving in the product algebra.
inline UpperFormula nnf(const UpperFormula& a) {
    if (a.dialect() != Dialect::LUK_NEG)
        throw DialectError("nnf expects a lukneg-dialect formula");
    return detail::nnf_pos(a);
}

inline bool is_nnf(const UpperFormula& a) {
    switch (a.kind()) {
        case UpperFormula::Kind::ModalAtom: return true;
        case UpperFormula::Kind::BNeg:
            return a.lhs().kind() == UpperFormula::Kind::ModalAtom;
        case UpperFormula::Kind::StrongNeg:
            return a.lhs().kind() != UpperFormula::Kind::StrongNeg && is_nnf(a.lhs());
        case UpperFormula::Kind::Imp: return is_nnf(a.lhs()) && is_nnf(a.rhs());
        default: return false;
    }
}

namespace detail {

// The ^! translation on formulas already in nnf: literals flip, and
//   (~a)^! = ~(a^!),   (a -> b)^! = ~(~a^! -> ~b^!).
inline UpperFormula neg_translate_nnf(const UpperFormula& a) {
    switch (a.kind()) {
        case UpperFormula::Kind::ModalAtom: return UpperFormula::bneg(a);
        case UpperFormula::Kind::BNeg: return a.lhs();
        case UpperFormula::Kind::StrongNeg: return sneg_c(neg_translate_nnf(a.lhs()));
        case UpperFormula::Kind::Imp:
            return sneg_c(UpperFormula::imp(sneg_c(neg_translate_nnf(a.lhs())),
                                            sneg_c(neg_translate_nnf(a.rhs()))));
        default:
            throw DialectError("neg_translate is defined on the lukneg dialect only");
    }
}

}  // namespace detail

// Maps a to a^! in nnf: the formula whose first product component tracks the
// second component of a. Applies nnf first when needed.
inline UpperFormula neg_translate(const UpperFormula& a) {
    return detail::neg_translate_nnf(nnf(a));
}

}  // namespace parabel

#endif  // PARABEL_NNF_HPP
