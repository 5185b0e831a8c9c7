#ifndef PARABEL_ALGEBRAS_HPP
#define PARABEL_ALGEBRAS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "parabel/four_value.hpp"
#include "parabel/pair_value.hpp"
#include "parabel/rational.hpp"

namespace parabel {

// ---------------------------------------------------------------------------
// Scalar Lukasiewicz operations on [0,1].
// ---------------------------------------------------------------------------

inline Rational luk_neg(const Rational& a) { return 1 - a; }
inline Rational luk_and(const Rational& a, const Rational& b) {
    return std::max<Rational>(Rational(0), a + b - 1);
}
inline Rational luk_imp(const Rational& a, const Rational& b) {
    return std::min<Rational>(Rational(1), 1 - a + b);
}
inline Rational luk_oplus(const Rational& a, const Rational& b) {
    return std::min<Rational>(Rational(1), a + b);
}
inline Rational luk_ominus(const Rational& a, const Rational& b) {
    return std::max<Rational>(Rational(0), a - b);
}

// ---------------------------------------------------------------------------
// Pair-valued algebras over the unit square.
//
//   KLEENE_BILAT  product bilattice of ([0,1], min, max); signature
//                 {meet_t, join_t, meet_k, join_k, bneg}.
//   MV_PROD       product of the standard MV chain with its order dual,
//                 extended with the swap negation; primitives {imp, sneg,
//                 bneg}, derived {oplus, ominus, star}.
//   RES_BILAT     product residuated bilattice of the standard MV chain;
//                 primitives {meet_t, join_t, meet_k, join_k, sup, bneg,
//                 zero}, derived {imp, star, sneg, oplus, ominus, sub}.
//
// Derived operations are computed from their defining terms in the
// primitives, not from simplified formulas; the test-suite checks that they
// reduce to the expected pointwise forms.
// ---------------------------------------------------------------------------

enum class AlgebraId : std::uint8_t { FOUR, MV_PROD, RES_BILAT, KLEENE_BILAT };

inline std::string to_string(AlgebraId a) {
    switch (a) {
        case AlgebraId::FOUR: return "four";
        case AlgebraId::MV_PROD: return "mv_prod";
        case AlgebraId::RES_BILAT: return "res_bilat";
        case AlgebraId::KLEENE_BILAT: return "kleene_bilat";
    }
    return "?";
}

enum class PairOp : std::uint8_t {
    MeetT,   // /\t
    JoinT,   // \/t
    MeetK,   // /\k
    JoinK,   // \/k
    BNeg,    // component swap
    SNeg,    // strong (involutive 1-x) negation
    Imp,     // ->
    Sup,     // =>  (residuated-bilattice implication)
    Sub,     // co-implication
    Star,    // strong conjunction
    OPlus,   // truncated sum
    OMinus,  // truncated difference
    Zero,    // nullary (0,0)
};

inline std::string to_string(PairOp op) {
    switch (op) {
        case PairOp::MeetT: return "/\\t";
        case PairOp::JoinT: return "\\/t";
        case PairOp::MeetK: return "/\\k";
        case PairOp::JoinK: return "\\/k";
        case PairOp::BNeg: return "!";
        case PairOp::SNeg: return "~";
        case PairOp::Imp: return "->";
        case PairOp::Sup: return "=>";
        case PairOp::Sub: return "<=";
        case PairOp::Star: return "*";
        case PairOp::OPlus: return "(+)";
        case PairOp::OMinus: return "(-)";
        case PairOp::Zero: return "0";
    }
    return "?";
}

struct AlgebraError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

inline PairValue bneg(const PairValue& a) { return {a.neg, a.pos}; }

// Lattice operations of any product bilattice over ([0,1], min, max).
inline PairValue meet_t(const PairValue& a, const PairValue& b) {
    return {std::min(a.pos, b.pos), std::max(a.neg, b.neg)};
}
inline PairValue join_t(const PairValue& a, const PairValue& b) {
    return {std::max(a.pos, b.pos), std::min(a.neg, b.neg)};
}
inline PairValue meet_k(const PairValue& a, const PairValue& b) {
    return {std::min(a.pos, b.pos), std::min(a.neg, b.neg)};
}
inline PairValue join_k(const PairValue& a, const PairValue& b) {
    return {std::max(a.pos, b.pos), std::max(a.neg, b.neg)};
}

// MV_PROD primitives. First components live in the standard chain, second
// components in its order dual.
inline PairValue mv_imp(const PairValue& a, const PairValue& b) {
    return {luk_imp(a.pos, b.pos), luk_and(luk_neg(a.neg), b.neg)};
}
inline PairValue mv_sneg(const PairValue& a) {
    return {luk_neg(a.pos), luk_neg(a.neg)};
}
// Derived: a (+) b := ~a -> b, a (-) b := ~(a -> b), a * b := ~(a -> ~b).
inline PairValue mv_oplus(const PairValue& a, const PairValue& b) {
    return mv_imp(mv_sneg(a), b);
}
inline PairValue mv_ominus(const PairValue& a, const PairValue& b) {
    return mv_sneg(mv_imp(a, b));
}
inline PairValue mv_star(const PairValue& a, const PairValue& b) {
    return mv_sneg(mv_imp(a, mv_sneg(b)));
}

// RES_BILAT primitive implication and its derived family.
inline PairValue rb_sup(const PairValue& a, const PairValue& b) {
    return {luk_imp(a.pos, b.pos), luk_and(b.neg, a.pos)};
}
inline PairValue rb_zero() { return {Rational(0), Rational(0)}; }
// ~a := (a => 0) \/k !(!a => 0)
inline PairValue rb_sneg(const PairValue& a) {
    return join_k(rb_sup(a, rb_zero()), bneg(rb_sup(bneg(a), rb_zero())));
}
// a -> b := (a => b) /\t (!b => !a)
inline PairValue rb_imp(const PairValue& a, const PairValue& b) {
    return meet_t(rb_sup(a, b), rb_sup(bneg(b), bneg(a)));
}
// a * b := !(b -> !a)
inline PairValue rb_star(const PairValue& a, const PairValue& b) {
    return bneg(rb_imp(b, bneg(a)));
}
// a (+) b := (~a => b) \/k !(~!a => !b)
inline PairValue rb_oplus(const PairValue& a, const PairValue& b) {
    return join_k(rb_sup(rb_sneg(a), b), bneg(rb_sup(rb_sneg(bneg(a)), bneg(b))));
}
// a (-) b := ~(a => b) /\k !~(!a => !b)
inline PairValue rb_ominus(const PairValue& a, const PairValue& b) {
    return meet_k(rb_sneg(rb_sup(a, b)), bneg(rb_sneg(rb_sup(bneg(a), bneg(b)))));
}
// Co-implication; coincides with the swapped implication because the
// underlying monoid is commutative.
inline PairValue rb_sub(const PairValue& a, const PairValue& b) {
    return rb_sup(b, a);
}

}  // namespace detail

inline bool pair_op_unary(PairOp op) { return op == PairOp::BNeg || op == PairOp::SNeg; }
inline bool pair_op_nullary(PairOp op) { return op == PairOp::Zero; }

inline PairValue pair_op(AlgebraId algebra, PairOp op, const PairValue& a = {},
                         const PairValue& b = {}) {
    auto bad = [&]() -> AlgebraError {
        return AlgebraError("operation " + to_string(op) + " is not in the signature of " +
                            to_string(algebra));
    };
    switch (algebra) {
        case AlgebraId::KLEENE_BILAT:
            switch (op) {
                case PairOp::MeetT: return detail::meet_t(a, b);
                case PairOp::JoinT: return detail::join_t(a, b);
                case PairOp::MeetK: return detail::meet_k(a, b);
                case PairOp::JoinK: return detail::join_k(a, b);
                case PairOp::BNeg: return detail::bneg(a);
                default: throw bad();
            }
        case AlgebraId::MV_PROD:
            switch (op) {
                case PairOp::Imp: return detail::mv_imp(a, b);
                case PairOp::SNeg: return detail::mv_sneg(a);
                case PairOp::BNeg: return detail::bneg(a);
                case PairOp::OPlus: return detail::mv_oplus(a, b);
                case PairOp::OMinus: return detail::mv_ominus(a, b);
                case PairOp::Star: return detail::mv_star(a, b);
                default: throw bad();
            }
        case AlgebraId::RES_BILAT:
            switch (op) {
                case PairOp::MeetT: return detail::meet_t(a, b);
                case PairOp::JoinT: return detail::join_t(a, b);
                case PairOp::MeetK: return detail::meet_k(a, b);
                case PairOp::JoinK: return detail::join_k(a, b);
                case PairOp::Sup: return detail::rb_sup(a, b);
                case PairOp::BNeg: return detail::bneg(a);
                case PairOp::Zero: return detail::rb_zero();
                case PairOp::Imp: return detail::rb_imp(a, b);
                case PairOp::Star: return detail::rb_star(a, b);
                case PairOp::SNeg: return detail::rb_sneg(a);
                case PairOp::OPlus: return detail::rb_oplus(a, b);
                case PairOp::OMinus: return detail::rb_ominus(a, b);
                case PairOp::Sub: return detail::rb_sub(a, b);
            }
            throw bad();
        case AlgebraId::FOUR:
            throw AlgebraError("pair_op applied to the four-valued algebra; use four_op");
    }
    throw bad();
}

// Designated sets. MV_PROD accepts only full positive certainty with no
// negative support; the bilattices accept full positive support whatever
// the negative component says (the classical sub-square then gets {t, b}).
inline bool designated(AlgebraId algebra, const PairValue& v) {
    switch (algebra) {
        case AlgebraId::MV_PROD: return v.pos == 1 && v.neg == 0;
        case AlgebraId::RES_BILAT:
        case AlgebraId::KLEENE_BILAT: return v.pos == 1;
        case AlgebraId::FOUR:
            throw AlgebraError("four-valued designation takes a FourValue");
    }
    return false;
}

inline bool designated(AlgebraId algebra, FourValue v) {
    if (algebra != AlgebraId::FOUR)
        throw AlgebraError("FourValue designation only defined on the four-valued algebra");
    return four_designated(v);
}

}  // namespace parabel

#endif  // PARABEL_ALGEBRAS_HPP
