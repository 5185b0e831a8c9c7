#ifndef PARABEL_UPPER_FORMULA_HPP
#define PARABEL_UPPER_FORMULA_HPP

#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "parabel/algebras.hpp"
#include "parabel/lower_formula.hpp"

namespace parabel {

// The two modal-language dialects:
//   LUK_NEG  connectives {->, ~, !} over belief atoms,
//   BILAT    connectives {/\t, \/t, /\k, \/k, =>, !, 0} over belief atoms.
// Derived connectives never appear in trees; parsers expand them.
enum class Dialect : unsigned char { LUK_NEG, BILAT };

inline std::string to_string(Dialect d) {
    return d == Dialect::LUK_NEG ? "lukneg" : "bilat";
}

struct DialectError : std::domain_error {
    using std::domain_error::domain_error;
};

// Modal-language formulas. Belief atoms B(phi) wrap event formulas and are
// the only leaves besides the constant 0; modalities never nest.
class UpperFormula {
public:
    enum class Kind : unsigned char {
        ModalAtom,
        StrongNeg,  // ~
        BNeg,       // !
        Imp,        // ->   (LUK_NEG only)
        MeetT,      // /\t  (BILAT only)
        JoinT,      // \/t
        MeetK,      // /\k
        JoinK,      // \/k
        Sup,        // =>
        Zero,       // 0
    };

private:
    struct Node {
        Kind kind;
        Dialect dialect;
        std::shared_ptr<const LowerFormula> arg;  // ModalAtom only
        std::shared_ptr<const Node> lhs, rhs;
    };
    std::shared_ptr<const Node> node_;

    explicit UpperFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static void require(bool ok, const std::string& what) {
        if (!ok) throw DialectError(what);
    }

    static UpperFormula make(Kind k, Dialect d, const UpperFormula* l, const UpperFormula* r) {
        if (l) require(l->dialect() == d, "dialect mismatch in upper formula construction");
        if (r) require(r->dialect() == d, "dialect mismatch in upper formula construction");
        require(k != Kind::Imp || d == Dialect::LUK_NEG, "-> is not primitive in the bilattice dialect");
        const bool bilat_only = k == Kind::MeetT || k == Kind::JoinT || k == Kind::MeetK ||
                                k == Kind::JoinK || k == Kind::Sup || k == Kind::Zero;
        require(!bilat_only || d == Dialect::BILAT,
                "bilattice connective used in the lukneg dialect");
        return UpperFormula(std::make_shared<Node>(
            Node{k, d, nullptr, l ? l->node_ : nullptr, r ? r->node_ : nullptr}));
    }

public:
    UpperFormula() = delete;

    static UpperFormula modal_atom(const LowerFormula& phi, Dialect d) {
        return UpperFormula(std::make_shared<Node>(
            Node{Kind::ModalAtom, d, std::make_shared<LowerFormula>(phi), nullptr, nullptr}));
    }
    static UpperFormula strong_neg(const UpperFormula& a) {
        return make(Kind::StrongNeg, a.dialect(), &a, nullptr);
    }
    static UpperFormula bneg(const UpperFormula& a) {
        return make(Kind::BNeg, a.dialect(), &a, nullptr);
    }
    static UpperFormula imp(const UpperFormula& l, const UpperFormula& r) {
        return make(Kind::Imp, l.dialect(), &l, &r);
    }
    static UpperFormula meet_t(const UpperFormula& l, const UpperFormula& r) {
        return make(Kind::MeetT, l.dialect(), &l, &r);
    }
    static UpperFormula join_t(const UpperFormula& l, const UpperFormula& r) {
        return make(Kind::JoinT, l.dialect(), &l, &r);
    }
    static UpperFormula meet_k(const UpperFormula& l, const UpperFormula& r) {
        return make(Kind::MeetK, l.dialect(), &l, &r);
    }
    static UpperFormula join_k(const UpperFormula& l, const UpperFormula& r) {
        return make(Kind::JoinK, l.dialect(), &l, &r);
    }
    static UpperFormula sup(const UpperFormula& l, const UpperFormula& r) {
        return make(Kind::Sup, l.dialect(), &l, &r);
    }
    static UpperFormula zero() {
        return UpperFormula(std::make_shared<Node>(
            Node{Kind::Zero, Dialect::BILAT, nullptr, nullptr, nullptr}));
    }

    Kind kind() const { return node_->kind; }
    Dialect dialect() const { return node_->dialect; }
    const LowerFormula& modal_arg() const {
        if (kind() != Kind::ModalAtom) throw std::logic_error("modal_arg on non-atom");
        return *node_->arg;
    }
    UpperFormula lhs() const { return UpperFormula(node_->lhs); }
    UpperFormula rhs() const { return UpperFormula(node_->rhs); }
    bool is_unary() const { return kind() == Kind::StrongNeg || kind() == Kind::BNeg; }
    bool is_leaf() const { return kind() == Kind::ModalAtom || kind() == Kind::Zero; }

    int compare(const UpperFormula& o) const {
        if (node_ == o.node_) return 0;
        if (kind() != o.kind()) return kind() < o.kind() ? -1 : 1;
        switch (kind()) {
            case Kind::ModalAtom: return node_->arg->compare(*o.node_->arg);
            case Kind::Zero: return 0;
            case Kind::StrongNeg:
            case Kind::BNeg: return lhs().compare(o.lhs());
            default: {
                int c = lhs().compare(o.lhs());
                return c != 0 ? c : rhs().compare(o.rhs());
            }
        }
    }
    bool operator==(const UpperFormula& o) const { return compare(o) == 0; }
    bool operator!=(const UpperFormula& o) const { return compare(o) != 0; }
    bool operator<(const UpperFormula& o) const { return compare(o) < 0; }

    void collect_modal_args(std::set<LowerFormula>& out) const {
        switch (kind()) {
            case Kind::ModalAtom: out.insert(modal_arg()); return;
            case Kind::Zero: return;
            case Kind::StrongNeg:
            case Kind::BNeg: lhs().collect_modal_args(out); return;
            default:
                lhs().collect_modal_args(out);
                rhs().collect_modal_args(out);
        }
    }
    std::set<LowerFormula> modal_args() const {
        std::set<LowerFormula> out;
        collect_modal_args(out);
        return out;
    }
};

namespace detail {

// Precedence levels: unary 4 > {/\t,/\k} 3 > {\/t,\/k} 2 > {->,=>} 1.
// Binary levels 2 and 3 associate to the left, implications to the right.
inline int upper_prec(UpperFormula::Kind k) {
    switch (k) {
        case UpperFormula::Kind::ModalAtom:
        case UpperFormula::Kind::Zero:
        case UpperFormula::Kind::StrongNeg:
        case UpperFormula::Kind::BNeg: return 4;
        case UpperFormula::Kind::MeetT:
        case UpperFormula::Kind::MeetK: return 3;
        case UpperFormula::Kind::JoinT:
        case UpperFormula::Kind::JoinK: return 2;
        case UpperFormula::Kind::Imp:
        case UpperFormula::Kind::Sup: return 1;
    }
    return 0;
}

inline const char* upper_op_token(UpperFormula::Kind k) {
    switch (k) {
        case UpperFormula::Kind::Imp: return "->";
        case UpperFormula::Kind::Sup: return "=>";
        case UpperFormula::Kind::MeetT: return "/\\t";
        case UpperFormula::Kind::JoinT: return "\\/t";
        case UpperFormula::Kind::MeetK: return "/\\k";
        case UpperFormula::Kind::JoinK: return "\\/k";
        default: return "?";
    }
}

inline void print_upper_rec(const UpperFormula& f, int parent_prec, bool tight_side,
                            std::string& out) {
    const int prec = upper_prec(f.kind());
    const bool parens = prec < parent_prec || (prec == parent_prec && tight_side && prec < 4);
    if (parens) out += "(";
    switch (f.kind()) {
        case UpperFormula::Kind::ModalAtom:
            out += "B(" + print_lower(f.modal_arg()) + ")";
            break;
        case UpperFormula::Kind::Zero:
            out += "0";
            break;
        case UpperFormula::Kind::StrongNeg:
            out += "~";
            print_upper_rec(f.lhs(), 4, false, out);
            break;
        case UpperFormula::Kind::BNeg:
            out += "!";
            print_upper_rec(f.lhs(), 4, false, out);
            break;
        case UpperFormula::Kind::Imp:
        case UpperFormula::Kind::Sup:
            // right associative: the left child is the tight side
            print_upper_rec(f.lhs(), prec, true, out);
            out += " ";
            out += upper_op_token(f.kind());
            out += " ";
            print_upper_rec(f.rhs(), prec, false, out);
            break;
        default:
            print_upper_rec(f.lhs(), prec, false, out);
            out += " ";
            out += upper_op_token(f.kind());
            out += " ";
            print_upper_rec(f.rhs(), prec, true, out);
            break;
    }
    if (parens) out += ")";
}

}  // namespace detail

inline std::string print_upper(const UpperFormula& f) {
    std::string out;
    detail::print_upper_rec(f, 0, false, out);
    return out;
}

// Evaluation in a pair-valued algebra, belief atoms resolved by `lookup`.
// The dialect constrains which algebras fit: LUK_NEG trees evaluate in
// MV_PROD; BILAT trees evaluate in RES_BILAT, or in KLEENE_BILAT as long as
// they stay inside its {/\t,\/t,/\k,\/k,!} signature.
inline PairValue eval_upper(const UpperFormula& f,
                            const std::function<PairValue(const LowerFormula&)>& lookup,
                            AlgebraId algebra) {
    switch (f.kind()) {
        case UpperFormula::Kind::ModalAtom: return lookup(f.modal_arg());
        case UpperFormula::Kind::Zero: return pair_op(algebra, PairOp::Zero);
        case UpperFormula::Kind::StrongNeg:
            return pair_op(algebra, PairOp::SNeg, eval_upper(f.lhs(), lookup, algebra));
        case UpperFormula::Kind::BNeg:
            return pair_op(algebra, PairOp::BNeg, eval_upper(f.lhs(), lookup, algebra));
        case UpperFormula::Kind::Imp:
            return pair_op(algebra, PairOp::Imp, eval_upper(f.lhs(), lookup, algebra),
                           eval_upper(f.rhs(), lookup, algebra));
        case UpperFormula::Kind::MeetT:
            return pair_op(algebra, PairOp::MeetT, eval_upper(f.lhs(), lookup, algebra),
                           eval_upper(f.rhs(), lookup, algebra));
        case UpperFormula::Kind::JoinT:
            return pair_op(algebra, PairOp::JoinT, eval_upper(f.lhs(), lookup, algebra),
                           eval_upper(f.rhs(), lookup, algebra));
        case UpperFormula::Kind::MeetK:
            return pair_op(algebra, PairOp::MeetK, eval_upper(f.lhs(), lookup, algebra),
                           eval_upper(f.rhs(), lookup, algebra));
        case UpperFormula::Kind::JoinK:
            return pair_op(algebra, PairOp::JoinK, eval_upper(f.lhs(), lookup, algebra),
                           eval_upper(f.rhs(), lookup, algebra));
        case UpperFormula::Kind::Sup:
            return pair_op(algebra, PairOp::Sup, eval_upper(f.lhs(), lookup, algebra),
                           eval_upper(f.rhs(), lookup, algebra));
    }
    throw std::logic_error("unhandled upper formula node");
}

}  // namespace parabel

#endif  // PARABEL_UPPER_FORMULA_HPP
