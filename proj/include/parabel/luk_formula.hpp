#ifndef PARABEL_LUK_FORMULA_HPP
#define PARABEL_LUK_FORMULA_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "parabel/algebras.hpp"
#include "parabel/parser.hpp"
#include "parabel/rational.hpp"

namespace parabel {

// Plain Lukasiewicz formulas over the unit interval. Atoms are opaque
// strings, which lets belief atoms such as "B(p)" or negated-formula atoms
// flow through the decision machinery unchanged.
class LukFormula {
public:
    enum class Kind : unsigned char {
        Var,
        Imp,     // ->   min{1, 1-a+b}
        SNeg,    // ~    1-a
        Min,     // &    min
        Max,     // |    max
        Strong,  // *    max{0, a+b-1}
        Plus,    // (+)  min{1, a+b}
        Minus,   // (-)  max{0, a-b}
    };

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> lhs, rhs;
    };
    std::shared_ptr<const Node> node_;
    explicit LukFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static LukFormula binary(Kind k, const LukFormula& l, const LukFormula& r) {
        return LukFormula(std::make_shared<Node>(Node{k, "", l.node_, r.node_}));
    }

public:
    LukFormula() = delete;

    static LukFormula var(const std::string& name) {
        if (name.empty()) throw std::invalid_argument("empty atom name");
        return LukFormula(std::make_shared<Node>(Node{Kind::Var, name, nullptr, nullptr}));
    }
    static LukFormula imp(const LukFormula& l, const LukFormula& r) { return binary(Kind::Imp, l, r); }
    static LukFormula sneg(const LukFormula& a) {
        return LukFormula(std::make_shared<Node>(Node{Kind::SNeg, "", a.node_, nullptr}));
    }
    static LukFormula min(const LukFormula& l, const LukFormula& r) { return binary(Kind::Min, l, r); }
    static LukFormula max(const LukFormula& l, const LukFormula& r) { return binary(Kind::Max, l, r); }
    static LukFormula strong(const LukFormula& l, const LukFormula& r) { return binary(Kind::Strong, l, r); }
    static LukFormula plus(const LukFormula& l, const LukFormula& r) { return binary(Kind::Plus, l, r); }
    static LukFormula minus(const LukFormula& l, const LukFormula& r) { return binary(Kind::Minus, l, r); }
    // a <-> b := (a -> b) * (b -> a)
    static LukFormula iff(const LukFormula& l, const LukFormula& r) {
        return strong(imp(l, r), imp(r, l));
    }

    Kind kind() const { return node_->kind; }
    const std::string& var_name() const { return node_->name; }
    LukFormula lhs() const { return LukFormula(node_->lhs); }
    LukFormula rhs() const { return LukFormula(node_->rhs); }
    bool is_unary() const { return kind() == Kind::SNeg; }
    bool is_leaf() const { return kind() == Kind::Var; }

    int compare(const LukFormula& o) const {
        if (node_ == o.node_) return 0;
        if (kind() != o.kind()) return kind() < o.kind() ? -1 : 1;
        if (kind() == Kind::Var) {
            const int c = node_->name.compare(o.node_->name);
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        const int c = lhs().compare(o.lhs());
        if (c != 0 || is_unary()) return c;
        return rhs().compare(o.rhs());
    }
    bool operator==(const LukFormula& o) const { return compare(o) == 0; }
    bool operator!=(const LukFormula& o) const { return compare(o) != 0; }
    bool operator<(const LukFormula& o) const { return compare(o) < 0; }

    void collect_vars(std::set<std::string>& out) const {
        switch (kind()) {
            case Kind::Var: out.insert(node_->name); return;
            case Kind::SNeg: lhs().collect_vars(out); return;
            default:
                lhs().collect_vars(out);
                rhs().collect_vars(out);
        }
    }
    std::set<std::string> vars() const {
        std::set<std::string> out;
        collect_vars(out);
        return out;
    }

    std::size_t connective_count() const {
        switch (kind()) {
            case Kind::Var: return 0;
            case Kind::SNeg: return 1 + lhs().connective_count();
            default: return 1 + lhs().connective_count() + rhs().connective_count();
        }
    }
};

// Exact evaluation under a rational assignment.
inline Rational eval_luk(const LukFormula& f, const std::map<std::string, Rational>& asg) {
    switch (f.kind()) {
        case LukFormula::Kind::Var: {
            auto it = asg.find(f.var_name());
            if (it == asg.end())
                throw std::invalid_argument("assignment misses atom " + f.var_name());
            return it->second;
        }
        case LukFormula::Kind::Imp: return luk_imp(eval_luk(f.lhs(), asg), eval_luk(f.rhs(), asg));
        case LukFormula::Kind::SNeg: return luk_neg(eval_luk(f.lhs(), asg));
        case LukFormula::Kind::Min:
            return std::min(eval_luk(f.lhs(), asg), eval_luk(f.rhs(), asg));
        case LukFormula::Kind::Max:
            return std::max(eval_luk(f.lhs(), asg), eval_luk(f.rhs(), asg));
        case LukFormula::Kind::Strong:
            return luk_and(eval_luk(f.lhs(), asg), eval_luk(f.rhs(), asg));
        case LukFormula::Kind::Plus:
            return luk_oplus(eval_luk(f.lhs(), asg), eval_luk(f.rhs(), asg));
        case LukFormula::Kind::Minus:
            return luk_ominus(eval_luk(f.lhs(), asg), eval_luk(f.rhs(), asg));
    }
    throw std::logic_error("unhandled Lukasiewicz node");
}

// Fast evaluation over the grid {0, 1/d, ..., 1}, represented by integer
// numerators 0..d. Every connective keeps the denominator.
inline long eval_luk_scaled(const LukFormula& f, const std::map<std::string, long>& asg,
                            long d) {
    switch (f.kind()) {
        case LukFormula::Kind::Var: return asg.at(f.var_name());
        case LukFormula::Kind::Imp:
            return std::min(d, d - eval_luk_scaled(f.lhs(), asg, d) +
                                   eval_luk_scaled(f.rhs(), asg, d));
        case LukFormula::Kind::SNeg: return d - eval_luk_scaled(f.lhs(), asg, d);
        case LukFormula::Kind::Min:
            return std::min(eval_luk_scaled(f.lhs(), asg, d), eval_luk_scaled(f.rhs(), asg, d));
        case LukFormula::Kind::Max:
            return std::max(eval_luk_scaled(f.lhs(), asg, d), eval_luk_scaled(f.rhs(), asg, d));
        case LukFormula::Kind::Strong:
            return std::max(0L, eval_luk_scaled(f.lhs(), asg, d) +
                                    eval_luk_scaled(f.rhs(), asg, d) - d);
        case LukFormula::Kind::Plus:
            return std::min(d, eval_luk_scaled(f.lhs(), asg, d) +
                                   eval_luk_scaled(f.rhs(), asg, d));
        case LukFormula::Kind::Minus:
            return std::max(0L, eval_luk_scaled(f.lhs(), asg, d) -
                                    eval_luk_scaled(f.rhs(), asg, d));
    }
    throw std::logic_error("unhandled Lukasiewicz node");
}

namespace detail {

// Precedence: unary 4 > {*, &} 3 > {|, (+), (-)} 2 > -> 1; the implication
// associates to the right, the rest to the left.
inline int luk_prec(LukFormula::Kind k) {
    switch (k) {
        case LukFormula::Kind::Var:
        case LukFormula::Kind::SNeg: return 4;
        case LukFormula::Kind::Strong:
        case LukFormula::Kind::Min: return 3;
        case LukFormula::Kind::Max:
        case LukFormula::Kind::Plus:
        case LukFormula::Kind::Minus: return 2;
        case LukFormula::Kind::Imp: return 1;
    }
    return 0;
}

inline const char* luk_token(LukFormula::Kind k) {
    switch (k) {
        case LukFormula::Kind::Imp: return "->";
        case LukFormula::Kind::Min: return "&";
        case LukFormula::Kind::Max: return "|";
        case LukFormula::Kind::Strong: return "*";
        case LukFormula::Kind::Plus: return "(+)";
        case LukFormula::Kind::Minus: return "(-)";
        default: return "?";
    }
}

inline void print_luk_rec(const LukFormula& f, int parent_prec, bool tight_side,
                          std::string& out) {
    const int prec = luk_prec(f.kind());
    const bool parens = prec < parent_prec || (prec == parent_prec && tight_side && prec < 4);
    if (parens) out += "(";
    switch (f.kind()) {
        case LukFormula::Kind::Var:
            out += f.var_name();
            break;
        case LukFormula::Kind::SNeg:
            out += "~";
            print_luk_rec(f.lhs(), 4, false, out);
            break;
        case LukFormula::Kind::Imp:
            print_luk_rec(f.lhs(), prec, true, out);
            out += " -> ";
            print_luk_rec(f.rhs(), prec, false, out);
            break;
        default:
            print_luk_rec(f.lhs(), prec, false, out);
            out += " ";
            out += luk_token(f.kind());
            out += " ";
            print_luk_rec(f.rhs(), prec, true, out);
            break;
    }
    if (parens) out += ")";
}

}  // namespace detail

inline std::string print_luk(const LukFormula& f) {
    std::string out;
    detail::print_luk_rec(f, 0, false, out);
    return out;
}

namespace detail {

class LukParser {
public:
    explicit LukParser(const std::string& text) : toks_(tokenize(text)) {}

    LukFormula parse() {
        LukFormula f = parse_imp();
        if (cur().kind != Tok::End)
            throw ParseError("unexpected token '" + cur().text + "'", cur().offset);
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Token& cur() const { return toks_[pos_]; }

    LukFormula parse_imp() {
        LukFormula f = parse_add();
        if (cur().kind == Tok::Arrow) {
            ++pos_;
            return LukFormula::imp(f, parse_imp());
        }
        if (cur().kind == Tok::Iff) {
            ++pos_;
            return LukFormula::iff(f, parse_imp());
        }
        return f;
    }
    LukFormula parse_add() {
        LukFormula f = parse_mult();
        for (;;) {
            if (cur().kind == Tok::Pipe) {
                ++pos_;
                f = LukFormula::max(f, parse_mult());
            } else if (cur().kind == Tok::OPlus) {
                ++pos_;
                f = LukFormula::plus(f, parse_mult());
            } else if (cur().kind == Tok::OMinus) {
                ++pos_;
                f = LukFormula::minus(f, parse_mult());
            } else {
                return f;
            }
        }
    }
    LukFormula parse_mult() {
        LukFormula f = parse_unary();
        for (;;) {
            if (cur().kind == Tok::Amp) {
                ++pos_;
                f = LukFormula::min(f, parse_unary());
            } else if (cur().kind == Tok::Star) {
                ++pos_;
                f = LukFormula::strong(f, parse_unary());
            } else {
                return f;
            }
        }
    }
    LukFormula parse_unary() {
        const Token t = cur();
        switch (t.kind) {
            case Tok::Tilde:
                ++pos_;
                return LukFormula::sneg(parse_unary());
            case Tok::Atom:
                ++pos_;
                return LukFormula::var(t.text);
            case Tok::LParen: {
                ++pos_;
                LukFormula f = parse_imp();
                if (cur().kind != Tok::RParen)
                    throw ParseError("expected ')'", cur().offset);
                ++pos_;
                return f;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.offset);
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.offset);
        }
    }
};

}  // namespace detail

inline LukFormula parse_luk(const std::string& text) {
    return detail::LukParser(text).parse();
}

}  // namespace parabel

#endif  // PARABEL_LUK_FORMULA_HPP
