#ifndef PARABEL_LOWER_FORMULA_HPP
#define PARABEL_LOWER_FORMULA_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace parabel {

// Event-language formulas: atoms closed under !, & and |. Immutable trees
// with shared structure; cheap to copy, safe to use concurrently.
class LowerFormula {
public:
    enum class Kind : unsigned char { Atom, Neg, And, Or };

private:
    struct Node {
        Kind kind;
        std::string name;  // Atom only
        std::shared_ptr<const Node> lhs, rhs;
    };
    std::shared_ptr<const Node> node_;

    explicit LowerFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

public:
    LowerFormula() = delete;

    static bool valid_atom_name(const std::string& name) {
        if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
        for (char c : name)
            if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
        return true;
    }

    static LowerFormula atom(const std::string& name) {
        if (!valid_atom_name(name))
            throw std::invalid_argument("invalid atom name: '" + name + "'");
        return LowerFormula(std::make_shared<Node>(Node{Kind::Atom, name, nullptr, nullptr}));
    }
    static LowerFormula neg(const LowerFormula& f) {
        return LowerFormula(std::make_shared<Node>(Node{Kind::Neg, "", f.node_, nullptr}));
    }
    static LowerFormula conj(const LowerFormula& l, const LowerFormula& r) {
        return LowerFormula(std::make_shared<Node>(Node{Kind::And, "", l.node_, r.node_}));
    }
    static LowerFormula disj(const LowerFormula& l, const LowerFormula& r) {
        return LowerFormula(std::make_shared<Node>(Node{Kind::Or, "", l.node_, r.node_}));
    }

    Kind kind() const { return node_->kind; }
    const std::string& atom_name() const { return node_->name; }
    LowerFormula lhs() const { return LowerFormula(node_->lhs); }
    LowerFormula rhs() const { return LowerFormula(node_->rhs); }

    int compare(const LowerFormula& o) const {
        if (node_ == o.node_) return 0;
        if (node_->kind != o.node_->kind)
            return node_->kind < o.node_->kind ? -1 : 1;
        switch (node_->kind) {
            case Kind::Atom:
                return node_->name.compare(o.node_->name) < 0   ? -1
                       : node_->name.compare(o.node_->name) > 0 ? 1
                                                                : 0;
            case Kind::Neg:
                return lhs().compare(o.lhs());
            case Kind::And:
            case Kind::Or: {
                int c = lhs().compare(o.lhs());
                return c != 0 ? c : rhs().compare(o.rhs());
            }
        }
        return 0;
    }

    bool operator==(const LowerFormula& o) const { return compare(o) == 0; }
    bool operator!=(const LowerFormula& o) const { return compare(o) != 0; }
    bool operator<(const LowerFormula& o) const { return compare(o) < 0; }

    int depth() const {
        switch (kind()) {
            case Kind::Atom: return 0;
            case Kind::Neg: return 1 + lhs().depth();
            default: return 1 + std::max(lhs().depth(), rhs().depth());
        }
    }

    void collect_atoms(std::set<std::string>& out) const {
        switch (kind()) {
            case Kind::Atom: out.insert(node_->name); return;
            case Kind::Neg: lhs().collect_atoms(out); return;
            default:
                lhs().collect_atoms(out);
                rhs().collect_atoms(out);
        }
    }
    std::set<std::string> atoms() const {
        std::set<std::string> out;
        collect_atoms(out);
        return out;
    }
};

// Canonical printer: single spaces around binary operators, parentheses
// only where precedence (! > & > |) or right-nesting of an equal-precedence
// binary requires them, so parsing the output restores the exact tree.
namespace detail {

inline int lower_prec(LowerFormula::Kind k) {
    switch (k) {
        case LowerFormula::Kind::Atom: return 3;
        case LowerFormula::Kind::Neg: return 3;
        case LowerFormula::Kind::And: return 2;
        case LowerFormula::Kind::Or: return 1;
    }
    return 0;
}

inline void print_lower_rec(const LowerFormula& f, int parent_prec, bool right_child,
                            std::string& out) {
    const int prec = lower_prec(f.kind());
    const bool parens =
        prec < parent_prec || (prec == parent_prec && right_child && prec < 3);
    if (parens) out += "(";
    switch (f.kind()) {
        case LowerFormula::Kind::Atom:
            out += f.atom_name();
            break;
        case LowerFormula::Kind::Neg:
            out += "!";
            print_lower_rec(f.lhs(), 3, false, out);
            break;
        case LowerFormula::Kind::And:
            print_lower_rec(f.lhs(), prec, false, out);
            out += " & ";
            print_lower_rec(f.rhs(), prec, true, out);
            break;
        case LowerFormula::Kind::Or:
            print_lower_rec(f.lhs(), prec, false, out);
            out += " | ";
            print_lower_rec(f.rhs(), prec, true, out);
            break;
    }
    if (parens) out += ")";
}

}  // namespace detail

inline std::string print_lower(const LowerFormula& f) {
    std::string out;
    detail::print_lower_rec(f, 0, false, out);
    return out;
}

}  // namespace parabel

#endif  // PARABEL_LOWER_FORMULA_HPP
