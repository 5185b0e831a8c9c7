#ifndef PARABEL_LUK_DECIDE_HPP
#define PARABEL_LUK_DECIDE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parabel/bd_model.hpp"  // CapacityError
#include "parabel/linear_program.hpp"
#include "parabel/luk_formula.hpp"
#include "parabel/nnf.hpp"
#include "parabel/pair_value.hpp"
#include "parabel/upper_formula.hpp"

namespace parabel {

// ---------------------------------------------------------------------------
// Piecewise-linear encoding of Lukasiewicz semantics.
//
// Each encoded subformula gets a value variable in [0,1] (shared between
// occurrences of the same subformula); each truncation gets a binary branch
// variable selecting its linear piece. For every 0/1 choice of branch
// variables the rows cut out a polytope, and every atom assignment extends
// to a feasible point whose value variables are the exact semantic values.
//
// Formulas asserted to a known endpoint (premises) are decomposed into pure
// linear rows wherever the connective admits it, which keeps the branch
// count proportional to the conclusion being optimized.
// ---------------------------------------------------------------------------

struct PLVar {
    std::string lp_name;  // "v<n>" for value variables, "b<n>" for branch variables
    bool is_branch;
    std::optional<LukFormula> formula;  // the subformula this variable encodes
};

class PLEncoding {
public:
    std::vector<PLVar> vars;
    std::vector<LinearConstraint> rows;
    std::vector<int> branch_vars;
    bool contradictory_pins = false;

    int var_count() const { return static_cast<int>(vars.size()); }

    const std::map<std::string, int>& atom_vars() const { return atom_var_; }

    // Value of an atom in an LP point, falling back to pinned premises and
    // then to 0 for atoms the constraints never mention.
    Rational atom_value(const std::string& name, const std::vector<Rational>& point) const {
        auto it = atom_var_.find(name);
        if (it != atom_var_.end()) return point[static_cast<std::size_t>(it->second)];
        auto p = pinned_.find(name);
        if (p != pinned_.end()) return p->second;
        return Rational(0);
    }

    LinExpr encode_value(const LukFormula& f) {
        const std::string key = print_luk(f);
        if (auto p = pinned_.find(key); p != pinned_.end()) return LinExpr::of_const(p->second);
        if (auto m = memo_.find(key); m != memo_.end()) return m->second;
        LinExpr e = build(f);
        memo_.emplace(key, e);
        return e;
    }

    // Constrain a formula to an endpoint value (premises). Decomposes
    // through connectives whose endpoint condition is linear.
    void assert_value(const LukFormula& f, int target) {
        const Rational c(target);
        const std::string key = print_luk(f);
        if (auto p = pinned_.find(key); p != pinned_.end()) {
            if (p->second != c) contradictory_pins = true;
            return;
        }
        if (auto m = memo_.find(key); m != memo_.end()) {
            // already encoded as a value; just pin the variable
            rows.push_back(make_row(m->second, Rel::Eq, LinExpr::of_const(c)));
            pinned_.emplace(key, c);
            return;
        }
        switch (f.kind()) {
            case LukFormula::Kind::Var:
                pinned_.emplace(key, c);
                return;
            case LukFormula::Kind::SNeg:
                pinned_.emplace(key, c);
                assert_value(f.lhs(), 1 - target);
                return;
            case LukFormula::Kind::Imp:
                pinned_.emplace(key, c);
                if (target == 1) {
                    rows.push_back(make_row(encode_value(f.lhs()), Rel::Le,
                                            encode_value(f.rhs())));
                } else {
                    assert_value(f.lhs(), 1);
                    assert_value(f.rhs(), 0);
                }
                return;
            case LukFormula::Kind::Min:
                if (target == 1) {
                    pinned_.emplace(key, c);
                    assert_value(f.lhs(), 1);
                    assert_value(f.rhs(), 1);
                    return;
                }
                break;
            case LukFormula::Kind::Max:
                if (target == 0) {
                    pinned_.emplace(key, c);
                    assert_value(f.lhs(), 0);
                    assert_value(f.rhs(), 0);
                    return;
                }
                break;
            case LukFormula::Kind::Strong:
                pinned_.emplace(key, c);
                if (target == 1) {
                    assert_value(f.lhs(), 1);
                    assert_value(f.rhs(), 1);
                } else {
                    rows.push_back(make_row(encode_value(f.lhs()) + encode_value(f.rhs()),
                                            Rel::Le, LinExpr::of_const(Rational(1))));
                }
                return;
            case LukFormula::Kind::Plus:
                pinned_.emplace(key, c);
                if (target == 0) {
                    assert_value(f.lhs(), 0);
                    assert_value(f.rhs(), 0);
                } else {
                    rows.push_back(make_row(encode_value(f.lhs()) + encode_value(f.rhs()),
                                            Rel::Ge, LinExpr::of_const(Rational(1))));
                }
                return;
            case LukFormula::Kind::Minus:
                pinned_.emplace(key, c);
                if (target == 0) {
                    rows.push_back(make_row(encode_value(f.lhs()), Rel::Le,
                                            encode_value(f.rhs())));
                } else {
                    assert_value(f.lhs(), 1);
                    assert_value(f.rhs(), 0);
                }
                return;
        }
        // disjunctive endpoint (min at 0, max at 1): use the full encoding
        LinExpr z = encode_value(f);
        rows.push_back(make_row(z, Rel::Eq, LinExpr::of_const(c)));
        pinned_.emplace(key, c);
    }

private:
    std::map<std::string, LinExpr> memo_;
    std::map<std::string, Rational> pinned_;
    std::map<std::string, int> atom_var_;
    int next_value_ = 0, next_branch_ = 0;

    int new_value_var(std::optional<LukFormula> f) {
        vars.push_back({"v" + std::to_string(next_value_++), false, std::move(f)});
        return var_count() - 1;
    }
    int new_branch_var(const LukFormula& f) {
        vars.push_back({"b" + std::to_string(next_branch_++), true, f});
        const int idx = var_count() - 1;
        branch_vars.push_back(idx);
        rows.push_back(make_row(LinExpr::of_var(idx), Rel::Le,
                                LinExpr::of_const(Rational(1))));
        return idx;
    }

    LinExpr build(const LukFormula& f) {
        const LinExpr one = LinExpr::of_const(Rational(1));
        switch (f.kind()) {
            case LukFormula::Kind::Var: {
                auto it = atom_var_.find(f.var_name());
                if (it != atom_var_.end()) return LinExpr::of_var(it->second);
                const int v = new_value_var(f);
                atom_var_.emplace(f.var_name(), v);
                rows.push_back(make_row(LinExpr::of_var(v), Rel::Le, one));
                return LinExpr::of_var(v);
            }
            case LukFormula::Kind::SNeg:
                return one - encode_value(f.lhs());
            case LukFormula::Kind::Imp:
            case LukFormula::Kind::Plus: {
                const LinExpr x = encode_value(f.lhs());
                const LinExpr y = encode_value(f.rhs());
                const LinExpr w = f.kind() == LukFormula::Kind::Imp ? one - x + y : x + y;
                const LinExpr z = LinExpr::of_var(new_value_var(f));
                const LinExpr b = LinExpr::of_var(new_branch_var(f));
                rows.push_back(make_row(z, Rel::Le, one));
                rows.push_back(make_row(z, Rel::Le, w));
                rows.push_back(make_row(z, Rel::Ge, w - b));
                rows.push_back(make_row(z, Rel::Ge, b));
                rows.push_back(make_row(w, Rel::Le, one + b));
                return z;
            }
            case LukFormula::Kind::Strong:
            case LukFormula::Kind::Minus: {
                const LinExpr x = encode_value(f.lhs());
                const LinExpr y = encode_value(f.rhs());
                const LinExpr w =
                    f.kind() == LukFormula::Kind::Strong ? x + y - Rational(1) : x - y;
                const LinExpr z = LinExpr::of_var(new_value_var(f));
                const LinExpr b = LinExpr::of_var(new_branch_var(f));
                rows.push_back(make_row(z, Rel::Ge, w));
                rows.push_back(make_row(z, Rel::Le, w + (one - b)));
                rows.push_back(make_row(z, Rel::Le, b));
                rows.push_back(make_row(w, Rel::Le, b));
                return z;
            }
            case LukFormula::Kind::Min: {
                const LinExpr x = encode_value(f.lhs());
                const LinExpr y = encode_value(f.rhs());
                const LinExpr z = LinExpr::of_var(new_value_var(f));
                const LinExpr b = LinExpr::of_var(new_branch_var(f));
                rows.push_back(make_row(z, Rel::Le, x));
                rows.push_back(make_row(z, Rel::Le, y));
                rows.push_back(make_row(z, Rel::Ge, x - b));
                rows.push_back(make_row(z, Rel::Ge, y - (one - b)));
                return z;
            }
            case LukFormula::Kind::Max: {
                const LinExpr x = encode_value(f.lhs());
                const LinExpr y = encode_value(f.rhs());
                const LinExpr z = LinExpr::of_var(new_value_var(f));
                const LinExpr b = LinExpr::of_var(new_branch_var(f));
                rows.push_back(make_row(z, Rel::Le, one));
                rows.push_back(make_row(z, Rel::Ge, x));
                rows.push_back(make_row(z, Rel::Ge, y));
                rows.push_back(make_row(z, Rel::Le, x + b));
                rows.push_back(make_row(z, Rel::Le, y + (one - b)));
                return z;
            }
        }
        throw std::logic_error("unhandled Lukasiewicz node");
    }
};

inline PLEncoding encode(const LukFormula& f) {
    PLEncoding enc;
    enc.encode_value(f);
    return enc;
}

// Text dump of an encoding (LP-style; v<n> value vars, b<n> branch vars).
inline std::string export_lp(const PLEncoding& enc, const LinExpr& objective, bool maximize) {
    auto expr_str = [&](const std::vector<std::pair<int, Rational>>& terms,
                        const Rational& constant) {
        std::string s;
        for (const auto& [v, c] : terms) {
            if (c == 0) continue;
            if (!s.empty()) s += " + ";
            s += to_string(c) + " " + enc.vars[static_cast<std::size_t>(v)].lp_name;
        }
        if (constant != 0 || s.empty()) {
            if (!s.empty()) s += " + ";
            s += to_string(constant);
        }
        return s;
    };
    std::string out;
    out += (maximize ? "max: " : "min: ") + expr_str(objective.terms, objective.constant) + ";\n";
    for (std::size_t i = 0; i < enc.rows.size(); ++i) {
        const auto& r = enc.rows[i];
        const char* rel = r.rel == Rel::Le ? "<=" : r.rel == Rel::Ge ? ">=" : "=";
        out += "r" + std::to_string(i) + ": " + expr_str(r.terms, Rational(0)) + " " + rel +
               " " + to_string(r.rhs) + ";\n";
    }
    std::string bins;
    for (int b : enc.branch_vars) {
        if (!bins.empty()) bins += ", ";
        bins += enc.vars[static_cast<std::size_t>(b)].lp_name;
    }
    if (!bins.empty()) out += "int " + bins + ";\n";
    return out;
}

// ---------------------------------------------------------------------------
// Exact branch-and-bound over an encoding.
// ---------------------------------------------------------------------------

struct MILPOutcome {
    bool feasible = false;
    Rational value;
    std::map<std::string, Rational> atoms;  // atom name -> value at the optimum
};

namespace detail {

// Minimizes (or maximizes) an affine objective over an encoding, branching
// on fractional branch variables. `atom_names` lists the atoms to report.
// `semantic_probe` turns an atom assignment into a feasible objective value
// when the assignment satisfies the asserted premises exactly; it seeds the
// incumbent early and keeps the search tree small. Exploration order is
// deterministic, and only strictly better incumbents replace the current
// one, so the reported optimum point is reproducible.
inline MILPOutcome
milp_optimize(const PLEncoding& enc, const LinExpr& objective, bool maximize,
              const std::vector<std::string>& atom_names,
              const std::function<std::optional<Rational>(
                  const std::map<std::string, Rational>&)>& semantic_probe) {
    MILPOutcome best;
    if (enc.contradictory_pins) return best;

    const LinExpr obj = maximize ? objective.negated() : objective;

    struct Node {
        std::vector<std::pair<int, int>> fixings;  // (branch var, 0/1)
    };
    std::vector<Node> stack;
    stack.push_back({});

    auto extract_atoms = [&](const std::vector<Rational>& point) {
        std::map<std::string, Rational> out;
        for (const auto& name : atom_names) out.emplace(name, enc.atom_value(name, point));
        return out;
    };
    auto better = [&](const Rational& candidate) {
        return !best.feasible || (maximize ? candidate > best.value : candidate < best.value);
    };

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        std::vector<LinearConstraint> rows = enc.rows;
        for (const auto& [v, val] : node.fixings)
            rows.push_back(make_row(LinExpr::of_var(v), Rel::Eq,
                                    LinExpr::of_const(Rational(val))));

        const LPResult lp = lp_minimize(enc.var_count(), rows,
                                        std::vector<std::pair<int, Rational>>(
                                            obj.terms.begin(), obj.terms.end()));
        if (lp.status != LPResult::Status::Optimal) continue;  // infeasible branch
        const Rational bound_raw = lp.objective + obj.constant;
        const Rational bound = maximize ? -bound_raw : bound_raw;
        if (best.feasible && (maximize ? bound <= best.value : bound >= best.value)) continue;

        // find the most fractional branch variable
        int branch = -1;
        Rational best_frac_dist(1);
        for (int b : enc.branch_vars) {
            const Rational v = lp.point[static_cast<std::size_t>(b)];
            if (v == 0 || v == 1) continue;
            const Rational dist = abs(v - Rational(1, 2));
            if (branch == -1 || dist < best_frac_dist) {
                branch = b;
                best_frac_dist = dist;
            }
        }

        if (branch == -1) {
            // integral leaf: the LP value is the exact optimum of this region
            if (better(bound)) {
                best.feasible = true;
                best.value = bound;
                best.atoms = extract_atoms(lp.point);
            }
            continue;
        }

        auto atoms = extract_atoms(lp.point);
        if (auto probed = semantic_probe(atoms); probed && better(*probed)) {
            best.feasible = true;
            best.value = *probed;
            best.atoms = std::move(atoms);
        }
        if (best.feasible && (maximize ? bound <= best.value : bound >= best.value)) continue;

        const int first = lp.point[static_cast<std::size_t>(branch)] <= Rational(1, 2) ? 0 : 1;
        Node far = node, near = std::move(node);
        near.fixings.emplace_back(branch, first);
        far.fixings.emplace_back(branch, 1 - first);
        stack.push_back(std::move(far));
        stack.push_back(std::move(near));  // explored first
    }
    return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lukasiewicz consequence.
// ---------------------------------------------------------------------------

struct LukOptions {
    std::size_t atom_cap = 8;
};

struct LukVerdict {
    bool valid = false;
    bool vacuous = false;  // premises unsatisfiable
    std::optional<Rational> optimum;
    std::map<std::string, Rational> countermodel;
};

// Decides whether every [0,1] valuation sending all premises to 1 sends the
// conclusion to 1, by minimizing the conclusion over the premise region.
inline LukVerdict luk_consequence(const std::vector<LukFormula>& gamma, const LukFormula& alpha,
                                  const LukOptions& opts = {}) {
    std::set<std::string> atom_set = alpha.vars();
    for (const auto& g : gamma) g.collect_vars(atom_set);
    if (atom_set.size() > opts.atom_cap)
        throw CapacityError("atom cap exceeded: " + std::to_string(atom_set.size()) +
                            " atoms, cap " + std::to_string(opts.atom_cap));
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

    PLEncoding enc;
    for (const auto& g : gamma) enc.assert_value(g, 1);
    const LinExpr obj = enc.encode_value(alpha);

    auto probe = [&](const std::map<std::string, Rational>& asg) -> std::optional<Rational> {
        for (const auto& g : gamma)
            if (eval_luk(g, asg) != 1) return std::nullopt;
        return eval_luk(alpha, asg);
    };
    const MILPOutcome out = detail::milp_optimize(enc, obj, /*maximize=*/false, atoms, probe);

    LukVerdict v;
    if (!out.feasible) {
        v.valid = true;
        v.vacuous = true;
        return v;
    }
    v.optimum = out.value;
    if (out.value == 1) {
        v.valid = true;
    } else {
        v.valid = false;
        v.countermodel = out.atoms;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Consequence for the lukneg dialect over the product algebra, through the
// two-component reduction: literals p and !p become independent interval
// variables, a formula's components are its own translation and its ^!
// translation, and validity asks the first component to reach 1 while the
// second stays at 0.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string wrapped_upper(const UpperFormula& f) {
    const std::string s = print_upper(f);
    if (f.is_leaf() || f.is_unary()) return s;
    return "(" + s + ")";
}

}  // namespace detail

// The opaque-atom name standing for !f in the interval-logic view.
inline std::string neg_atom_name(const UpperFormula& f) {
    return "!" + detail::wrapped_upper(f);
}

// Reads an nnf formula (bneg over arbitrary subformulas allowed) as a plain
// Lukasiewicz formula whose atoms are belief atoms and !-prefixed formulas.
inline LukFormula luk_view(const UpperFormula& f) {
    switch (f.kind()) {
        case UpperFormula::Kind::ModalAtom: return LukFormula::var(print_upper(f));
        case UpperFormula::Kind::BNeg: return LukFormula::var(neg_atom_name(f.lhs()));
        case UpperFormula::Kind::StrongNeg: return LukFormula::sneg(luk_view(f.lhs()));
        case UpperFormula::Kind::Imp:
            return LukFormula::imp(luk_view(f.lhs()), luk_view(f.rhs()));
        default:
            throw DialectError("only lukneg-dialect formulas translate to the interval view");
    }
}

struct LukNegVerdict {
    bool valid = false;
    bool vacuous = false;
    // countermodel: printed belief atom -> pair of components
    std::map<std::string, PairValue> countermodel;
};

inline LukNegVerdict lukneg_consequence(const std::vector<UpperFormula>& gamma,
                                        const UpperFormula& alpha, const LukOptions& opts = {}) {
    std::vector<UpperFormula> gamma_n;
    gamma_n.reserve(gamma.size());
    for (const auto& g : gamma) gamma_n.push_back(nnf(g));
    const UpperFormula alpha_n = nnf(alpha);

    std::set<LowerFormula> modal;
    alpha_n.collect_modal_args(modal);
    for (const auto& g : gamma_n) g.collect_modal_args(modal);
    if (modal.size() > opts.atom_cap)
        throw CapacityError("atom cap exceeded: " + std::to_string(modal.size()) +
                            " modal atoms, cap " + std::to_string(opts.atom_cap));

    const Dialect d = alpha.dialect();
    std::vector<std::string> pos_names, all_names;
    for (const auto& phi : modal) {
        const UpperFormula atom = UpperFormula::modal_atom(phi, d);
        pos_names.push_back(print_upper(atom));
        all_names.push_back(print_upper(atom));
        all_names.push_back(neg_atom_name(atom));
    }

    std::vector<LukFormula> premises;
    for (const auto& g : gamma_n) {
        premises.push_back(luk_view(g));
        premises.push_back(luk_view(detail::neg_translate_nnf(g)));
    }

    auto run = [&](const UpperFormula& target, bool maximize) {
        PLEncoding enc;
        for (std::size_t i = 0; i < gamma_n.size(); ++i) {
            enc.assert_value(premises[2 * i], 1);
            enc.assert_value(premises[2 * i + 1], 0);
        }
        const LukFormula t = luk_view(maximize ? detail::neg_translate_nnf(target)
                                               : target);
        const LinExpr obj = enc.encode_value(t);
        auto probe =
            [&](const std::map<std::string, Rational>& asg) -> std::optional<Rational> {
            for (std::size_t i = 0; i < gamma_n.size(); ++i) {
                if (eval_luk(premises[2 * i], asg) != 1) return std::nullopt;
                if (eval_luk(premises[2 * i + 1], asg) != 0) return std::nullopt;
            }
            return eval_luk(t, asg);
        };
        return detail::milp_optimize(enc, obj, maximize, all_names, probe);
    };

    LukNegVerdict v;
    const MILPOutcome lo = run(alpha_n, /*maximize=*/false);
    if (!lo.feasible) {
        v.valid = true;
        v.vacuous = true;
        return v;
    }
    auto to_pairs = [&](const std::map<std::string, Rational>& asg) {
        std::map<std::string, PairValue> out;
        for (const auto& name : pos_names)
            out.emplace(name, PairValue{asg.at(name), asg.at("!" + name)});
        return out;
    };
    if (lo.value != 1) {
        v.valid = false;
        v.countermodel = to_pairs(lo.atoms);
        return v;
    }
    const MILPOutcome hi = run(alpha_n, /*maximize=*/true);
    if (hi.feasible && hi.value != 0) {
        v.valid = false;
        v.countermodel = to_pairs(hi.atoms);
        return v;
    }
    v.valid = true;
    return v;
}

// ---------------------------------------------------------------------------
// Grid falsification oracle: exhaustive search over all assignments with
// values in {0, 1/d, ..., 1}, for each denominator d up to the limit. A hit
// is a genuine countermodel; exhaustion proves nothing.
// ---------------------------------------------------------------------------

struct GridOptions {
    long max_denominator = 6;
    unsigned long long budget = 20000000ULL;  // grid points across all denominators
};

namespace detail {

// Flat postfix program for fast repeated evaluation over scaled grids.
class CompiledLuk {
public:
    CompiledLuk(const LukFormula& f, const std::map<std::string, int>& atom_index) {
        compile(f, atom_index);
    }

    long eval(const std::vector<long>& atoms, long d) const {
        stack_.clear();
        for (const auto& [op, arg] : prog_) {
            switch (op) {
                case Op::Push:
                    stack_.push_back(atoms[static_cast<std::size_t>(arg)]);
                    break;
                case Op::SNeg:
                    stack_.back() = d - stack_.back();
                    break;
                default: {
                    const long b = stack_.back();
                    stack_.pop_back();
                    long& a = stack_.back();
                    switch (op) {
                        case Op::Imp: a = std::min(d, d - a + b); break;
                        case Op::Min: a = std::min(a, b); break;
                        case Op::Max: a = std::max(a, b); break;
                        case Op::Strong: a = std::max(0L, a + b - d); break;
                        case Op::Plus: a = std::min(d, a + b); break;
                        case Op::Minus: a = std::max(0L, a - b); break;
                        default: break;
                    }
                }
            }
        }
        return stack_.back();
    }

private:
    enum class Op : unsigned char { Push, Imp, SNeg, Min, Max, Strong, Plus, Minus };
    std::vector<std::pair<Op, int>> prog_;
    mutable std::vector<long> stack_;

    void compile(const LukFormula& f, const std::map<std::string, int>& atom_index) {
        switch (f.kind()) {
            case LukFormula::Kind::Var:
                prog_.emplace_back(Op::Push, atom_index.at(f.var_name()));
                return;
            case LukFormula::Kind::SNeg:
                compile(f.lhs(), atom_index);
                prog_.emplace_back(Op::SNeg, 0);
                return;
            default:
                compile(f.lhs(), atom_index);
                compile(f.rhs(), atom_index);
                switch (f.kind()) {
                    case LukFormula::Kind::Imp: prog_.emplace_back(Op::Imp, 0); break;
                    case LukFormula::Kind::Min: prog_.emplace_back(Op::Min, 0); break;
                    case LukFormula::Kind::Max: prog_.emplace_back(Op::Max, 0); break;
                    case LukFormula::Kind::Strong: prog_.emplace_back(Op::Strong, 0); break;
                    case LukFormula::Kind::Plus: prog_.emplace_back(Op::Plus, 0); break;
                    case LukFormula::Kind::Minus: prog_.emplace_back(Op::Minus, 0); break;
                    default: break;
                }
        }
    }
};

inline void grid_budget_check(std::size_t n_atoms, const GridOptions& opts) {
    unsigned long long total = 0;
    for (long d = 1; d <= opts.max_denominator; ++d) {
        unsigned long long pts = 1;
        for (std::size_t i = 0; i < n_atoms; ++i) {
            if (pts > opts.budget / static_cast<unsigned long long>(d + 1) + 1) {
                pts = opts.budget + 1;
                break;
            }
            pts *= static_cast<unsigned long long>(d + 1);
        }
        total += pts;
        if (total > opts.budget)
            throw CapacityError("grid budget exceeded: more than " +
                                std::to_string(opts.budget) + " points for " +
                                std::to_string(n_atoms) + " atoms at denominator " +
                                std::to_string(opts.max_denominator));
    }
}

// Iterates digit vectors for one denominator in lexicographic order; the
// check receives scaled numerators indexed like the atom list.
template <typename Check>
inline bool grid_scan(std::size_t n_atoms, long d, const Check& check) {
    std::vector<long> digits(n_atoms, 0);
    for (;;) {
        if (check(digits)) return true;
        std::size_t i = n_atoms;
        bool done = true;
        while (i > 0) {
            --i;
            if (++digits[i] <= d) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if (done || n_atoms == 0) return false;
    }
}

}  // namespace detail

inline std::optional<std::map<std::string, Rational>>
grid_falsify(const std::vector<LukFormula>& gamma, const LukFormula& alpha,
             const GridOptions& opts = {}) {
    std::set<std::string> atom_set = alpha.vars();
    for (const auto& g : gamma) g.collect_vars(atom_set);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
    detail::grid_budget_check(atoms.size(), opts);

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < atoms.size(); ++i) index[atoms[i]] = static_cast<int>(i);
    std::vector<detail::CompiledLuk> prem;
    for (const auto& g : gamma) prem.emplace_back(g, index);
    const detail::CompiledLuk conc(alpha, index);

    for (long d = 1; d <= opts.max_denominator; ++d) {
        std::optional<std::map<std::string, Rational>> hit;
        detail::grid_scan(atoms.size(), d, [&](const std::vector<long>& digits) {
            for (const auto& g : prem)
                if (g.eval(digits, d) != d) return false;
            if (conc.eval(digits, d) == d) return false;
            std::map<std::string, Rational> point;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                point.emplace(atoms[i], Rational(digits[i], d));
            hit = std::move(point);
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

// Pair-valued variant for the lukneg dialect: each belief atom contributes
// two grid dimensions (its component and its !-component).
inline std::optional<std::map<std::string, PairValue>>
grid_falsify_pairs(const std::vector<UpperFormula>& gamma, const UpperFormula& alpha,
                   const GridOptions& opts = {}) {
    std::vector<LukFormula> prem;
    for (const auto& g : gamma) {
        const UpperFormula gn = nnf(g);
        prem.push_back(luk_view(gn));
        prem.push_back(luk_view(detail::neg_translate_nnf(gn)));
    }
    const UpperFormula an = nnf(alpha);
    const LukFormula a1 = luk_view(an);
    const LukFormula a2 = luk_view(detail::neg_translate_nnf(an));

    std::set<LowerFormula> modal;
    an.collect_modal_args(modal);
    for (const auto& g : gamma) nnf(g).collect_modal_args(modal);
    std::vector<std::string> pos_names, dims;
    for (const auto& phi : modal) {
        const UpperFormula atom = UpperFormula::modal_atom(phi, alpha.dialect());
        pos_names.push_back(print_upper(atom));
        dims.push_back(print_upper(atom));
        dims.push_back(neg_atom_name(atom));
    }
    detail::grid_budget_check(dims.size(), opts);

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < dims.size(); ++i) index[dims[i]] = static_cast<int>(i);
    std::vector<detail::CompiledLuk> cprem;
    for (const auto& g : prem) cprem.emplace_back(g, index);
    const detail::CompiledLuk c1(a1, index), c2(a2, index);

    for (long d = 1; d <= opts.max_denominator; ++d) {
        std::optional<std::map<std::string, PairValue>> hit;
        detail::grid_scan(dims.size(), d, [&](const std::vector<long>& digits) {
            for (std::size_t i = 0; i < cprem.size(); i += 2) {
                if (cprem[i].eval(digits, d) != d) return false;
                if (cprem[i + 1].eval(digits, d) != 0) return false;
            }
            if (c1.eval(digits, d) == d && c2.eval(digits, d) == 0) return false;
            std::map<std::string, PairValue> point;
            for (std::size_t i = 0; i < pos_names.size(); ++i)
                point.emplace(pos_names[i], PairValue{Rational(digits[2 * i], d),
                                                      Rational(digits[2 * i + 1], d)});
            hit = std::move(point);
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Translation of lukneg consequence into plain Lukasiewicz consequence:
// premises gain their strongly-asserted forms ~!g, and the bookkeeping set
// ties every !-atom to the structure of the formula it negates.
// ---------------------------------------------------------------------------

struct BoxdotTranslation {
    std::vector<LukFormula> boxdot_gamma;  // { ~!g, g : g in gamma }
    std::vector<LukFormula> delta;         // !-axiom instances over all subformulas
    LukFormula alpha;
};

inline BoxdotTranslation boxdot_translate(const std::vector<UpperFormula>& gamma,
                                          const UpperFormula& alpha) {
    std::vector<UpperFormula> gamma_n;
    for (const auto& g : gamma) gamma_n.push_back(nnf(g));
    const UpperFormula alpha_n = nnf(alpha);

    std::set<UpperFormula> subs;
    std::function<void(const UpperFormula&)> collect = [&](const UpperFormula& f) {
        subs.insert(f);
        switch (f.kind()) {
            case UpperFormula::Kind::ModalAtom: return;
            case UpperFormula::Kind::StrongNeg:
            case UpperFormula::Kind::BNeg: collect(f.lhs()); return;
            default:
                collect(f.lhs());
                collect(f.rhs());
        }
    };
    for (const auto& g : gamma_n) collect(g);
    collect(alpha_n);

    BoxdotTranslation out{{}, {}, luk_view(alpha_n)};
    for (const auto& g : gamma_n) {
        out.boxdot_gamma.push_back(
            LukFormula::sneg(LukFormula::var(neg_atom_name(g))));
        out.boxdot_gamma.push_back(luk_view(g));
    }
    for (const auto& s : subs) {
        // !!s <-> s
        out.delta.push_back(LukFormula::iff(
            LukFormula::var(neg_atom_name(UpperFormula::bneg(s))), luk_view(s)));
        // !~s <-> ~!s, for strong-negation subformulas
        if (s.kind() == UpperFormula::Kind::StrongNeg)
            out.delta.push_back(LukFormula::iff(
                LukFormula::var(neg_atom_name(s)),
                LukFormula::sneg(LukFormula::var(neg_atom_name(s.lhs())))));
        // (~!x -> ~!y) <-> ~!(x -> y), for implication subformulas
        if (s.kind() == UpperFormula::Kind::Imp)
            out.delta.push_back(LukFormula::iff(
                LukFormula::imp(
                    LukFormula::sneg(LukFormula::var(neg_atom_name(s.lhs()))),
                    LukFormula::sneg(LukFormula::var(neg_atom_name(s.rhs())))),
                LukFormula::sneg(LukFormula::var(neg_atom_name(s)))));
    }
    return out;
}

}  // namespace parabel

#endif  // PARABEL_LUK_DECIDE_HPP
