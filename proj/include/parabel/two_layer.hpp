#ifndef PARABEL_TWO_LAYER_HPP
#define PARABEL_TWO_LAYER_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "parabel/algebras.hpp"
#include "parabel/bd_model.hpp"
#include "parabel/nnf.hpp"
#include "parabel/sources.hpp"
#include "parabel/upper_formula.hpp"

namespace parabel {

// A two-layer frame with its valuation: an event model, probabilistic
// sources over it, an aggregation strategy interpreting the belief modality,
// and the algebra in which modal formulas are evaluated.
class TwoLayerModel {
public:
    TwoLayerModel(BDModel base, std::vector<Source> sources, AggStrategy strategy,
                  AlgebraId upper)
        : base_(std::move(base)),
          sources_(std::move(sources)),
          strategy_(strategy),
          upper_(upper) {
        if (sources_.empty()) throw std::invalid_argument("a model needs at least one source");
        if (upper_ == AlgebraId::FOUR)
            throw std::invalid_argument("the upper algebra must be pair-valued");
        for (const auto& s : sources_)
            if (s.mass.size() != base_.num_states())
                throw std::invalid_argument("source '" + s.label +
                                            "' has a mass function over a different state set");
    }

    const BDModel& base() const { return base_; }
    const std::vector<Source>& sources() const { return sources_; }
    AggStrategy strategy() const { return strategy_; }
    AlgebraId upper() const { return upper_; }

    // ||B phi||: the aggregated measure pair. Memoized; the fill is
    // idempotent so concurrent lookups are safe.
    PairValue modal_value(const LowerFormula& phi) const {
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find(phi);
            if (it != memo_.end()) return it->second;
        }
        PairValue v = aggregate(strategy_, sources_, base_, phi);
        std::lock_guard<std::mutex> lock(memo_mutex_);
        return memo_.emplace(phi, std::move(v)).first->second;
    }

    // Lower-layer consequence, unchanged by the modal machinery.
    BDVerdict entails_lower(const std::vector<LowerFormula>& gamma, const LowerFormula& phi,
                            std::size_t max_atoms = 10) const {
        return entails_bd(gamma, phi, max_atoms);
    }

private:
    BDModel base_;
    std::vector<Source> sources_;
    AggStrategy strategy_;
    AlgebraId upper_;
    mutable std::map<LowerFormula, PairValue> memo_;
    mutable std::mutex memo_mutex_;
};

namespace detail {

inline bool bd_shaped(const UpperFormula& a) {
    switch (a.kind()) {
        case UpperFormula::Kind::ModalAtom: return true;
        case UpperFormula::Kind::BNeg: return bd_shaped(a.lhs());
        case UpperFormula::Kind::MeetT:
        case UpperFormula::Kind::JoinT:
        case UpperFormula::Kind::MeetK:
        case UpperFormula::Kind::JoinK:
            return bd_shaped(a.lhs()) && bd_shaped(a.rhs());
        default: return false;
    }
}

}  // namespace detail

// Evaluates a modal formula in the model's upper algebra, resolving belief
// atoms through modal_value. The formula's dialect has to fit the algebra:
// lukneg formulas evaluate in mv_prod, bilattice formulas in res_bilat, and
// in kleene_bilat only when they stay inside the {/\t,\/t,/\k,\/k,!} shape.
inline PairValue eval_upper_in_model(const TwoLayerModel& m, const UpperFormula& alpha) {
    switch (m.upper()) {
        case AlgebraId::MV_PROD:
            if (alpha.dialect() != Dialect::LUK_NEG)
                throw DialectError("mv_prod models evaluate lukneg-dialect formulas");
            break;
        case AlgebraId::RES_BILAT:
            if (alpha.dialect() != Dialect::BILAT)
                throw DialectError("res_bilat models evaluate bilat-dialect formulas");
            break;
        case AlgebraId::KLEENE_BILAT:
            if (alpha.dialect() != Dialect::BILAT || !detail::bd_shaped(alpha))
                throw DialectError(
                    "kleene_bilat models evaluate bilattice formulas without => or 0");
            break;
        default:
            throw DialectError("unsupported upper algebra");
    }
    return eval_upper(
        alpha, [&m](const LowerFormula& phi) { return m.modal_value(phi); }, m.upper());
}

inline bool valid_in_model(const TwoLayerModel& m, const UpperFormula& alpha) {
    return designated(m.upper(), eval_upper_in_model(m, alpha));
}

// ---------------------------------------------------------------------------
// Modal axiom checking.
// ---------------------------------------------------------------------------

// The two modal axiom sets: the additive set pairs the swap-negation axiom
// with the inclusion-exclusion identity for belief (and its monotonicity
// rule); the monotone set keeps only swap-negation and monotonicity.
enum class ModalAxiomSet : unsigned char { Additive, Monotone };

struct AxiomResult {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct ModalAxiomReport {
    std::vector<AxiomResult> axioms;
    bool all_ok() const {
        for (const auto& a : axioms)
            if (!a.ok()) return false;
        return true;
    }
};

inline ModalAxiomReport check_modal_axioms(const TwoLayerModel& m,
                                           const std::vector<LowerFormula>& universe,
                                           ModalAxiomSet set, std::size_t max_atoms = 10,
                                           std::size_t max_failures = 25) {
    ModalAxiomReport report;
    auto fail = [&](AxiomResult& r, const std::string& detail) {
        if (r.failures.size() < max_failures) r.failures.push_back(detail);
    };

    const bool has_truncated_ops =
        m.upper() == AlgebraId::MV_PROD || m.upper() == AlgebraId::RES_BILAT;

    if (set == ModalAxiomSet::Additive) {
        // B(phi|psi) <-> (B(phi) (-) B(phi&psi)) (+) B(psi), as an exact
        // equality of values; an equivalence is designated iff both sides
        // evaluate to the same pair.
        if (has_truncated_ops) {
            AxiomResult alg{"additivity", 0, {}};
            for (const auto& phi : universe) {
                for (const auto& psi : universe) {
                    ++alg.instances;
                    const PairValue lhs = m.modal_value(LowerFormula::disj(phi, psi));
                    const PairValue rhs = pair_op(
                        m.upper(), PairOp::OPlus,
                        pair_op(m.upper(), PairOp::OMinus, m.modal_value(phi),
                                m.modal_value(LowerFormula::conj(phi, psi))),
                        m.modal_value(psi));
                    if (lhs != rhs)
                        fail(alg, "phi=" + print_lower(phi) + " psi=" + print_lower(psi) +
                                      ": B(phi|psi)=" + to_string(lhs) +
                                      " but (B(phi) (-) B(phi&psi)) (+) B(psi)=" +
                                      to_string(rhs));
                }
            }
            report.axioms.push_back(std::move(alg));
        }

        // The same content as plain rational arithmetic, without truncation:
        // p(phi|psi) = (p(phi) - p(phi&psi)) + p(psi) in both components.
        AxiomResult num{"additivity-numeric", 0, {}};
        for (const auto& phi : universe) {
            for (const auto& psi : universe) {
                ++num.instances;
                const PairValue vor = m.modal_value(LowerFormula::disj(phi, psi));
                const PairValue vand = m.modal_value(LowerFormula::conj(phi, psi));
                const PairValue vphi = m.modal_value(phi);
                const PairValue vpsi = m.modal_value(psi);
                if (vor.pos + vand.pos != vphi.pos + vpsi.pos ||
                    vor.neg + vand.neg != vphi.neg + vpsi.neg)
                    fail(num, "phi=" + print_lower(phi) + " psi=" + print_lower(psi) +
                                  ": p(or)=" + to_string(vor) + " p(and)=" + to_string(vand) +
                                  " p(phi)=" + to_string(vphi) + " p(psi)=" + to_string(vpsi));
            }
        }
        report.axioms.push_back(std::move(num));
    }

    {
        // B!phi <-> !B(phi): exact value equality.
        AxiomResult neg{"neg-swap", 0, {}};
        for (const auto& phi : universe) {
            ++neg.instances;
            const PairValue lhs = m.modal_value(LowerFormula::neg(phi));
            const PairValue rhs =
                pair_op(m.upper(), PairOp::BNeg, m.modal_value(phi));
            if (lhs != rhs)
                fail(neg, "phi=" + print_lower(phi) + ": B(!phi)=" + to_string(lhs) +
                              " != !B(phi)=" + to_string(rhs));
        }
        report.axioms.push_back(std::move(neg));
    }

    {
        // phi |- psi  /  B(phi) -> B(psi). Where the algebra has an
        // implication the instance must be designated; in kleene_bilat the
        // rule is read directly as the truth order on values.
        AxiomResult rule{"monotonicity-rule", 0, {}};
        for (const auto& phi : universe) {
            for (const auto& psi : universe) {
                if (!entails_bd(phi, psi, max_atoms).holds) continue;
                ++rule.instances;
                const PairValue a = m.modal_value(phi);
                const PairValue b = m.modal_value(psi);
                bool ok;
                if (has_truncated_ops)
                    ok = designated(m.upper(), pair_op(m.upper(), PairOp::Imp, a, b));
                else
                    ok = pair_leq_t(a, b);
                if (!ok)
                    fail(rule, print_lower(phi) + " |- " + print_lower(psi) + " but B=" +
                                   to_string(a) + " vs " + to_string(b));
            }
        }
        report.axioms.push_back(std::move(rule));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Universe enumeration.
// ---------------------------------------------------------------------------

struct Universe {
    std::vector<LowerFormula> formulas;
    bool truncated = false;
};

// All formulas up to the given connective depth over the atom list, in a
// deterministic order: atoms first, then per level all negations followed by
// all conjunctions and disjunctions of earlier formulas. Generation stops
// once max_size formulas exist (truncated is set).
inline Universe build_universe(const std::vector<std::string>& atoms, int max_depth,
                               std::size_t max_size = 2000) {
    Universe u;
    auto push = [&](const LowerFormula& f) {
        if (u.formulas.size() >= max_size) {
            u.truncated = true;
            return false;
        }
        u.formulas.push_back(f);
        return true;
    };
    std::size_t level_begin = 0;
    for (const auto& a : atoms)
        if (!push(LowerFormula::atom(a))) return u;
    for (int d = 1; d <= max_depth; ++d) {
        const std::size_t level_end = u.formulas.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            if (!push(LowerFormula::neg(u.formulas[i]))) return u;
        for (std::size_t i = 0; i < level_end; ++i) {
            for (std::size_t j = 0; j < level_end; ++j) {
                // at least one operand from the newest level, so depth grows
                if (i < level_begin && j < level_begin) continue;
                if (!push(LowerFormula::conj(u.formulas[i], u.formulas[j]))) return u;
                if (!push(LowerFormula::disj(u.formulas[i], u.formulas[j]))) return u;
            }
        }
        level_begin = level_end;
    }
    return u;
}

}  // namespace parabel

#endif  // PARABEL_TWO_LAYER_HPP
