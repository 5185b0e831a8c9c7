#ifndef PARABEL_SOURCES_HPP
#define PARABEL_SOURCES_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parabel/bd_model.hpp"
#include "parabel/pair_value.hpp"
#include "parabel/rational.hpp"

namespace parabel {

// Nonnegative mass per state, summing to exactly 1.
class MassFunction {
public:
    MassFunction(const BDModel& model, std::map<std::string, Rational> mass)
        : mass_(model.num_states(), Rational(0)) {
        Rational total(0);
        for (const auto& [state, value] : mass) {
            if (value < 0) throw std::invalid_argument("negative mass on state " + state);
            mass_[model.state_index(state)] = value;
            total += value;
        }
        if (total != 1)
            throw std::invalid_argument("masses sum to " + parabel::to_string(total) +
                                        ", expected 1");
    }

    const Rational& at(std::size_t state_idx) const { return mass_.at(state_idx); }
    std::size_t size() const { return mass_.size(); }

private:
    std::vector<Rational> mass_;
};

// The induced measure pair: mass of the positive extension and mass of the
// negative extension. (1,1) is maximal conflict, (0,0) total silence.
inline PairValue prob_pair(const BDModel& m, const MassFunction& mass,
                           const LowerFormula& phi) {
    if (mass.size() != m.num_states())
        throw std::invalid_argument("mass function defined over a different state set");
    const Extensions ext = extensions(m, phi);
    Rational pos(0), neg(0);
    for (std::size_t s : ext.pos) pos += mass.at(s);
    for (std::size_t s : ext.neg) neg += mass.at(s);
    return {pos, neg};
}

struct Source {
    MassFunction mass;
    Rational weight;
    std::string label;

    Source(MassFunction m, Rational w, std::string l)
        : mass(std::move(m)), weight(std::move(w)), label(std::move(l)) {
        if (weight <= 0) throw std::invalid_argument("source weight must be positive");
    }
};

enum class AggStrategy : unsigned char { WA, MIN, MAX };

inline std::string to_string(AggStrategy s) {
    switch (s) {
        case AggStrategy::WA: return "wa";
        case AggStrategy::MIN: return "min";
        case AggStrategy::MAX: return "max";
    }
    return "?";
}

inline std::optional<AggStrategy> parse_strategy(const std::string& s) {
    if (s == "wa") return AggStrategy::WA;
    if (s == "min") return AggStrategy::MIN;
    if (s == "max") return AggStrategy::MAX;
    return std::nullopt;
}

// Pools the per-source measure pairs: weighted average, componentwise
// minimum, or componentwise maximum.
inline PairValue aggregate(AggStrategy strategy, const std::vector<Source>& sources,
                           const BDModel& m, const LowerFormula& phi) {
    if (sources.empty()) throw std::invalid_argument("aggregation over an empty source list");
    std::vector<PairValue> values;
    values.reserve(sources.size());
    for (const auto& s : sources) values.push_back(prob_pair(m, s.mass, phi));
    switch (strategy) {
        case AggStrategy::WA: {
            Rational wsum(0), pos(0), neg(0);
            for (std::size_t i = 0; i < sources.size(); ++i) {
                wsum += sources[i].weight;
                pos += sources[i].weight * values[i].pos;
                neg += sources[i].weight * values[i].neg;
            }
            return {pos / wsum, neg / wsum};
        }
        case AggStrategy::MIN: {
            PairValue acc = values[0];
            for (std::size_t i = 1; i < values.size(); ++i)
                acc = PairValue{std::min(acc.pos, values[i].pos),
                                std::min(acc.neg, values[i].neg)};
            return acc;
        }
        case AggStrategy::MAX: {
            PairValue acc = values[0];
            for (std::size_t i = 1; i < values.size(); ++i)
                acc = PairValue{std::max(acc.pos, values[i].pos),
                                std::max(acc.neg, values[i].neg)};
            return acc;
        }
    }
    throw std::logic_error("unknown aggregation strategy");
}

// A formula-indexed pair assignment. Either backed by a model (mass function
// or aggregation of sources) or by an explicit table; table-backed
// assignments may be partial, in which case checks skip missing entries.
class ProbAssignment {
public:
    static ProbAssignment from_mass(BDModel m, MassFunction mass) {
        ProbAssignment pa;
        pa.eval_ = [model = std::move(m), mass = std::move(mass)](const LowerFormula& phi) {
            return std::optional<PairValue>(prob_pair(model, mass, phi));
        };
        return pa;
    }

    static ProbAssignment from_aggregation(AggStrategy strategy, std::vector<Source> sources,
                                           BDModel m) {
        ProbAssignment pa;
        pa.eval_ = [strategy, sources = std::move(sources),
                    model = std::move(m)](const LowerFormula& phi) {
            return std::optional<PairValue>(aggregate(strategy, sources, model, phi));
        };
        return pa;
    }

    static ProbAssignment from_table(std::vector<std::pair<LowerFormula, PairValue>> table) {
        std::map<LowerFormula, PairValue> m(table.begin(), table.end());
        ProbAssignment pa;
        pa.eval_ = [m = std::move(m)](const LowerFormula& phi) -> std::optional<PairValue> {
            auto it = m.find(phi);
            if (it == m.end()) return std::nullopt;
            return it->second;
        };
        return pa;
    }

    std::optional<PairValue> operator()(const LowerFormula& phi) const { return eval_(phi); }

private:
    std::function<std::optional<PairValue>(const LowerFormula&)> eval_;
};

// One failed check instance, with enough context to reproduce it.
struct AxiomViolation {
    std::string axiom;  // "A1" | "A2" | "A3" | "neg-duality"
    std::string detail;
};

struct AxiomReport {
    bool a1 = true, a2 = true, a3 = true, neg_duality = true;
    std::vector<AxiomViolation> violations;

    bool all_ok() const { return a1 && a2 && a3 && neg_duality; }
};

// Checks normalization (A1), entailment monotonicity (A2), the import-export
// identity (A3) and negation duality on every formula / pair of formulas
// drawn from the universe. Violations are listed, never thrown.
inline AxiomReport check_axioms(const ProbAssignment& pa,
                                const std::vector<LowerFormula>& universe,
                                std::size_t max_atoms = 10) {
    AxiomReport report;
    auto note = [&report](bool& flag, const std::string& axiom, const std::string& detail) {
        flag = false;
        report.violations.push_back({axiom, detail});
    };

    for (const auto& phi : universe) {
        const auto v = pa(phi);
        if (!v) continue;
        if (!in_unit_interval(v->pos) || !in_unit_interval(v->neg))
            note(report.a1, "A1", print_lower(phi) + " -> " + to_string(*v));
        const auto nv = pa(LowerFormula::neg(phi));
        if (nv && v->neg != nv->pos)
            note(report.neg_duality, "neg-duality",
                 "p-(" + print_lower(phi) + ") = " + parabel::to_string(v->neg) +
                     " but p+(!" + print_lower(phi) + ") = " + parabel::to_string(nv->pos));
    }

    for (const auto& phi : universe) {
        for (const auto& psi : universe) {
            const auto vphi = pa(phi), vpsi = pa(psi);
            if (!vphi || !vpsi) continue;
            if (entails_bd(phi, psi, max_atoms).holds) {
                if (!(vphi->pos <= vpsi->pos) || !(vpsi->neg <= vphi->neg))
                    note(report.a2, "A2",
                         print_lower(phi) + " |- " + print_lower(psi) + " but " +
                             to_string(*vphi) + " !<= " + to_string(*vpsi));
            }
            const auto vand = pa(LowerFormula::conj(phi, psi));
            const auto vor = pa(LowerFormula::disj(phi, psi));
            if (vand && vor) {
                if (vand->pos + vor->pos != vphi->pos + vpsi->pos ||
                    vand->neg + vor->neg != vphi->neg + vpsi->neg)
                    note(report.a3, "A3",
                         "phi=" + print_lower(phi) + " psi=" + print_lower(psi) +
                             ": p(and)=" + to_string(*vand) + " p(or)=" + to_string(*vor) +
                             " p(phi)=" + to_string(*vphi) + " p(psi)=" + to_string(*vpsi));
            }
        }
    }
    return report;
}

struct StrategyReport {
    bool monotone = true;
    bool neg_compatible = true;
    bool preserves_probability = true;
    std::vector<std::string> monotonicity_witnesses;
    std::vector<std::string> neg_witnesses;
    AxiomReport probability_report;
};

// The three strategy properties over a finite universe: entailment
// monotonicity in the truth order, negation compatibility, and whether the
// aggregated assignment still satisfies the probability axioms.
inline StrategyReport strategy_properties(AggStrategy strategy,
                                          const std::vector<Source>& sources, const BDModel& m,
                                          const std::vector<LowerFormula>& universe,
                                          std::size_t max_atoms = 10) {
    StrategyReport report;
    std::map<LowerFormula, PairValue> memo;
    auto value = [&](const LowerFormula& phi) {
        auto it = memo.find(phi);
        if (it == memo.end())
            it = memo.emplace(phi, aggregate(strategy, sources, m, phi)).first;
        return it->second;
    };

    for (const auto& phi : universe) {
        for (const auto& psi : universe) {
            if (!entails_bd(phi, psi, max_atoms).holds) continue;
            const PairValue a = value(phi), b = value(psi);
            if (!pair_leq_t(a, b)) {
                report.monotone = false;
                report.monotonicity_witnesses.push_back(
                    print_lower(phi) + " |- " + print_lower(psi) + " but " + to_string(a) +
                    " !<=t " + to_string(b));
            }
        }
    }
    for (const auto& phi : universe) {
        const PairValue v = value(phi);
        const PairValue nv = value(LowerFormula::neg(phi));
        if (v.neg != nv.pos) {
            report.neg_compatible = false;
            report.neg_witnesses.push_back("Agg-(" + print_lower(phi) + ") = " +
                                           parabel::to_string(v.neg) + " != Agg+(!" +
                                           print_lower(phi) + ") = " +
                                           parabel::to_string(nv.pos));
        }
    }
    report.probability_report =
        check_axioms(ProbAssignment::from_aggregation(strategy, sources, m), universe, max_atoms);
    report.preserves_probability = report.probability_report.all_ok();
    return report;
}

}  // namespace parabel

#endif  // PARABEL_SOURCES_HPP
