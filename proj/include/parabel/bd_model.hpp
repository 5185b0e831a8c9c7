#ifndef PARABEL_BD_MODEL_HPP
#define PARABEL_BD_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabel/four_value.hpp"
#include "parabel/lower_formula.hpp"

namespace parabel {

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A double-valuation model: states with independent positive and negative
// support per atom. Supports may overlap (conflict) and may jointly miss
// states (gaps).
class BDModel {
public:
    BDModel(std::vector<std::string> states, std::vector<std::string> atoms)
        : states_(std::move(states)), atoms_(atoms.begin(), atoms.end()) {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            if (!state_index_.emplace(states_[i], i).second)
                throw std::invalid_argument("duplicate state id: " + states_[i]);
        }
        for (const auto& a : atoms_)
            if (!LowerFormula::valid_atom_name(a))
                throw std::invalid_argument("invalid atom name: " + a);
    }

    const std::vector<std::string>& states() const { return states_; }
    const std::set<std::string>& atoms() const { return atoms_; }
    std::size_t num_states() const { return states_.size(); }

    std::size_t state_index(const std::string& id) const {
        auto it = state_index_.find(id);
        if (it == state_index_.end()) throw std::invalid_argument("unknown state: " + id);
        return it->second;
    }
    bool has_atom(const std::string& a) const { return atoms_.count(a) > 0; }

    void support_pos(const std::string& atom, const std::string& state) {
        check_atom(atom);
        pos_[atom].insert(state_index(state));
    }
    void support_neg(const std::string& atom, const std::string& state) {
        check_atom(atom);
        neg_[atom].insert(state_index(state));
    }

    bool atom_pos(const std::string& atom, std::size_t s) const {
        auto it = pos_.find(atom);
        return it != pos_.end() && it->second.count(s) > 0;
    }
    bool atom_neg(const std::string& atom, std::size_t s) const {
        auto it = neg_.find(atom);
        return it != neg_.end() && it->second.count(s) > 0;
    }

private:
    void check_atom(const std::string& a) const {
        if (!has_atom(a)) throw std::invalid_argument("undeclared atom: " + a);
    }

    std::vector<std::string> states_;
    std::set<std::string> atoms_;
    std::map<std::string, std::size_t> state_index_;
    std::map<std::string, std::set<std::size_t>> pos_, neg_;
};

// A single-state four-valued assignment, total on its declared atoms.
struct Valuation4 {
    std::map<std::string, FourValue> values;

    FourValue at(const std::string& atom) const {
        auto it = values.find(atom);
        if (it == values.end()) throw std::invalid_argument("valuation misses atom: " + atom);
        return it->second;
    }
};

inline std::string to_string(const Valuation4& v) {
    std::string out;
    for (const auto& [atom, val] : v.values) {
        if (!out.empty()) out += ", ";
        out += atom + "=" + four_to_char(val);
    }
    return out;
}

// Evaluation by folding through the four-valued operations.
inline FourValue eval_val(const Valuation4& v, const LowerFormula& phi) {
    switch (phi.kind()) {
        case LowerFormula::Kind::Atom: return v.at(phi.atom_name());
        case LowerFormula::Kind::Neg: return four_neg(eval_val(v, phi.lhs()));
        case LowerFormula::Kind::And:
            return four_meet_t(eval_val(v, phi.lhs()), eval_val(v, phi.rhs()));
        case LowerFormula::Kind::Or:
            return four_join_t(eval_val(v, phi.lhs()), eval_val(v, phi.rhs()));
    }
    throw std::logic_error("unhandled lower formula node");
}

// Evaluation at a state: the pair (positive support, negative support) read
// off the recursive support clauses.
inline FourValue eval_state(const BDModel& m, const std::string& state,
                            const LowerFormula& phi) {
    const std::size_t s = m.state_index(state);
    for (const auto& a : phi.atoms())
        if (!m.has_atom(a)) throw std::invalid_argument("undeclared atom: " + a);
    struct Rec {
        const BDModel& m;
        std::size_t s;
        FourValue operator()(const LowerFormula& f) const {
            switch (f.kind()) {
                case LowerFormula::Kind::Atom:
                    return make_four(m.atom_pos(f.atom_name(), s), m.atom_neg(f.atom_name(), s));
                case LowerFormula::Kind::Neg: return four_neg((*this)(f.lhs()));
                case LowerFormula::Kind::And:
                    return four_meet_t((*this)(f.lhs()), (*this)(f.rhs()));
                case LowerFormula::Kind::Or:
                    return four_join_t((*this)(f.lhs()), (*this)(f.rhs()));
            }
            throw std::logic_error("unhandled lower formula node");
        }
    };
    return Rec{m, s}(phi);
}

// Positive and negative extensions of a formula (as state index sets).
struct Extensions {
    std::set<std::size_t> pos, neg;
};

inline Extensions extensions(const BDModel& m, const LowerFormula& phi) {
    Extensions ext;
    for (std::size_t s = 0; s < m.num_states(); ++s) {
        const FourValue v = eval_state(m, m.states()[s], phi);
        if (pos_bit(v)) ext.pos.insert(s);
        if (neg_bit(v)) ext.neg.insert(s);
    }
    return ext;
}

// Verdict of the consequence check: either it holds, or a witnessing
// valuation designates every premise but not the conclusion.
struct BDVerdict {
    bool holds;
    std::optional<Valuation4> countermodel;
};

// Exhaustive consequence over the four-valued matrix. Sound and complete for
// the logic; enumeration is lexicographic over the sorted atom list with
// value order f < n < b < t, so the reported countermodel is deterministic.
inline BDVerdict entails_bd(const std::vector<LowerFormula>& gamma, const LowerFormula& phi,
                            std::size_t max_atoms = 10) {
    std::set<std::string> atom_set = phi.atoms();
    for (const auto& g : gamma) g.collect_atoms(atom_set);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > max_atoms)
        throw CapacityError("atom budget exceeded: " + std::to_string(atoms.size()) +
                            " atoms, cap " + std::to_string(max_atoms));

    const std::size_t n = atoms.size();
    std::vector<std::uint8_t> digits(n, 0);
    Valuation4 v;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) v.values[atoms[i]] = kFourValues[digits[i]];
        bool premises_ok = true;
        for (const auto& g : gamma) {
            if (!four_designated(eval_val(v, g))) {
                premises_ok = false;
                break;
            }
        }
        if (premises_ok && !four_designated(eval_val(v, phi)))
            return {false, v};
        // advance odometer, most significant digit = first atom
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++digits[i] < 4) break;
            digits[i] = 0;
            if (i == 0) return {true, std::nullopt};
        }
        if (n == 0) return {true, std::nullopt};
    }
}

inline BDVerdict entails_bd(const LowerFormula& premise, const LowerFormula& phi,
                            std::size_t max_atoms = 10) {
    return entails_bd(std::vector<LowerFormula>{premise}, phi, max_atoms);
}

}  // namespace parabel

#endif  // PARABEL_BD_MODEL_HPP
