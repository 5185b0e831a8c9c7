#ifndef PARABEL_SCENARIO_HPP
#define PARABEL_SCENARIO_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabel/algebras.hpp"
#include "parabel/sources.hpp"
#include "parabel/two_layer.hpp"

namespace parabel {

struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& what)
        : std::runtime_error(p + ": " + what), path(std::move(p)) {}
};

inline std::optional<AlgebraId> parse_upper_algebra(const std::string& s) {
    if (s == "mv_prod") return AlgebraId::MV_PROD;
    if (s == "res_bilat") return AlgebraId::RES_BILAT;
    if (s == "kleene_bilat") return AlgebraId::KLEENE_BILAT;
    return std::nullopt;
}

// On-disk description of a two-layer model: atoms, states with their
// supports, weighted sources with exact "n/d" masses, the aggregation
// strategy and the upper algebra. Loading validates everything and
// normalizes order, so load -> save -> load is a fixed point.
struct Scenario {
    struct State {
        std::string id;
        std::vector<std::string> pos, neg;
    };
    struct Src {
        std::string label;
        Rational weight;
        std::map<std::string, Rational> mass;
    };

    std::vector<std::string> atoms;
    std::vector<State> states;
    std::vector<Src> sources;
    AggStrategy strategy = AggStrategy::WA;
    AlgebraId upper = AlgebraId::MV_PROD;

    using json = nlohmann::ordered_json;

    static Scenario from_json(const json& j) {
        Scenario sc;
        auto need = [&](const json& obj, const char* key, const std::string& path) -> const json& {
            if (!obj.is_object()) throw SchemaError(path, "expected an object");
            auto it = obj.find(key);
            if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
            return *it;
        };
        auto as_string = [&](const json& v, const std::string& path) -> std::string {
            if (!v.is_string()) throw SchemaError(path, "expected a string");
            return v.get<std::string>();
        };
        auto as_rational = [&](const json& v, const std::string& path) -> Rational {
            const std::string s = as_string(v, path);
            auto r = parse_rational(s);
            if (!r) throw SchemaError(path, "not a rational 'n/d': '" + s + "'");
            return *r;
        };

        const json& atoms = need(j, "atoms", "scenario");
        if (!atoms.is_array()) throw SchemaError("scenario.atoms", "expected an array");
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const std::string a = as_string(atoms[i], "atoms[" + std::to_string(i) + "]");
            if (!LowerFormula::valid_atom_name(a))
                throw SchemaError("atoms[" + std::to_string(i) + "]",
                                  "invalid atom name '" + a + "'");
            sc.atoms.push_back(a);
        }
        std::sort(sc.atoms.begin(), sc.atoms.end());
        if (std::adjacent_find(sc.atoms.begin(), sc.atoms.end()) != sc.atoms.end())
            throw SchemaError("atoms", "duplicate atom");
        std::set<std::string> atom_set(sc.atoms.begin(), sc.atoms.end());

        const json& states = need(j, "states", "scenario");
        if (!states.is_array() || states.empty())
            throw SchemaError("scenario.states", "expected a non-empty array");
        std::set<std::string> state_set;
        for (std::size_t i = 0; i < states.size(); ++i) {
            const std::string path = "states[" + std::to_string(i) + "]";
            State st;
            st.id = as_string(need(states[i], "id", path), path + ".id");
            if (!state_set.insert(st.id).second)
                throw SchemaError(path + ".id", "duplicate state id '" + st.id + "'");
            for (const char* side : {"pos", "neg"}) {
                auto it = states[i].find(side);
                if (it == states[i].end()) continue;
                if (!it->is_array()) throw SchemaError(path + "." + side, "expected an array");
                for (std::size_t k = 0; k < it->size(); ++k) {
                    const std::string a = as_string((*it)[k], path + "." + side + "[" +
                                                                  std::to_string(k) + "]");
                    if (!atom_set.count(a))
                        throw SchemaError(path + "." + side + "[" + std::to_string(k) + "]",
                                          "undeclared atom '" + a + "'");
                    (side[0] == 'p' ? st.pos : st.neg).push_back(a);
                }
            }
            std::sort(st.pos.begin(), st.pos.end());
            st.pos.erase(std::unique(st.pos.begin(), st.pos.end()), st.pos.end());
            std::sort(st.neg.begin(), st.neg.end());
            st.neg.erase(std::unique(st.neg.begin(), st.neg.end()), st.neg.end());
            sc.states.push_back(std::move(st));
        }

        const json& sources = need(j, "sources", "scenario");
        if (!sources.is_array() || sources.empty())
            throw SchemaError("scenario.sources", "expected a non-empty array");
        for (std::size_t i = 0; i < sources.size(); ++i) {
            const std::string path = "sources[" + std::to_string(i) + "]";
            Src src;
            src.label = as_string(need(sources[i], "label", path), path + ".label");
            src.weight = as_rational(need(sources[i], "weight", path), path + ".weight");
            if (src.weight <= 0) throw SchemaError(path + ".weight", "weight must be positive");
            const json& mass = need(sources[i], "mass", path);
            if (!mass.is_object()) throw SchemaError(path + ".mass", "expected an object");
            Rational total(0);
            for (auto it = mass.begin(); it != mass.end(); ++it) {
                if (!state_set.count(it.key()))
                    throw SchemaError(path + ".mass." + it.key(), "unknown state");
                const Rational m = as_rational(it.value(), path + ".mass." + it.key());
                if (m < 0) throw SchemaError(path + ".mass." + it.key(), "negative mass");
                src.mass[it.key()] = m;
                total += m;
            }
            if (total != 1)
                throw SchemaError(path + ".mass",
                                  "masses sum to " + parabel::to_string(total) + ", expected 1");
            sc.sources.push_back(std::move(src));
        }

        const std::string strat =
            as_string(need(j, "strategy", "scenario"), "scenario.strategy");
        auto st = parse_strategy(strat);
        if (!st) throw SchemaError("scenario.strategy", "expected wa|min|max, got '" + strat + "'");
        sc.strategy = *st;

        const std::string upper = as_string(need(j, "upper", "scenario"), "scenario.upper");
        auto up = parse_upper_algebra(upper);
        if (!up)
            throw SchemaError("scenario.upper",
                              "expected mv_prod|res_bilat|kleene_bilat, got '" + upper + "'");
        sc.upper = *up;
        return sc;
    }

    json to_json() const {
        json j;
        j["atoms"] = atoms;
        j["states"] = json::array();
        for (const auto& st : states) {
            json s;
            s["id"] = st.id;
            s["pos"] = st.pos;
            s["neg"] = st.neg;
            j["states"].push_back(std::move(s));
        }
        j["sources"] = json::array();
        for (const auto& src : sources) {
            json s;
            s["label"] = src.label;
            s["weight"] = parabel::to_string(src.weight);
            json m;
            for (const auto& [state, value] : src.mass) m[state] = parabel::to_string(value);
            s["mass"] = std::move(m);
            j["sources"].push_back(std::move(s));
        }
        j["strategy"] = parabel::to_string(strategy);
        j["upper"] = parabel::to_string(upper);
        return j;
    }

    static Scenario load(const std::string& file) {
        std::ifstream in(file);
        if (!in) throw SchemaError("scenario", "cannot open file '" + file + "'");
        json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError("scenario", std::string("invalid JSON: ") + e.what());
        }
        return from_json(j);
    }

    void save(const std::string& file) const {
        std::ofstream out(file);
        if (!out) throw SchemaError("scenario", "cannot write file '" + file + "'");
        out << to_json().dump(2) << "\n";
    }

    BDModel to_bd_model() const {
        std::vector<std::string> ids;
        for (const auto& st : states) ids.push_back(st.id);
        BDModel m(ids, atoms);
        for (const auto& st : states) {
            for (const auto& a : st.pos) m.support_pos(a, st.id);
            for (const auto& a : st.neg) m.support_neg(a, st.id);
        }
        return m;
    }

    TwoLayerModel to_model() const {
        BDModel m = to_bd_model();
        std::vector<Source> srcs;
        for (const auto& s : sources)
            srcs.emplace_back(MassFunction(m, s.mass), s.weight, s.label);
        return TwoLayerModel(std::move(m), std::move(srcs), strategy, upper);
    }
};

}  // namespace parabel

#endif  // PARABEL_SCENARIO_HPP
