// Command-line front end: consequence checks for the event logic, belief
// queries against scenario files, axiom-set audits, and the exact
// Lukasiewicz decision procedures.
//
// Exit codes: 0 positive verdict / all checks pass, 1 negative verdict,
// 2 parse or schema error, 3 capacity limit, 4 oracle disagreement.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "parabel/bd_model.hpp"
#include "parabel/luk_decide.hpp"
#include "parabel/nnf.hpp"
#include "parabel/parser.hpp"
#include "parabel/scenario.hpp"
#include "parabel/sources.hpp"
#include "parabel/two_layer.hpp"

namespace {

using namespace parabel;
using ojson = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitOracle = 4;

struct Options {
    bool json = false;
};

void emit(const ojson& j, const std::string& text, const Options& opt) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string region_of(const PairValue& v) {
    const Rational sum = v.pos + v.neg;
    if (sum == 1) return "classical";
    return sum < 1 ? "incomplete" : "conflicted";
}

std::string pair_text(const PairValue& v) {
    return "(" + to_string(v.pos) + ", " + to_string(v.neg) + ") = (" + to_decimal(v.pos) +
           ", " + to_decimal(v.neg) + ")";
}

int cmd_bd_entail(const std::vector<std::string>& premises, const std::string& conclusion,
                  std::size_t max_atoms, const Options& opt) {
    std::vector<LowerFormula> gamma;
    for (const auto& p : premises) gamma.push_back(parse_lower(p));
    const LowerFormula phi = parse_lower(conclusion);
    const BDVerdict v = entails_bd(gamma, phi, max_atoms);
    ojson j;
    j["verdict"] = v.holds ? "HOLDS" : "FAILS";
    std::string text;
    if (v.holds) {
        text = "HOLDS\n";
    } else {
        text = "FAILS\ncountermodel: " + to_string(*v.countermodel) + "\n";
        ojson cm;
        for (const auto& [atom, val] : v.countermodel->values)
            cm[atom] = four_to_string(val);
        j["countermodel"] = cm;
    }
    emit(j, text, opt);
    return v.holds ? kExitHolds : kExitFails;
}

int cmd_belief(const std::string& scenario_path, const std::string& formula,
               const Options& opt) {
    const Scenario sc = Scenario::load(scenario_path);
    const TwoLayerModel model = sc.to_model();
    const LowerFormula phi = parse_lower(formula);
    for (const auto& a : phi.atoms())
        if (!model.base().has_atom(a))
            throw SchemaError("formula", "atom '" + a + "' is not declared in the scenario");
    const PairValue v = model.modal_value(phi);
    const std::string region = region_of(v);

    ojson j;
    j["formula"] = "B(" + print_lower(phi) + ")";
    j["pos"] = to_string(v.pos);
    j["neg"] = to_string(v.neg);
    j["pos_decimal"] = to_decimal(v.pos);
    j["neg_decimal"] = to_decimal(v.neg);
    j["region"] = region;
    j["strategy"] = to_string(sc.strategy);
    j["upper"] = to_string(sc.upper);

    std::string text = "B(" + print_lower(phi) + ") = " + pair_text(v) + "\n" +
                       "region: " + region + " (support sum " + to_string(v.pos + v.neg) +
                       ")\n";
    emit(j, text, opt);
    return kExitHolds;
}

int cmd_check(const std::string& scenario_path, const std::string& axiom_set, int depth,
              std::size_t cap, std::size_t max_atoms, const Options& opt) {
    const Scenario sc = Scenario::load(scenario_path);
    const TwoLayerModel model = sc.to_model();
    const Universe u = build_universe(sc.atoms, depth, cap);

    ojson j;
    j["axioms"] = axiom_set;
    j["universe_size"] = u.formulas.size();
    j["universe_truncated"] = u.truncated;
    std::string text = "axioms: " + axiom_set + "\n" + "universe: " +
                       std::to_string(u.formulas.size()) + " formulas (depth " +
                       std::to_string(depth) + (u.truncated ? ", capped" : "") + ")\n";

    bool all_ok = true;
    ojson checks = ojson::array();
    if (axiom_set == "prob") {
        const AxiomReport r = check_axioms(
            ProbAssignment::from_aggregation(sc.strategy, model.sources(), model.base()),
            u.formulas, max_atoms);
        struct Line {
            const char* name;
            bool ok;
        };
        for (const Line& line : {Line{"A1 normalization", r.a1}, Line{"A2 monotonicity", r.a2},
                                 Line{"A3 import-export", r.a3},
                                 Line{"neg-duality", r.neg_duality}}) {
            text += std::string(line.name) + ": " + (line.ok ? "PASS" : "FAIL") + "\n";
            checks.push_back({{"name", line.name}, {"ok", line.ok}});
            all_ok = all_ok && line.ok;
        }
        std::size_t listed = 0;
        for (const auto& viol : r.violations) {
            if (listed++ >= 10) break;
            text += "  " + viol.axiom + " violation: " + viol.detail + "\n";
        }
        j["violations"] = r.violations.size();
    } else if (axiom_set == "m31" || axiom_set == "m32") {
        const ModalAxiomReport r = check_modal_axioms(
            model, u.formulas,
            axiom_set == "m31" ? ModalAxiomSet::Additive : ModalAxiomSet::Monotone,
            max_atoms);
        for (const auto& ax : r.axioms) {
            text += ax.name + ": " + std::to_string(ax.instances) + " instances, " +
                    (ax.ok() ? "PASS" : "FAIL") + "\n";
            for (std::size_t i = 0; i < ax.failures.size() && i < 5; ++i)
                text += "  " + ax.failures[i] + "\n";
            checks.push_back(
                {{"name", ax.name}, {"instances", ax.instances}, {"ok", ax.ok()}});
            all_ok = all_ok && ax.ok();
        }
    } else {
        throw CLI::ValidationError("--axioms must be one of m31|m32|prob");
    }
    j["checks"] = checks;
    j["result"] = all_ok ? "PASS" : "FAIL";
    text += std::string("result: ") + (all_ok ? "PASS" : "FAIL") + "\n";
    emit(j, text, opt);
    return all_ok ? kExitHolds : kExitFails;
}

int cmd_luk(const std::string& dialect, const std::vector<std::string>& premises,
            const std::string& conclusion, std::size_t atom_cap, long oracle_denominator,
            bool dump_lp, const Options& opt) {
    ojson j;
    std::string text;
    bool valid = false;
    bool oracle_hit = false;
    bool oracle_ran = oracle_denominator > 0;

    if (dialect == "luk") {
        std::vector<LukFormula> gamma;
        for (const auto& p : premises) gamma.push_back(parse_luk(p));
        const LukFormula alpha = parse_luk(conclusion);
        const LukVerdict v = luk_consequence(gamma, alpha, LukOptions{atom_cap});
        valid = v.valid;
        j["verdict"] = valid ? "VALID" : "INVALID";
        text = valid ? "VALID\n" : "INVALID\n";
        if (!valid) {
            ojson cm;
            std::string cm_text;
            for (const auto& [atom, value] : v.countermodel) {
                cm[atom] = to_string(value);
                if (!cm_text.empty()) cm_text += ", ";
                cm_text += atom + " = " + to_string(value);
            }
            j["countermodel"] = cm;
            j["conclusion_value"] = to_string(*v.optimum);
            text += "countermodel: " + cm_text + "\n";
            text += "conclusion value: " + to_string(*v.optimum) + "\n";
        }
        if (dump_lp) {
            PLEncoding enc;
            for (const auto& g : gamma) enc.assert_value(g, 1);
            const LinExpr obj = enc.encode_value(alpha);
            text += export_lp(enc, obj, false);
        }
        if (oracle_ran) {
            const auto hit = grid_falsify(gamma, alpha, GridOptions{oracle_denominator});
            oracle_hit = hit.has_value();
            if (hit) {
                std::string pt;
                for (const auto& [atom, value] : *hit) {
                    if (!pt.empty()) pt += ", ";
                    pt += atom + " = " + to_string(value);
                }
                text += "oracle: countermodel at denominator <= " +
                        std::to_string(oracle_denominator) + ": " + pt + "\n";
            } else {
                text += "oracle: no countermodel with denominator <= " +
                        std::to_string(oracle_denominator) + "\n";
            }
        }
    } else if (dialect == "lukneg") {
        std::vector<UpperFormula> gamma;
        for (const auto& p : premises) gamma.push_back(parse_upper(p, Dialect::LUK_NEG));
        const UpperFormula alpha = parse_upper(conclusion, Dialect::LUK_NEG);
        const LukNegVerdict v = lukneg_consequence(gamma, alpha, LukOptions{atom_cap});
        valid = v.valid;
        j["verdict"] = valid ? "VALID" : "INVALID";
        text = valid ? "VALID\n" : "INVALID\n";
        if (!valid) {
            ojson cm;
            std::string cm_text;
            for (const auto& [atom, value] : v.countermodel) {
                cm[atom] = {{"pos", to_string(value.pos)}, {"neg", to_string(value.neg)}};
                if (!cm_text.empty()) cm_text += ", ";
                cm_text += atom + " = " + to_string(value);
            }
            j["countermodel"] = cm;
            text += "countermodel: " + cm_text + "\n";
        }
        if (dump_lp) {
            PLEncoding enc;
            for (const auto& g : gamma) {
                const UpperFormula gn = nnf(g);
                enc.assert_value(luk_view(gn), 1);
                enc.assert_value(luk_view(parabel::detail::neg_translate_nnf(gn)), 0);
            }
            const LinExpr obj = enc.encode_value(luk_view(nnf(alpha)));
            text += export_lp(enc, obj, false);
        }
        if (oracle_ran) {
            const auto hit = grid_falsify_pairs(gamma, alpha, GridOptions{oracle_denominator});
            oracle_hit = hit.has_value();
            if (hit) {
                std::string pt;
                for (const auto& [atom, value] : *hit) {
                    if (!pt.empty()) pt += ", ";
                    pt += atom + " = " + to_string(value);
                }
                text += "oracle: countermodel at denominator <= " +
                        std::to_string(oracle_denominator) + ": " + pt + "\n";
            } else {
                text += "oracle: no countermodel with denominator <= " +
                        std::to_string(oracle_denominator) + "\n";
            }
        }
    } else {
        throw CLI::ValidationError("--dialect must be luk or lukneg");
    }

    if (oracle_ran) {
        j["oracle_countermodel"] = oracle_hit;
        if (oracle_hit && valid) {
            text += "oracle disagreement: decision says VALID but the grid found a "
                    "countermodel\n";
            emit(j, text, opt);
            return kExitOracle;
        }
        // an oracle miss on an INVALID formula is fine: the countermodel may
        // need a denominator beyond the grid
    }
    emit(j, text, opt);
    return valid ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parabel: belief reasoning over conflicting probabilistic sources"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "parabel 0.1.0");

    Options opt;
    std::string format = "text";

    // bd-entail
    auto* bd = app.add_subcommand("bd-entail", "event-logic consequence by matrix search");
    std::vector<std::string> bd_premises;
    std::string bd_conclusion;
    std::size_t bd_max_atoms = 10;
    bd->add_option("premises", bd_premises, "premise formulas");
    bd->add_option("--conc", bd_conclusion, "conclusion formula")->required();
    bd->add_option("--max-atoms", bd_max_atoms, "atom budget for the valuation search");

    // belief
    auto* bel = app.add_subcommand("belief", "aggregated belief in a scenario");
    std::string bel_scenario, bel_formula;
    bel->add_option("--scenario", bel_scenario, "scenario file (JSON)")->required();
    bel->add_option("formula", bel_formula, "event formula")->required();

    // check
    auto* chk = app.add_subcommand("check", "audit axiom sets against a scenario");
    std::string chk_scenario, chk_axioms;
    int chk_depth = 1;
    std::size_t chk_cap = 500, chk_max_atoms = 10;
    chk->add_option("--scenario", chk_scenario, "scenario file (JSON)")->required();
    chk->add_option("--axioms", chk_axioms, "m31 | m32 | prob")->required();
    chk->add_option("--universe-depth", chk_depth, "connective depth of the test universe");
    chk->add_option("--universe-cap", chk_cap, "maximum universe size");
    chk->add_option("--max-atoms", chk_max_atoms, "atom budget for consequence checks");

    // luk
    auto* luk = app.add_subcommand("luk", "exact Lukasiewicz decision procedures");
    std::string luk_dialect = "luk", luk_conclusion;
    std::vector<std::string> luk_premises;
    std::size_t luk_cap = 8;
    long luk_oracle = 0;
    bool luk_dump = false;
    luk->add_option("--dialect", luk_dialect, "luk | lukneg");
    luk->add_option("premises", luk_premises, "premise formulas");
    luk->add_option("--conc", luk_conclusion, "conclusion formula")->required();
    luk->add_option("--atom-cap", luk_cap, "atom budget");
    luk->add_option("--oracle-denominator", luk_oracle,
                    "also run the grid oracle up to this denominator");
    luk->add_flag("--dump-lp", luk_dump, "print the piecewise-linear encoding");

    for (CLI::App* sub : {bd, bel, chk, luk})
        sub->add_option("--format", format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
        opt.json = format == "json";
        if (bd->parsed()) return cmd_bd_entail(bd_premises, bd_conclusion, bd_max_atoms, opt);
        if (bel->parsed()) return cmd_belief(bel_scenario, bel_formula, opt);
        if (chk->parsed())
            return cmd_check(chk_scenario, chk_axioms, chk_depth, chk_cap, chk_max_atoms, opt);
        if (luk->parsed())
            return cmd_luk(luk_dialect, luk_premises, luk_conclusion, luk_cap, luk_oracle,
                           luk_dump, opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DialectError& e) {
        std::cerr << "dialect error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitHolds;
}
