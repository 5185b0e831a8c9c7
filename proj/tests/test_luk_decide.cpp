#include <catch2/catch_amalgamated.hpp>

#include "luk_support.hpp"
#include "parabel/luk_decide.hpp"
#include "test_util.hpp"

using namespace parabel;
using parabel::test::Rng;

namespace {

const std::vector<std::string> kVars = {"p", "q", "r", "s"};

std::map<std::string, Rational> random_point(Rng& rng, const LukFormula& f) {
    std::map<std::string, Rational> asg;
    for (const auto& v : f.vars()) asg.emplace(v, test::random_rational(rng, 8));
    return asg;
}

UpperFormula lk(const std::string& text) { return parse_upper(text, Dialect::LUK_NEG); }

}  // namespace

TEST_CASE("encoding shapes", "[luk_decide]") {
    const PLEncoding atom = encode(parse_luk("p"));
    CHECK(atom.vars.size() == 1);
    CHECK(atom.branch_vars.empty());
    CHECK(atom.rows.size() == 1);  // only the unit upper bound

    PLEncoding sneg;
    const LinExpr e = sneg.encode_value(parse_luk("~p"));
    CHECK(sneg.vars.size() == 1);
    CHECK(sneg.branch_vars.empty());
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].second == -1);
    CHECK(e.constant == 1);

    const PLEncoding imp = encode(parse_luk("p -> q"));
    CHECK(imp.branch_vars.size() == 1);

    // shared subformulas are encoded once
    const PLEncoding shared = encode(parse_luk("(p -> q) (+) (p -> q)"));
    CHECK(shared.branch_vars.size() == 2);  // one implication + the outer sum
}

TEST_CASE("lp export uses v/b variable names", "[luk_decide]") {
    PLEncoding enc;
    const LinExpr obj = enc.encode_value(parse_luk("p -> q"));
    const std::string text = export_lp(enc, obj, false);
    CHECK(text.find("min:") != std::string::npos);
    CHECK(text.find("v0") != std::string::npos);
    CHECK(text.find("b0") != std::string::npos);
    CHECK(text.find("int b0") != std::string::npos);
}

TEST_CASE("encoder completions match direct evaluation", "[luk_decide]") {
    Rng rng(61);
    for (int i = 0; i < 400; ++i) {
        const LukFormula f = test::random_luk(rng, kVars, 10);
        PLEncoding enc;
        const LinExpr top = enc.encode_value(f);
        const auto asg = random_point(rng, f);
        CHECK(test::completion_check(enc, top, f, asg));
    }
}

TEST_CASE("consequence on the axiom list", "[luk_decide]") {
    for (const char* text : {
             "p -> q -> p",
             "(p -> q) -> (q -> r) -> p -> r",
             "((p -> q) -> q) -> (q -> p) -> p",
             "(~q -> ~p) -> p -> q",
         }) {
        INFO(text);
        const LukVerdict v = luk_consequence({}, parse_luk(text));
        CHECK(v.valid);
    }
}

TEST_CASE("consequence finds the known countermodels", "[luk_decide]") {
    const LukVerdict v = luk_consequence({}, parse_luk("(p (+) p) -> p"));
    REQUIRE_FALSE(v.valid);
    CHECK(v.optimum == Rational(1, 2));
    CHECK(v.countermodel.at("p") == Rational(1, 2));

    const LukVerdict w = luk_consequence({parse_luk("p")}, parse_luk("p * p"));
    CHECK(w.valid);

    // modus ponens as semantic consequence
    CHECK(luk_consequence({parse_luk("p"), parse_luk("p -> q")}, parse_luk("q")).valid);
    // and its failure without the premise
    CHECK_FALSE(luk_consequence({parse_luk("p -> q")}, parse_luk("q")).valid);
}

TEST_CASE("unsatisfiable premises give a vacuous verdict", "[luk_decide]") {
    const LukVerdict v =
        luk_consequence({parse_luk("p"), parse_luk("~p")}, parse_luk("q"));
    CHECK(v.valid);
    CHECK(v.vacuous);
}

TEST_CASE("atom cap", "[luk_decide]") {
    LukFormula f = parse_luk("a0");
    for (int i = 1; i < 10; ++i)
        f = LukFormula::plus(f, LukFormula::var("a" + std::to_string(i)));
    CHECK_THROWS_AS(luk_consequence({}, f), CapacityError);
    CHECK_NOTHROW(luk_consequence({}, f, LukOptions{16}));
}

TEST_CASE("countermodels re-evaluate to genuine failures", "[luk_decide]") {
    Rng rng(62);
    int invalid_seen = 0;
    for (int i = 0; i < 60; ++i) {
        const LukFormula alpha = test::random_luk(rng, kVars, 8);
        std::vector<LukFormula> gamma;
        if (i % 3 == 1) gamma.push_back(test::random_luk(rng, kVars, 4));
        const LukVerdict v = luk_consequence(gamma, alpha);
        if (v.valid) continue;
        ++invalid_seen;
        for (const auto& g : gamma) REQUIRE(eval_luk(g, v.countermodel) == 1);
        const Rational got = eval_luk(alpha, v.countermodel);
        REQUIRE(got < 1);
        REQUIRE(got == *v.optimum);
    }
    CHECK(invalid_seen > 10);
}

TEST_CASE("branch and bound agrees with total branch enumeration", "[luk_decide]") {
    Rng rng(63);
    int compared = 0;
    for (int i = 0; i < 40; ++i) {
        const LukFormula f = test::random_luk(rng, kVars, 7);
        PLEncoding enc;
        const LinExpr obj = enc.encode_value(f);
        if (enc.branch_vars.size() > 6) continue;
        ++compared;

        // exhaustive: best LP value over all 0/1 branch assignments
        std::optional<Rational> brute;
        const std::size_t k = enc.branch_vars.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
            auto rows = enc.rows;
            for (std::size_t j = 0; j < k; ++j)
                rows.push_back(make_row(LinExpr::of_var(enc.branch_vars[j]), Rel::Eq,
                                        LinExpr::of_const(Rational((mask >> j) & 1))));
            const LPResult lp = lp_minimize(
                enc.var_count(), rows,
                std::vector<std::pair<int, Rational>>(obj.terms.begin(), obj.terms.end()));
            if (lp.status != LPResult::Status::Optimal) continue;
            const Rational val = lp.objective + obj.constant;
            if (!brute || val < *brute) brute = val;
        }

        const std::set<std::string> var_set = f.vars();
        std::vector<std::string> atoms(var_set.begin(), var_set.end());
        const MILPOutcome out = parabel::detail::milp_optimize(
            enc, obj, false, atoms,
            [&](const std::map<std::string, Rational>& asg) {
                return std::optional<Rational>(eval_luk(f, asg));
            });
        REQUIRE(brute.has_value());
        REQUIRE(out.feasible);
        CHECK(out.value == *brute);
    }
    CHECK(compared >= 20);
}

TEST_CASE("interval-dialect consequence on the axiom list", "[luk_decide]") {
    for (const char* text : {
             "B(p) -> B(q) -> B(p)",
             "(B(p) -> B(q)) -> (B(q) -> B(r)) -> B(p) -> B(r)",
             "((B(p) -> B(q)) -> B(q)) -> (B(q) -> B(p)) -> B(p)",
             "(~B(q) -> ~B(p)) -> B(p) -> B(q)",
             "!!B(p) <-> B(p)",
             "!~B(p) <-> ~!B(p)",
             "(~!B(p) -> ~!B(q)) <-> ~!(B(p) -> B(q))",
         }) {
        INFO(text);
        const LukNegVerdict v = lukneg_consequence({}, lk(text));
        CHECK(v.valid);
    }
}

TEST_CASE("interval-dialect countermodels", "[luk_decide]") {
    const LukNegVerdict v = lukneg_consequence({}, lk("B(p)"));
    REQUIRE_FALSE(v.valid);
    CHECK(v.countermodel.at("B(p)") == PairValue{Rational(0), Rational(0)});

    CHECK(lukneg_consequence({lk("B(p)")}, lk("~!B(p)")).valid);

    // strengthened assertion rule: alpha / ~!alpha on sample instances
    for (const char* text : {"B(p) -> B(p)", "!~B(p) <-> ~!B(p)"}) {
        const UpperFormula a = lk(text);
        REQUIRE(lukneg_consequence({}, a).valid);
        CHECK(lukneg_consequence({}, UpperFormula::strong_neg(
                                         UpperFormula::bneg(a))).valid);
    }
    // modus ponens preserves validity
    const UpperFormula a = lk("B(p) -> B(q) -> B(p)");
    const UpperFormula b = lk("(B(p) -> B(q) -> B(p)) -> (B(r) -> B(r))");
    REQUIRE(lukneg_consequence({}, a).valid);
    REQUIRE(lukneg_consequence({}, b).valid);
    CHECK(lukneg_consequence({}, lk("B(r) -> B(r)")).valid);
}

TEST_CASE("grid falsification", "[luk_decide]") {
    const auto hit = grid_falsify({}, parse_luk("(p (+) p) -> p"), GridOptions{2});
    REQUIRE(hit.has_value());
    CHECK(hit->at("p") == Rational(1, 2));

    CHECK_FALSE(grid_falsify({}, parse_luk("p -> p"), GridOptions{6}).has_value());

    // premises constrain the search
    const auto prem = grid_falsify({parse_luk("p")}, parse_luk("p * p"), GridOptions{4});
    CHECK_FALSE(prem.has_value());

    LukFormula wide = parse_luk("a0");
    for (int i = 1; i < 10; ++i)
        wide = LukFormula::plus(wide, LukFormula::var("a" + std::to_string(i)));
    CHECK_THROWS_AS(grid_falsify({}, wide, GridOptions{6}), CapacityError);
}

TEST_CASE("pair grid falsification", "[luk_decide]") {
    const auto hit = grid_falsify_pairs({}, lk("B(p)"), GridOptions{1});
    REQUIRE(hit.has_value());
    CHECK(hit->at("B(p)") == PairValue{Rational(0), Rational(0)});

    CHECK_FALSE(grid_falsify_pairs({}, lk("!~B(p) <-> ~!B(p)"), GridOptions{3}).has_value());

    // premises pin both components: B(q) at (1,0) makes B(p) -> B(q) valid
    CHECK_FALSE(
        grid_falsify_pairs({lk("B(q)")}, lk("B(p) -> B(q)"), GridOptions{2}).has_value());
    // without the premise the implication has grid countermodels
    CHECK(grid_falsify_pairs({}, lk("B(p) -> B(q)"), GridOptions{2}).has_value());
}

TEST_CASE("decision agrees with the grid oracle", "[luk_decide]") {
    Rng rng(64);
    const std::vector<std::string> atoms = {"p", "q", "r"};
    for (int i = 0; i < 25; ++i) {
        const UpperFormula alpha = test::random_lukneg(rng, atoms, 7);
        std::vector<UpperFormula> gamma;
        if (i % 4 == 2) gamma.push_back(test::random_lukneg(rng, atoms, 3));
        const LukNegVerdict v = lukneg_consequence(gamma, alpha);
        const auto hit = grid_falsify_pairs(gamma, alpha, GridOptions{4});
        if (hit) {
            INFO("grid found a countermodel, decision said valid");
            CHECK_FALSE(v.valid);
        }
        if (v.valid) CHECK_FALSE(hit.has_value());
    }
}

TEST_CASE("boxdot translation", "[luk_decide]") {
    const BoxdotTranslation one = boxdot_translate({lk("B(p)")}, lk("B(q)"));
    REQUIRE(one.boxdot_gamma.size() == 2);
    CHECK(one.boxdot_gamma[0] == LukFormula::sneg(LukFormula::var("!B(p)")));
    CHECK(one.boxdot_gamma[1] == LukFormula::var("B(p)"));

    const BoxdotTranslation empty = boxdot_translate({}, lk("B(p)"));
    CHECK(empty.boxdot_gamma.empty());
    REQUIRE(empty.delta.size() == 1);
    CHECK(empty.delta[0] ==
          LukFormula::iff(LukFormula::var("!!B(p)"), LukFormula::var("B(p)")));
    CHECK(empty.alpha == LukFormula::var("B(p)"));

    // implication subformulas contribute the distribution instance
    const BoxdotTranslation imp = boxdot_translate({}, lk("B(p) -> B(q)"));
    bool found = false;
    const LukFormula expected = LukFormula::iff(
        LukFormula::imp(LukFormula::sneg(LukFormula::var("!B(p)")),
                        LukFormula::sneg(LukFormula::var("!B(q)"))),
        LukFormula::sneg(LukFormula::var("!(B(p) -> B(q))")));
    for (const auto& d : imp.delta)
        if (d == expected) found = true;
    CHECK(found);
}

TEST_CASE("boxdot translation preserves the decision", "[luk_decide]") {
    Rng rng(65);
    const std::vector<std::string> atoms = {"p", "q"};
    for (int i = 0; i < 12; ++i) {
        const UpperFormula alpha = test::random_lukneg(rng, atoms, 6);
        std::vector<UpperFormula> gamma;
        if (i % 3 == 1) gamma.push_back(test::random_lukneg(rng, atoms, 4));
        const LukNegVerdict direct = lukneg_consequence(gamma, alpha);
        const BoxdotTranslation tr = boxdot_translate(gamma, alpha);
        std::vector<LukFormula> premises = tr.boxdot_gamma;
        premises.insert(premises.end(), tr.delta.begin(), tr.delta.end());
        const LukVerdict shadow = luk_consequence(premises, tr.alpha, LukOptions{64});
        INFO("alpha = " << print_upper(alpha)
                        << (gamma.empty() ? "" : ", gamma = " + print_upper(gamma[0])));
        CHECK(direct.valid == shadow.valid);
    }
}
