#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "parabel/nnf.hpp"
#include "parabel/parser.hpp"
#include "test_util.hpp"

using namespace parabel;
using parabel::test::Rng;

namespace {

const std::vector<std::string> kAtoms = {"p", "q", "r"};

UpperFormula batom(const std::string& a) {
    return UpperFormula::modal_atom(LowerFormula::atom(a), Dialect::LUK_NEG);
}

PairValue eval_mv(const UpperFormula& f, const std::map<std::string, PairValue>& asg) {
    return eval_upper(
        f, [&](const LowerFormula& phi) { return asg.at(print_lower(phi)); },
        AlgebraId::MV_PROD);
}

std::map<std::string, PairValue> random_assignment(Rng& rng, const UpperFormula& f) {
    std::map<std::string, PairValue> asg;
    for (const auto& phi : f.modal_args()) asg.emplace(print_lower(phi), test::random_pair(rng));
    return asg;
}

}  // namespace

TEST_CASE("lower parsing", "[formulas]") {
    const LowerFormula f = parse_lower("p & !q");
    REQUIRE(f.kind() == LowerFormula::Kind::And);
    CHECK(f.lhs() == LowerFormula::atom("p"));
    CHECK(f.rhs() == LowerFormula::neg(LowerFormula::atom("q")));

    const LowerFormula g = parse_lower("!(p | q)");
    REQUIRE(g.kind() == LowerFormula::Kind::Neg);
    CHECK(g.lhs() == LowerFormula::disj(LowerFormula::atom("p"), LowerFormula::atom("q")));

    // precedence: ! > & > |
    CHECK(parse_lower("!p & q | r") ==
          LowerFormula::disj(LowerFormula::conj(LowerFormula::neg(LowerFormula::atom("p")),
                                                LowerFormula::atom("q")),
                             LowerFormula::atom("r")));
}

TEST_CASE("lower parse errors carry offsets", "[formulas]") {
    try {
        parse_lower("p &");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    try {
        parse_lower("p && q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(parse_lower("p @ q"), ParseError);
    CHECK_THROWS_AS(parse_lower("(p | q"), ParseError);
    CHECK_THROWS_AS(parse_lower("P"), ParseError);  // uppercase is not an atom
}

TEST_CASE("lower print round-trip", "[formulas]") {
    CHECK(print_lower(parse_lower("p&!q")) == "p & !q");
    CHECK(print_lower(parse_lower("!(p|q)")) == "!(p | q)");
    CHECK(print_lower(parse_lower("p & q & r")) == "p & q & r");
    CHECK(print_lower(parse_lower("p & (q & r)")) == "p & (q & r)");
    CHECK(print_lower(parse_lower("(p | q) & r")) == "(p | q) & r");

    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const LowerFormula f = test::random_lower(rng, kAtoms, 4);
        CHECK(parse_lower(print_lower(f)) == f);
    }
}

TEST_CASE("upper parsing in the lukneg dialect", "[formulas]") {
    const UpperFormula f = parse_upper("B(p) -> B(p|q)", Dialect::LUK_NEG);
    CHECK(f == UpperFormula::imp(batom("p"),
                                 UpperFormula::modal_atom(parse_lower("p|q"),
                                                          Dialect::LUK_NEG)));

    // derived: a (+) b expands to ~a -> b
    CHECK(parse_upper("B(p) (+) B(q)", Dialect::LUK_NEG) ==
          UpperFormula::imp(UpperFormula::strong_neg(batom("p")), batom("q")));
    // a (-) b expands to ~(a -> b)
    CHECK(parse_upper("B(p) (-) B(q)", Dialect::LUK_NEG) ==
          UpperFormula::strong_neg(UpperFormula::imp(batom("p"), batom("q"))));
    // a * b expands to ~(a -> ~b)
    CHECK(parse_upper("B(p) * B(q)", Dialect::LUK_NEG) ==
          UpperFormula::strong_neg(
              UpperFormula::imp(batom("p"), UpperFormula::strong_neg(batom("q")))));
    // <-> is the strong conjunction of both implications
    CHECK(parse_upper("B(p) <-> B(q)", Dialect::LUK_NEG) ==
          UpperFormula::strong_neg(UpperFormula::imp(
              UpperFormula::imp(batom("p"), batom("q")),
              UpperFormula::strong_neg(UpperFormula::imp(batom("q"), batom("p"))))));
}

TEST_CASE("upper parsing in the bilattice dialect", "[formulas]") {
    const UpperFormula f = parse_upper("B(p) /\\k 0", Dialect::BILAT);
    CHECK(f == UpperFormula::meet_k(
                   UpperFormula::modal_atom(LowerFormula::atom("p"), Dialect::BILAT),
                   UpperFormula::zero()));

    CHECK_NOTHROW(parse_upper("B(p) => B(q) \\/t B(r)", Dialect::BILAT));
    CHECK_NOTHROW(parse_upper("~B(p) (+) B(q)", Dialect::BILAT));
    CHECK_NOTHROW(parse_upper("B(p) -> B(q)", Dialect::BILAT));

    // bilat-dialect trees never contain a primitive ->
    std::function<bool(const UpperFormula&)> no_imp = [&](const UpperFormula& g) {
        if (g.kind() == UpperFormula::Kind::Imp) return false;
        if (g.is_leaf()) return true;
        if (g.is_unary()) return no_imp(g.lhs());
        return no_imp(g.lhs()) && no_imp(g.rhs());
    };
    CHECK(no_imp(parse_upper("B(p) -> B(q)", Dialect::BILAT)));
    CHECK(no_imp(parse_upper("B(p) (-) B(q)", Dialect::BILAT)));
}

TEST_CASE("dialect violations", "[formulas]") {
    CHECK_THROWS_AS(parse_upper("B(p) /\\k B(q)", Dialect::LUK_NEG), DialectError);
    CHECK_THROWS_AS(parse_upper("B(p) => B(q)", Dialect::LUK_NEG), DialectError);
    CHECK_THROWS_AS(parse_upper("0", Dialect::LUK_NEG), DialectError);
    CHECK_THROWS_AS(parse_upper("B(p) <-> B(q)", Dialect::BILAT), DialectError);
    CHECK_THROWS_AS(parse_upper("B(p) & B(q)", Dialect::BILAT), DialectError);
    CHECK_THROWS_AS(parse_upper("B(B(p))", Dialect::LUK_NEG), ParseError);
}

TEST_CASE("upper print round-trip", "[formulas]") {
    for (const char* text : {"B(p) -> B(p | q)", "~!B(p)", "B(p) -> B(q) -> B(r)",
                             "(B(p) -> B(q)) -> B(r)", "~(~B(p) -> ~B(q))"}) {
        const UpperFormula f = parse_upper(text, Dialect::LUK_NEG);
        CHECK(print_upper(f) == text);
        CHECK(parse_upper(print_upper(f), Dialect::LUK_NEG) == f);
    }
    for (const char* text :
         {"B(p) => B(q)", "B(p) /\\k 0", "B(p) /\\t B(q) \\/k B(r)",
          "!B(p) => B(q) \\/t B(r)", "B(p) /\\t (B(q) /\\k B(r))"}) {
        const UpperFormula f = parse_upper(text, Dialect::BILAT);
        CHECK(print_upper(f) == text);
        CHECK(parse_upper(print_upper(f), Dialect::BILAT) == f);
    }

    Rng rng(22);
    for (int i = 0; i < 500; ++i) {
        const UpperFormula f = test::random_lukneg(rng, kAtoms, 8);
        CHECK(parse_upper(print_upper(f), Dialect::LUK_NEG) == f);
    }
}

TEST_CASE("nnf on the rewrite examples", "[formulas]") {
    CHECK(nnf(parse_upper("!~B(p)", Dialect::LUK_NEG)) ==
          parse_upper("~!B(p)", Dialect::LUK_NEG));
    CHECK(nnf(parse_upper("!(B(p) -> B(q))", Dialect::LUK_NEG)) ==
          parse_upper("~(~!B(p) -> ~!B(q))", Dialect::LUK_NEG));
    CHECK(nnf(parse_upper("!!B(p)", Dialect::LUK_NEG)) ==
          parse_upper("B(p)", Dialect::LUK_NEG));
}

TEST_CASE("nnf puts swap negation on literals only and is idempotent", "[formulas]") {
    Rng rng(23);
    for (int i = 0; i < 400; ++i) {
        const UpperFormula f = test::random_lukneg(rng, kAtoms, 10);
        const UpperFormula n = nnf(f);
        CHECK(is_nnf(n));
        CHECK(nnf(n) == n);
    }
}

TEST_CASE("nnf preserves product-algebra values exactly", "[formulas]") {
    Rng rng(24);
    for (int i = 0; i < 500; ++i) {
        const UpperFormula f = test::random_lukneg(rng, kAtoms, 10);
        const auto asg = random_assignment(rng, f);
        CHECK(eval_mv(f, asg) == eval_mv(nnf(f), asg));
    }
}

TEST_CASE("neg_translate base cases and examples", "[formulas]") {
    CHECK(neg_translate(parse_upper("B(p)", Dialect::LUK_NEG)) ==
          parse_upper("!B(p)", Dialect::LUK_NEG));
    CHECK(neg_translate(parse_upper("!B(p)", Dialect::LUK_NEG)) ==
          parse_upper("B(p)", Dialect::LUK_NEG));
    CHECK(neg_translate(parse_upper("~B(p)", Dialect::LUK_NEG)) ==
          parse_upper("~!B(p)", Dialect::LUK_NEG));
    CHECK(neg_translate(parse_upper("B(p) -> B(q)", Dialect::LUK_NEG)) ==
          parse_upper("~(~!B(p) -> ~!B(q))", Dialect::LUK_NEG));
}

TEST_CASE("neg_translate is an involution up to nnf", "[formulas]") {
    Rng rng(25);
    for (int i = 0; i < 400; ++i) {
        const UpperFormula f = test::random_lukneg(rng, kAtoms, 10);
        CHECK(nnf(neg_translate(neg_translate(f))) == nnf(f));
    }
}

TEST_CASE("neg_translate tracks the swapped component", "[formulas]") {
    // Under e'(p) = (e(p), e(!p)), the translation computes the second
    // component: eval(a^!) = first component of !eval(a).
    Rng rng(26);
    for (int i = 0; i < 400; ++i) {
        const UpperFormula f = test::random_lukneg(rng, kAtoms, 10);
        const auto asg = random_assignment(rng, f);
        const PairValue va = eval_mv(f, asg);
        const PairValue vt = eval_mv(neg_translate(f), asg);
        CHECK(vt.pos == va.neg);
        CHECK(vt.neg == va.pos);
    }
}
