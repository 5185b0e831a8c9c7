#ifndef PARABEL_PARSER_HPP
#define PARABEL_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabel/lower_formula.hpp"
#include "parabel/upper_formula.hpp"

namespace parabel {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

namespace detail {

enum class Tok : unsigned char {
    Atom, BMod, Bang, Tilde, Amp, Pipe, Star, LParen, RParen,
    Arrow, DArrow, Iff, OPlus, OMinus, MeetT, JoinT, MeetK, JoinK, Zero, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::size_t at, const char* lit) {
        for (std::size_t k = 0; lit[k]; ++k)
            if (at + k >= s.size() || s[at + k] != lit[k]) return false;
        return true;
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i + 1;
            while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') ||
                                    (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
                ++j;
            out.push_back({Tok::Atom, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (c == 'B') { out.push_back({Tok::BMod, "B", i}); ++i; continue; }
        if (c == '0') { out.push_back({Tok::Zero, "0", i}); ++i; continue; }
        if (c == '!') { out.push_back({Tok::Bang, "!", i}); ++i; continue; }
        if (c == '~') { out.push_back({Tok::Tilde, "~", i}); ++i; continue; }
        if (c == '&') { out.push_back({Tok::Amp, "&", i}); ++i; continue; }
        if (c == '|') { out.push_back({Tok::Pipe, "|", i}); ++i; continue; }
        if (c == '*') { out.push_back({Tok::Star, "*", i}); ++i; continue; }
        if (starts(i, "(+)")) { out.push_back({Tok::OPlus, "(+)", i}); i += 3; continue; }
        if (starts(i, "(-)")) { out.push_back({Tok::OMinus, "(-)", i}); i += 3; continue; }
        if (c == '(') { out.push_back({Tok::LParen, "(", i}); ++i; continue; }
        if (c == ')') { out.push_back({Tok::RParen, ")", i}); ++i; continue; }
        if (starts(i, "->")) { out.push_back({Tok::Arrow, "->", i}); i += 2; continue; }
        if (starts(i, "=>")) { out.push_back({Tok::DArrow, "=>", i}); i += 2; continue; }
        if (starts(i, "<->")) { out.push_back({Tok::Iff, "<->", i}); i += 3; continue; }
        if (starts(i, "/\\t")) { out.push_back({Tok::MeetT, "/\\t", i}); i += 3; continue; }
        if (starts(i, "/\\k")) { out.push_back({Tok::MeetK, "/\\k", i}); i += 3; continue; }
        if (starts(i, "\\/t")) { out.push_back({Tok::JoinT, "\\/t", i}); i += 3; continue; }
        if (starts(i, "\\/k")) { out.push_back({Tok::JoinK, "\\/k", i}); i += 3; continue; }
        throw ParseError(std::string("unknown token '") + c + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class LowerParser {
public:
    explicit LowerParser(const std::string& text) : toks_(tokenize(text)) {}

    LowerFormula parse() {
        LowerFormula f = parse_or();
        expect_end();
        return f;
    }

    // Entry point used by the upper parser: parses a lower formula from an
    // already-tokenized stream, stopping before the first unconsumed token.
    static LowerFormula parse_stream(const std::vector<Token>& toks, std::size_t& pos);

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }

    void expect_end() {
        if (cur().kind != Tok::End)
            throw ParseError("unexpected token '" + cur().text + "'", cur().offset);
    }

    LowerFormula parse_or() {
        LowerFormula f = parse_and();
        while (cur().kind == Tok::Pipe) {
            ++pos_;
            f = LowerFormula::disj(f, parse_and());
        }
        return f;
    }
    LowerFormula parse_and() {
        LowerFormula f = parse_unary();
        while (cur().kind == Tok::Amp) {
            ++pos_;
            f = LowerFormula::conj(f, parse_unary());
        }
        return f;
    }
    LowerFormula parse_unary() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Bang:
                ++pos_;
                return LowerFormula::neg(parse_unary());
            case Tok::Atom:
                ++pos_;
                return LowerFormula::atom(t.text);
            case Tok::LParen: {
                ++pos_;
                LowerFormula f = parse_or();
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

    friend class UpperParser;
};

}  // namespace detail

inline LowerFormula parse_lower(const std::string& text) {
    return detail::LowerParser(text).parse();
}

namespace detail {

class UpperParser {
public:
    UpperParser(const std::string& text, Dialect d) : toks_(tokenize(text)), dialect_(d) {}

    UpperFormula parse() {
        UpperFormula f = parse_imp();
        if (cur().kind != Tok::End)
            throw ParseError("unexpected token '" + cur().text + "'", cur().offset);
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Dialect dialect_;

    const Token& cur() const { return toks_[pos_]; }

    [[noreturn]] void dialect_violation(const Token& t) const {
        throw DialectError("connective '" + t.text + "' is not available in the " +
                           to_string(dialect_) + " dialect (at offset " +
                           std::to_string(t.offset) + ")");
    }

    bool lukneg() const { return dialect_ == Dialect::LUK_NEG; }

    // Derived connectives, expanded to their defining terms.
    UpperFormula d_imp(const UpperFormula& a, const UpperFormula& b) {
        if (lukneg()) return UpperFormula::imp(a, b);
        return UpperFormula::meet_t(UpperFormula::sup(a, b),
                                    UpperFormula::sup(UpperFormula::bneg(b),
                                                      UpperFormula::bneg(a)));
    }
    UpperFormula d_sneg(const UpperFormula& a) {
        if (lukneg()) return UpperFormula::strong_neg(a);
        return UpperFormula::join_k(
            UpperFormula::sup(a, UpperFormula::zero()),
            UpperFormula::bneg(UpperFormula::sup(UpperFormula::bneg(a), UpperFormula::zero())));
    }
    UpperFormula d_star(const UpperFormula& a, const UpperFormula& b) {
        if (lukneg())
            return UpperFormula::strong_neg(
                UpperFormula::imp(a, UpperFormula::strong_neg(b)));
        return UpperFormula::bneg(d_imp(b, UpperFormula::bneg(a)));
    }
    UpperFormula d_oplus(const UpperFormula& a, const UpperFormula& b) {
        if (lukneg()) return UpperFormula::imp(UpperFormula::strong_neg(a), b);
        return UpperFormula::join_k(
            UpperFormula::sup(d_sneg(a), b),
            UpperFormula::bneg(UpperFormula::sup(d_sneg(UpperFormula::bneg(a)),
                                                 UpperFormula::bneg(b))));
    }
    UpperFormula d_ominus(const UpperFormula& a, const UpperFormula& b) {
        if (lukneg()) return UpperFormula::strong_neg(UpperFormula::imp(a, b));
        return UpperFormula::meet_k(
            d_sneg(UpperFormula::sup(a, b)),
            UpperFormula::bneg(d_sneg(UpperFormula::sup(UpperFormula::bneg(a),
                                                        UpperFormula::bneg(b)))));
    }
    UpperFormula d_iff(const UpperFormula& a, const UpperFormula& b) {
        // lukneg only: (a -> b) * (b -> a)
        return d_star(UpperFormula::imp(a, b), UpperFormula::imp(b, a));
    }

    UpperFormula parse_imp() {
        UpperFormula f = parse_add();
        const Token t = cur();
        switch (t.kind) {
            case Tok::Arrow:
                ++pos_;
                return d_imp(f, parse_imp());
            case Tok::DArrow:
                if (lukneg()) dialect_violation(t);
                ++pos_;
                return UpperFormula::sup(f, parse_imp());
            case Tok::Iff:
                if (!lukneg()) dialect_violation(t);
                ++pos_;
                return d_iff(f, parse_imp());
            default:
                return f;
        }
    }

    UpperFormula parse_add() {
        UpperFormula f = parse_mult();
        for (;;) {
            const Token t = cur();
            if (t.kind == Tok::OPlus) {
                ++pos_;
                f = d_oplus(f, parse_mult());
            } else if (t.kind == Tok::OMinus) {
                ++pos_;
                f = d_ominus(f, parse_mult());
            } else if (t.kind == Tok::JoinT) {
                if (lukneg()) dialect_violation(t);
                ++pos_;
                f = UpperFormula::join_t(f, parse_mult());
            } else if (t.kind == Tok::JoinK) {
                if (lukneg()) dialect_violation(t);
                ++pos_;
                f = UpperFormula::join_k(f, parse_mult());
            } else if (t.kind == Tok::Pipe) {
                dialect_violation(t);
            } else {
                return f;
            }
        }
    }

    UpperFormula parse_mult() {
        UpperFormula f = parse_unary();
        for (;;) {
            const Token t = cur();
            if (t.kind == Tok::Star) {
                ++pos_;
                f = d_star(f, parse_unary());
            } else if (t.kind == Tok::MeetT) {
                if (lukneg()) dialect_violation(t);
                ++pos_;
                f = UpperFormula::meet_t(f, parse_unary());
            } else if (t.kind == Tok::MeetK) {
                if (lukneg()) dialect_violation(t);
                ++pos_;
                f = UpperFormula::meet_k(f, parse_unary());
            } else if (t.kind == Tok::Amp) {
                dialect_violation(t);
            } else {
                return f;
            }
        }
    }

    UpperFormula parse_unary() {
        const Token t = cur();
        switch (t.kind) {
            case Tok::Tilde:
                ++pos_;
                return d_sneg(parse_unary());
            case Tok::Bang:
                ++pos_;
                return UpperFormula::bneg(parse_unary());
            case Tok::Zero:
                if (lukneg()) dialect_violation(t);
                ++pos_;
                return UpperFormula::zero();
            case Tok::BMod: {
                ++pos_;
                if (cur().kind != Tok::LParen)
                    throw ParseError("expected '(' after B", cur().offset);
                ++pos_;
                LowerFormula phi = LowerParser::parse_stream(toks_, pos_);
                if (cur().kind != Tok::RParen)
                    throw ParseError("expected ')' closing B(...)", cur().offset);
                ++pos_;
                return UpperFormula::modal_atom(phi, dialect_);
            }
            case Tok::LParen: {
                ++pos_;
                UpperFormula f = parse_imp();
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

inline LowerFormula LowerParser::parse_stream(const std::vector<Token>& toks, std::size_t& pos) {
    LowerParser p("");
    p.toks_ = toks;
    p.pos_ = pos;
    LowerFormula f = p.parse_or();
    pos = p.pos_;
    return f;
}

}  // namespace detail

inline UpperFormula parse_upper(const std::string& text, Dialect dialect) {
    return detail::UpperParser(text, dialect).parse();
}

}  // namespace parabel

#endif  // PARABEL_PARSER_HPP
