#ifndef PARABEL_RATIONAL_HPP
#define PARABEL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace parabel {

// Exact rational arithmetic. Every probability, truth value and solver
// coefficient in this library is a Rational; nothing is ever rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

inline bool in_unit_interval(const Rational& r) {
    return r >= 0 && r <= 1;
}

// Canonical text form "n/d" (plain "n" when the denominator is 1).
inline std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "n", "-n" or "n/d". Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(BigInt(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        BigInt d(den);
        if (d == 0) return std::nullopt;
        return Rational(BigInt(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Decimal rendering used for report output next to the exact value.
inline std::string to_decimal(const Rational& r, int digits = 6) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();
    std::string out = (negative ? "-" : "") + whole.str();
    if (!fs.empty()) out += "." + fs;
    return out;
}

}  // namespace parabel

#endif  // PARABEL_RATIONAL_HPP
