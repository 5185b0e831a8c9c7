#ifndef PARABEL_PAIR_VALUE_HPP
#define PARABEL_PAIR_VALUE_HPP

#include <stdexcept>
#include <string>

#include "parabel/rational.hpp"

namespace parabel {

// A point of the continuous square [0,1]^2: independent positive and
// negative support. Carrier of every pair-valued algebra in this library.
struct PairValue {
    Rational pos;
    Rational neg;

    PairValue() : pos(0), neg(0) {}
    PairValue(Rational p, Rational n) : pos(std::move(p)), neg(std::move(n)) {
        if (!in_unit_interval(pos) || !in_unit_interval(neg))
            throw std::domain_error("pair value outside the unit square: (" +
                                    parabel::to_string(pos) + ", " + parabel::to_string(neg) + ")");
    }

    bool operator==(const PairValue& o) const { return pos == o.pos && neg == o.neg; }
    bool operator!=(const PairValue& o) const { return !(*this == o); }
};

// Truth order: positive support grows, negative support shrinks.
inline bool pair_leq_t(const PairValue& a, const PairValue& b) {
    return a.pos <= b.pos && b.neg <= a.neg;
}
// Knowledge order: both supports grow.
inline bool pair_leq_k(const PairValue& a, const PairValue& b) {
    return a.pos <= b.pos && a.neg <= b.neg;
}

inline std::string to_string(const PairValue& v) {
    return "(" + to_string(v.pos) + ", " + to_string(v.neg) + ")";
}

}  // namespace parabel

#endif  // PARABEL_PAIR_VALUE_HPP
