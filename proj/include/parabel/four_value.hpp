#ifndef PARABEL_FOUR_VALUE_HPP
#define PARABEL_FOUR_VALUE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parabel {

// The four truth values, seen as pairs of support bits (positive, negative):
//   T = (1,0)   F = (0,1)   B = (1,1)   N = (0,0)
// Truth order:      F < N,B < T.   Knowledge order: N < T,F < B.
// The enumerator order below (F, N, B, T) is also the order used when
// countermodel searches enumerate valuations, so the first witness found
// is deterministic.
enum class FourValue : std::uint8_t { F = 0, N = 1, B = 2, T = 3 };

inline constexpr std::array<FourValue, 4> kFourValues = {
    FourValue::F, FourValue::N, FourValue::B, FourValue::T};

inline constexpr bool pos_bit(FourValue v) {
    return v == FourValue::T || v == FourValue::B;
}
inline constexpr bool neg_bit(FourValue v) {
    return v == FourValue::F || v == FourValue::B;
}

inline constexpr FourValue make_four(bool pos, bool neg) {
    return pos ? (neg ? FourValue::B : FourValue::T)
               : (neg ? FourValue::F : FourValue::N);
}

inline constexpr FourValue four_neg(FourValue v) {
    return make_four(neg_bit(v), pos_bit(v));
}
inline constexpr FourValue four_meet_t(FourValue a, FourValue b) {
    return make_four(pos_bit(a) && pos_bit(b), neg_bit(a) || neg_bit(b));
}
inline constexpr FourValue four_join_t(FourValue a, FourValue b) {
    return make_four(pos_bit(a) || pos_bit(b), neg_bit(a) && neg_bit(b));
}
inline constexpr FourValue four_meet_k(FourValue a, FourValue b) {
    return make_four(pos_bit(a) && pos_bit(b), neg_bit(a) && neg_bit(b));
}
inline constexpr FourValue four_join_k(FourValue a, FourValue b) {
    return make_four(pos_bit(a) || pos_bit(b), neg_bit(a) || neg_bit(b));
}

// Truth order: a <=_t b iff pos grows and neg shrinks.
inline constexpr bool four_leq_t(FourValue a, FourValue b) {
    return (!pos_bit(a) || pos_bit(b)) && (!neg_bit(b) || neg_bit(a));
}
// Knowledge order: both supports grow.
inline constexpr bool four_leq_k(FourValue a, FourValue b) {
    return (!pos_bit(a) || pos_bit(b)) && (!neg_bit(a) || neg_bit(b));
}

// Designated set {T, B}: a value counts as "accepted" when positively
// supported, regardless of conflicting negative support.
inline constexpr bool four_designated(FourValue v) { return pos_bit(v); }

enum class FourOp : std::uint8_t { MeetT, JoinT, MeetK, JoinK, Neg };

inline FourValue four_op(FourOp op, FourValue a, FourValue b = FourValue::N) {
    switch (op) {
        case FourOp::MeetT: return four_meet_t(a, b);
        case FourOp::JoinT: return four_join_t(a, b);
        case FourOp::MeetK: return four_meet_k(a, b);
        case FourOp::JoinK: return four_join_k(a, b);
        case FourOp::Neg: return four_neg(a);
    }
    throw std::logic_error("unknown four-valued operation");
}

inline char four_to_char(FourValue v) {
    switch (v) {
        case FourValue::T: return 't';
        case FourValue::F: return 'f';
        case FourValue::B: return 'b';
        case FourValue::N: return 'n';
    }
    return '?';
}

inline std::string four_to_string(FourValue v) { return std::string(1, four_to_char(v)); }

}  // namespace parabel

#endif  // PARABEL_FOUR_VALUE_HPP
