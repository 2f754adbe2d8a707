#pragma once

#include <cstdint>
#include <string>

#include "beikit/errors.hpp"
#include "beikit/fields.hpp"

namespace beikit {

/// One entry of the generic m x n matrix of variables. Row 1 is the x-row,
/// row 2 the y-row (row 3 renders as z, row 4 as w). Row 0 is reserved for
/// auxiliary variables adjoined internally by elimination constructions.
struct VarId {
    std::uint8_t row = 0;
    std::uint8_t col = 0;

    friend bool operator==(const VarId&, const VarId&) = default;
};

inline VarId xvar(int col) { return {1, static_cast<std::uint8_t>(col)}; }
inline VarId yvar(int col) { return {2, static_cast<std::uint8_t>(col)}; }
inline VarId matvar(int row, int col) {
    return {static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
}
inline VarId auxvar(int i = 1) { return {0, static_cast<std::uint8_t>(i)}; }

/// Sort key realizing the row-major variable sequence
/// x1 > x2 > ... > xn > y1 > ... > yn > (z-row) > ... ; auxiliary variables
/// sort after all matrix variables. Smaller key = more significant variable.
inline std::uint16_t var_key(VarId v) {
    if (v.row == 0) return static_cast<std::uint16_t>(0x7F00u | v.col);
    return static_cast<std::uint16_t>((static_cast<std::uint16_t>(v.row) << 8) | v.col);
}

inline VarId var_from_key(std::uint16_t key) {
    std::uint8_t row = static_cast<std::uint8_t>(key >> 8);
    if (row == 0x7F) row = 0;
    return {row, static_cast<std::uint8_t>(key & 0xFF)};
}

inline std::string var_name(VarId v) {
    static const char* row_letter[] = {"t", "x", "y", "z", "w"};
    if (v.row <= 4) {
        std::string s = row_letter[v.row];
        if (v.row == 0 && v.col == 1) return s; // plain "t"
        return s + std::to_string(static_cast<int>(v.col));
    }
    return "m" + std::to_string(static_cast<int>(v.row)) + "_" +
           std::to_string(static_cast<int>(v.col));
}

/// Ambient polynomial ring: an m x n matrix of variables over QQ (ch == 0)
/// or F_p (ch == p), plus `aux` adjoined auxiliary variables.
struct RingContext {
    int rows = 2;
    int cols = 0;
    long ch = 0;
    int aux = 0;

    friend bool operator==(const RingContext&, const RingContext&) = default;

    bool contains(VarId v) const {
        if (v.row == 0) return v.col >= 1 && static_cast<int>(v.col) <= aux;
        return v.row >= 1 && static_cast<int>(v.row) <= rows && v.col >= 1 &&
               static_cast<int>(v.col) <= cols;
    }

    RingContext with_aux(int extra) const {
        RingContext c = *this;
        c.aux += extra;
        return c;
    }
};

inline RingContext classic_ring(int n, long ch = 0) { return {2, n, ch, 0}; }
inline RingContext matrix_ring(int m, int n, long ch = 0) { return {m, n, ch, 0}; }

inline void require_same_ring(const RingContext& a, const RingContext& b) {
    if (!(a == b)) throw ContextError("operands live in different rings");
}

/// Build the field element for an integer literal in the given ring.
template <class K>
K coef_from_int(long value, const RingContext& ctx);

template <>
inline Rat coef_from_int<Rat>(long value, const RingContext&) {
    return Rat(value);
}

template <>
inline Fp coef_from_int<Fp>(long value, const RingContext& ctx) {
    if (ctx.ch < 2) throw ContextError("F_p coefficient requested in characteristic 0 ring");
    return Fp(value, static_cast<std::uint32_t>(ctx.ch));
}

} // namespace beikit
