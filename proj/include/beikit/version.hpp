#pragma once

namespace beikit {

inline constexpr const char* kVersion = "1.0.0";

/// Reports embed the exact order convention so archived outputs stay
/// self-describing.
inline constexpr const char* kOrderConvention =
    "DiagonalLex: lexicographic on x1 > x2 > ... > xn > y1 > ... > yn "
    "(row-major for m rows; auxiliary elimination variables sit above all "
    "matrix variables inside block orders)";

} // namespace beikit
