#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "beikit/polynomial.hpp"

namespace beikit {

/// Parser for the textual polynomial grammar used by reports:
/// sums of terms "c*x1*y2^3", variables x/y/z/w followed by a column index,
/// integer (or a/b rational) coefficients, operators + - * ^.
template <class K>
class PolyParser {
  public:
    PolyParser(std::string_view text, RingContext ctx) : s_(text), ctx_(ctx) {}

    Polynomial<K> parse() {
        Polynomial<K> acc(ctx_);
        skip_ws();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            acc = acc + parse_term(sign);
            skip_ws();
            first = false;
        }
        if (first) fail("empty polynomial text");
        return acc;
    }

  private:
    Polynomial<K> parse_term(int sign) {
        K coef = coef_from_int<K>(sign, ctx_);
        Monomial mono;
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (std::isdigit(peek()) != 0)) {
                long num = parse_int();
                if (pos_ < s_.size() && peek() == '/') {
                    ++pos_;
                    long den = parse_int();
                    if (den == 0) fail("zero denominator");
                    if constexpr (std::is_same_v<K, Rat>) {
                        coef *= rat(num, den);
                    } else {
                        coef = coef * coef_from_int<K>(num, ctx_) /
                               coef_from_int<K>(den, ctx_);
                    }
                } else {
                    coef = coef * coef_from_int<K>(num, ctx_);
                }
            } else if (pos_ < s_.size() && is_var_letter(peek())) {
                VarId v = parse_var();
                int exp = 1;
                skip_ws();
                if (pos_ < s_.size() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    exp = static_cast<int>(parse_int());
                    if (exp < 0) fail("negative exponent");
                }
                mono = mono * Monomial::var(v, exp);
            } else {
                fail("expected coefficient or variable");
            }
            any = true;
            skip_ws();
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        return Polynomial<K>::term(ctx_, mono, coef);
    }

    static bool is_var_letter(char c) {
        return c == 'x' || c == 'y' || c == 'z' || c == 'w' || c == 't';
    }

    VarId parse_var() {
        char letter = s_[pos_++];
        int col = 0;
        bool has_digits = false;
        while (pos_ < s_.size() && std::isdigit(peek())) {
            col = col * 10 + (peek() - '0');
            ++pos_;
            has_digits = true;
        }
        int row;
        switch (letter) {
            case 'x': row = 1; break;
            case 'y': row = 2; break;
            case 'z': row = 3; break;
            case 'w': row = 4; break;
            default: row = 0; break; // t
        }
        if (!has_digits) {
            if (row == 0) col = 1; // plain "t"
            else fail("variable needs a column index");
        }
        VarId v = matvar(row, col);
        if (row == 0) v = auxvar(col);
        if (!ctx_.contains(v)) fail("variable " + var_name(v) + " outside the ring");
        return v;
    }

    long parse_int() {
        if (pos_ >= s_.size() || !std::isdigit(peek())) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(peek())) {
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return v;
    }

    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view s_;
    RingContext ctx_;
    std::size_t pos_ = 0;
};

template <class K = Rat>
Polynomial<K> parse_poly(std::string_view text, const RingContext& ctx) {
    return PolyParser<K>(text, ctx).parse();
}

} // namespace beikit
