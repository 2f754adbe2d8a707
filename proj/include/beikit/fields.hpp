#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "beikit/errors.hpp"

namespace beikit {

/// Exact rational coefficient. GMP keeps values in lowest terms with a
/// positive denominator as long as inputs are canonical, so every
/// constructor here canonicalizes.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline std::string coef_str(const Rat& a) { return a.get_str(); }

/// Residue mod a prime p, always stored in [0, p). Elements carry their
/// modulus; mixing moduli is a context error.
struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    Fp() = default;
    Fp(long value, std::uint32_t prime) : p(prime) {
        assert(prime >= 2);
        long r = value % static_cast<long>(prime);
        if (r < 0) r += prime;
        v = static_cast<std::uint32_t>(r);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        return raw((a.v + b.v) % a.p, a.p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return raw((a.v + a.p - b.v) % a.p, a.p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return raw(static_cast<std::uint32_t>(
                       (static_cast<std::uint64_t>(a.v) * b.v) % a.p),
                   a.p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v == 0 ? 0 : p - v, p); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v == 0) throw DomainError("division by zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, nt = 1, r = p, nr = v;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return raw(static_cast<std::uint32_t>(t), p);
    }

  private:
    static Fp raw(std::uint32_t value, std::uint32_t prime) {
        Fp e;
        e.v = value;
        e.p = prime;
        return e;
    }
    static void check(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw ContextError("F_p elements with different moduli");
    }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_one(const Fp& a) { return a.v == 1; }
inline std::string coef_str(const Fp& a) { return std::to_string(a.v); }

} // namespace beikit
