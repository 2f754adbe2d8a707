#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "beikit/ring.hpp"

namespace beikit {

/// Sparse power product. Exponents are stored sorted by variable
/// significance (var_key ascending, most significant first) and are always
/// positive; the total degree is kept alongside.
class Monomial {
  public:
    using Entry = std::pair<std::uint16_t, std::uint16_t>; // (var_key, exponent)

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        if (exp > 0) {
            m.exps_.push_back({var_key(v), static_cast<std::uint16_t>(exp)});
            m.deg_ = exp;
        }
        return m;
    }

    static Monomial from(std::initializer_list<std::pair<VarId, int>> entries) {
        Monomial m;
        for (auto& [v, e] : entries)
            if (e > 0) m.exps_.push_back({var_key(v), static_cast<std::uint16_t>(e)});
        std::sort(m.exps_.begin(), m.exps_.end());
        for (auto& [k, e] : m.exps_) m.deg_ += e;
        return m;
    }

    bool is_one() const { return exps_.empty(); }
    int degree() const { return deg_; }
    const std::vector<Entry>& entries() const { return exps_; }

    int exponent(VarId v) const {
        auto key = var_key(v);
        for (auto& [k, e] : exps_)
            if (k == key) return e;
        return 0;
    }

    bool squarefree() const {
        for (auto& [k, e] : exps_)
            if (e > 1) return false;
        return true;
    }

    bool depends_on(std::uint16_t key) const {
        return std::any_of(exps_.begin(), exps_.end(),
                           [&](const Entry& t) { return t.first == key; });
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.exps_.reserve(a.exps_.size() + b.exps_.size());
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
                r.exps_.push_back(*ia++);
            } else if (ia == a.exps_.end() || ib->first < ia->first) {
                r.exps_.push_back(*ib++);
            } else {
                r.exps_.push_back({ia->first, static_cast<std::uint16_t>(ia->second + ib->second)});
                ++ia;
                ++ib;
            }
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    /// true iff a | b (componentwise exponents).
    friend bool divides(const Monomial& a, const Monomial& b) {
        auto ib = b.exps_.begin();
        for (auto& [k, e] : a.exps_) {
            while (ib != b.exps_.end() && ib->first < k) ++ib;
            if (ib == b.exps_.end() || ib->first != k || ib->second < e) return false;
        }
        return true;
    }

    /// b / a; caller guarantees divisibility.
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r;
        auto ia = a.exps_.begin();
        for (auto& [k, e] : b.exps_) {
            while (ia != a.exps_.end() && ia->first < k) ++ia;
            std::uint16_t sub = (ia != a.exps_.end() && ia->first == k) ? ia->second : 0;
            if (e > sub) r.exps_.push_back({k, static_cast<std::uint16_t>(e - sub)});
        }
        for (auto& [k, e] : r.exps_) r.deg_ += e;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
                r.exps_.push_back(*ia++);
            } else if (ia == a.exps_.end() || ib->first < ia->first) {
                r.exps_.push_back(*ib++);
            } else {
                r.exps_.push_back({ia->first, std::max(ia->second, ib->second)});
                ++ia;
                ++ib;
            }
        }
        for (auto& [k, e] : r.exps_) r.deg_ += e;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() && ib != b.exps_.end()) {
            if (ia->first < ib->first) ++ia;
            else if (ib->first < ia->first) ++ib;
            else return false;
        }
        return true;
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (auto& [k, e] : exps_) {
            if (!s.empty()) s += "*";
            s += var_name(var_from_key(k));
            if (e > 1) s += "^" + std::to_string(static_cast<int>(e));
        }
        return s;
    }

  private:
    std::vector<Entry> exps_;
    int deg_ = 0;
};

/// Lexicographic comparison along the row-major variable sequence:
/// the most significant variable with differing exponent decides.
/// Returns <0, 0, >0 for a < b, a == b, a > b.
inline int cmp_diaglex(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first < eb[j].first) return 1;  // a has the more significant variable
        if (eb[j].first < ea[i].first) return -1;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < ea.size()) return 1;
    if (j < eb.size()) return -1;
    return 0;
}

} // namespace beikit
