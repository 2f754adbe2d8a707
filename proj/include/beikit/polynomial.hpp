#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "beikit/term_order.hpp"

namespace beikit {

template <class K>
struct Term {
    Monomial mono;
    K coef;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coef == b.coef;
    }
};

/// Exact multivariate polynomial. Terms are kept strictly descending under
/// DiagonalLex with no zero coefficients, so equality is plain term-vector
/// equality. Values are immutable in spirit: every operation returns a new
/// polynomial.
template <class K>
class Polynomial {
  public:
    explicit Polynomial(RingContext ctx) : ctx_(ctx) {}

    static Polynomial zero(RingContext ctx) { return Polynomial(ctx); }

    static Polynomial constant(RingContext ctx, long value) {
        return term(ctx, Monomial::one(), coef_from_int<K>(value, ctx));
    }

    static Polynomial term(RingContext ctx, Monomial m, K c) {
        Polynomial p(ctx);
        if (!is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Polynomial variable(RingContext ctx, VarId v) {
        return term(ctx, Monomial::var(v), coef_from_int<K>(1, ctx));
    }

    static Polynomial from_terms(RingContext ctx, std::vector<Term<K>> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term<K>& a, const Term<K>& b) {
            return cmp_diaglex(a.mono, b.mono) > 0;
        });
        Polynomial p(ctx);
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coef += t.coef;
                if (is_zero(p.terms_.back().coef)) p.terms_.pop_back();
            } else if (!is_zero(t.coef)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    /// Leading term under an arbitrary order (terms[0] for DiagonalLex).
    const Term<K>& leading(const TermOrder& ord) const {
        if (ord.kind() == TermOrder::Kind::DiagonalLex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
        return terms_[best];
    }

    const Monomial& leading_monomial(const TermOrder& ord) const { return leading(ord).mono; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ctx_, b.ctx_);
        Polynomial r(a.ctx_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            int c;
            if (ia == a.terms_.end()) c = -1;
            else if (ib == b.terms_.end()) c = 1;
            else c = cmp_diaglex(ia->mono, ib->mono);
            if (c > 0) r.terms_.push_back(*ia++);
            else if (c < 0) r.terms_.push_back(*ib++);
            else {
                K s = ia->coef + ib->coef;
                if (!is_zero(s)) r.terms_.push_back({ia->mono, std::move(s)});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.mono, -t.coef});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ctx_, b.ctx_);
        std::vector<Term<K>> ts;
        ts.reserve(a.terms_.size() * b.terms_.size());
        for (auto& ta : a.terms_)
            for (auto& tb : b.terms_) ts.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
        return from_terms(a.ctx_, std::move(ts));
    }

    /// coef * mono * p, the workhorse of reduction.
    Polynomial scaled(const Monomial& m, const K& c) const {
        Polynomial r(ctx_);
        if (is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
        return r;
    }

    Polynomial scalar_mul(const K& c) const { return scaled(Monomial::one(), c); }

    Polynomial pow(int e) const {
        Polynomial r = constant(ctx_, 1);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    /// Lift or project between rings that differ only in auxiliary block.
    Polynomial with_context(RingContext ctx) const {
        Polynomial r(ctx);
        r.terms_ = terms_;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            std::string cs;
            bool negative = false;
            if constexpr (std::is_same_v<K, Rat>) {
                Rat c = t.coef;
                if (sgn(c) < 0) {
                    negative = true;
                    c = -c;
                }
                cs = coef_str(c);
            } else {
                cs = coef_str(t.coef);
            }
            if (i == 0) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            if (t.mono.is_one()) s += cs;
            else if (cs == "1") s += t.mono.str();
            else s += cs + "*" + t.mono.str();
        }
        return s;
    }

  private:
    RingContext ctx_;
    std::vector<Term<K>> terms_;
};

/// The 2-minor f_{ij} = x_i y_j - x_j y_i on columns i, j (rows 1 and 2).
template <class K = Rat>
Polynomial<K> minor2(const RingContext& ctx, int i, int j, int row_a = 1, int row_b = 2) {
    Polynomial<K> p(ctx);
    K one = coef_from_int<K>(1, ctx);
    return Polynomial<K>::from_terms(
        ctx, {{Monomial::from({{matvar(row_a, i), 1}, {matvar(row_b, j), 1}}), one},
              {Monomial::from({{matvar(row_a, j), 1}, {matvar(row_b, i), 1}}), -one}});
}

/// Determinant of the square submatrix on the given rows and columns,
/// by permutation expansion (sizes here are at most 4).
template <class K = Rat>
Polynomial<K> minor_det(const RingContext& ctx, std::vector<int> rows, std::vector<int> cols) {
    const std::size_t k = rows.size();
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
    std::vector<Term<K>> ts;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Monomial m;
        for (std::size_t i = 0; i < k; ++i) m = m * Monomial::var(matvar(rows[i], cols[perm[i]]));
        ts.push_back({m, coef_from_int<K>(sign, ctx)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial<K>::from_terms(ctx, std::move(ts));
}

} // namespace beikit
