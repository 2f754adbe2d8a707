#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "beikit/polynomial.hpp"

namespace beikit {

namespace gb_detail {

// Engine-local representation: term vector sorted strictly descending under
// the active order, so the head is always the leading term.
template <class K>
using EPoly = std::vector<Term<K>>;

template <class K>
EPoly<K> epoly_from(const Polynomial<K>& p, const TermOrder& ord) {
    EPoly<K> v(p.terms().begin(), p.terms().end());
    if (ord.kind() != TermOrder::Kind::DiagonalLex)
        std::sort(v.begin(), v.end(), [&](const Term<K>& a, const Term<K>& b) {
            return ord.compare(a.mono, b.mono) > 0;
        });
    return v;
}

template <class K>
Polynomial<K> to_poly(const EPoly<K>& v, const RingContext& ctx) {
    return Polynomial<K>::from_terms(ctx, v);
}

// a + c * m * b, both sorted under ord.
template <class K>
EPoly<K> add_scaled(const EPoly<K>& a, const EPoly<K>& b, const Monomial& m, const K& c,
                    const TermOrder& ord) {
    EPoly<K> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            r.push_back(a[i++]);
            continue;
        }
        Monomial bm = b[j].mono * m;
        int cv = (i == a.size()) ? -1 : ord.compare(a[i].mono, bm);
        if (cv > 0) {
            r.push_back(a[i++]);
        } else if (cv < 0) {
            r.push_back({std::move(bm), b[j].coef * c});
            ++j;
        } else {
            K s = a[i].coef + b[j].coef * c;
            if (!is_zero(s)) r.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

template <class K>
struct GBElem {
    EPoly<K> p; // monic
    Monomial lt;
};

// Full reduction (head and tail) modulo a list of monic reducers.
template <class K>
EPoly<K> normal_form_epoly(EPoly<K> h, const std::vector<GBElem<K>>& basis,
                           const TermOrder& ord) {
    EPoly<K> rem;
    std::size_t head = 0;
    while (head < h.size()) {
        const Term<K>& lead = h[head];
        bool reduced = false;
        for (const auto& g : basis) {
            if (divides(g.lt, lead.mono)) {
                Monomial q = quotient(lead.mono, g.lt);
                K negc = -lead.coef;
                EPoly<K> tail(h.begin() + head, h.end());
                h = add_scaled(tail, g.p, q, negc, ord);
                head = 0;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(h[head]);
            ++head;
        }
    }
    return rem;
}

template <class K>
void make_monic(EPoly<K>& p) {
    if (p.empty()) return;
    if (is_one(p.front().coef)) return;
    K inv = p.front().coef;
    for (auto& t : p) t.coef = t.coef / inv;
}

// Keep rational coefficients small between reductions: scale to integer
// content-free form. No-op over F_p where make_monic is enough.
inline void shrink_coeffs(EPoly<Rat>& p) {
    if (p.empty()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (auto& t : p) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& t : p) t.coef *= scale;
}
inline void shrink_coeffs(EPoly<Fp>&) {}

struct Pair {
    std::size_t i, j;
    Monomial lcm_mono;
};

// Gebauer-Moeller pair update: installs the pairs of the new element k and
// prunes old pairs, realizing the coprimality and chain criteria.
template <class K>
void update_pairs(std::vector<Pair>& pairs, const std::vector<GBElem<K>>& basis,
                  std::size_t k) {
    const Monomial& ltk = basis[k].lt;
    struct Cand {
        std::size_t g;
        Monomial l;
        bool cop;
        bool keep = true;
    };
    std::vector<Cand> cand;
    cand.reserve(k);
    for (std::size_t g = 0; g < k; ++g)
        cand.push_back({g, lcm(ltk, basis[g].lt), coprime(ltk, basis[g].lt)});

    // keep coprime pairs for pruning power, then drop them; among the rest
    // keep only lcm-minimal representatives
    for (auto& a : cand) {
        if (!a.keep) continue;
        for (auto& b : cand) {
            if (&a == &b || !b.keep) continue;
            if (a.l == b.l) {
                if (a.cop && !b.cop) b.keep = false; // prefer the discardable one
                else if (&b > &a) b.keep = false;
            } else if (divides(a.l, b.l)) {
                b.keep = false;
            }
        }
    }

    // prune old pairs via the chain criterion through the new element
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
        bool drop = divides(ltk, pr.lcm_mono) &&
                    !(lcm(basis[pr.i].lt, ltk) == pr.lcm_mono) &&
                    !(lcm(basis[pr.j].lt, ltk) == pr.lcm_mono);
        if (!drop) kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);

    for (auto& a : cand)
        if (a.keep && !a.cop) pairs.push_back({a.g, k, a.l});
}

template <class K>
EPoly<K> spoly(const GBElem<K>& f, const GBElem<K>& g, const Monomial& l,
               const TermOrder& ord) {
    // both monic: S = (l/lt f) f - (l/lt g) g
    EPoly<K> a;
    Monomial qf = quotient(l, f.lt);
    a.reserve(f.p.size());
    for (auto& t : f.p) a.push_back({t.mono * qf, t.coef});
    if (ord.kind() != TermOrder::Kind::DiagonalLex)
        std::sort(a.begin(), a.end(), [&](const Term<K>& s, const Term<K>& t) {
            return ord.compare(s.mono, t.mono) > 0;
        });
    K minus_one = -f.p.front().coef; // = -1, rings are fields
    return add_scaled(a, g.p, quotient(l, g.lt), minus_one, ord);
}

} // namespace gb_detail

/// Buchberger with Gebauer-Moeller pair elimination and normal (smallest
/// lcm) selection. Returns the unique reduced Groebner basis: monic,
/// autoreduced, sorted ascending by leading term.
template <class K>
std::vector<Polynomial<K>> groebner_basis(const std::vector<Polynomial<K>>& gens,
                                          const TermOrder& ord) {
    using namespace gb_detail;
    RingContext ctx;
    bool have_ctx = false;
    std::vector<GBElem<K>> basis;
    std::vector<Pair> pairs;

    auto insert = [&](EPoly<K> p) {
        shrink_coeffs(p);
        make_monic(p);
        Monomial lt = p.front().mono;
        basis.push_back({std::move(p), std::move(lt)});
        update_pairs(pairs, basis, basis.size() - 1);
    };

    for (const auto& g : gens) {
        if (g.is_zero_poly()) continue;
        if (!have_ctx) {
            ctx = g.ctx();
            have_ctx = true;
        } else {
            require_same_ring(ctx, g.ctx());
        }
        EPoly<K> e = epoly_from(g, ord);
        e = normal_form_epoly(std::move(e), basis, ord);
        if (!e.empty()) insert(std::move(e));
    }
    if (basis.empty()) return {};

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            int c = ord.compare(pairs[i].lcm_mono, pairs[best].lcm_mono);
            if (c < 0 || (c == 0 && (pairs[i].i < pairs[best].i ||
                                     (pairs[i].i == pairs[best].i && pairs[i].j < pairs[best].j))))
                best = i;
        }
        Pair pr = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        EPoly<K> s = spoly(basis[pr.i], basis[pr.j], pr.lcm_mono, ord);
        s = normal_form_epoly(std::move(s), basis, ord);
        if (!s.empty()) insert(std::move(s));
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(basis[j].lt, basis[i].lt) &&
                !(basis[i].lt == basis[j].lt && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<GBElem<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // tail-reduce every element against the others
    std::vector<Polynomial<K>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GBElem<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        EPoly<K> r = normal_form_epoly(minimal[i].p, others, ord);
        shrink_coeffs(r);
        make_monic(r);
        out.push_back(to_poly(r, ctx));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ord.compare(a.leading_monomial(ord), b.leading_monomial(ord)) < 0;
    });
    return out;
}

/// Remainder of p on full division by the (arbitrary) family `basis`.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis,
                          const TermOrder& ord) {
    using namespace gb_detail;
    std::vector<GBElem<K>> b;
    for (const auto& g : basis) {
        if (g.is_zero_poly()) continue;
        require_same_ring(p.ctx(), g.ctx());
        EPoly<K> e = epoly_from(g, ord);
        make_monic(e);
        Monomial lt = e.front().mono;
        b.push_back({std::move(e), std::move(lt)});
    }
    EPoly<K> r = normal_form_epoly(epoly_from(p, ord), b, ord);
    return to_poly(r, p.ctx());
}

/// Buchberger criterion on the generators as given: true iff every
/// S-polynomial reduces to zero modulo the generator list itself.
/// Coprime leading terms are skipped (their S-polynomials always reduce).
template <class K>
bool is_groebner(const std::vector<Polynomial<K>>& gens, const TermOrder& ord) {
    using namespace gb_detail;
    std::vector<GBElem<K>> b;
    for (const auto& g : gens) {
        if (g.is_zero_poly()) continue;
        EPoly<K> e = epoly_from(g, ord);
        make_monic(e);
        Monomial lt = e.front().mono;
        b.push_back({std::move(e), std::move(lt)});
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (coprime(b[i].lt, b[j].lt)) continue;
            EPoly<K> s = spoly(b[i], b[j], lcm(b[i].lt, b[j].lt), ord);
            if (!normal_form_epoly(std::move(s), b, ord).empty()) return false;
        }
    return true;
}

/// Exact division by a single polynomial; throws DomainError when the
/// division leaves a remainder.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& p, const Polynomial<K>& d,
                           const TermOrder& ord) {
    using namespace gb_detail;
    if (d.is_zero_poly()) throw DomainError("division by the zero polynomial");
    require_same_ring(p.ctx(), d.ctx());
    EPoly<K> g = epoly_from(d, ord);
    K lc = g.front().coef;
    Monomial lt = g.front().mono;
    EPoly<K> h = epoly_from(p, ord);
    std::vector<Term<K>> quot;
    while (!h.empty()) {
        if (!divides(lt, h.front().mono)) throw DomainError("inexact polynomial division");
        Monomial qm = quotient(h.front().mono, lt);
        K qc = h.front().coef / lc;
        K nqc = -qc;
        quot.push_back({qm, qc});
        h = add_scaled(h, g, qm, nqc, ord);
    }
    return Polynomial<K>::from_terms(p.ctx(), std::move(quot));
}

} // namespace beikit
