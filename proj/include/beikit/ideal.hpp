#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "beikit/groebner.hpp"

namespace beikit {

/// Ideal given by generators, with a lazily computed reduced Groebner basis
/// under DiagonalLex acting as the canonical identity (equal ideals have
/// identical reduced bases). The cache fills once; afterwards the value is
/// immutable and safe to share.
template <class K>
class Ideal {
  public:
    explicit Ideal(RingContext ctx) : ctx_(ctx), cache_(std::make_shared<Cache>()) {}

    Ideal(RingContext ctx, std::vector<Polynomial<K>> gens)
        : ctx_(ctx), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            require_same_ring(ctx_, g.ctx());
            if (!g.is_zero_poly()) gens_.push_back(std::move(g));
        }
    }

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Polynomial<K>>& gens() const { return gens_; }

    const std::vector<Polynomial<K>>& reduced_gb() const {
        if (!cache_->filled) {
            cache_->gb = groebner_basis(gens_, TermOrder::diagonal_lex());
            cache_->filled = true;
        }
        return cache_->gb;
    }

    bool is_zero_ideal() const { return reduced_gb().empty(); }

    bool is_unit_ideal() const {
        const auto& gb = reduced_gb();
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero_poly();
    }

  private:
    struct Cache {
        bool filled = false;
        std::vector<Polynomial<K>> gb;
    };
    RingContext ctx_;
    std::vector<Polynomial<K>> gens_;
    std::shared_ptr<Cache> cache_;
};

template <class K>
bool membership(const Polynomial<K>& p, const Ideal<K>& ideal) {
    require_same_ring(p.ctx(), ideal.ctx());
    return normal_form(p, ideal.reduced_gb(), TermOrder::diagonal_lex()).is_zero_poly();
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(a.ctx(), b.ctx());
    return a.reduced_gb() == b.reduced_gb();
}

/// a contains b, i.e. a is the bigger ideal.
template <class K>
bool ideal_contains(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(a.ctx(), b.ctx());
    for (const auto& g : b.gens())
        if (!membership(g, a)) return false;
    return true;
}

template <class K>
Ideal<K> sum(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(a.ctx(), b.ctx());
    std::vector<Polynomial<K>> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal<K>(a.ctx(), std::move(gens));
}

/// Generators of the subring intersection eliminating `vars`: Groebner
/// basis under the block order with `vars` on top, filtered to polynomials
/// free of them.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<VarId>& vars) {
    TermOrder ord = TermOrder::block(vars, TermOrder::diagonal_lex());
    auto gb = groebner_basis(ideal.gens(), ord);
    std::vector<Polynomial<K>> kept;
    for (auto& g : gb) {
        bool free = true;
        for (VarId v : vars)
            if (!g.is_zero_poly())
                for (auto& t : g.terms())
                    if (t.mono.depends_on(var_key(v))) {
                        free = false;
                        break;
                    }
        if (free) kept.push_back(std::move(g));
    }
    return Ideal<K>(ideal.ctx(), std::move(kept));
}

/// I cap J via the auxiliary variable t: eliminate t from t*I + (1-t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(a.ctx(), b.ctx());
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>(a.ctx());
    RingContext ext = a.ctx().with_aux(1);
    VarId t = auxvar(a.ctx().aux + 1);
    Polynomial<K> tp = Polynomial<K>::variable(ext, t);
    Polynomial<K> one_minus_t = Polynomial<K>::constant(ext, 1) - tp;
    std::vector<Polynomial<K>> gens;
    for (const auto& g : a.reduced_gb()) gens.push_back(tp * g.with_context(ext));
    for (const auto& g : b.reduced_gb()) gens.push_back(one_minus_t * g.with_context(ext));
    Ideal<K> big(ext, std::move(gens));
    Ideal<K> elim = eliminate(big, {t});
    std::vector<Polynomial<K>> down;
    for (const auto& g : elim.gens()) down.push_back(g.with_context(a.ctx()));
    return Ideal<K>(a.ctx(), std::move(down));
}

/// I : (g) computed as (1/g)(I cap (g)) termwise.
template <class K>
Ideal<K> colon_principal(const Ideal<K>& ideal, const Polynomial<K>& g) {
    if (g.is_zero_poly()) throw DomainError("colon by the zero ideal");
    Ideal<K> cap = intersect(ideal, Ideal<K>(ideal.ctx(), {g}));
    std::vector<Polynomial<K>> quo;
    for (const auto& h : cap.reduced_gb())
        quo.push_back(divide_exact(h, g, TermOrder::diagonal_lex()));
    return Ideal<K>(ideal.ctx(), std::move(quo));
}

/// I : J = intersection over generators g of J of I : (g).
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(a.ctx(), b.ctx());
    if (b.gens().empty()) throw DomainError("colon by the zero ideal");
    bool first = true;
    Ideal<K> acc(a.ctx());
    for (const auto& g : b.gens()) {
        Ideal<K> c = colon_principal(a, g);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

/// Canonical text form of the reduced Groebner basis; equal ideals render
/// identically, so this doubles as a registry key.
template <class K>
std::string canonical_key(const Ideal<K>& ideal) {
    std::string s;
    for (const auto& g : ideal.reduced_gb()) {
        s += g.str();
        s += ";";
    }
    return s;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

template <class K>
std::string gb_hash_hex(const Ideal<K>& ideal) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_key(ideal))));
    return std::string(buf);
}

} // namespace beikit
