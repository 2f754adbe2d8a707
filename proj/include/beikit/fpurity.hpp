#pragma once

#include <optional>

#include "beikit/ideal.hpp"

namespace beikit {

/// Frobenius bracket power I^[p]: the ideal of the p-th powers of the
/// generators, in characteristic p.
inline Ideal<Fp> frobenius_power(const Ideal<Fp>& ideal, std::uint32_t p) {
    if (ideal.ctx().ch != static_cast<long>(p))
        throw ContextError("bracket power needs a coefficient field of characteristic p");
    std::vector<Polynomial<Fp>> gens;
    for (const auto& g : ideal.gens()) gens.push_back(g.pow(static_cast<int>(p)));
    return Ideal<Fp>(ideal.ctx(), std::move(gens));
}

struct FedderReport {
    std::uint32_t p = 0;
    std::optional<Ideal<Fp>> ideal; // the input, for self-contained reports
    bool f_pure = false;
    std::optional<Polynomial<Fp>> witness; // element of (I^[p] : I) \ m^[p]
    std::size_t colon_gb_size = 0;
};

/// A polynomial lies in m^[p] = (v^p : all variables v) iff each of its
/// monomials has some exponent >= p; monomial-ideal membership is termwise.
inline bool in_frobenius_max_power(const Polynomial<Fp>& g, std::uint32_t p) {
    for (const auto& t : g.terms()) {
        bool some_big = false;
        for (auto& [key, e] : t.mono.entries())
            if (e >= p) {
                some_big = true;
                break;
            }
        if (!some_big) return false; // this monomial survives outside m^[p]
    }
    return true;
}

struct FedderLimits {
    int max_cols_2rows = 4;
    int max_cols_3rows = 3;
    std::uint32_t max_p = 3;
};

/// Fedder's criterion at the homogeneous maximal ideal: R/I is F-pure iff
/// (I^[p] : I) is not contained in m^[p]. The witness is the first
/// reduced-basis element of the colon with a monomial free of p-th powers.
inline FedderReport fedder_is_fpure(const Ideal<Fp>& ideal, std::uint32_t p,
                                    const FedderLimits& limits = {}) {
    const RingContext& ctx = ideal.ctx();
    if (ctx.ch != static_cast<long>(p))
        throw ContextError("Fedder run needs a coefficient field of characteristic p");
    if (p > limits.max_p || ctx.rows > 3 ||
        (ctx.rows == 2 && ctx.cols > limits.max_cols_2rows) ||
        (ctx.rows == 3 && ctx.cols > limits.max_cols_3rows))
        throw CapacityError("Fedder run outside the configured degree-blowup bounds");

    FedderReport rep;
    rep.p = p;
    rep.ideal = ideal;
    if (ideal.is_unit_ideal()) throw DomainError("Fedder needs a proper ideal");
    if (ideal.is_zero_ideal()) {
        // R itself is regular; the colon is the unit ideal
        rep.f_pure = true;
        rep.witness = Polynomial<Fp>::constant(ctx, 1);
        rep.colon_gb_size = 1;
        return rep;
    }

    Ideal<Fp> colon_ideal = colon(frobenius_power(ideal, p), ideal);
    const auto& gb = colon_ideal.reduced_gb();
    rep.colon_gb_size = gb.size();
    for (const auto& g : gb)
        if (!in_frobenius_max_power(g, p)) {
            rep.f_pure = true;
            rep.witness = g;
            break;
        }
    return rep;
}

} // namespace beikit
