#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beikit/graph.hpp"
#include "beikit/ideal.hpp"

namespace beikit {

/// J_G: one 2-minor f_uv per edge {u,v}.
template <class K = Rat>
Ideal<K> binomial_edge_ideal(const Graph& g, long ch = 0) {
    RingContext ctx = classic_ring(g.n, ch);
    std::vector<Polynomial<K>> gens;
    for (auto [u, v] : g.edges()) gens.push_back(minor2<K>(ctx, u, v));
    return Ideal<K>(ctx, std::move(gens));
}

/// Generalized form on an m x n matrix: all C(m,2) 2-minors of the column
/// pair of every edge; m = 2 reproduces binomial_edge_ideal exactly.
template <class K = Rat>
Ideal<K> generalized_bei(const Graph& g, int m, long ch = 0) {
    if (m < 2) throw DomainError("generalized form needs m >= 2");
    RingContext ctx = matrix_ring(m, g.n, ch);
    std::vector<Polynomial<K>> gens;
    for (auto [u, v] : g.edges())
        for (int r = 1; r < m; ++r)
            for (int s = r + 1; s <= m; ++s) gens.push_back(minor2<K>(ctx, u, v, r, s));
    return Ideal<K>(ctx, std::move(gens));
}

/// I_t(X_[a,b]): all t x t minors of the submatrix on consecutive columns
/// a..b. t = 1 is the variable ideal of those columns; an oversized t (with
/// t > 1) gives the zero ideal.
template <class K = Rat>
Ideal<K> adjacent_minor_ideal(int t, int a, int b, const RingContext& ctx) {
    if (a < 1 || b > ctx.cols || a > b) throw DomainError("column interval outside the matrix");
    if (t < 1 || t > ctx.rows) throw DomainError("minor size outside 1..m");
    std::vector<Polynomial<K>> gens;
    if (t == 1) {
        for (int c = a; c <= b; ++c)
            for (int r = 1; r <= ctx.rows; ++r)
                gens.push_back(Polynomial<K>::variable(ctx, matvar(r, c)));
        return Ideal<K>(ctx, std::move(gens));
    }
    if (t > b - a + 1) return Ideal<K>(ctx); // zero ideal
    // choose t rows and t columns
    std::vector<int> rows(static_cast<std::size_t>(t)), cols(static_cast<std::size_t>(t));
    std::vector<bool> rowsel(static_cast<std::size_t>(ctx.rows), false);
    std::fill(rowsel.begin(), rowsel.begin() + t, true);
    do {
        int ri = 0;
        for (int r = 1; r <= ctx.rows; ++r)
            if (rowsel[static_cast<std::size_t>(r - 1)]) rows[static_cast<std::size_t>(ri++)] = r;
        std::vector<bool> colsel(static_cast<std::size_t>(b - a + 1), false);
        std::fill(colsel.begin(), colsel.begin() + t, true);
        do {
            int ci = 0;
            for (int c = a; c <= b; ++c)
                if (colsel[static_cast<std::size_t>(c - a)]) cols[static_cast<std::size_t>(ci++)] = c;
            gens.push_back(minor_det<K>(ctx, rows, cols));
        } while (std::prev_permutation(colsel.begin(), colsel.end()));
    } while (std::prev_permutation(rowsel.begin(), rowsel.end()));
    return Ideal<K>(ctx, std::move(gens));
}

/// The combinatorial prime P_S: variables of the columns in S plus the
/// edge-minor ideal of the complete graph on each connected component of
/// G restricted to [n] \ S. The closed form replaces every component
/// clique by the full minor ideal of its enclosing column interval.
struct StructuredPrime {
    std::vector<int> S;
    std::vector<std::vector<int>> cliques; // components of G on [n] \ S, min-sorted
    std::optional<std::vector<std::pair<int, int>>> intervals; // set iff in closed form
};

inline StructuredPrime prime_PS(const Graph& g, const std::vector<int>& s) {
    StructuredPrime sp;
    sp.S = s;
    std::sort(sp.S.begin(), sp.S.end());
    std::uint32_t smask = 0;
    for (int v : sp.S) {
        if (v < 1 || v > g.n) throw DomainError("S contains a vertex outside 1..n");
        smask |= 1u << (v - 1);
    }
    std::vector<int> rest;
    for (int v = 1; v <= g.n; ++v)
        if (!((smask >> (v - 1)) & 1)) rest.push_back(v);
    sp.cliques = components(g, rest);
    return sp;
}

/// Closed form of a structured prime plus the change flag: changed == false
/// exactly when every gap vertex of every clique interval already lies in
/// S, which is when the closure leaves the ideal untouched.
inline std::pair<StructuredPrime, bool> close_PS(const StructuredPrime& sp) {
    StructuredPrime closed = sp;
    bool changed = false;
    std::vector<std::pair<int, int>> ivs;
    for (const auto& clique : sp.cliques) {
        int lo = clique.front(), hi = clique.back();
        ivs.push_back({lo, hi});
        for (int v = lo + 1; v < hi; ++v) {
            bool in_clique = std::binary_search(clique.begin(), clique.end(), v);
            bool in_s = std::binary_search(sp.S.begin(), sp.S.end(), v);
            if (!in_clique && !in_s) changed = true;
        }
    }
    closed.intervals = std::move(ivs);
    return {std::move(closed), changed};
}

/// Expand a structured prime to its generator ideal; the closed form uses
/// the interval minor ideals, the open form the clique minors.
template <class K = Rat>
Ideal<K> structured_to_ideal(const StructuredPrime& sp, const RingContext& ctx) {
    std::vector<Polynomial<K>> gens;
    for (int s : sp.S) {
        gens.push_back(Polynomial<K>::variable(ctx, xvar(s)));
        gens.push_back(Polynomial<K>::variable(ctx, yvar(s)));
    }
    if (sp.intervals) {
        for (auto [a, b] : *sp.intervals)
            for (int i = a; i < b; ++i)
                for (int j = i + 1; j <= b; ++j) gens.push_back(minor2<K>(ctx, i, j));
    } else {
        for (const auto& clique : sp.cliques)
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    gens.push_back(minor2<K>(ctx, clique[i], clique[j]));
    }
    return Ideal<K>(ctx, std::move(gens));
}

namespace bei_detail {

/// component id per vertex for the graph restricted to [n] \ S; -1 on S.
inline std::vector<int> component_ids(const Graph& g, std::uint32_t smask) {
    std::vector<int> id(static_cast<std::size_t>(g.n), -1);
    int next = 0;
    for (int v = 1; v <= g.n; ++v) {
        if (((smask >> (v - 1)) & 1) || id[static_cast<std::size_t>(v - 1)] != -1) continue;
        std::uint32_t comp = 1u << (v - 1), frontier = comp;
        while (frontier) {
            std::uint32_t next_front = 0;
            for (std::uint32_t f = frontier; f;) {
                int w = __builtin_ctz(f);
                f &= f - 1;
                next_front |= g.adj[static_cast<std::size_t>(w)] & ~smask & ~comp;
            }
            comp |= next_front;
            frontier = next_front;
        }
        for (int w = 1; w <= g.n; ++w)
            if ((comp >> (w - 1)) & 1) id[static_cast<std::size_t>(w - 1)] = next;
        ++next;
    }
    return id;
}

/// P_T included in P_S, decided combinatorially: T inside S, and every
/// minor of a T-component lies in P_S (an endpoint in S or both endpoints
/// in one S-component).
inline bool prime_included(const Graph& g, std::uint32_t tmask, const std::vector<int>& tid,
                           std::uint32_t smask, const std::vector<int>& sid) {
    if ((tmask & ~smask) != 0) return false;
    for (int u = 1; u <= g.n; ++u) {
        if (tid[static_cast<std::size_t>(u - 1)] < 0) continue;
        for (int v = u + 1; v <= g.n; ++v) {
            if (tid[static_cast<std::size_t>(v - 1)] != tid[static_cast<std::size_t>(u - 1)])
                continue;
            bool u_in_s = (smask >> (u - 1)) & 1, v_in_s = (smask >> (v - 1)) & 1;
            if (u_in_s || v_in_s) continue;
            if (sid[static_cast<std::size_t>(u - 1)] != sid[static_cast<std::size_t>(v - 1)])
                return false;
        }
    }
    return true;
}

} // namespace bei_detail

/// The subsets S with inclusion-minimal P_S, as bitmasks in ascending
/// order, decided by the combinatorial inclusion test. Agreement with the
/// expanded-ideal route is exercised by the test suite.
inline std::vector<std::uint32_t> minimal_cut_sets(const Graph& g) {
    if (g.n > 9) throw CapacityError("minimal prime search limited to n <= 9");
    std::uint32_t full = (1u << g.n) - 1;
    std::vector<std::vector<int>> ids(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t s = 0; s <= full; ++s) ids[s] = bei_detail::component_ids(g, s);
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t s = 0; s <= full; ++s) {
        bool is_min = true;
        for (std::uint32_t t = (s - 1) & s; s != 0; t = (t - 1) & s) {
            if (bei_detail::prime_included(g, t, ids[t], s, ids[s])) {
                is_min = false;
                break;
            }
            if (t == 0) break;
        }
        if (is_min) minimal.push_back(s);
    }
    return minimal;
}

inline std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> vs;
    for (std::uint32_t m = mask; m;) {
        int v = __builtin_ctz(m);
        m &= m - 1;
        vs.push_back(v + 1);
    }
    return vs;
}

/// Minimal primes of J_G by brute-force inclusion filtering over all
/// subsets, with containment decided on the expanded ideals (Groebner
/// membership). The combinatorial route above is the fast path; this one
/// is the reference and the oracle for it.
inline std::vector<std::pair<std::vector<int>, StructuredPrime>> minimal_primes_bei(
    const Graph& g, int bound = 7) {
    if (g.n > bound)
        throw CapacityError("minimal_primes_bei limited to n <= " + std::to_string(bound));
    RingContext ctx = classic_ring(g.n);
    std::uint32_t full = (1u << g.n) - 1;
    std::vector<StructuredPrime> primes(static_cast<std::size_t>(full) + 1);
    std::vector<Ideal<Rat>> ideals;
    ideals.reserve(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t s = 0; s <= full; ++s) {
        primes[s] = prime_PS(g, mask_to_vertices(s));
        ideals.push_back(structured_to_ideal<Rat>(primes[s], ctx));
    }
    std::vector<std::pair<std::vector<int>, StructuredPrime>> out;
    for (std::uint32_t s = 0; s <= full; ++s) {
        bool is_min = true;
        for (std::uint32_t t = (s - 1) & s; s != 0; t = (t - 1) & s) {
            if (ideal_contains(ideals[s], ideals[t])) {
                is_min = false;
                break;
            }
            if (t == 0) break;
        }
        if (is_min) out.push_back({mask_to_vertices(s), primes[s]});
    }
    return out;
}

/// Balanced intersection of a family of ideals.
template <class K>
Ideal<K> intersect_many(std::vector<Ideal<K>> ideals, const RingContext& ctx) {
    if (ideals.empty()) return Ideal<K>(ctx); // defensive; callers pass nonempty lists
    while (ideals.size() > 1) {
        std::vector<Ideal<K>> next;
        for (std::size_t i = 0; i + 1 < ideals.size(); i += 2)
            next.push_back(intersect(ideals[i], ideals[i + 1]));
        if (ideals.size() % 2) next.push_back(ideals.back());
        ideals = std::move(next);
    }
    return ideals[0];
}

/// Groebner-verified decomposition identity: the intersection of the
/// minimal P_S equals J_G.
inline bool decomposition_identity_holds(const Graph& g) {
    RingContext ctx = classic_ring(g.n);
    auto mins = minimal_primes_bei(g);
    std::vector<Ideal<Rat>> ideals;
    for (auto& [s, sp] : mins) ideals.push_back(structured_to_ideal<Rat>(sp, ctx));
    return ideal_equal(intersect_many(std::move(ideals), ctx), binomial_edge_ideal<Rat>(g));
}

/// All minimal P_S of the relabeled graph are already in closed form.
inline bool psps_condition(const Graph& g, const Labeling& lab) {
    Graph h = relabel(g, lab);
    for (std::uint32_t smask : minimal_cut_sets(h)) {
        StructuredPrime sp = prime_PS(h, mask_to_vertices(smask));
        if (close_PS(sp).second) return false;
    }
    return true;
}

/// Theorem check half: do the natural generators of the relabeled J_G form
/// a Groebner basis under DiagonalLex?
inline bool closed_gb_check(const Graph& g, const Labeling& lab) {
    Graph h = relabel(g, lab);
    RingContext ctx = classic_ring(h.n);
    std::vector<Polynomial<Rat>> gens;
    for (auto [u, v] : h.edges()) gens.push_back(minor2<Rat>(ctx, u, v));
    return is_groebner(gens, TermOrder::diagonal_lex());
}

} // namespace beikit
