#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beikit/bei.hpp"

namespace beikit {

/// f = y_1 * f_12 * f_23 * ... * f_{n-1,n} * x_n, the defining polynomial
/// of the Knutson family; its DiagonalLex leading term is the squarefree
/// product of all matrix entries.
template <class K = Rat>
Polynomial<K> build_f(int n, long ch = 0) {
    if (n < 1) throw DomainError("build_f needs n >= 1");
    RingContext ctx = classic_ring(n, ch);
    Polynomial<K> f = Polynomial<K>::variable(ctx, yvar(1));
    for (int i = 1; i < n; ++i) f = f * minor2<K>(ctx, i, i + 1);
    return f * Polynomial<K>::variable(ctx, xvar(n));
}

/// General m x n analogue: the product of the determinants of the square
/// submatrices sitting on every diagonal of the matrix.
template <class K = Rat>
Polynomial<K> build_f_matrix(int m, int n, long ch = 0) {
    if (m < 1 || n < 1) throw DomainError("build_f_matrix needs m, n >= 1");
    RingContext ctx = matrix_ring(m, n, ch);
    Polynomial<K> f = Polynomial<K>::constant(ctx, 1);
    auto diag_det = [&](int r0, int c0) {
        int len = std::min(m - r0 + 1, n - c0 + 1);
        std::vector<int> rows, cols;
        for (int i = 0; i < len; ++i) {
            rows.push_back(r0 + i);
            cols.push_back(c0 + i);
        }
        return minor_det<K>(ctx, rows, cols);
    };
    for (int r0 = m; r0 >= 2; --r0) f = f * diag_det(r0, 1);
    for (int c0 = 1; c0 <= n; ++c0) f = f * diag_det(1, c0);
    return f;
}

// ---------------------------------------------------------------------------
// Structured ideals: sums of variable ideals and adjacent-column 2-minor
// blocks, the class closed under the branching decomposition of minimal
// primes.
// ---------------------------------------------------------------------------

/// (x_u)_{u in xkill} + (y_v)_{v in ykill} + sum of I_2(X_[a,b]) blocks.
struct ColumnIdeal {
    std::uint32_t xkill = 0;
    std::uint32_t ykill = 0;
    std::vector<std::pair<int, int>> minors; // intervals a < b

    void normalize() {
        std::sort(minors.begin(), minors.end());
        minors.erase(std::unique(minors.begin(), minors.end()), minors.end());
    }

    friend bool operator==(const ColumnIdeal&, const ColumnIdeal&) = default;
    friend auto operator<=>(const ColumnIdeal&, const ColumnIdeal&) = default;
};

/// Terminal prime of the branching: killed variables plus disjoint cliques
/// of free columns whose interval gaps are fully killed columns.
struct ColumnPrime {
    std::uint32_t xkill = 0;
    std::uint32_t ykill = 0;
    std::vector<std::uint32_t> cliques; // disjoint masks, popcount >= 2, sorted

    void normalize() { std::sort(cliques.begin(), cliques.end()); }

    friend bool operator==(const ColumnPrime&, const ColumnPrime&) = default;
    friend auto operator<=>(const ColumnPrime&, const ColumnPrime&) = default;
};

/// Either the principal product seed (f) or a structured sum.
struct StructuredInput {
    bool f_product = false;
    ColumnIdeal sum;
};

template <class K = Rat>
Ideal<K> column_ideal_to_ideal(const ColumnIdeal& ci, const RingContext& ctx) {
    std::vector<Polynomial<K>> gens;
    for (int c = 1; c <= ctx.cols; ++c) {
        if ((ci.xkill >> (c - 1)) & 1) gens.push_back(Polynomial<K>::variable(ctx, xvar(c)));
        if ((ci.ykill >> (c - 1)) & 1) gens.push_back(Polynomial<K>::variable(ctx, yvar(c)));
    }
    for (auto [a, b] : ci.minors)
        for (int i = a; i < b; ++i)
            for (int j = i + 1; j <= b; ++j) gens.push_back(minor2<K>(ctx, i, j));
    return Ideal<K>(ctx, std::move(gens));
}

template <class K = Rat>
Ideal<K> column_prime_to_ideal(const ColumnPrime& cp, const RingContext& ctx) {
    std::vector<Polynomial<K>> gens;
    for (int c = 1; c <= ctx.cols; ++c) {
        if ((cp.xkill >> (c - 1)) & 1) gens.push_back(Polynomial<K>::variable(ctx, xvar(c)));
        if ((cp.ykill >> (c - 1)) & 1) gens.push_back(Polynomial<K>::variable(ctx, yvar(c)));
    }
    for (std::uint32_t clique : cp.cliques) {
        auto vs = mask_to_vertices(clique);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                gens.push_back(minor2<K>(ctx, vs[i], vs[j]));
    }
    return Ideal<K>(ctx, std::move(gens));
}

namespace knutson_detail {

inline bool bit(std::uint32_t mask, int col) { return (mask >> (col - 1)) & 1; }

/// f_uv lies in the prime iff u,v share a clique, both x's or both y's are
/// killed, or one column is fully killed.
inline bool minor_in_prime(const ColumnPrime& p, int u, int v) {
    std::uint32_t full = p.xkill & p.ykill;
    if (bit(full, u) || bit(full, v)) return true;
    if (bit(p.xkill, u) && bit(p.xkill, v)) return true;
    if (bit(p.ykill, u) && bit(p.ykill, v)) return true;
    std::uint32_t uv = (1u << (u - 1)) | (1u << (v - 1));
    for (std::uint32_t c : p.cliques)
        if ((c & uv) == uv) return true;
    return false;
}

/// q included in p, decided on the structured generators.
inline bool prime_included(const ColumnPrime& q, const ColumnPrime& p) {
    if ((q.xkill & ~p.xkill) || (q.ykill & ~p.ykill)) return false;
    for (std::uint32_t clique : q.cliques) {
        auto vs = mask_to_vertices(clique);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!minor_in_prime(p, vs[i], vs[j])) return false;
    }
    return true;
}

/// Keep only inclusion-minimal primes, first occurrence wins among equals.
inline std::vector<ColumnPrime> minimal_filter(std::vector<ColumnPrime> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<ColumnPrime> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < primes.size(); ++j)
            if (i != j && prime_included(primes[j], primes[i])) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(primes[i]);
    }
    return out;
}

/// Recursive branching on exposed x_u*y_v monomials; terminal states hand
/// over to the graph-side minimal prime machinery.
inline void branch_min_primes(int n, const std::vector<std::uint32_t>& adj, std::uint32_t xk,
                              std::uint32_t yk, std::vector<ColumnPrime>& out) {
    // look for the lexicographically first exposed monomial x_a * y_b
    int best_a = 0, best_b = 0;
    for (int u = 1; u <= n && !best_a; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u == v || !((adj[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1)) continue;
            // term x_u y_v of the minor on {u,v} survives iff x_u, y_v free
            bool t_uv = !bit(xk, u) && !bit(yk, v);
            bool t_vu = !bit(xk, v) && !bit(yk, u);
            if (t_uv && !t_vu) {
                if (!best_a || std::pair(u, v) < std::pair(best_a, best_b)) {
                    best_a = u;
                    best_b = v;
                }
            }
        }
    }
    if (best_a) {
        branch_min_primes(n, adj, xk | (1u << (best_a - 1)), yk, out);
        branch_min_primes(n, adj, xk, yk | (1u << (best_b - 1)), out);
        return;
    }

    // terminal: surviving minors all have both columns free, forming a
    // union of cliques on intervals whose gaps are fully killed columns
    std::uint32_t killed = xk | yk;
    std::vector<std::uint32_t> alive(static_cast<std::size_t>(n), 0);
    std::uint32_t support = 0;
    for (int u = 1; u <= n; ++u) {
        if (bit(killed, u)) continue;
        std::uint32_t row = adj[static_cast<std::size_t>(u - 1)] & ~killed;
        alive[static_cast<std::size_t>(u - 1)] = row;
        if (row) support |= 1u << (u - 1);
    }
    auto sup = mask_to_vertices(support);
    int m = static_cast<int>(sup.size());
    Graph k(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if ((alive[static_cast<std::size_t>(sup[static_cast<std::size_t>(i)] - 1)] >>
                 (sup[static_cast<std::size_t>(j)] - 1)) &
                1)
                k.add_edge(i + 1, j + 1);

    for (std::uint32_t smask_c : minimal_cut_sets(k)) {
        std::uint32_t smask = 0;
        for (int v : mask_to_vertices(smask_c)) smask |= 1u << (sup[static_cast<std::size_t>(v - 1)] - 1);
        ColumnPrime p;
        p.xkill = xk | smask;
        p.ykill = yk | smask;
        std::vector<int> rest;
        for (int v = 1; v <= m; ++v)
            if (!((smask_c >> (v - 1)) & 1)) rest.push_back(v);
        for (const auto& comp : components(k, rest)) {
            if (comp.size() < 2) continue;
            std::uint32_t cm = 0;
            for (int v : comp) cm |= 1u << (sup[static_cast<std::size_t>(v - 1)] - 1);
            p.cliques.push_back(cm);
        }
        p.normalize();
        out.push_back(std::move(p));
    }
}

} // namespace knutson_detail

template <class K = Rat>
Ideal<K> structured_input_to_ideal(const StructuredInput& in, const RingContext& ctx) {
    if (in.f_product) return Ideal<K>(ctx, {build_f<K>(ctx.cols, ctx.ch)});
    return column_ideal_to_ideal<K>(in.sum, ctx);
}

/// Minimal primes of a structured ideal by the branching procedure:
/// rewrite minors modulo the killed variables to expose x_u*y_v monomials,
/// split on which factor the prime contains, recurse, and keep the
/// inclusion-minimal results. With verify set, the decomposition is
/// Groebner-checked: the intersection of the primes must reproduce the
/// input ideal.
inline std::vector<ColumnPrime> min_primes_structured(const StructuredInput& in,
                                                      const RingContext& ctx,
                                                      bool verify = true) {
    if (ctx.rows != 2) throw UnsupportedStructureError("structured primes need a 2 x n matrix");
    const int n = ctx.cols;
    std::vector<ColumnPrime> primes;
    if (in.f_product) {
        // factors of f: (y_1), the adjacent minors, (x_n)
        ColumnPrime y1;
        y1.ykill = 1u;
        primes.push_back(y1);
        for (int i = 1; i < n; ++i) {
            ColumnPrime fi;
            fi.cliques = {(1u << (i - 1)) | (1u << i)};
            primes.push_back(fi);
        }
        ColumnPrime xn;
        xn.xkill = 1u << (n - 1);
        primes.push_back(xn);
        if (n == 1) { // degenerate f = x1*y1
            primes.clear();
            ColumnPrime a, b;
            a.ykill = 1u;
            b.xkill = 1u;
            primes = {a, b};
        }
    } else {
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : in.sum.minors) {
            if (a < 1 || b > n || a >= b)
                throw UnsupportedStructureError("minor block outside the column range");
            for (int i = a; i <= b; ++i)
                for (int j = a; j <= b; ++j)
                    if (i != j) adj[static_cast<std::size_t>(i - 1)] |= 1u << (j - 1);
        }
        knutson_detail::branch_min_primes(n, adj, in.sum.xkill, in.sum.ykill, primes);
        primes = knutson_detail::minimal_filter(std::move(primes));
    }

    if (verify) {
        std::vector<Ideal<Rat>> pideals;
        for (const auto& p : primes) pideals.push_back(column_prime_to_ideal<Rat>(p, ctx));
        Ideal<Rat> input = structured_input_to_ideal<Rat>(in, ctx);
        if (!ideal_equal(intersect_many(std::move(pideals), ctx), input))
            throw UnsupportedStructureError(
                "branching decomposition failed verification against the Groebner oracle");
    }
    return primes;
}

// ---------------------------------------------------------------------------
// PrIdCf normal form
// ---------------------------------------------------------------------------

/// (y_1..y_{k-1}) + (x_u)_{u in U} + L + (x_{l+1}..x_n) + (y_v)_{v in V}
/// with L a closed-form structured prime on columns k..l.
struct PrIdCfShape {
    int k = 1;
    int l = 0;
    std::vector<int> U; // subset of 1..k-1
    std::vector<int> V; // subset of l+1..n
    StructuredPrime L;  // supported on columns k..l, closed form
};

/// Match a terminal prime against the normal form; returns the witness
/// split when one exists.
inline std::optional<PrIdCfShape> to_pridcf_shape(const ColumnPrime& p, int n) {
    using knutson_detail::bit;
    std::uint32_t full = p.xkill & p.ykill;
    std::uint32_t clique_cols = 0;
    for (std::uint32_t c : p.cliques) {
        if (__builtin_popcount(c) < 2) return std::nullopt;
        if (clique_cols & c) return std::nullopt; // cliques must be disjoint
        clique_cols |= c;
    }
    if (clique_cols & (p.xkill | p.ykill)) return std::nullopt; // clique columns are free

    for (int k = n + 1; k >= 1; --k) { // prefer the largest y-prefix
        bool prefix_ok = true;
        for (int c = 1; c < k; ++c)
            if (!bit(p.ykill, c)) prefix_ok = false;
        if (!prefix_ok) continue;
        for (int l = std::max(k - 1, 0); l <= n; ++l) {
            bool ok = true;
            for (int c = l + 1; c <= n && ok; ++c)
                if (!bit(p.xkill, c)) ok = false;
            // middle columns carry either both variables or none
            for (int c = k; c <= l && ok; ++c)
                if (bit(p.xkill, c) != bit(p.ykill, c)) ok = false;
            // cliques live inside the middle with gaps on fully killed columns
            for (std::uint32_t cm : p.cliques) {
                if (!ok) break;
                auto vs = mask_to_vertices(cm);
                if (vs.front() < k || vs.back() > l) {
                    ok = false;
                    break;
                }
                for (int c = vs.front() + 1; c < vs.back(); ++c)
                    if (!bit(cm, c) && !bit(full, c)) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) continue;
            PrIdCfShape s;
            s.k = k;
            s.l = l;
            for (int c = 1; c < k; ++c)
                if (bit(p.xkill, c)) s.U.push_back(c);
            for (int c = l + 1; c <= n; ++c)
                if (bit(p.ykill, c)) s.V.push_back(c);
            for (int c = k; c <= l; ++c)
                if (bit(full, c)) s.L.S.push_back(c);
            std::vector<std::pair<int, int>> ivs;
            for (std::uint32_t cm : p.cliques) {
                auto vs = mask_to_vertices(cm);
                s.L.cliques.push_back(vs);
                ivs.push_back({vs.front(), vs.back()});
            }
            s.L.intervals = std::move(ivs);
            return s;
        }
    }
    return std::nullopt;
}

inline bool shape_check(const ColumnPrime& p, int n) { return to_pridcf_shape(p, n).has_value(); }

/// Read a terminal prime back off a reduced Groebner basis: variables and
/// minors only, whose edges form disjoint cliques.
inline std::optional<ColumnPrime> recognize_column_prime(const Ideal<Rat>& ideal) {
    const int n = ideal.ctx().cols;
    if (ideal.ctx().rows != 2) return std::nullopt;
    ColumnPrime p;
    Graph edges(n);
    for (const auto& g : ideal.reduced_gb()) {
        if (g.num_terms() == 1 && g.terms()[0].mono.degree() == 1) {
            auto [key, exp] = g.terms()[0].mono.entries()[0];
            VarId v = var_from_key(key);
            if (v.row == 1) p.xkill |= 1u << (v.col - 1);
            else if (v.row == 2) p.ykill |= 1u << (v.col - 1);
            else return std::nullopt;
        } else if (g.num_terms() == 2) {
            bool matched = false;
            for (int u = 1; u <= n && !matched; ++u)
                for (int v = u + 1; v <= n && !matched; ++v)
                    if (g == minor2<Rat>(ideal.ctx(), u, v)) {
                        edges.add_edge(u, v);
                        matched = true;
                    }
            if (!matched) return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    std::vector<int> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    for (const auto& comp : components(edges, all)) {
        if (comp.size() < 2) continue;
        std::uint32_t cm = 0;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!edges.has_edge(comp[i], comp[j])) return std::nullopt; // not a clique
        for (int v : comp) cm |= 1u << (v - 1);
        if (cm & (p.xkill | p.ykill)) return std::nullopt;
        p.cliques.push_back(cm);
    }
    p.normalize();
    return p;
}

inline bool shape_check(const Ideal<Rat>& ideal) {
    auto p = recognize_column_prime(ideal);
    return p && shape_check(*p, ideal.ctx().cols);
}

inline bool shape_check(const PrIdCfShape& s, int n) {
    if (s.k < 1 || s.l > n || s.l < s.k - 1) return false;
    for (int u : s.U)
        if (u < 1 || u >= s.k) return false;
    for (int v : s.V)
        if (v <= s.l || v > n) return false;
    if (!s.L.intervals) return false;
    for (int c : s.L.S)
        if (c < s.k || c > s.l) return false;
    for (const auto& clique : s.L.cliques) {
        if (clique.front() < s.k || clique.back() > s.l) return false;
        for (int c = clique.front() + 1; c < clique.back(); ++c)
            if (!std::binary_search(clique.begin(), clique.end(), c) &&
                !std::binary_search(s.L.S.begin(), s.L.S.end(), c))
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closure exploration
// ---------------------------------------------------------------------------

struct Derivation {
    enum class Kind { Seed, Sum, Intersect, MinPrime };
    Kind kind = Kind::Seed;
    int a = -1;          // operand ids
    int b = -1;
    int prime_index = -1; // position in the parent's minimal prime list
    std::string seed;     // "f", "I1[a]", "I2[a,b]"
};

struct RegistryEntry {
    int id = -1;
    std::string key;
    Ideal<Rat> ideal;
    Derivation deriv;
    // normal form: intersection of structured sums ((f) stays opaque)
    bool f_product = false;
    std::optional<std::vector<ColumnIdeal>> comps;
    std::optional<ColumnPrime> prime; // set when the entry is a known terminal prime
    std::vector<int> min_prime_ids;
    bool min_primes_done = false;

    RegistryEntry(int id_, std::string key_, Ideal<Rat> ideal_, Derivation d)
        : id(id_), key(std::move(key_)), ideal(std::move(ideal_)), deriv(std::move(d)) {}
};

struct ClosureRegistry {
    int n = 0;
    int max_depth = 0;
    std::size_t max_ideals = 0;
    bool truncated = false;
    std::vector<RegistryEntry> entries;
    std::map<std::string, int> by_key;

    const RegistryEntry* find(const Ideal<Rat>& ideal) const {
        auto it = by_key.find(canonical_key(ideal));
        return it == by_key.end() ? nullptr : &entries[static_cast<std::size_t>(it->second)];
    }
};

namespace knutson_detail {

inline constexpr std::size_t kMaxComponents = 128;

inline std::optional<std::vector<ColumnIdeal>> merge_comps(const RegistryEntry& a,
                                                           const RegistryEntry& b,
                                                           bool intersection) {
    if (a.f_product || b.f_product || !a.comps || !b.comps) return std::nullopt;
    std::vector<ColumnIdeal> out;
    if (intersection) {
        out = *a.comps;
        out.insert(out.end(), b.comps->begin(), b.comps->end());
    } else {
        // sums distribute over the component intersections inside the family
        for (const auto& ca : *a.comps)
            for (const auto& cb : *b.comps) {
                ColumnIdeal c;
                c.xkill = ca.xkill | cb.xkill;
                c.ykill = ca.ykill | cb.ykill;
                c.minors = ca.minors;
                c.minors.insert(c.minors.end(), cb.minors.begin(), cb.minors.end());
                c.normalize();
                out.push_back(std::move(c));
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > kMaxComponents) return std::nullopt;
    return out;
}

} // namespace knutson_detail

struct ExploreOptions {
    int max_depth = 3;
    std::size_t max_ideals = 5000;
    bool verify_min_primes = true;
    // with the axiom, all adjacent-column determinantal ideals are seeded
    // alongside (f); without it the family grows from (f) alone
    bool seed_axiom = true;
    std::size_t op_budget_factor = 16; // pair operations per level <= factor * max_ideals
};

/// Breadth-first closure of the seed family {(f), I_1 columns, I_2 interval
/// blocks} under sums, intersections and structured minimal primes, with
/// canonical-GB deduplication and hard truncation at the configured bounds.
inline ClosureRegistry explore_closure(int n, const ExploreOptions& opts = {}) {
    if (n < 1 || n > 5) throw CapacityError("closure exploration limited to n <= 5");
    ClosureRegistry reg;
    reg.n = n;
    reg.max_depth = opts.max_depth;
    reg.max_ideals = opts.max_ideals;
    RingContext ctx = classic_ring(n);

    auto add_entry = [&](Ideal<Rat> ideal, Derivation deriv, bool f_product,
                         std::optional<std::vector<ColumnIdeal>> comps,
                         std::optional<ColumnPrime> prime) -> int {
        std::string key = canonical_key(ideal);
        auto it = reg.by_key.find(key);
        if (it != reg.by_key.end()) {
            // fill in structure discovered later through another derivation
            RegistryEntry& e = reg.entries[static_cast<std::size_t>(it->second)];
            if (!e.comps && comps) e.comps = std::move(comps);
            if (!e.prime && prime) e.prime = std::move(prime);
            return it->second;
        }
        if (reg.entries.size() >= reg.max_ideals) {
            reg.truncated = true;
            return -1;
        }
        int id = static_cast<int>(reg.entries.size());
        reg.entries.emplace_back(id, key, std::move(ideal), std::move(deriv));
        RegistryEntry& e = reg.entries.back();
        e.f_product = f_product;
        e.comps = std::move(comps);
        e.prime = std::move(prime);
        reg.by_key[e.key] = id;
        return id;
    };

    // seeds: (f), I_1 of each column, I_2 of each interval
    {
        Derivation d;
        d.seed = "f";
        add_entry(Ideal<Rat>(ctx, {build_f<Rat>(n)}), d, true, std::nullopt, std::nullopt);
    }
    for (int a = 1; a <= n && opts.seed_axiom; ++a) {
        ColumnIdeal ci;
        ci.xkill = ci.ykill = 1u << (a - 1);
        Derivation d;
        d.seed = "I1[" + std::to_string(a) + "]";
        ColumnPrime p;
        p.xkill = p.ykill = ci.xkill;
        add_entry(column_ideal_to_ideal<Rat>(ci, ctx), d, false,
                  std::vector<ColumnIdeal>{ci}, p);
    }
    for (int a = 1; a < n && opts.seed_axiom; ++a)
        for (int b = a + 1; b <= n; ++b) {
            ColumnIdeal ci;
            ci.minors = {{a, b}};
            Derivation d;
            d.seed = "I2[" + std::to_string(a) + "," + std::to_string(b) + "]";
            ColumnPrime p;
            std::uint32_t cm = 0;
            for (int c = a; c <= b; ++c) cm |= 1u << (c - 1);
            p.cliques = {cm};
            add_entry(column_ideal_to_ideal<Rat>(ci, ctx), d, false,
                      std::vector<ColumnIdeal>{ci}, p);
        }

    const std::size_t op_budget = opts.op_budget_factor * opts.max_ideals;
    for (int depth = 1; depth <= opts.max_depth && !reg.truncated; ++depth) {
        const std::size_t level_end = reg.entries.size();
        std::size_t ops = 0;
        auto budget_ok = [&]() {
            if (reg.entries.size() >= reg.max_ideals || ops > op_budget) {
                reg.truncated = true;
                return false;
            }
            return true;
        };

        // minimal primes of every entry seen so far
        for (std::size_t i = 0; i < level_end && budget_ok(); ++i) {
            RegistryEntry& e = reg.entries[i];
            if (e.min_primes_done) continue;
            std::vector<ColumnPrime> primes;
            if (e.f_product) {
                StructuredInput in;
                in.f_product = true;
                primes = min_primes_structured(in, ctx, opts.verify_min_primes);
            } else if (e.prime) {
                primes = {*e.prime};
            } else if (e.comps) {
                for (const auto& c : *e.comps) {
                    StructuredInput in;
                    in.sum = c;
                    auto ps = min_primes_structured(in, ctx, opts.verify_min_primes);
                    primes.insert(primes.end(), ps.begin(), ps.end());
                }
                primes = knutson_detail::minimal_filter(std::move(primes));
                if (opts.verify_min_primes) {
                    std::vector<Ideal<Rat>> pideals;
                    for (const auto& p : primes)
                        pideals.push_back(column_prime_to_ideal<Rat>(p, ctx));
                    if (!ideal_equal(intersect_many(std::move(pideals), ctx),
                                     reg.entries[i].ideal))
                        throw UnsupportedStructureError(
                            "registry minimal primes failed Groebner verification");
                }
            } else {
                // component cap exceeded; record partiality instead of failing
                reg.truncated = true;
                reg.entries[i].min_primes_done = true;
                continue;
            }
            std::vector<int> ids;
            int idx = 0;
            for (const auto& p : primes) {
                ++ops;
                Derivation d;
                d.kind = Derivation::Kind::MinPrime;
                d.a = static_cast<int>(i);
                d.prime_index = idx++;
                ColumnIdeal as_sum;
                as_sum.xkill = p.xkill;
                as_sum.ykill = p.ykill;
                for (std::uint32_t cm : p.cliques) {
                    auto vs = mask_to_vertices(cm);
                    if (vs.size() >= 2) as_sum.minors.push_back({vs.front(), vs.back()});
                }
                as_sum.normalize();
                int id = add_entry(column_prime_to_ideal<Rat>(p, ctx), d, false,
                                   std::vector<ColumnIdeal>{as_sum}, p);
                if (id >= 0) ids.push_back(id);
                if (!budget_ok()) break;
            }
            reg.entries[i].min_prime_ids = std::move(ids);
            reg.entries[i].min_primes_done = true;
        }

        // pairwise sums and intersections of the level snapshot
        for (std::size_t i = 0; i < level_end && budget_ok(); ++i) {
            for (std::size_t j = i + 1; j < level_end && budget_ok(); ++j) {
                ++ops;
                {
                    Derivation d;
                    d.kind = Derivation::Kind::Sum;
                    d.a = static_cast<int>(i);
                    d.b = static_cast<int>(j);
                    auto comps =
                        knutson_detail::merge_comps(reg.entries[i], reg.entries[j], false);
                    add_entry(sum(reg.entries[i].ideal, reg.entries[j].ideal), d, false,
                              std::move(comps), std::nullopt);
                }
                if (!budget_ok()) break;
                ++ops;
                {
                    Derivation d;
                    d.kind = Derivation::Kind::Intersect;
                    d.a = static_cast<int>(i);
                    d.b = static_cast<int>(j);
                    auto comps =
                        knutson_detail::merge_comps(reg.entries[i], reg.entries[j], true);
                    add_entry(intersect(reg.entries[i].ideal, reg.entries[j].ideal), d, false,
                              std::move(comps), std::nullopt);
                }
            }
        }
    }
    return reg;
}

/// I + (J cap K) == (I + J) cap (I + K), Groebner-verified.
template <class K>
bool check_sum_distributes(const Ideal<K>& i, const Ideal<K>& j, const Ideal<K>& k) {
    return ideal_equal(sum(i, intersect(j, k)), intersect(sum(i, j), sum(i, k)));
}

// ---------------------------------------------------------------------------
// Membership certificates for binomial edge ideals
// ---------------------------------------------------------------------------

/// One minimal prime of the certificate: P-bar_S as a sum of seed ideals.
struct CertificatePrime {
    std::vector<int> S;                        // I_1 column seeds
    std::vector<std::pair<int, int>> intervals; // I_2 interval seeds
    std::string gb_hash;
};

struct Certificate {
    int n = 0;
    std::vector<int> labeling; // new label of vertex v at position v-1
    std::vector<CertificatePrime> primes;
    std::string root_hash; // canonical hash of J_G = intersection of the primes
    bool verified = false;
};

struct CertifyResult {
    std::optional<Certificate> certificate;
    std::string refusal; // set when the graph is not weakly closed
};

/// Constructive side of the characterization: for a weakly closed graph,
/// exhibit J_G (after relabeling) as an intersection of sums of seed
/// ideals, with every node equality Groebner-verified. Non weakly closed
/// graphs are refused; by the characterization this is definitive.
inline CertifyResult certify_membership_JG(const Graph& g) {
    CertifyResult res;
    auto lab = find_weakly_closed_labeling(g);
    if (!lab) {
        res.refusal = "no weakly closed labeling";
        return res;
    }
    Graph h = relabel(g, *lab);
    RingContext ctx = classic_ring(h.n);
    Certificate cert;
    cert.n = h.n;
    cert.labeling = lab->to_new;

    Ideal<Rat> jg = binomial_edge_ideal<Rat>(h);
    bool all_ok = true;
    std::vector<Ideal<Rat>> prime_ideals;
    for (std::uint32_t smask : minimal_cut_sets(h)) {
        StructuredPrime sp = prime_PS(h, mask_to_vertices(smask));
        auto [closed, changed] = close_PS(sp);
        if (changed) {
            all_ok = false; // weakly closed labeling must leave closures trivial
            continue;
        }
        CertificatePrime cp;
        cp.S = closed.S;
        std::vector<Polynomial<Rat>> gens;
        for (int s : closed.S) {
            Ideal<Rat> seed = adjacent_minor_ideal<Rat>(1, s, s, ctx);
            gens.insert(gens.end(), seed.gens().begin(), seed.gens().end());
        }
        for (auto [a, b] : *closed.intervals)
            if (a < b) {
                cp.intervals.push_back({a, b});
                Ideal<Rat> seed = adjacent_minor_ideal<Rat>(2, a, b, ctx);
                gens.insert(gens.end(), seed.gens().begin(), seed.gens().end());
            }
        Ideal<Rat> sum_of_seeds(ctx, std::move(gens));
        // the sum of seeds must equal the open-form prime P_S
        if (!ideal_equal(sum_of_seeds, structured_to_ideal<Rat>(sp, ctx))) all_ok = false;
        cp.gb_hash = gb_hash_hex(sum_of_seeds);
        prime_ideals.push_back(sum_of_seeds);
        cert.primes.push_back(std::move(cp));
    }
    Ideal<Rat> inter = prime_ideals.empty() ? Ideal<Rat>(ctx)
                                            : intersect_many(prime_ideals, ctx);
    if (!ideal_equal(inter, jg)) all_ok = false;
    cert.root_hash = gb_hash_hex(jg);
    cert.verified = all_ok;
    res.certificate = std::move(cert);
    return res;
}

/// Deterministic replay: rebuild every node from its description and check
/// the recorded hashes and the root identity against the graph.
inline bool replay_certificate(const Graph& g, const Certificate& cert) {
    if (cert.n != g.n || static_cast<int>(cert.labeling.size()) != g.n) return false;
    Labeling lab{cert.labeling};
    if (!lab.valid(g.n)) return false;
    Graph h = relabel(g, lab);
    RingContext ctx = classic_ring(h.n);
    std::vector<Ideal<Rat>> prime_ideals;
    for (const auto& cp : cert.primes) {
        std::vector<Polynomial<Rat>> gens;
        for (int s : cp.S) {
            Ideal<Rat> seed = adjacent_minor_ideal<Rat>(1, s, s, ctx);
            gens.insert(gens.end(), seed.gens().begin(), seed.gens().end());
        }
        for (auto [a, b] : cp.intervals) {
            Ideal<Rat> seed = adjacent_minor_ideal<Rat>(2, a, b, ctx);
            gens.insert(gens.end(), seed.gens().begin(), seed.gens().end());
        }
        Ideal<Rat> p(ctx, std::move(gens));
        if (gb_hash_hex(p) != cp.gb_hash) return false;
        prime_ideals.push_back(std::move(p));
    }
    Ideal<Rat> jg = binomial_edge_ideal<Rat>(h);
    if (gb_hash_hex(jg) != cert.root_hash) return false;
    Ideal<Rat> inter = prime_ideals.empty() ? Ideal<Rat>(ctx)
                                            : intersect_many(prime_ideals, ctx);
    return ideal_equal(inter, jg);
}

} // namespace beikit
