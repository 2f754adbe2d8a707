#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "beikit/report.hpp"

namespace beikit {

struct VerifySummary {
    std::string theorem;
    long cases = 0;
    long failures = 0;
    double seconds = 0.0;
};

inline OrderedJson summary_to_json(const VerifySummary& s) {
    OrderedJson j = report_header();
    j["theorem"] = s.theorem;
    j["cases"] = s.cases;
    j["passes"] = s.cases - s.failures;
    j["failures"] = s.failures;
    return j;
}

namespace verify_detail {

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 4;
}

/// Index-sharded worker pool; fn(i) must only touch its own slot of any
/// shared output.
template <class Fn>
void parallel_for(std::size_t count, Fn fn) {
    unsigned workers = std::min<std::size_t>(worker_count(), count ? count : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

template <class Fn>
VerifySummary timed(const std::string& name, Fn body) {
    auto start = std::chrono::steady_clock::now();
    VerifySummary s;
    s.theorem = name;
    body(s);
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

inline std::vector<Graph> graphs_up_to(int nmax, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= nmax; ++n)
        enumerate_graphs(n, connected_only, [&](const Graph& g) { out.push_back(g); });
    return out;
}

/// adjacency masks of the relabeled graph, new labels
inline std::array<std::uint32_t, 9> relabeled_adj(const Graph& g, const std::vector<int>& perm) {
    std::array<std::uint32_t, 9> adj{};
    for (int u = 1; u <= g.n; ++u) {
        std::uint32_t row = g.adj[static_cast<std::size_t>(u - 1)];
        int nu = perm[static_cast<std::size_t>(u - 1)];
        while (row) {
            int v = __builtin_ctz(row) + 1;
            row &= row - 1;
            adj[static_cast<std::size_t>(nu - 1)] |=
                1u << (perm[static_cast<std::size_t>(v - 1)] - 1);
        }
    }
    return adj;
}

inline bool weakly_closed_masks(int n, const std::array<std::uint32_t, 9>& adj) {
    for (int i = 1; i <= n; ++i) {
        std::uint32_t row = adj[static_cast<std::size_t>(i - 1)] >> i; // neighbors > i
        while (row) {
            int k = __builtin_ctz(row) + i + 1;
            row &= row - 1;
            for (int j = i + 1; j < k; ++j) {
                bool ij = (adj[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1;
                bool jk = (adj[static_cast<std::size_t>(j - 1)] >> (k - 1)) & 1;
                if (!ij && !jk) return false;
            }
        }
    }
    return true;
}

inline bool exists_weakly_closed_labeling_fast(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (weakly_closed_masks(g.n, relabeled_adj(g, perm))) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::uint32_t map_mask(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    while (mask) {
        int v = __builtin_ctz(mask) + 1;
        mask &= mask - 1;
        out |= 1u << (perm[static_cast<std::size_t>(v - 1)] - 1);
    }
    return out;
}

/// Does some labeling put every minimal prime in closed form? Minimal cut
/// sets and their components are labeling-independent sets, so they are
/// computed once and only their images vary over the permutation scan.
inline bool exists_psps_labeling_fast(const Graph& g) {
    struct MinSet {
        std::uint32_t smask;
        std::vector<std::uint32_t> comps;
    };
    std::vector<MinSet> minsets;
    for (std::uint32_t smask : minimal_cut_sets(g)) {
        MinSet m;
        m.smask = smask;
        std::vector<int> rest;
        for (int v = 1; v <= g.n; ++v)
            if (!((smask >> (v - 1)) & 1)) rest.push_back(v);
        for (const auto& comp : components(g, rest)) {
            if (comp.size() < 2) continue; // singletons have no gaps
            std::uint32_t cm = 0;
            for (int v : comp) cm |= 1u << (v - 1);
            m.comps.push_back(cm);
        }
        minsets.push_back(std::move(m));
    }
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (const auto& m : minsets) {
            std::uint32_t simg = map_mask(m.smask, perm);
            for (std::uint32_t comp : m.comps) {
                std::uint32_t w = map_mask(comp, perm);
                int lo = __builtin_ctz(w);
                int hi = 31 - __builtin_clz(w);
                std::uint32_t span = ((hi == 31 ? 0u : (1u << (hi + 1))) - 1u) & ~((1u << lo) - 1u);
                if (span & ~(w | simg)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace verify_detail

/// Closedness of the labeling is equivalent to the natural generators
/// being a Groebner basis, over every labeled graph and every labeling.
inline VerifySummary verify_gb_closed(int nmax = 4) {
    using namespace verify_detail;
    return timed("gb-closed", [&](VerifySummary& s) {
        auto graphs = graphs_up_to(nmax, false);
        std::vector<long> fails(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) {
            const Graph& g = graphs[i];
            Labeling lab = Labeling::identity(g.n);
            do {
                if (is_closed_under(g, lab) != closed_gb_check(g, lab)) ++fails[i];
            } while (std::next_permutation(lab.to_new.begin(), lab.to_new.end()));
        });
        s.cases = static_cast<long>(graphs.size());
        for (long f : fails) s.failures += f > 0;
    });
}

/// The intersection of the minimal primes equals the edge-minor ideal,
/// Groebner-verified, over all connected graphs.
inline VerifySummary verify_decomposition(int nmax = 5) {
    using namespace verify_detail;
    return timed("decomposition", [&](VerifySummary& s) {
        auto graphs = graphs_up_to(nmax, true);
        std::vector<char> ok(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) {
            ok[i] = decomposition_identity_holds(graphs[i]) ? 1 : 0;
        });
        s.cases = static_cast<long>(graphs.size());
        for (char o : ok) s.failures += o ? 0 : 1;
    });
}

/// A weakly closed labeling exists iff a labeling with every minimal prime
/// in closed form exists (combinatorial both sides), plus random algebraic
/// spot checks that the gap condition matches ideal equality P_S == closure.
inline VerifySummary verify_psps(int nmax = 6, int spot_checks = 100,
                                 std::uint64_t seed = 20240406) {
    using namespace verify_detail;
    return timed("psps", [&](VerifySummary& s) {
        auto graphs = graphs_up_to(nmax, true);
        std::vector<char> ok(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) {
            bool wc = exists_weakly_closed_labeling_fast(graphs[i]);
            bool ps = exists_psps_labeling_fast(graphs[i]);
            ok[i] = wc == ps ? 1 : 0;
        });
        s.cases = static_cast<long>(graphs.size());
        for (char o : ok) s.failures += o ? 0 : 1;

        std::mt19937_64 rng(seed);
        struct Spot {
            Graph g;
            std::uint32_t smask;
        };
        std::vector<Spot> spots;
        for (int t = 0; t < spot_checks; ++t) {
            int n = 3 + static_cast<int>(rng() % 4); // 3..6
            Graph g = Graph::from_edge_mask(n, rng() % (1ull << (n * (n - 1) / 2)));
            spots.push_back({g, static_cast<std::uint32_t>(rng() % (1u << n))});
        }
        std::vector<char> spot_ok(spots.size(), 0);
        parallel_for(spots.size(), [&](std::size_t i) {
            const auto& [g, smask] = spots[i];
            RingContext ctx = classic_ring(g.n);
            StructuredPrime sp = prime_PS(g, mask_to_vertices(smask));
            auto [closed, changed] = close_PS(sp);
            bool ideals_equal = ideal_equal(structured_to_ideal<Rat>(sp, ctx),
                                            structured_to_ideal<Rat>(closed, ctx));
            spot_ok[i] = (ideals_equal == !changed) ? 1 : 0;
        });
        s.cases += static_cast<long>(spots.size());
        for (char o : spot_ok) s.failures += o ? 0 : 1;
    });
}

/// Certificates succeed with full Groebner verification exactly on the
/// weakly closed connected graphs; the rest are refused.
inline VerifySummary verify_knutson(int nmax = 5) {
    using namespace verify_detail;
    return timed("knutson", [&](VerifySummary& s) {
        auto graphs = graphs_up_to(nmax, true);
        std::vector<char> ok(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) {
            const Graph& g = graphs[i];
            bool wc = find_weakly_closed_labeling(g).has_value();
            auto res = certify_membership_JG(g);
            bool good;
            if (wc)
                good = res.certificate && res.certificate->verified &&
                       replay_certificate(g, *res.certificate);
            else
                good = !res.certificate && res.refusal == "no weakly closed labeling";
            ok[i] = good ? 1 : 0;
        });
        s.cases = static_cast<long>(graphs.size());
        for (char o : ok) s.failures += o ? 0 : 1;
    });
}

/// Every minimal prime registered by the closure exploration passes the
/// normal-form shape check, and (f) decomposes into exactly its factors.
inline VerifySummary verify_pridcf(int nmax = 4, int depth = 3, std::size_t max_ideals = 5000) {
    using namespace verify_detail;
    return timed("pridcf", [&](VerifySummary& s) {
        for (int n = 2; n <= std::min(nmax, 4); ++n) {
            ExploreOptions opts;
            opts.max_depth = depth;
            opts.max_ideals = max_ideals;
            ClosureRegistry reg = explore_closure(n, opts);
            for (const auto& e : reg.entries) {
                if (!e.prime) continue;
                ++s.cases;
                if (!shape_check(*e.prime, n)) ++s.failures;
            }
        }
        // minimal primes of (f) are exactly the n+1 factor ideals
        for (int n = 2; n <= 5; ++n) {
            RingContext ctx = classic_ring(n);
            StructuredInput in;
            in.f_product = true;
            auto primes = min_primes_structured(in, ctx);
            ++s.cases;
            std::set<ColumnPrime> got(primes.begin(), primes.end());
            std::set<ColumnPrime> expect;
            ColumnPrime y1;
            y1.ykill = 1u;
            expect.insert(y1);
            ColumnPrime xn;
            xn.xkill = 1u << (n - 1);
            expect.insert(xn);
            for (int i = 1; i < n; ++i) {
                ColumnPrime fi;
                fi.cliques = {(1u << (i - 1)) | (1u << i)};
                expect.insert(fi);
            }
            if (got != expect || primes.size() != static_cast<std::size_t>(n) + 1)
                ++s.failures;
        }
    });
}

/// Fedder verdicts for weakly closed connected graphs: classical ideals at
/// p = 2 (n <= nmax) and p = 3 (n <= 3), generalized m = 3 at p = 2.
inline VerifySummary verify_fpure(int nmax = 4) {
    using namespace verify_detail;
    return timed("fpure", [&](VerifySummary& s) {
        struct Job {
            Graph g;
            int m;
            std::uint32_t p;
        };
        std::vector<Job> jobs;
        for (const Graph& g : graphs_up_to(std::min(nmax, 4), true))
            if (find_weakly_closed_labeling(g)) jobs.push_back({g, 2, 2});
        for (const Graph& g : graphs_up_to(3, true))
            if (find_weakly_closed_labeling(g)) {
                jobs.push_back({g, 2, 3});
                jobs.push_back({g, 3, 2});
            }
        std::vector<char> ok(jobs.size(), 0);
        parallel_for(jobs.size(), [&](std::size_t i) {
            const auto& [g, m, p] = jobs[i];
            Ideal<Fp> ideal = m == 2 ? binomial_edge_ideal<Fp>(g, p)
                                     : generalized_bei<Fp>(g, m, p);
            FedderReport rep = fedder_is_fpure(ideal, p);
            bool good = rep.f_pure;
            if (good && !ideal.is_zero_ideal()) {
                // witness replay: w * h in I^[p] for every generator h, and
                // some monomial of w clear of p-th powers
                Ideal<Fp> br = frobenius_power(ideal, p);
                for (const auto& h : ideal.gens())
                    if (!membership(*rep.witness * h, br)) good = false;
                if (in_frobenius_max_power(*rep.witness, p)) good = false;
            }
            ok[i] = good ? 1 : 0;
        });
        s.cases = static_cast<long>(jobs.size());
        for (char o : ok) s.failures += o ? 0 : 1;
    });
}

/// Leading terms of the reduced basis of J_G are squarefree for weakly
/// closed connected graphs (under the weakly closed labeling).
inline VerifySummary verify_squarefree_initial(int nmax = 5) {
    using namespace verify_detail;
    return timed("squarefree-initial", [&](VerifySummary& s) {
        std::vector<Graph> graphs;
        for (const Graph& g : graphs_up_to(nmax, true)) graphs.push_back(g);
        std::vector<int> status(graphs.size(), -1); // -1 skip, 0 fail, 1 pass
        parallel_for(graphs.size(), [&](std::size_t i) {
            auto lab = find_weakly_closed_labeling(graphs[i]);
            if (!lab) return;
            Graph h = relabel(graphs[i], *lab);
            Ideal<Rat> jg = binomial_edge_ideal<Rat>(h);
            bool ok = true;
            for (const auto& g : jg.reduced_gb())
                if (!g.leading_monomial(TermOrder::diagonal_lex()).squarefree()) ok = false;
            status[i] = ok ? 1 : 0;
        });
        for (int st : status) {
            if (st < 0) continue;
            ++s.cases;
            if (st == 0) ++s.failures;
        }
    });
}

/// Sum distributes over intersection on random triples drawn from the
/// explored closure family.
inline VerifySummary verify_distributivity(int triples = 200, std::uint64_t seed = 424242) {
    using namespace verify_detail;
    return timed("distributivity", [&](VerifySummary& s) {
        ExploreOptions opts;
        opts.max_depth = 2;
        ClosureRegistry reg = explore_closure(3, opts);
        std::mt19937_64 rng(seed);
        std::vector<std::array<std::size_t, 3>> picks;
        for (int t = 0; t < triples; ++t)
            picks.push_back({static_cast<std::size_t>(rng() % reg.entries.size()),
                             static_cast<std::size_t>(rng() % reg.entries.size()),
                             static_cast<std::size_t>(rng() % reg.entries.size())});
        std::vector<char> ok(picks.size(), 0);
        parallel_for(picks.size(), [&](std::size_t i) {
            ok[i] = check_sum_distributes(reg.entries[picks[i][0]].ideal,
                                          reg.entries[picks[i][1]].ideal,
                                          reg.entries[picks[i][2]].ideal)
                        ? 1
                        : 0;
        });
        s.cases = static_cast<long>(picks.size());
        for (char o : ok) s.failures += o ? 0 : 1;
    });
}

/// Engine properties: canonical reduced bases under generator shuffles and
/// rescalings, and intersect/colon agreeing with the membership oracle.
inline VerifySummary verify_engine_properties(int shuffles = 500, int oracle_instances = 200,
                                              std::uint64_t seed = 97531) {
    using namespace verify_detail;
    return timed("engine-properties", [&](VerifySummary& s) {
        std::mt19937_64 rng(seed);
        RingContext ctx = classic_ring(3);
        auto random_poly = [&](std::mt19937_64& r, int terms) {
            std::uniform_int_distribution<int> row(1, 2), col(1, 3), exp(0, 1), coef(-3, 3);
            std::vector<Term<Rat>> ts;
            for (int t = 0; t < terms; ++t) {
                Monomial m;
                for (int v = 0; v < 2; ++v)
                    if (exp(r)) m = m * Monomial::var(matvar(row(r), col(r)));
                ts.push_back({m, Rat(coef(r))});
            }
            return Polynomial<Rat>::from_terms(ctx, std::move(ts));
        };

        struct ShuffleCase {
            std::vector<Polynomial<Rat>> gens;
            std::vector<Polynomial<Rat>> shuffled;
        };
        std::vector<ShuffleCase> cases;
        std::uniform_int_distribution<long> scale(1, 7);
        for (int i = 0; i < shuffles; ++i) {
            ShuffleCase c;
            int k = 2 + static_cast<int>(rng() % 3);
            for (int j = 0; j < k; ++j) c.gens.push_back(random_poly(rng, 2 + static_cast<int>(rng() % 2)));
            c.shuffled = c.gens;
            std::shuffle(c.shuffled.begin(), c.shuffled.end(), rng);
            for (auto& g : c.shuffled) {
                long m = scale(rng);
                if (rng() & 1) m = -m;
                g = g.scalar_mul(Rat(m));
            }
            cases.push_back(std::move(c));
        }
        std::vector<char> ok(cases.size(), 0);
        parallel_for(cases.size(), [&](std::size_t i) {
            auto a = groebner_basis(cases[i].gens, TermOrder::diagonal_lex());
            auto b = groebner_basis(cases[i].shuffled, TermOrder::diagonal_lex());
            ok[i] = a == b ? 1 : 0;
        });
        s.cases = static_cast<long>(cases.size());
        for (char o : ok) s.failures += o ? 0 : 1;

        struct OracleCase {
            std::vector<Polynomial<Rat>> igens, jgens;
            std::vector<Polynomial<Rat>> probes;
        };
        std::vector<OracleCase> ocases;
        RingContext c2 = classic_ring(2);
        auto random_poly2 = [&](std::mt19937_64& r, int terms) {
            std::uniform_int_distribution<int> row(1, 2), col(1, 2), exp(0, 1), coef(-3, 3);
            std::vector<Term<Rat>> ts;
            for (int t = 0; t < terms; ++t) {
                Monomial m;
                for (int v = 0; v < 2; ++v)
                    if (exp(r)) m = m * Monomial::var(matvar(row(r), col(r)));
                ts.push_back({m, Rat(coef(r))});
            }
            return Polynomial<Rat>::from_terms(c2, std::move(ts));
        };
        while (static_cast<int>(ocases.size()) < oracle_instances) {
            OracleCase c;
            c.igens = {random_poly2(rng, 2), random_poly2(rng, 2)};
            c.jgens = {random_poly2(rng, 2)};
            bool all_zero = true;
            for (auto& g : c.jgens)
                if (!g.is_zero_poly()) all_zero = false;
            if (all_zero) continue;
            for (int t = 0; t < 3; ++t) c.probes.push_back(random_poly2(rng, 2));
            ocases.push_back(std::move(c));
        }
        std::vector<char> ook(ocases.size(), 0);
        parallel_for(ocases.size(), [&](std::size_t i) {
            const auto& c = ocases[i];
            Ideal<Rat> I(c2, c.igens), J(c2, c.jgens);
            Ideal<Rat> cap = intersect(I, J);
            Ideal<Rat> quo = colon(I, J);
            bool good = true;
            for (const auto& p : c.probes) {
                if (membership(p, cap) != (membership(p, I) && membership(p, J))) good = false;
                bool prods = true;
                for (const auto& g : J.gens())
                    if (!membership(p * g, I)) prods = false;
                if (membership(p, quo) != prods) good = false;
            }
            ook[i] = good ? 1 : 0;
        });
        s.cases += static_cast<long>(ocases.size());
        for (char o : ook) s.failures += o ? 0 : 1;
    });
}

/// The six-column worked example: (x3, y3, I2(X_[4,6])) intersected with
/// I2(X_[1,6]) is the ideal of the eight listed minors.
inline VerifySummary verify_worked_example() {
    using namespace verify_detail;
    return timed("worked-example", [&](VerifySummary& s) {
        RingContext ctx = classic_ring(6);
        Ideal<Rat> p = sum(adjacent_minor_ideal<Rat>(1, 3, 3, ctx),
                           adjacent_minor_ideal<Rat>(2, 4, 6, ctx));
        Ideal<Rat> cap = intersect(p, adjacent_minor_ideal<Rat>(2, 1, 6, ctx));
        std::vector<std::pair<int, int>> edges = {{3, 6}, {3, 5}, {3, 4}, {2, 3},
                                                  {1, 3}, {5, 6}, {4, 6}, {4, 5}};
        std::vector<Polynomial<Rat>> gens;
        for (auto [u, v] : edges) gens.push_back(minor2<Rat>(ctx, std::min(u, v), std::max(u, v)));
        s.cases = 1;
        if (!ideal_equal(cap, Ideal<Rat>(ctx, std::move(gens)))) s.failures = 1;
    });
}

} // namespace beikit
