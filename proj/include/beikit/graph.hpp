#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "beikit/errors.hpp"

namespace beikit {

/// Simple undirected graph on vertices 1..n, adjacency kept as bitmasks.
struct Graph {
    int n = 0;
    std::vector<std::uint32_t> adj; // adj[v-1] has bit (u-1) set iff {u,v} is an edge

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices), 0) {}

    void add_edge(int u, int v) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw DomainError("edge endpoint outside 1..n");
        if (u == v) throw DomainError("loops are not allowed");
        adj[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
        adj[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
    }

    bool has_edge(int u, int v) const {
        return (adj[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (has_edge(u, v)) e.push_back({u, v});
        return e;
    }

    int edge_count() const {
        int c = 0;
        for (int v = 1; v <= n; ++v) c += __builtin_popcount(adj[static_cast<std::size_t>(v - 1)]);
        return c / 2;
    }

    /// Graph from the bit index of each pair (u,v), u<v, in lexicographic
    /// order; used by the labeled-graph enumeration.
    static Graph from_edge_mask(int n, std::uint64_t mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        return g;
    }
};

/// Bijective relabeling of 1..n; to_new[v-1] is the new label of vertex v.
struct Labeling {
    std::vector<int> to_new;

    static Labeling identity(int n) {
        Labeling l;
        l.to_new.resize(static_cast<std::size_t>(n));
        std::iota(l.to_new.begin(), l.to_new.end(), 1);
        return l;
    }

    int operator()(int v) const { return to_new[static_cast<std::size_t>(v - 1)]; }

    bool valid(int n) const {
        if (static_cast<int>(to_new.size()) != n) return false;
        std::uint32_t seen = 0;
        for (int x : to_new) {
            if (x < 1 || x > n) return false;
            seen |= 1u << (x - 1);
        }
        return seen == (n >= 32 ? ~0u : (1u << n) - 1u);
    }
};

inline Graph relabel(const Graph& g, const Labeling& lab) {
    Graph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(lab(u), lab(v));
    return h;
}

/// Closed under the identity labeling: for i < j < k, two edges sharing
/// the smaller endpoint ({i,j} and {i,k}) force {j,k}, and two sharing the
/// larger endpoint ({i,k} and {j,k}) force {i,j}. This is the condition
/// equivalent to the natural generators of the edge-minor ideal being a
/// Groebner basis; on connected graphs it coincides with the chord form
/// used for weak closedness below.
inline bool is_closed(const Graph& g) {
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            for (int k = j + 1; k <= g.n; ++k) {
                if (g.has_edge(i, j) && g.has_edge(i, k) && !g.has_edge(j, k)) return false;
                if (g.has_edge(i, k) && g.has_edge(j, k) && !g.has_edge(i, j)) return false;
            }
    return true;
}

/// Weakly closed: same with "or".
inline bool is_weakly_closed(const Graph& g) {
    for (int i = 1; i <= g.n; ++i)
        for (int k = i + 2; k <= g.n; ++k)
            if (g.has_edge(i, k))
                for (int j = i + 1; j < k; ++j)
                    if (!g.has_edge(i, j) && !g.has_edge(j, k)) return false;
    return true;
}

inline bool is_closed_under(const Graph& g, const Labeling& lab) {
    if (!lab.valid(g.n)) throw DomainError("labeling is not a bijection on 1..n");
    return is_closed(relabel(g, lab));
}

inline bool is_weakly_closed_under(const Graph& g, const Labeling& lab) {
    if (!lab.valid(g.n)) throw DomainError("labeling is not a bijection on 1..n");
    return is_weakly_closed(relabel(g, lab));
}

inline constexpr int kLabelingSearchBound = 9;

/// First labeling (in lexicographic permutation order) satisfying the
/// predicate, scanning all n! permutations.
inline std::optional<Labeling> find_labeling(const Graph& g,
                                             const std::function<bool(const Graph&)>& pred,
                                             int bound = kLabelingSearchBound) {
    if (g.n > bound) throw CapacityError("labeling search limited to n <= " + std::to_string(bound));
    Labeling lab = Labeling::identity(g.n);
    do {
        if (pred(relabel(g, lab))) return lab;
    } while (std::next_permutation(lab.to_new.begin(), lab.to_new.end()));
    return std::nullopt;
}

inline std::optional<Labeling> find_closed_labeling(const Graph& g,
                                                    int bound = kLabelingSearchBound) {
    return find_labeling(g, [](const Graph& h) { return is_closed(h); }, bound);
}

inline std::optional<Labeling> find_weakly_closed_labeling(const Graph& g,
                                                           int bound = kLabelingSearchBound) {
    return find_labeling(g, [](const Graph& h) { return is_weakly_closed(h); }, bound);
}

/// Connected components of the subgraph induced on T, as sorted vertex
/// sets sorted by minimum element.
inline std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& t) {
    std::uint32_t tmask = 0;
    for (int v : t) {
        if (v < 1 || v > g.n) throw DomainError("component vertex outside 1..n");
        tmask |= 1u << (v - 1);
    }
    std::vector<std::vector<int>> comps;
    std::uint32_t unseen = tmask;
    while (unseen) {
        std::uint32_t start = unseen & (~unseen + 1);
        std::uint32_t comp = start, frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f;) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                next |= g.adj[static_cast<std::size_t>(v)] & tmask & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        std::vector<int> vs;
        for (int v = 1; v <= g.n; ++v)
            if ((comp >> (v - 1)) & 1) vs.push_back(v);
        comps.push_back(std::move(vs));
        unseen &= ~comp;
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<int> all(static_cast<std::size_t>(g.n));
    std::iota(all.begin(), all.end(), 1);
    return components(g, all).size() == 1;
}

inline constexpr int kEnumerationBound = 7;

/// All labeled graphs on n vertices (optionally connected only), streamed
/// in increasing edge-mask order, each exactly once.
inline void enumerate_graphs(int n, bool connected_only,
                             const std::function<void(const Graph&)>& fn,
                             int bound = kEnumerationBound) {
    if (n < 1 || n > bound)
        throw CapacityError("labeled enumeration limited to 1 <= n <= " + std::to_string(bound));
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        Graph g = Graph::from_edge_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

/// Edge-list reader: optional "n <N>" header, one "u v" edge per line,
/// '#' starts a comment. Throws ParseError with a line diagnostic.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int declared_n = -1;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank
        auto fail = [&](const std::string& msg) -> void {
            throw ParseError("edge list line " + std::to_string(lineno) + ": " + msg);
        };
        if (first == "n") {
            if (declared_n != -1 || !edges.empty()) fail("header must come first");
            if (!(ls >> declared_n) || declared_n < 1 || declared_n > 31)
                fail("header needs a vertex count in 1..31");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            u = -1;
        }
        if (u < 1 || !(ls >> v) || v < 1) fail("expected an edge 'u v' with positive vertices");
        std::string trailing;
        if (ls >> trailing) fail("trailing tokens after edge");
        if (u == v) fail("loop edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back({u, v});
        max_vertex = std::max({max_vertex, u, v});
    }
    int n = declared_n != -1 ? declared_n : max_vertex;
    if (n < 1) throw ParseError("edge list defines no vertices");
    if (declared_n != -1 && max_vertex > declared_n)
        throw ParseError("edge uses vertex " + std::to_string(max_vertex) +
                         " beyond declared n " + std::to_string(declared_n));
    Graph g(n);
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(1, n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace beikit
