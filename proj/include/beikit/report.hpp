#pragma once

#include <json.hpp>

#include "beikit/fpurity.hpp"
#include "beikit/knutson.hpp"
#include "beikit/version.hpp"

namespace beikit {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson graph_to_json(const Graph& g) {
    OrderedJson j;
    j["n"] = g.n;
    auto edges = OrderedJson::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline OrderedJson report_header() {
    OrderedJson j;
    j["tool"] = "beikit";
    j["version"] = kVersion;
    j["order"] = kOrderConvention;
    return j;
}

/// Decomposition report: minimal primes with closures plus the
/// Groebner-verified identity flag.
inline OrderedJson decomposition_report(const Graph& g) {
    OrderedJson j = report_header();
    j["graph"] = graph_to_json(g);
    Labeling id = Labeling::identity(g.n);
    j["labeling"] = id.to_new;
    RingContext ctx = classic_ring(g.n);
    auto mins = minimal_primes_bei(g);
    auto primes = OrderedJson::array();
    std::vector<Ideal<Rat>> ideals;
    for (auto& [s, sp] : mins) {
        auto [closed, changed] = close_PS(sp);
        OrderedJson p;
        p["S"] = s;
        p["cliques"] = sp.cliques;
        auto ivs = OrderedJson::array();
        for (auto [a, b] : *closed.intervals) ivs.push_back({a, b});
        p["intervals"] = std::move(ivs);
        p["closed_form"] = !changed;
        primes.push_back(std::move(p));
        ideals.push_back(structured_to_ideal<Rat>(sp, ctx));
    }
    j["minimal_primes"] = std::move(primes);
    j["decomposition_verified"] =
        ideal_equal(intersect_many(std::move(ideals), ctx), binomial_edge_ideal<Rat>(g));
    return j;
}

/// F-purity report for the (possibly generalized) edge-minor ideal.
inline OrderedJson fpure_report(const Graph& g, int m, std::uint32_t p,
                                const FedderReport& rep) {
    OrderedJson j = report_header();
    j["p"] = p;
    j["m"] = m;
    j["graph"] = graph_to_json(g);
    j["verdict"] = rep.f_pure ? "F-pure" : "not-F-pure-at-origin";
    if (rep.witness) j["witness"] = rep.witness->str();
    j["colon_gb_size"] = rep.colon_gb_size;
    return j;
}

inline OrderedJson labeling_report(const Graph& g, const std::optional<Labeling>& lab,
                                   const std::string& mode) {
    OrderedJson j = report_header();
    j["graph"] = graph_to_json(g);
    j["mode"] = mode;
    j["found"] = lab.has_value();
    if (lab) j["labeling"] = lab->to_new;
    return j;
}

// ---------------------------------------------------------------------------
// Certificates: JSON derivation tree with per-node canonical hashes
// ---------------------------------------------------------------------------

inline OrderedJson certificate_to_json(const Graph& g, const Certificate& cert) {
    RingContext ctx = classic_ring(cert.n);
    OrderedJson root;
    root["node"] = "intersect";
    root["ideal_gb_hash"] = cert.root_hash;
    auto children = OrderedJson::array();
    for (const auto& cp : cert.primes) {
        OrderedJson sum_node;
        sum_node["node"] = "sum";
        sum_node["ideal_gb_hash"] = cp.gb_hash;
        auto seeds = OrderedJson::array();
        for (int s : cp.S) {
            OrderedJson seed;
            seed["node"] = "seed";
            seed["seed"] = "I1";
            seed["cols"] = {s, s};
            seed["ideal_gb_hash"] = gb_hash_hex(adjacent_minor_ideal<Rat>(1, s, s, ctx));
            seeds.push_back(std::move(seed));
        }
        for (auto [a, b] : cp.intervals) {
            OrderedJson seed;
            seed["node"] = "seed";
            seed["seed"] = "I2";
            seed["cols"] = {a, b};
            seed["ideal_gb_hash"] = gb_hash_hex(adjacent_minor_ideal<Rat>(2, a, b, ctx));
            seeds.push_back(std::move(seed));
        }
        sum_node["children"] = std::move(seeds);
        children.push_back(std::move(sum_node));
    }
    root["children"] = std::move(children);

    OrderedJson j = report_header();
    j["graph"] = graph_to_json(g);
    j["labeling"] = cert.labeling;
    j["certificate"] = std::move(root);
    j["verified"] = cert.verified;
    return j;
}

/// Parse and re-verify a serialized certificate: every seed and sum hash
/// must replay, and the intersection must equal the relabeled J_G.
inline bool replay_certificate_json(const OrderedJson& j) {
    try {
        Graph g(j.at("graph").at("n").get<int>());
        for (const auto& e : j.at("graph").at("edges"))
            g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        Certificate cert;
        cert.n = g.n;
        cert.labeling = j.at("labeling").get<std::vector<int>>();
        const auto& root = j.at("certificate");
        if (root.at("node") != "intersect") return false;
        cert.root_hash = root.at("ideal_gb_hash").get<std::string>();
        RingContext ctx = classic_ring(g.n);
        for (const auto& sum_node : root.at("children")) {
            if (sum_node.at("node") != "sum") return false;
            CertificatePrime cp;
            cp.gb_hash = sum_node.at("ideal_gb_hash").get<std::string>();
            for (const auto& seed : sum_node.at("children")) {
                if (seed.at("node") != "seed") return false;
                int a = seed.at("cols").at(0).get<int>();
                int b = seed.at("cols").at(1).get<int>();
                if (seed.at("seed") == "I1") {
                    if (a != b) return false;
                    cp.S.push_back(a);
                    if (gb_hash_hex(adjacent_minor_ideal<Rat>(1, a, a, ctx)) !=
                        seed.at("ideal_gb_hash").get<std::string>())
                        return false;
                } else if (seed.at("seed") == "I2") {
                    cp.intervals.push_back({a, b});
                    if (gb_hash_hex(adjacent_minor_ideal<Rat>(2, a, b, ctx)) !=
                        seed.at("ideal_gb_hash").get<std::string>())
                        return false;
                } else {
                    return false;
                }
            }
            cert.primes.push_back(std::move(cp));
        }
        return replay_certificate(g, cert);
    } catch (const std::exception&) {
        return false;
    }
}

inline OrderedJson refusal_report(const Graph& g, const std::string& witness) {
    OrderedJson j = report_header();
    j["graph"] = graph_to_json(g);
    j["refusal"] = witness;
    return j;
}

/// Registry dump for the closure explorer.
inline OrderedJson registry_report(const ClosureRegistry& reg) {
    OrderedJson j = report_header();
    j["n"] = reg.n;
    j["depth"] = reg.max_depth;
    j["max_ideals"] = reg.max_ideals;
    j["truncated"] = reg.truncated;
    auto entries = OrderedJson::array();
    std::size_t primes = 0, shapes_ok = 0;
    for (const auto& e : reg.entries) {
        OrderedJson je;
        je["id"] = e.id;
        je["hash"] = gb_hash_hex(e.ideal);
        switch (e.deriv.kind) {
            case Derivation::Kind::Seed: je["derivation"] = {{"seed", e.deriv.seed}}; break;
            case Derivation::Kind::Sum:
                je["derivation"] = {{"sum", {e.deriv.a, e.deriv.b}}};
                break;
            case Derivation::Kind::Intersect:
                je["derivation"] = {{"intersect", {e.deriv.a, e.deriv.b}}};
                break;
            case Derivation::Kind::MinPrime:
                je["derivation"] = {{"minprime", {e.deriv.a, e.deriv.prime_index}}};
                break;
        }
        if (e.prime) {
            je["is_prime"] = true;
            bool ok = shape_check(*e.prime, reg.n);
            je["shape_ok"] = ok;
            ++primes;
            if (ok) ++shapes_ok;
        }
        if (!e.min_prime_ids.empty()) je["min_primes"] = e.min_prime_ids;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["prime_count"] = primes;
    j["all_shapes_pass"] = primes == shapes_ok;
    return j;
}

} // namespace beikit
