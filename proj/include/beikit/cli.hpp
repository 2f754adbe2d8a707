#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beikit/verify.hpp"

namespace beikit::cli {

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_edge_list(in);
}

inline void emit(std::ostream& out, const OrderedJson& j) { out << j.dump(2) << "\n"; }

/// Exit codes: 0 success, 1 negative mathematical result, 2 usage or input
/// error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"beikit - binomial edge ideals, their Knutson family, and F-purity checks"};
    app.require_subcommand(1);

    std::string graph_path, mode = "weakly-closed", theorem;
    int nmax = -1, n = 3, depth = 3, m = 2;
    std::uint32_t p = 2;
    std::size_t max_ideals = 5000;
    bool json = false;
    std::string certify_path, replay_path;

    auto* rec = app.add_subcommand("recognize", "search for a closed or weakly closed labeling");
    rec->add_option("--graph", graph_path, "edge-list file")->required();
    rec->add_option("--mode", mode, "closed | weakly-closed")
        ->check(CLI::IsMember({"closed", "weakly-closed"}));
    rec->add_flag("--json", json);

    auto* dec = app.add_subcommand("decompose", "minimal primes of the edge-minor ideal");
    dec->add_option("--graph", graph_path)->required();
    dec->add_flag("--json", json);

    auto* ver = app.add_subcommand("verify", "run an exhaustive verification suite");
    ver->add_option("--theorem", theorem,
                    "decomposition | gb-closed | psps | knutson | pridcf | fpure")
        ->required()
        ->check(CLI::IsMember(
            {"decomposition", "gb-closed", "psps", "knutson", "pridcf", "fpure"}));
    ver->add_option("--nmax", nmax, "largest vertex count (defaults per theorem)");
    ver->add_option("--p", p, "characteristic for fpure");
    ver->add_flag("--json", json);

    bool no_seed_axiom = false;
    auto* knu = app.add_subcommand("knutson", "closure exploration and membership certificates");
    knu->add_option("--n", n, "matrix columns for exploration");
    knu->add_option("--depth", depth, "closure depth");
    knu->add_option("--max-ideals", max_ideals, "registry size bound");
    knu->add_flag("--no-seed-axiom", no_seed_axiom,
                  "seed only (f) instead of all adjacent-column minor ideals");
    knu->add_option("--certify", certify_path, "emit a membership certificate for a graph file");
    knu->add_option("--replay", replay_path, "re-verify a serialized certificate");
    knu->add_flag("--json", json);

    auto* fpu = app.add_subcommand("fpure", "Fedder F-purity check for an edge-minor ideal");
    fpu->add_option("--graph", graph_path)->required();
    fpu->add_option("--p", p, "prime characteristic");
    fpu->add_option("--m", m, "matrix rows (2 classical, 3 generalized)");
    fpu->add_flag("--json", json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rec->parsed()) {
            Graph g = load_graph(graph_path);
            auto lab = mode == "closed" ? find_closed_labeling(g) : find_weakly_closed_labeling(g);
            if (json) {
                emit(out, labeling_report(g, lab, mode));
            } else if (lab) {
                out << "labeling:";
                for (int x : lab->to_new) out << " " << x;
                out << "\n";
            } else {
                out << "none\n";
            }
            return lab ? 0 : 1;
        }

        if (dec->parsed()) {
            Graph g = load_graph(graph_path);
            OrderedJson rep = decomposition_report(g);
            if (json) {
                emit(out, rep);
            } else {
                out << "minimal primes: " << rep["minimal_primes"].size() << "\n";
                for (const auto& pr : rep["minimal_primes"])
                    out << "  S=" << pr["S"].dump() << " intervals=" << pr["intervals"].dump()
                        << (pr["closed_form"].get<bool>() ? " (closed form)" : "") << "\n";
                out << "decomposition verified: "
                    << (rep["decomposition_verified"].get<bool>() ? "yes" : "no") << "\n";
            }
            return rep["decomposition_verified"].get<bool>() ? 0 : 1;
        }

        if (ver->parsed()) {
            VerifySummary s;
            if (theorem == "gb-closed") s = verify_gb_closed(nmax < 0 ? 4 : nmax);
            else if (theorem == "decomposition") s = verify_decomposition(nmax < 0 ? 5 : nmax);
            else if (theorem == "psps") s = verify_psps(nmax < 0 ? 6 : nmax);
            else if (theorem == "knutson") s = verify_knutson(nmax < 0 ? 5 : nmax);
            else if (theorem == "pridcf") s = verify_pridcf(nmax < 0 ? 4 : nmax);
            else s = verify_fpure(nmax < 0 ? 4 : nmax);
            if (json) {
                emit(out, summary_to_json(s));
            } else {
                out << s.theorem << ": " << s.cases << " cases, " << (s.cases - s.failures)
                    << " passed, " << s.failures << " failed, " << s.seconds << "s\n";
            }
            return s.failures == 0 ? 0 : 1;
        }

        if (knu->parsed()) {
            if (!replay_path.empty()) {
                std::ifstream in(replay_path);
                if (!in) throw ParseError("cannot open certificate file: " + replay_path);
                OrderedJson j = OrderedJson::parse(in, nullptr, true);
                bool ok = replay_certificate_json(j);
                out << (ok ? "certificate verified\n" : "certificate verification FAILED\n");
                return ok ? 0 : 1;
            }
            if (!certify_path.empty()) {
                Graph g = load_graph(certify_path);
                CertifyResult res = certify_membership_JG(g);
                if (!res.certificate) {
                    emit(out, refusal_report(g, res.refusal));
                    return 1;
                }
                emit(out, certificate_to_json(g, *res.certificate));
                return res.certificate->verified ? 0 : 1;
            }
            ExploreOptions opts;
            opts.max_depth = depth;
            opts.max_ideals = max_ideals;
            opts.seed_axiom = !no_seed_axiom;
            ClosureRegistry reg = explore_closure(n, opts);
            OrderedJson rep = registry_report(reg);
            if (json) {
                emit(out, rep);
            } else {
                out << "registry: " << reg.entries.size() << " ideals, "
                    << rep["prime_count"].get<std::size_t>() << " primes, shapes "
                    << (rep["all_shapes_pass"].get<bool>() ? "all pass" : "FAIL")
                    << (reg.truncated ? " (truncated)" : "") << "\n";
            }
            return rep["all_shapes_pass"].get<bool>() ? 0 : 1;
        }

        if (fpu->parsed()) {
            Graph g = load_graph(graph_path);
            Ideal<Fp> ideal = m == 2 ? binomial_edge_ideal<Fp>(g, p)
                                     : generalized_bei<Fp>(g, m, p);
            FedderReport rep = fedder_is_fpure(ideal, p);
            if (json) {
                emit(out, fpure_report(g, m, p, rep));
            } else {
                out << "verdict: " << (rep.f_pure ? "F-pure" : "not-F-pure-at-origin") << "\n";
                if (rep.witness) out << "witness: " << rep.witness->str() << "\n";
            }
            return rep.f_pure ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "bound error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const ContextError& e) {
        err << "context error: " << e.what() << "\n";
        return 2;
    } catch (const OrderedJson::exception& e) {
        err << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace beikit::cli
