#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "ctoric/io.hpp"
#include "ctoric/sweep.hpp"

using namespace ctoric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 20240521;
    int jobs = 1;
};

std::string multichain_label(const Multichain& c) {
    std::string s = "y_{";
    for (int e : c.elems) s += std::to_string(e + 1);
    s += "}";
    return s;
}

std::string rho_tuple(const std::vector<int>& rho) {
    std::string s = "(";
    for (size_t i = 0; i < rho.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rho[i]);
    }
    return s + ")";
}

void print_matrix(std::ostream& out, const Configuration& a) {
    for (int i = 0; i < a.n; ++i) {
        for (int j = 0; j < a.m; ++j) out << (j ? " " : "") << a.cols[j][i];
        out << "\n";
    }
}

std::string binomial_in_labels(const PureBinomial& f, const MultichainFamily& fam) {
    auto side = [&](const Monomial& u) {
        std::string s;
        for (size_t j = 0; j < u.size(); ++j) {
            for (int e = 0; e < u[j]; ++e) {
                if (!s.empty()) s += "*";
                s += multichain_label(fam.members[j]);
            }
        }
        return s.empty() ? "1" : s;
    };
    return side(f.lead()) + " - " + side(f.trail());
}

void print_main_report(std::ostream& out, const TheoremMainReport& rep) {
    out << "poset: n=" << rep.poset.n << ", covers:";
    for (auto [i, j] : rep.poset.covers) out << " " << i + 1 << "<" << j + 1;
    out << "\n";
    out << "chordal comparability graph: " << (rep.chordal ? "yes" : "no") << "\n";
    if (rep.speo) {
        out << "strong elimination ordering:";
        for (int v : rep.speo->perm) out << " x" << v + 1;
        out << "\n";
    }
    if (rep.hole) {
        out << "induced cycle:";
        for (int v : *rep.hole) out << " x" << v + 1;
        out << "\n";
    }
    for (const auto& r : rep.per_d) {
        out << "d=" << r.d << ": m=" << r.m
            << ", generated in degree two: " << (r.quadratic_generation ? "yes" : "no")
            << ", quadratic reduced basis: " << (r.quadratic_groebner ? "yes" : "no");
        if (r.groebner_derived) out << " (derived from generation)";
        out << ", minimal generator degrees:";
        for (int t : r.minimal_degrees) out << " " << t;
        out << "\n";
        if (r.witness) {
            out << "  witness: sum of columns";
            for (int i : r.witness->left) out << " " << i + 1;
            out << " = sum of columns";
            for (int i : r.witness->right) out << " " << i + 1;
            out << " at image "
                << rho_tuple(std::vector<int>(r.witness->image.begin(), r.witness->image.end()))
                << (r.witness_valid ? " (hypothesis verified)" : " (HYPOTHESIS FAILED)") << "\n";
        }
    }
    out << "conditions (i)..(v): " << rep.cond_i() << " " << rep.cond_ii() << " " << rep.cond_iii()
        << " " << rep.cond_iv() << " " << rep.cond_v() << "\n";
    out << "verdicts agree: " << (rep.verdicts_agree() ? "yes" : "NO") << "\n";
}

void print_sc_report(std::ostream& out, const TheoremSCReport& rep) {
    out << "graph: n=" << rep.graph.n << ", edges:";
    for (auto [u, v] : rep.graph.edges) out << " {" << u + 1 << "," << v + 1 << "}";
    out << "\n";
    out << "strongly chordal: " << (rep.strongly_chordal ? "yes" : "no") << "\n";
    if (rep.speo) {
        out << "strong elimination ordering:";
        for (int v : rep.speo->perm) out << " v" << v + 1;
        out << "\n";
    }
    if (rep.hole) {
        out << "induced cycle:";
        for (int v : *rep.hole) out << " v" << v + 1;
        out << "\n";
    }
    if (rep.sun) {
        out << "induced sun:";
        for (int v : rep.sun->cycle) out << " v" << v + 1;
        out << "\n";
    }
    out << "generated in degree two: " << (rep.quadratic_generation ? "yes" : "no") << "\n";
    out << "quadratic reduced basis: " << (rep.quadratic_groebner ? "yes" : "no");
    if (rep.groebner_derived) out << " (derived from generation)";
    out << "\n";
    if (rep.witness) {
        auto describe = [&](const std::vector<int>& cols) {
            std::string s;
            for (int c : cols) {
                if (!s.empty()) s += " + ";
                if (c < rep.graph.n)
                    s += "loop(v" + std::to_string(c + 1) + ")";
                else {
                    auto [u, v] = rep.graph.edges[c - rep.graph.n];
                    s += "edge(v" + std::to_string(u + 1) + ",v" + std::to_string(v + 1) + ")";
                }
            }
            return s;
        };
        out << "witness identity: " << describe(rep.witness->left) << " = "
            << describe(rep.witness->right)
            << (rep.witness_valid ? " (hypothesis verified)" : " (HYPOTHESIS FAILED)") << "\n";
    }
    out << "verdicts agree: " << (rep.verdicts_agree() ? "yes" : "NO") << "\n";
}

int cmd_analyze_poset(const std::string& path, std::vector<int> d_list, const RunConfig& cfg) {
    Poset p = load_poset(path);
    if (d_list.empty()) d_list = {2, 3};
    TheoremMainReport rep = verify_theorem_main(p, d_list);
    if (cfg.format == "json") {
        std::cout << report_to_json(rep).dump() << "\n";
    } else {
        print_main_report(std::cout, rep);
        // echo the configuration in the constructed order for the first d
        if (rep.chordal && !rep.d_list.empty()) {
            PaperOrder po = paper_variable_order(p, rep.d_list.front());
            std::cout << "configuration (d=" << rep.d_list.front() << "):\n";
            print_matrix(std::cout, configuration_from_family(po.family));
        }
    }
    return rep.verdicts_agree() ? kExitOk : kExitInconsistent;
}

int cmd_analyze_graph(const std::string& path, const RunConfig& cfg) {
    Graph g = load_graph(path);
    TheoremSCReport rep = verify_theorem_sc(g);
    if (cfg.format == "json")
        std::cout << report_to_json(rep).dump() << "\n";
    else
        print_sc_report(std::cout, rep);
    return rep.verdicts_agree() ? kExitOk : kExitInconsistent;
}

int cmd_sweep_posets(int n, std::vector<int> d_list, const RunConfig& cfg) {
    if (d_list.empty()) d_list = {2, 3};
    auto start = std::chrono::steady_clock::now();
    long long instances = 0, agreements = 0;
    sweep_posets(n, d_list, cfg.jobs, [&](int idx, const TheoremMainReport& rep) {
        ++instances;
        if (rep.verdicts_agree()) ++agreements;
        if (cfg.format == "json") {
            nlohmann::json j = report_to_json(rep);
            j["instance"] = idx;
            std::cout << j.dump() << "\n";
        } else if (!rep.verdicts_agree()) {
            std::cout << "instance " << idx << ": VERDICTS DISAGREE\n";
            print_main_report(std::cout, rep);
        }
    });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "posets n=" << n << ": " << instances << " instances, " << agreements
              << " agreements, " << ms << " ms\n";
    return instances == agreements ? kExitOk : kExitInconsistent;
}

int cmd_sweep_graphs(int n, const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    long long instances = 0, agreements = 0;
    sweep_graphs(n, cfg.jobs, [&](int idx, const TheoremSCReport& rep) {
        ++instances;
        if (rep.verdicts_agree()) ++agreements;
        if (cfg.format == "json") {
            nlohmann::json j = report_to_json(rep);
            j["instance"] = idx;
            std::cout << j.dump() << "\n";
        } else if (!rep.verdicts_agree()) {
            std::cout << "instance " << idx << ": VERDICTS DISAGREE\n";
            print_sc_report(std::cout, rep);
        }
    });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "graphs n=" << n << ": " << instances << " instances, " << agreements
              << " agreements, " << ms << " ms\n";
    return instances == agreements ? kExitOk : kExitInconsistent;
}

int cmd_gb(const std::string& path, int d, const std::string& order_spec, bool chains,
           const RunConfig& cfg) {
    Poset p = load_poset(path);
    MultichainFamily fam;
    MonomialOrder order;
    if (order_spec == "paper") {
        if (chains) throw PreconditionViolated("--chains is not defined for the paper order");
        PaperOrder po = paper_variable_order(p, d);
        fam = po.family;
        order = po.order;
    } else {
        fam = chains ? enumerate_strict_chains(p, d) : enumerate_multichains(p, d);
        order = order_spec == "lex" ? MonomialOrder::lex(fam.size())
                                    : MonomialOrder::grevlex(fam.size());
    }
    Configuration a = configuration_from_family(fam);
    ReducedGB gb = buchberger(markov_basis(a).gens, order);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["configuration"] = configuration_to_json(a);
        j["order"] = order_spec;
        j["basis"] = basis_to_json(gb.basis);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "variables:\n";
        for (int i = 0; i < fam.size(); ++i)
            std::cout << "  y" << i + 1 << " = " << multichain_label(fam.members[i])
                      << "  rho=" << rho_tuple(fam.members[i].rho) << "\n";
        std::cout << "reduced basis (" << gb.size() << " elements, order " << order_spec << "):\n";
        for (const auto& f : gb.basis) std::cout << "  " << binomial_in_labels(f, fam) << "\n";
    }
    return kExitOk;
}

int cmd_markov(const std::string& path, int d, bool chains, const RunConfig& cfg) {
    Poset p = load_poset(path);
    MultichainFamily fam = chains ? enumerate_strict_chains(p, d) : enumerate_multichains(p, d);
    Configuration a = configuration_from_family(fam);
    MarkovBasis mb = markov_basis(a);
    auto degrees = minimal_degrees(mb, a);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["configuration"] = configuration_to_json(a);
        j["markov"] = basis_to_json(mb.gens);
        j["max_degree"] = mb.max_degree;
        j["minimal_degrees"] = degrees;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "markov basis (" << mb.gens.size() << " generators, max degree "
                  << mb.max_degree << "):\n";
        for (const auto& f : mb.gens) std::cout << "  " << binomial_in_labels(f, fam) << "\n";
        std::cout << "minimal generator degrees:";
        for (int t : degrees) std::cout << " " << t;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_normality(const std::string& path, int d, int t_max, bool chains, const RunConfig& cfg) {
    Poset p = load_poset(path);
    MultichainFamily fam = chains ? enumerate_strict_chains(p, d) : enumerate_multichains(p, d);
    Configuration a = configuration_from_family(fam);
    GradedMonoidView view(a);
    bool union_of_chains = is_disjoint_union_of_chains(p);
    auto holes = view.holes_up_to(t_max);
    bool connected = is_connected(comparability_graph(p));
    bool veronese = connected ? normalization_equals_veronese(view, p, t_max) : false;
    if (cfg.format == "json") {
        nlohmann::json j;
        j["disjoint_union_of_chains"] = union_of_chains;
        j["holes"] = holes_to_json(view, holes);
        j["normal_up_to_t_max"] = holes.empty();
        j["t_max"] = t_max;
        j["connected"] = connected;
        if (connected) j["normalization_equals_veronese"] = veronese;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "disjoint union of chains: " << (union_of_chains ? "yes" : "no") << "\n";
        std::cout << "holes up to degree " << t_max << ": " << holes.size() << "\n";
        for (const auto& h : holes)
            std::cout << "  degree " << h.degree << ": "
                      << rho_tuple(std::vector<int>(h.z.begin(), h.z.end())) << "\n";
        if (connected)
            std::cout << "normalization equals the Veronese monoid up to t_max: "
                      << (veronese ? "yes" : "no") << "\n";
        else
            std::cout << "poset is disconnected; per-component normalization applies\n";
    }
    return kExitOk;
}

// Randomized engine self-check: reduced bases are invariant under generator
// shuffles and strategy swaps on random graded configurations.
int cmd_selfcheck(int count, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> nd(1, 4), md(1, 8), ed(0, 3);
    int done = 0, checked = 0;
    while (done < count) {
        int n = nd(rng), m = md(rng);
        std::vector<std::vector<long long>> cols(m, std::vector<long long>(n));
        for (auto& col : cols) {
            bool zero = true;
            for (auto& x : col) {
                x = ed(rng);
                if (x) zero = false;
            }
            if (zero) col[0] = 1;
        }
        auto witness = grading_witness(cols);
        if (!witness) continue;
        ++done;
        Configuration a;
        a.n = n;
        a.m = m;
        a.cols = cols;
        a.grading = *witness;
        MarkovBasis mb = markov_basis(a);
        MonomialOrder order = MonomialOrder::grevlex(m);
        ReducedGB reference = buchberger(mb.gens, order);
        std::vector<PureBinomial> shuffled = mb.gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        BuchbergerOptions fifo;
        fifo.strategy = SPairStrategy::Fifo;
        ReducedGB alt = buchberger(shuffled, order, fifo);
        if (alt.size() != reference.size()) throw InternalInconsistency("basis size mismatch");
        for (int i = 0; i < alt.size(); ++i) {
            if (!alt.basis[i].same_oriented(reference.basis[i]))
                throw InternalInconsistency("basis element mismatch");
            if (a.image(alt.basis[i].plus) != a.image(alt.basis[i].minus))
                throw InternalInconsistency("inhomogeneous basis element");
        }
        checked += reference.size();
    }
    std::cerr << "selfcheck: " << count << " random configurations, " << checked
              << " basis elements verified (seed " << cfg.seed << ")\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals of poset multichains: bases, certificates, verification"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized self-checks")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->capture_default_str();

    std::string path, order_spec = "paper";
    std::vector<int> d_list;
    int d = 2, n = 3, t_max = 4, count = 1000;
    bool chains = false;

    auto* ap = app.add_subcommand("analyze-poset", "verify the poset characterization");
    ap->add_option("file", path)->required();
    ap->add_option("--d", d_list, "multichain lengths")->delimiter(',');

    auto* ag = app.add_subcommand("analyze-graph", "verify the graph characterization");
    ag->add_option("file", path)->required();

    auto* sp = app.add_subcommand("sweep-posets", "verify every labeled poset of a given size");
    sp->add_option("--n", n, "element count")->required();
    sp->add_option("--d", d_list, "multichain lengths")->delimiter(',');

    auto* sg = app.add_subcommand("sweep-graphs", "verify every labeled graph of a given size");
    sg->add_option("--n", n, "vertex count")->required();

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the multichain ideal");
    gb->add_option("file", path)->required();
    gb->add_option("--d", d)->capture_default_str();
    gb->add_option("--order", order_spec)->check(CLI::IsMember({"paper", "grevlex", "lex"}));
    gb->add_flag("--chains", chains, "use strict chains instead of multichains");

    auto* mk = app.add_subcommand("markov", "Markov basis and minimal generator degrees");
    mk->add_option("file", path)->required();
    mk->add_option("--d", d)->capture_default_str();
    mk->add_flag("--chains", chains, "use strict chains instead of multichains");

    auto* nm = app.add_subcommand("normality", "lattice/cone/monoid membership and holes");
    nm->add_option("file", path)->required();
    nm->add_option("--d", d)->capture_default_str();
    nm->add_option("--t-max", t_max)->capture_default_str();
    nm->add_flag("--chains", chains, "use strict chains instead of multichains");

    auto* sc = app.add_subcommand("selfcheck", "randomized engine consistency check");
    sc->add_option("--count", count)->capture_default_str();

    // global options may appear after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ap->parsed()) return cmd_analyze_poset(path, d_list, cfg);
        if (ag->parsed()) return cmd_analyze_graph(path, cfg);
        if (sp->parsed()) return cmd_sweep_posets(n, d_list, cfg);
        if (sg->parsed()) return cmd_sweep_graphs(n, cfg);
        if (gb->parsed()) return cmd_gb(path, d, order_spec, chains, cfg);
        if (mk->parsed()) return cmd_markov(path, d, chains, cfg);
        if (nm->parsed()) return cmd_normality(path, d, t_max, chains, cfg);
        if (sc->parsed()) return cmd_selfcheck(count, cfg);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
