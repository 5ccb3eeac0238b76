#include "ctoric/io.hpp"

#include <fstream>
#include <sstream>

namespace ctoric {

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> meaningful_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream probe(raw);
        std::string word;
        if (probe >> word) out.push_back({raw, no});
    }
    return out;
}

int parse_header(const Line& line, const std::string& kind) {
    std::istringstream ss(line.text);
    std::string word, eq;
    ss >> word;
    if (word != kind) throw ParseError("expected '" + kind + "' header", line.number);
    ss >> eq;
    if (eq.rfind("n=", 0) != 0) throw ParseError("expected n=<count> in header", line.number);
    int n = 0;
    try {
        n = std::stoi(eq.substr(2));
    } catch (const std::exception&) {
        throw ParseError("invalid element count", line.number);
    }
    if (n < 1) throw ParseError("element count must be positive", line.number);
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected trailing content in header", line.number);
    return n;
}

std::pair<int, int> parse_pair_line(const Line& line, const std::string& kind, int n) {
    std::istringstream ss(line.text);
    std::string word;
    int i = 0, j = 0;
    ss >> word;
    if (word != kind) throw ParseError("expected '" + kind + "' line", line.number);
    if (!(ss >> i >> j)) throw ParseError("expected two indices", line.number);
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected trailing content", line.number);
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError("index out of range", line.number);
    return {i - 1, j - 1};
}

} // namespace

Poset parse_poset(std::istream& in) {
    auto lines = meaningful_lines(in);
    if (lines.empty()) throw ParseError("empty poset file", 0);
    int n = parse_header(lines[0], "poset");
    std::vector<std::pair<int, int>> covers;
    for (size_t k = 1; k < lines.size(); ++k) covers.push_back(parse_pair_line(lines[k], "cover", n));
    try {
        return poset_from_covers(n, covers);
    } catch (const Error& e) {
        throw ParseError(e.what(), lines.back().number);
    }
}

Graph parse_graph(std::istream& in) {
    auto lines = meaningful_lines(in);
    if (lines.empty()) throw ParseError("empty graph file", 0);
    int n = parse_header(lines[0], "graph");
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 1; k < lines.size(); ++k) {
        auto e = parse_pair_line(lines[k], "edge", n);
        if (e.first == e.second) throw ParseError("loops are not allowed", lines[k].number);
        edges.push_back(e);
    }
    return Graph::from_edges(n, std::move(edges));
}

Poset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_poset(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_graph(in);
}

std::string poset_to_text(const Poset& p) {
    std::ostringstream out;
    out << "poset n=" << p.n << "\n";
    for (auto [i, j] : p.covers) out << "cover " << i + 1 << " " << j + 1 << "\n";
    return out.str();
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "graph n=" << g.n << "\n";
    for (auto [u, v] : g.edges) out << "edge " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

nlohmann::json basis_to_json(const std::vector<PureBinomial>& basis) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : basis)
        arr.push_back({{"plus", f.plus},
                       {"minus", f.minus},
                       {"initial", f.initial_is_plus ? "plus" : "minus"}});
    return arr;
}

std::vector<PureBinomial> basis_from_json(const nlohmann::json& j) {
    std::vector<PureBinomial> out;
    for (const auto& item : j) {
        PureBinomial f;
        f.plus = item.at("plus").get<Monomial>();
        f.minus = item.at("minus").get<Monomial>();
        f.initial_is_plus = item.at("initial").get<std::string>() == "plus";
        out.push_back(std::move(f));
    }
    return out;
}

nlohmann::json configuration_to_json(const Configuration& a) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : a.cols) cols.push_back(c);
    nlohmann::json grading = nlohmann::json::array();
    for (const auto& g : a.grading) grading.push_back(rat_to_string(g));
    return {{"n", a.n}, {"m", a.m}, {"columns", cols}, {"grading", grading}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
    Configuration a;
    a.n = j.at("n").get<int>();
    a.m = j.at("m").get<int>();
    for (const auto& c : j.at("columns")) a.cols.push_back(c.get<std::vector<long long>>());
    for (const auto& g : j.at("grading")) a.grading.push_back(rat_from_string(g.get<std::string>()));
    return a;
}

nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [i, j] : p.covers) covers.push_back({i + 1, j + 1});
    return {{"n", p.n}, {"covers", covers}};
}

Poset poset_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) covers.emplace_back(c[0].get<int>() - 1, c[1].get<int>() - 1);
    return poset_from_covers(j.at("n").get<int>(), covers);
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u + 1, v + 1});
    return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    return Graph::from_edges(j.at("n").get<int>(), std::move(edges));
}

namespace {

nlohmann::json ordering_to_json(const VertexOrdering& ord) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : ord.perm) arr.push_back(v + 1);
    return arr;
}

nlohmann::json vertices_to_json(const std::vector<int>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

nlohmann::json indices_to_json(const std::vector<int>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

} // namespace

nlohmann::json report_to_json(const TheoremMainReport& rep) {
    nlohmann::json j;
    j["type"] = "theorem-main";
    j["poset"] = poset_to_json(rep.poset);
    j["d_list"] = rep.d_list;
    j["chordal"] = rep.chordal;
    j["speo"] = rep.speo ? ordering_to_json(*rep.speo) : nlohmann::json();
    j["hole"] = rep.hole ? vertices_to_json(*rep.hole) : nlohmann::json();
    nlohmann::json per_d = nlohmann::json::array();
    for (const auto& r : rep.per_d) {
        nlohmann::json e;
        e["d"] = r.d;
        e["m"] = r.m;
        e["quadratic_generation"] = r.quadratic_generation;
        e["quadratic_groebner"] = r.quadratic_groebner;
        e["groebner_derived_from_generation"] = r.groebner_derived;
        e["minimal_degrees"] = r.minimal_degrees;
        e["gb_size"] = r.gb_size;
        e["gb_max_degree"] = r.gb_max_degree;
        if (r.offending)
            e["offending"] = basis_to_json({*r.offending})[0];
        else
            e["offending"] = nlohmann::json();
        if (r.witness) {
            e["witness"] = {{"left", indices_to_json(r.witness->left)},
                            {"right", indices_to_json(r.witness->right)},
                            {"image", r.witness->image},
                            {"valid", r.witness_valid}};
        } else {
            e["witness"] = nlohmann::json();
        }
        per_d.push_back(std::move(e));
    }
    j["per_d"] = std::move(per_d);
    j["conditions"] = {{"i", rep.cond_i()},
                       {"ii", rep.cond_ii()},
                       {"iii", rep.cond_iii()},
                       {"iv", rep.cond_iv()},
                       {"v", rep.cond_v()}};
    j["verdicts_agree"] = rep.verdicts_agree();
    return j;
}

nlohmann::json report_to_json(const TheoremSCReport& rep) {
    nlohmann::json j;
    j["type"] = "theorem-sc";
    j["graph"] = graph_to_json(rep.graph);
    j["strongly_chordal"] = rep.strongly_chordal;
    j["quadratic_groebner"] = rep.quadratic_groebner;
    j["quadratic_generation"] = rep.quadratic_generation;
    j["groebner_derived_from_generation"] = rep.groebner_derived;
    j["m"] = rep.m;
    j["gb_size"] = rep.gb_size;
    j["gb_max_degree"] = rep.gb_max_degree;
    j["minimal_degrees"] = rep.minimal_degrees;
    j["speo"] = rep.speo ? ordering_to_json(*rep.speo) : nlohmann::json();
    if (rep.hole)
        j["obstruction"] = {{"kind", "hole"}, {"vertices", vertices_to_json(*rep.hole)}};
    else if (rep.sun)
        j["obstruction"] = {{"kind", "sun"}, {"vertices", vertices_to_json(rep.sun->cycle)}};
    else
        j["obstruction"] = nlohmann::json();
    if (rep.witness) {
        auto describe = [&](const std::vector<int>& cols) {
            nlohmann::json arr = nlohmann::json::array();
            for (int c : cols) {
                if (c < rep.graph.n)
                    arr.push_back({{"loop", c + 1}});
                else {
                    auto [u, v] = rep.graph.edges[c - rep.graph.n];
                    arr.push_back({{"edge", {u + 1, v + 1}}});
                }
            }
            return arr;
        };
        j["witness"] = {{"left", indices_to_json(rep.witness->left)},
                        {"right", indices_to_json(rep.witness->right)},
                        {"left_columns", describe(rep.witness->left)},
                        {"right_columns", describe(rep.witness->right)},
                        {"valid", rep.witness_valid}};
    } else {
        j["witness"] = nlohmann::json();
    }
    j["verdicts_agree"] = rep.verdicts_agree();
    return j;
}

nlohmann::json holes_to_json(const GradedMonoidView& view, const std::vector<MonoidHole>& holes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& h : holes) {
        arr.push_back({{"degree", h.degree},
                       {"vector", h.z},
                       {"in_ZA", view.in_lattice(h.z)},
                       {"in_cone", view.in_cone(h.z)},
                       {"in_monoid", view.in_monoid(h.z)}});
    }
    return arr;
}

bool reverify_report(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "theorem-main") {
        Poset p = poset_from_json(j.at("poset"));
        Graph g = comparability_graph(p);
        if (!j.at("speo").is_null()) {
            VertexOrdering ord;
            for (const auto& v : j.at("speo")) ord.perm.push_back(v.get<int>() - 1);
            if (!verify_strong_peo(g, ord)) return false;
        }
        if (!j.at("hole").is_null()) {
            std::vector<int> hole;
            for (const auto& v : j.at("hole")) hole.push_back(v.get<int>() - 1);
            if (hole.size() < 4) return false;
            for (size_t a = 0; a < hole.size(); ++a)
                for (size_t b = a + 1; b < hole.size(); ++b) {
                    bool consecutive = (b == a + 1) || (a == 0 && b == hole.size() - 1);
                    if (g.has_edge(hole[a], hole[b]) != consecutive) return false;
                }
        }
        for (const auto& e : j.at("per_d")) {
            if (e.at("witness").is_null()) continue;
            int d = e.at("d").get<int>();
            MultichainFamily fam = enumerate_multichains(p, d);
            Configuration a = configuration_from_family(fam);
            std::vector<int> left, right;
            for (const auto& v : e.at("witness").at("left")) left.push_back(v.get<int>() - 1);
            for (const auto& v : e.at("witness").at("right")) right.push_back(v.get<int>() - 1);
            if (!lemma1_check(a, left, right)) return false;
        }
        return true;
    }
    if (type == "theorem-sc") {
        Graph g = graph_from_json(j.at("graph"));
        if (!j.at("speo").is_null()) {
            VertexOrdering ord;
            for (const auto& v : j.at("speo")) ord.perm.push_back(v.get<int>() - 1);
            if (!verify_strong_peo(g, ord)) return false;
        }
        if (!j.at("witness").is_null()) {
            Configuration abar = abar_configuration(g);
            std::vector<int> left, right;
            for (const auto& v : j.at("witness").at("left")) left.push_back(v.get<int>() - 1);
            for (const auto& v : j.at("witness").at("right")) right.push_back(v.get<int>() - 1);
            if (!lemma1_check(abar, left, right)) return false;
        }
        return true;
    }
    return false;
}

} // namespace ctoric
