#ifndef CTORIC_IO_HPP
#define CTORIC_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ctoric/normality.hpp"
#include "ctoric/theorems.hpp"

namespace ctoric {

/// Text formats (1-based indices, '#' comments):
///   poset n=<N>      graph n=<N>
///   cover i j        edge i j
Poset parse_poset(std::istream& in);
Graph parse_graph(std::istream& in);
Poset load_poset(const std::string& path);
Graph load_graph(const std::string& path);
std::string poset_to_text(const Poset& p);
std::string graph_to_text(const Graph& g);

/// Basis serialization: array of {plus, minus, initial: "plus"|"minus"}.
nlohmann::json basis_to_json(const std::vector<PureBinomial>& basis);
std::vector<PureBinomial> basis_from_json(const nlohmann::json& j);

/// {n, m, columns, grading: ["p/q", ...]}.
nlohmann::json configuration_to_json(const Configuration& a);
Configuration configuration_from_json(const nlohmann::json& j);

nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const TheoremMainReport& rep);
nlohmann::json report_to_json(const TheoremSCReport& rep);
nlohmann::json holes_to_json(const GradedMonoidView& view, const std::vector<MonoidHole>& holes);

/// Rebuilds the instance from a serialized report and re-checks its
/// certificates: orderings pass the strong condition, witness sides have
/// equal column sums and pass the Lemma hypothesis.
bool reverify_report(const nlohmann::json& j);

} // namespace ctoric

#endif
