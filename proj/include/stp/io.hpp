#pragma once

#include <iosfwd>
#include "json.hpp"
#include <string>
#include <vector>

#include "stp/closures.hpp"
#include "stp/facets.hpp"
#include "stp/graph.hpp"
#include "stp/locked.hpp"
#include "stp/oracle.hpp"

namespace stp {

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

// Edge-list text: "<u> <v> [label]" per line, '#' comments, blank lines
// ignored, optional leading "vertices: a b c ..." directive. Loops are dropped
// with a warning. Throws ParseError; DisconnectedError when a declared vertex
// has no edge.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph read_edge_list_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const FacetSystem& sys);
// Throws ParseError on schema violations or unknown labels.
FacetSystem system_from_json(const nlohmann::json& j);
// Reads rows against an existing graph, matching coefficients by edge label.
ConstraintSystem system_from_json(const nlohmann::json& j, const Graph& g);

// cdd H-representation: each row "b -a_1 ... -a_m" meaning b - a.x >= 0,
// equalities listed on the linearity line.
std::string to_ine(const ConstraintSystem& sys);

// CPLEX LP. Single-edge rows x(e) <= 1 and x(e) >= 0 become bounds; other
// variables are declared unbounded on that side unless relaxed_bounds.
std::string to_lp(const FacetSystem& sys, bool relaxed_bounds = false);

std::string format_row(const Inequality& row, const Graph& g);
std::string format_system(const FacetSystem& sys);

nlohmann::json report_to_json(const VerificationReport& report, const Graph& g, const ConstraintSystem& sys);
std::string report_to_text(const VerificationReport& report, const Graph& g, const ConstraintSystem& sys);

nlohmann::json closure_to_json(const Closure& c, const Graph& g);
nlohmann::json certificate_to_json(const LockedCertificate& c, const Graph& g);
nlohmann::json reason_to_json(const NotLockedReason& r, const Graph& g);
nlohmann::json blocks_to_json(const BlockDecomposition& d, const Graph& g);

}  // namespace stp
