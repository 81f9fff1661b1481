#include <doctest.h>

#include "stp/errors.hpp"
#include "stp/facets.hpp"
#include "stp/io.hpp"
#include "support/catalog.hpp"

using namespace stp;
using nlohmann::json;
using stp::testing::ce_graph;
using stp::testing::cycle_graph;

TEST_CASE("edge list parsing") {
  const auto p = parse_edge_list("# comment\n\na b ab  # trailing\nb c\n\nc a ca\n");
  CHECK(p.graph.num_vertices() == 3);
  CHECK(p.graph.num_edges() == 3);
  CHECK(p.graph.edge(1).label == "e1");
  CHECK(p.warnings.empty());
}

TEST_CASE("loops are dropped with a warning") {
  const auto p = parse_edge_list("a b\nb b\nb a\n");
  CHECK(p.graph.num_edges() == 2);
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("line 2") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_edge_list("a b\na b c d\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b x\nb c x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("vertices: a b\na c\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b\nvertices: a b\n"), ParseError);
}

TEST_CASE("declared vertices without edges are disconnected") {
  CHECK_THROWS_AS(parse_edge_list("vertices: a b c\na b\n"), DisconnectedError);
  const auto p = parse_edge_list("vertices: a b c\na b\nb c\n");
  CHECK(p.graph.num_vertices() == 3);
}

TEST_CASE("system JSON round trip") {
  for (const Graph& g : {ce_graph(), cycle_graph(5), stp::testing::graph_from_text("a b\nb c\nc a\nc d\n")}) {
    const auto fs = spanning_tree_polytope_system(g);
    const json j = system_to_json(fs);
    const auto back = system_from_json(json::parse(j.dump()));
    CHECK(back.system == fs.system);
    CHECK(back.graph.vertex_labels() == g.vertex_labels());
    CHECK(system_to_json(back) == j);
  }
}

TEST_CASE("system JSON schema") {
  const auto fs = spanning_tree_polytope_system(ce_graph());
  const json j = system_to_json(fs);
  CHECK(j["dimension"] == 7);
  CHECK(j["inequalities"].size() == 12);
  CHECK(j["equalities"].size() == 1);
  CHECK(j["graph"]["edges"][0] == json{{"id", 0}, {"u", "a"}, {"v", "b"}, {"label", "ab"}});
  const auto& locked = j["inequalities"][10];
  CHECK(locked["provenance"]["kind"] == "locked");
  CHECK(locked["provenance"]["subset"] == json{"ab", "af", "bf"});
  CHECK(locked["provenance"]["vertices"] == json{"a", "b", "f"});
  CHECK(locked["coeffs"] == json{{"ab", 1}, {"af", 1}, {"bf", 1}});
  CHECK(locked["sense"] == "<=");
  CHECK(locked["rhs"] == 2);
}

TEST_CASE("system JSON rejects bad input") {
  const Graph g = ce_graph();
  CHECK_THROWS_AS(system_from_json(json::array(), g), ParseError);
  json unknown = {{"inequalities", {{{"coeffs", {{"zz", 1}}}, {"sense", "<="}, {"rhs", 1}}}}};
  CHECK_THROWS_AS(system_from_json(unknown, g), ParseError);
  json fractional = {{"inequalities", {{{"coeffs", {{"ab", 0.5}}}, {"sense", "<="}, {"rhs", 1}}}}};
  CHECK_THROWS_AS(system_from_json(fractional, g), ParseError);
  json sense = {{"inequalities", {{{"coeffs", {{"ab", 1}}}, {"sense", "<"}, {"rhs", 1}}}}};
  CHECK_THROWS_AS(system_from_json(sense, g), ParseError);
}

TEST_CASE("hand-written rows without provenance are accepted") {
  const Graph g = ce_graph();
  json j = {{"equalities", {{{"coeffs", {{"ab", 1}, {"af", 1}, {"bf", 1}, {"bc", 1}, {"cd", 1}, {"ce", 1}, {"de", 1},
                                         {"ef", 1}}},
                             {"sense", "="},
                             {"rhs", 5}}}},
            {"inequalities", {{{"coeffs", {{"ab", 1}}}, {"sense", "<="}, {"rhs", 1}}}}};
  const auto sys = system_from_json(j, g);
  CHECK(sys.dimension == 7);
  CHECK(sys.inequalities[0].provenance.kind == Provenance::Kind::External);
}

TEST_CASE("ine output for C4") {
  const auto fs = spanning_tree_polytope_system(cycle_graph(4));
  CHECK(to_ine(fs.system) ==
        "H-representation\n"
        "linearity 1 5\n"
        "begin\n"
        "5 5 integer\n"
        "1 -1 0 0 0\n"
        "1 0 -1 0 0\n"
        "1 0 0 -1 0\n"
        "1 0 0 0 -1\n"
        "3 -1 -1 -1 -1\n"
        "end\n");
}

TEST_CASE("ine output encodes >= rows with flipped signs") {
  const auto fs = spanning_tree_polytope_system(ce_graph());
  const auto ine = to_ine(fs.system);
  // x(ab) + x(af) >= 1 becomes -1 + x(ab) + x(af) >= 0.
  CHECK(ine.find("\n-1 1 1 0 0 0 0 0 0\n") != std::string::npos);
  CHECK(ine.find("linearity 1 13\n") != std::string::npos);
  CHECK(ine.find("13 9 integer\n") != std::string::npos);
}

TEST_CASE("LP output") {
  const auto ce = spanning_tree_polytope_system(ce_graph());
  const auto lp = to_lp(ce);
  CHECK(lp.find("Subject To\n") != std::string::npos);
  CHECK(lp.find(" eq1: x_ab + x_af + x_bf + x_bc + x_cd + x_ce + x_de + x_ef = 5\n") != std::string::npos);
  CHECK(lp.find(" -inf <= x_ab <= 1\n") != std::string::npos);
  CHECK(lp.find(" x_bf >= 0\n") != std::string::npos);
  CHECK(lp.find(" c1: x_ab + x_af >= 1\n") != std::string::npos);
  CHECK(lp.rfind("End\n") == lp.size() - 4);
  const auto relaxed = to_lp(ce, true);
  CHECK(relaxed.find(" 0 <= x_ab <= 1\n") != std::string::npos);
  CHECK(relaxed.find(" 0 <= x_bf <= 1\n") != std::string::npos);
}

TEST_CASE("row formatting") {
  const auto fs = spanning_tree_polytope_system(ce_graph());
  CHECK(format_row(fs.system.inequalities[10], fs.graph) == "x(ab) + x(af) + x(bf) <= 2");
  CHECK(format_row(fs.system.inequalities[6], fs.graph) == "x(ab) + x(af) >= 1");
}
