#include <doctest.h>

#include "stp/errors.hpp"
#include "stp/graph.hpp"
#include "support/catalog.hpp"

using namespace stp;
using stp::testing::ce_graph;
using stp::testing::complete_graph;
using stp::testing::graph_from_text;

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("vertices are sorted and edges keep input order") {
  const Graph g = ce_graph();
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 8);
  CHECK(g.vertex_labels() == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  CHECK(g.edge(0).label == "ab");
  CHECK(g.edge(7).label == "ef");
  CHECK(g.edge_by_label("ce") == 5);
  CHECK_FALSE(g.find_edge_label("xx"));
}

TEST_CASE("construction rejects loops and duplicate labels, fills missing labels") {
  CHECK_THROWS_AS(Graph({}, {{"a", "a", "x"}}), InputError);
  CHECK_THROWS_AS(Graph({}, {{"a", "b", "x"}, {"b", "c", "x"}}), InputError);
  const Graph g({}, {{"a", "b", ""}, {"b", "a", ""}});
  CHECK(g.edge(0).label == "e0");
  CHECK(g.edge(1).label == "e1");
  CHECK(g.edge(1).u < g.edge(1).v);
}

TEST_CASE("induced subgraph on the circuit bcefb") {
  const Graph g = ce_graph();
  const auto h = induced_subgraph(g, std::vector<std::string>{"b", "c", "e", "f"});
  CHECK(sorted(h.edge_labels()) == std::vector<std::string>{"bc", "bf", "ce", "ef"});
  CHECK(induced_subgraph(g, g.vertex_labels()).edges.size() == 8);
  const Graph k4 = complete_graph(4);
  CHECK(induced_subgraph(k4, std::vector<std::string>{"a", "b", "c"}).num_edges() == 3);
}

TEST_CASE("complement subgraph keeps only incident vertices") {
  const Graph g = ce_graph();
  const auto h = induced_subgraph(g, std::vector<std::string>{"b", "c", "e", "f"});
  const auto hbar = complement_subgraph(g, h.edges);
  CHECK(sorted(hbar.edge_labels()) == std::vector<std::string>{"ab", "af", "cd", "de"});
  CHECK(hbar.vertex_labels() == g.vertex_labels());
  CHECK(complement_subgraph(g, {}).num_edges() == 8);
  std::vector<EdgeId> all{0, 1, 2, 3, 4, 5, 6, 7};
  const auto empty = complement_subgraph(g, all);
  CHECK(empty.num_vertices() == 0);
  CHECK(empty.num_edges() == 0);
}

TEST_CASE("connectivity conventions") {
  const Graph g = ce_graph();
  CHECK_FALSE(is_connected(induced_subgraph(g, std::vector<std::string>{"a", "d"})));
  CHECK(is_connected(induced_subgraph(g, std::vector<std::string>{"a"})));
  CHECK_FALSE(is_connected(Subgraph{&g, {}, {}}));
  const Graph k4 = complete_graph(4);
  CHECK(is_connected(induced_subgraph(k4, std::vector<std::string>{"a", "b", "c"})));
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(ce_graph()));
  CHECK_FALSE(is_biconnected(graph_from_text("a b\nb c\n")));
  CHECK(is_biconnected(graph_from_text("a b x\na b y\n")));
  CHECK_FALSE(is_biconnected(graph_from_text("a b\n")));
  const Graph bowtie = graph_from_text("a b\nb c\na c\nc d\nd e\nc e\n");
  CHECK_FALSE(is_biconnected(bowtie));
  CHECK(cut_vertices(bowtie) == std::vector<VertexId>{bowtie.vertex("c")});
}

TEST_CASE("contracting ce makes the merged vertex a cut vertex") {
  const Graph g = ce_graph();
  const std::vector<EdgeId> ce{g.edge_by_label("ce")};
  const auto c = contract_edges(g, ce);
  CHECK(c.graph.num_vertices() == 5);
  CHECK(c.graph.num_edges() == 7);
  CHECK_FALSE(is_biconnected(c.graph));
  const auto cuts = cut_vertices(c.graph);
  REQUIRE(cuts.size() == 1);
  CHECK(c.graph.vertex_label(cuts[0]) == "c+e");
  CHECK(contract_edges(g, {}).graph.num_edges() == 8);
}

TEST_CASE("deleting an edge of K4 keeps 2-connectivity") {
  const Graph k4 = complete_graph(4);
  const std::vector<EdgeId> one{0};
  const auto d = delete_edges(k4, one);
  CHECK(d.graph.num_edges() == 5);
  CHECK(is_biconnected(d.graph));
  CHECK(d.original_edge == std::vector<EdgeId>{1, 2, 3, 4, 5});
}

TEST_CASE("block decomposition") {
  const Graph bowtie = graph_from_text("a b\nb c\na c\nc d\nd e\nc e\n");
  const auto b = blocks(bowtie);
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.blocks[0].num_edges() == 3);
  CHECK(b.blocks[1].num_edges() == 3);
  CHECK(b.bridge_edges.empty());

  CHECK(blocks(ce_graph()).blocks.size() == 1);

  const Graph pendant = graph_from_text("a b ab\nb c bc\na c ac\nc d cd\n");
  const auto p = blocks(pendant);
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.bridge_edges == std::vector<EdgeId>{pendant.edge_by_label("cd")});

  CHECK_THROWS_AS(blocks(Graph({"a", "b", "c"}, {{"a", "b", ""}})), DisconnectedError);
}

TEST_CASE("blocks partition the edges of every catalog graph with a pendant path") {
  for (const auto& ng : stp::testing::biconnected_catalog(5)) {
    std::vector<EdgeSpec> specs;
    for (const auto& e : ng.graph.edges()) {
      specs.push_back({ng.graph.vertex_label(e.u), ng.graph.vertex_label(e.v), e.label});
    }
    specs.push_back({"a", "x", "ax"});
    specs.push_back({"x", "y", "xy"});
    const Graph g({}, specs);
    const auto d = blocks(g);
    std::size_t total = 0;
    for (const auto& b : d.blocks) {
      total += b.num_edges();
      CHECK((b.num_edges() == 1 || is_biconnected(b)));
    }
    CHECK(total == g.num_edges());
    CHECK(d.bridge_edges.size() == 2);
  }
}

TEST_CASE("edge rank") {
  const Graph g = ce_graph();
  std::vector<EdgeId> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(edge_rank(g, all) == 5);
  std::vector<EdgeId> triangle{0, 1, 2};
  CHECK(edge_rank(g, triangle) == 2);
  CHECK(edge_rank(g, {}) == 0);
}
