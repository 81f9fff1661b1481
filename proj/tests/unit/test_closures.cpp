#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "stp/closures.hpp"
#include "stp/errors.hpp"
#include "support/catalog.hpp"

using namespace stp;
using stp::testing::ce_graph;
using stp::testing::complete_graph;
using stp::testing::cycle_graph;
using stp::testing::graph_from_text;

namespace {

std::vector<std::string> names(const Graph& g, const Closure& c) {
  std::vector<std::string> out;
  for (auto e : c.edges) out.push_back(g.edge(e).label);
  return out;
}

}  // namespace

TEST_CASE("parallel closures of CE") {
  const Graph g = ce_graph();
  const auto p = parallel_closures_graph(g);
  REQUIRE(p.size() == 8);
  std::set<std::string> nonessential;
  for (const auto& c : p) {
    CHECK(c.edges.size() == 1);
    if (!c.essential) {
      nonessential.insert(g.edge(c.edges[0]).label);
      CHECK_FALSE(c.witness.empty());
    }
  }
  CHECK(nonessential == std::set<std::string>{"bf", "ce"});
}

TEST_CASE("coparallel closures of CE") {
  const Graph g = ce_graph();
  std::map<std::vector<std::string>, bool> got;
  for (const auto& c : coparallel_closures_graph(g)) got[names(g, c)] = c.essential;
  const std::map<std::vector<std::string>, bool> expected{
      {{"ab", "af"}, true}, {{"cd", "de"}, true}, {{"bc", "ef"}, false}, {{"bf"}, true}, {{"ce"}, true}};
  CHECK(got == expected);
}

TEST_CASE("K4 closures are singletons and essential") {
  const Graph g = complete_graph(4);
  for (const auto& c : parallel_closures_graph(g)) CHECK((c.edges.size() == 1 && c.essential));
  for (const auto& c : coparallel_closures_graph(g)) CHECK((c.edges.size() == 1 && c.essential));
}

TEST_CASE("cycle has one nonessential coparallel class") {
  for (int n = 3; n <= 7; ++n) {
    const auto co = coparallel_closures_graph(cycle_graph(n));
    REQUIRE(co.size() == 1);
    CHECK(co[0].edges.size() == static_cast<std::size_t>(n));
    CHECK_FALSE(co[0].essential);
  }
}

TEST_CASE("three parallel edges form one nonessential parallel class") {
  const Graph g = graph_from_text("a b x\na b y\na b z\n");
  const auto p = parallel_closures_graph(g);
  REQUIRE(p.size() == 1);
  CHECK(p[0].edges.size() == 3);
  CHECK_FALSE(p[0].essential);
  const auto co = coparallel_closures_graph(g);
  CHECK(co.size() == 3);
  for (const auto& c : co) CHECK(c.essential);
}

TEST_CASE("graph closures agree with matroid closures") {
  auto graphs = stp::testing::biconnected_catalog(5);
  for (auto& g : stp::testing::random_multigraphs(60, 5, 9, 99)) graphs.push_back(std::move(g));
  for (const auto& ng : graphs) {
    const GraphicMatroid m(ng.graph);
    auto compare = [&](const std::vector<Closure>& graph_side, const std::vector<ElementClass>& matroid_side,
                       ClosureKind kind) {
      REQUIRE(graph_side.size() == matroid_side.size());
      std::map<ElementSet, bool> essential;
      for (const auto& c : matroid_side) essential[c.elements] = is_essential_closure(m, c.elements, kind);
      for (const auto& c : graph_side) {
        const auto key = ElementSet::of(std::span<const int>(c.edges));
        REQUIRE(essential.count(key) == 1);
        CHECK(essential[key] == c.essential);
      }
    };
    compare(parallel_closures_graph(ng.graph), parallel_classes(m), ClosureKind::Parallel);
    compare(coparallel_closures_graph(ng.graph), coparallel_classes(m), ClosureKind::Coparallel);
  }
}

TEST_CASE("closures require a 2-connected graph") {
  CHECK_THROWS_AS(parallel_closures_graph(graph_from_text("a b\nb c\n")), InputError);
  CHECK_THROWS_AS(coparallel_closures_graph(graph_from_text("a b\nb c\n")), InputError);
}
