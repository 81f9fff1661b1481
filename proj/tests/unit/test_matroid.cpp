#include <doctest.h>

#include "stp/errors.hpp"
#include "stp/matroid.hpp"
#include "support/catalog.hpp"

using namespace stp;
using stp::testing::ce_graph;
using stp::testing::complete_graph;
using stp::testing::cycle_graph;
using stp::testing::graph_from_text;

namespace {

ElementSet by_labels(const Graph& g, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* l : labels) s = s.with(g.edge_by_label(l));
  return s;
}

}  // namespace

TEST_CASE("graphic rank axioms hold exhaustively on small graphs") {
  for (const auto& ng : stp::testing::random_multigraphs(15, 5, 9, 11)) {
    const GraphicMatroid m(ng.graph);
    const auto ground = m.ground().bits();
    for (std::uint64_t x = 0; x <= ground; ++x) {
      const ElementSet sx(x);
      CHECK(m.rank(sx) <= sx.size());
      for (int e = 0; e < static_cast<int>(m.size()); ++e) {
        const int gain = m.rank(sx.with(e)) - m.rank(sx);
        CHECK((gain == 0 || gain == 1));
      }
    }
    // Submodularity on a sample of pairs.
    for (std::uint64_t x = 0; x <= ground; x += 7) {
      for (std::uint64_t y = 0; y <= ground; y += 5) {
        const ElementSet a(x), b(y);
        CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
      }
    }
  }
}

TEST_CASE("dual rank") {
  const Graph k4 = complete_graph(4);
  const GraphicMatroid m(k4);
  CHECK(dual_rank(m, ElementSet()) == 0);
  CHECK(dual_rank(m, m.ground()) == 6 - 3);
  CHECK(dual_rank(m, by_labels(k4, {"ab", "ac", "bc"})) == 3);
  const Graph ce = ce_graph();
  CHECK(dual_rank(GraphicMatroid(ce), by_labels(ce, {"bc", "ef"})) == 1);
}

TEST_CASE("matroid 2-connectivity") {
  CHECK(is_2connected_matroid(UniformMatroid(1, 2)));
  CHECK(is_2connected_matroid(GraphicMatroid(ce_graph())));
  CHECK_FALSE(is_2connected_matroid(GraphicMatroid(graph_from_text("a b\nb c\na c\nd e\ne f\nd f\n"))));
  CHECK_FALSE(is_2connected_matroid(UniformMatroid(0, 0)));
  CHECK(is_2connected_matroid(UniformMatroid(1, 1)));
}

TEST_CASE("matroid 2-connectivity agrees with graph 2-connectivity") {
  for (const auto& ng : stp::testing::random_multigraphs(40, 5, 8, 3)) {
    CHECK(is_2connected_matroid(GraphicMatroid(ng.graph)));
  }
  const Graph bowtie = graph_from_text("a b\nb c\na c\nc d\nd e\nc e\n");
  CHECK_FALSE(is_2connected_matroid(GraphicMatroid(bowtie)));
}

TEST_CASE("minors re-index survivors") {
  const Graph g = ce_graph();
  const GraphicMatroid m(g);
  const auto tri = by_labels(g, {"ab", "af", "bf"});
  const auto r = restriction(m, tri);
  CHECK(r.size() == 3);
  CHECK(r.rank() == 2);
  const auto c = contraction(m, tri);
  CHECK(c.size() == 5);
  CHECK(c.rank() == 3);
  CHECK(c.lift(ElementSet::full(5)) == m.ground() - tri);
  const auto d = deletion(m, by_labels(g, {"bc", "ef"}));
  CHECK(d.rank() == 4);
  CHECK_FALSE(is_2connected_matroid(d));
}

TEST_CASE("coparallel and parallel classes") {
  const Graph g = ce_graph();
  const GraphicMatroid m(g);
  std::vector<ElementSet> co;
  for (const auto& c : coparallel_classes(m)) co.push_back(c.elements);
  std::sort(co.begin(), co.end());
  std::vector<ElementSet> expected{by_labels(g, {"ab", "af"}), by_labels(g, {"cd", "de"}), by_labels(g, {"bc", "ef"}),
                                   by_labels(g, {"bf"}), by_labels(g, {"ce"})};
  std::sort(expected.begin(), expected.end());
  CHECK(co == expected);
  CHECK(parallel_classes(m).size() == 8);

  const GraphicMatroid c4(cycle_graph(4));
  const auto c4_classes = coparallel_classes(c4);
  REQUIRE(c4_classes.size() == 1);
  CHECK(c4_classes[0].elements == c4.ground());

  CHECK_THROWS_AS(coparallel_classes(GraphicMatroid(graph_from_text("a b\nb c\n"))), InputError);
}

TEST_CASE("essential closures on CE") {
  const Graph g = ce_graph();
  const GraphicMatroid m(g);
  CHECK_FALSE(is_essential_closure(m, by_labels(g, {"ce"}), ClosureKind::Parallel));
  CHECK_FALSE(is_essential_closure(m, by_labels(g, {"bc", "ef"}), ClosureKind::Coparallel));
  CHECK(is_essential_closure(m, by_labels(g, {"ab", "af"}), ClosureKind::Coparallel));
  CHECK(is_essential_closure(m, by_labels(g, {"ab"}), ClosureKind::Parallel));
}

TEST_CASE("locked subsets by brute force") {
  const Graph g = ce_graph();
  const auto locked = locked_subsets_bruteforce(GraphicMatroid(g));
  std::vector<ElementSet> expected{by_labels(g, {"ab", "af", "bf"}), by_labels(g, {"cd", "ce", "de"})};
  std::sort(expected.begin(), expected.end());
  CHECK(locked == expected);
  CHECK(locked_subsets_bruteforce(GraphicMatroid(complete_graph(4))).size() == 4);
  for (int n = 3; n <= 8; ++n) CHECK(locked_subsets_bruteforce(GraphicMatroid(cycle_graph(n))).empty());
}

TEST_CASE("bases polytope systems") {
  const auto u13 = bases_polytope_system(UniformMatroid(1, 3));
  CHECK(u13.equalities.size() == 1);
  CHECK(u13.equalities[0].rhs == 1);
  REQUIRE(u13.inequalities.size() == 3);
  for (const auto& r : u13.inequalities) {
    CHECK(r.sense == Sense::Ge);
    CHECK(r.rhs == 0);
    CHECK(r.support().size() == 1);
  }

  const auto u12 = bases_polytope_system(UniformMatroid(1, 2));
  CHECK(u12.inequalities.size() == 2);

  const auto k4 = bases_polytope_system(GraphicMatroid(complete_graph(4)));
  CHECK(k4.inequalities.size() == 16);
  CHECK(k4.equalities[0].rhs == 3);

  const auto c4 = bases_polytope_system(GraphicMatroid(cycle_graph(4)));
  CHECK(c4.inequalities.size() == 4);
  for (const auto& r : c4.inequalities) CHECK((r.sense == Sense::Le && r.rhs == 1));

  CHECK_THROWS_AS(bases_polytope_system(GraphicMatroid(graph_from_text("a b\nb c\n"))), InputError);
}

TEST_CASE("alternative system") {
  const GraphicMatroid c4(cycle_graph(4));
  const auto sys = bases_polytope_system(c4);
  FamilySelection all;
  for (const auto& r : sys.inequalities) all.parallel.push_back(r.provenance.elements);
  const auto alt = alternative_system(c4, sys, all);
  for (const auto& r : alt.inequalities) {
    CHECK(r.sense == Sense::Ge);
    CHECK(r.rhs == 2);
    CHECK(r.support().size() == 3);
    CHECK(r.provenance.complement);
  }
  CHECK(alternative_system(c4, sys, {}) == sys);

  const Graph g = ce_graph();
  const GraphicMatroid m(g);
  const auto ce = bases_polytope_system(m);
  FamilySelection one;
  one.locked.push_back({0, 1, 2});
  const auto flipped = alternative_system(m, ce, one);
  int changed = 0;
  for (std::size_t i = 0; i < ce.inequalities.size(); ++i) {
    if (ce.inequalities[i] == flipped.inequalities[i]) continue;
    ++changed;
    CHECK(flipped.inequalities[i].support() == std::vector<int>{3, 4, 5, 6, 7});
    CHECK(flipped.inequalities[i].sense == Sense::Ge);
    CHECK(flipped.inequalities[i].rhs == 3);
  }
  CHECK(changed == 1);

  FamilySelection bogus;
  bogus.locked.push_back({0, 3});
  CHECK_THROWS_AS(alternative_system(m, ce, bogus), InputError);
}

TEST_CASE("coparallel rank identity") {
  const GraphicMatroid c4(cycle_graph(4));
  CHECK(coparallel_rank_identity(c4, c4.ground()) == std::pair{0, 0});
  const Graph g = ce_graph();
  const GraphicMatroid m(g);
  CHECK(coparallel_rank_identity(m, by_labels(g, {"ab", "af"})) == std::pair{4, 4});
  CHECK(coparallel_rank_identity(m, by_labels(g, {"bf"})) == std::pair{5, 5});
}

TEST_CASE("graphic matroid capacity") {
  std::vector<EdgeSpec> many;
  for (int i = 0; i < 65; ++i) many.push_back({"a", "b", "p" + std::to_string(i)});
  CHECK_THROWS_AS(GraphicMatroid(Graph({}, many)), CapacityError);
}
