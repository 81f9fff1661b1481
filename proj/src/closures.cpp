#include "stp/closures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stp/errors.hpp"

namespace stp {

namespace {

void require_biconnected(const Graph& g) {
  if (!is_biconnected(g)) throw InputError("closures are defined for 2-connected graphs");
}

std::string failure_witness(const DerivedGraph& minor, const char* operation) {
  const Graph& h = minor.graph;
  std::string prefix = std::string(operation) + " leaves ";
  if (h.num_edges() == 0) return prefix + "an empty graph";
  if (!is_connected(h)) return prefix + "a disconnected graph";
  if (h.num_edges() == 1) return prefix + "a single edge";
  auto cuts = cut_vertices(h);
  if (!cuts.empty()) return prefix + "cut vertex " + h.vertex_label(cuts.front());
  return prefix + "a graph that is not 2-connected";
}

Closure judge(const Graph& g, ClosureKind kind, std::vector<EdgeId> edges) {
  Closure c{kind, std::move(edges), false, {}};
  const bool parallel = kind == ClosureKind::Parallel;
  const auto minor = parallel ? contract_edges(g, c.edges) : delete_edges(g, c.edges);
  c.essential = is_biconnected(minor.graph);
  if (!c.essential) c.witness = failure_witness(minor, parallel ? "contraction" : "deletion");
  return c;
}

}  // namespace

std::vector<Closure> parallel_closures_graph(const Graph& g) {
  require_biconnected(g);
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> by_pair;
  for (const auto& e : g.edges()) by_pair[{e.u, e.v}].push_back(e.id);
  std::vector<Closure> out;
  for (auto& [pair, edges] : by_pair) out.push_back(judge(g, ClosureKind::Parallel, std::move(edges)));
  std::sort(out.begin(), out.end(), [](const Closure& a, const Closure& b) { return a.edges < b.edges; });
  return out;
}

std::vector<Closure> coparallel_closures_graph(const Graph& g) {
  require_biconnected(g);
  const std::size_t m = g.num_edges();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  Subgraph rest = whole_graph(g);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = e + 1; f < m; ++f) {
      rest.edges.clear();
      for (std::size_t k = 0; k < m; ++k) {
        if (k != e && k != f) rest.edges.push_back(static_cast<EdgeId>(k));
      }
      if (!is_connected(rest)) parent[find(static_cast<int>(f))] = find(static_cast<int>(e));
    }
  }

  std::map<int, std::vector<EdgeId>> by_root;
  for (std::size_t e = 0; e < m; ++e) by_root[find(static_cast<int>(e))].push_back(static_cast<EdgeId>(e));
  std::vector<Closure> out;
  for (auto& [root, edges] : by_root) out.push_back(judge(g, ClosureKind::Coparallel, std::move(edges)));
  std::sort(out.begin(), out.end(), [](const Closure& a, const Closure& b) { return a.edges < b.edges; });
  return out;
}

}  // namespace stp
