#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stp {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  EdgeId id;
  VertexId u;  // u < v
  VertexId v;
  std::string label;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  std::string label;  // empty: auto-label "e<id>"
};

// Loopless multigraph with stable edge ids 0..m-1 (input order) and vertex
// ids assigned in lexicographic label order.
class Graph {
 public:
  Graph() = default;
  // Vertices are the union of `vertices` and all endpoints. Throws InputError
  // on loops, empty vertex labels or duplicate edge labels.
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  static Graph from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t num_vertices() const { return vertex_labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& vertex_label(VertexId v) const { return vertex_labels_[v]; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  VertexId vertex(std::string_view label) const;  // throws InputError

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeId> find_edge_label(std::string_view label) const;
  EdgeId edge_by_label(std::string_view label) const;  // throws InputError

  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// A vertex set and an edge set of a parent graph, both sorted.
struct Subgraph {
  const Graph* parent = nullptr;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }
  bool contains_vertex(VertexId v) const;
  std::vector<std::string> vertex_labels() const;
  std::vector<std::string> edge_labels() const;
};

// A graph built from another one; original_edge[new id] = id in the source.
struct DerivedGraph {
  Graph graph;
  std::vector<EdgeId> original_edge;
};

struct BlockDecomposition {
  std::vector<Subgraph> blocks;  // bridges appear as single-edge blocks
  std::vector<EdgeId> bridge_edges;
};

Subgraph whole_graph(const Graph& g);
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);
Subgraph induced_subgraph(const Graph& g, const std::vector<std::string>& labels);
// (V(E \ F), E \ F): only vertices incident to a remaining edge are kept.
Subgraph complement_subgraph(const Graph& g, std::span<const EdgeId> removed);
// (V(F), F)
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);
// (V(A) u V(F), E(A) u F)
Subgraph subgraph_union(const Subgraph& a, std::span<const EdgeId> edges);

// The empty subgraph is not connected; a single isolated vertex is.
bool is_connected(const Subgraph& s);
bool is_connected(const Graph& g);

// Two vertices joined by >= 2 parallel edges count as 2-connected; a single
// edge, a single vertex and the empty graph do not.
bool is_biconnected(const Subgraph& s);
bool is_biconnected(const Graph& g);

std::vector<VertexId> cut_vertices(const Graph& g);

// Merges the endpoints of every edge in F, dropping the edges that become loops.
DerivedGraph contract_edges(const Graph& g, std::span<const EdgeId> contracted);
// Removes F and then every vertex left isolated.
DerivedGraph delete_edges(const Graph& g, std::span<const EdgeId> deleted);
DerivedGraph extract(const Subgraph& s);

// Throws DisconnectedError when g is not connected.
BlockDecomposition blocks(const Graph& g);

// Graphic-matroid rank |V(F)| - #components of (V(F), F).
int edge_rank(const Graph& g, std::span<const EdgeId> edges);

}  // namespace stp
