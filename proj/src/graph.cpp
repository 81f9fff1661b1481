#include "stp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "stp/errors.hpp"

namespace stp {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
  for (const auto& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const auto& label : vertices) {
    if (label.empty()) throw InputError("empty vertex label");
  }
  vertex_labels_ = std::move(vertices);
  adjacency_.resize(vertex_labels_.size());

  std::unordered_set<std::string> seen_labels;
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    const auto id = static_cast<EdgeId>(edges_.size());
    VertexId a = vertex(spec.u);
    VertexId b = vertex(spec.v);
    if (a == b) throw InputError("loop at vertex '" + spec.u + "'");
    if (a > b) std::swap(a, b);
    std::string label = spec.label.empty() ? "e" + std::to_string(id) : spec.label;
    if (!seen_labels.insert(label).second) throw InputError("duplicate edge label '" + label + "'");
    edges_.push_back(Edge{id, a, b, std::move(label)});
    adjacency_[a].push_back({b, id});
    adjacency_[b].push_back({a, id});
  }
}

Graph Graph::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EdgeSpec> specs;
  specs.reserve(pairs.size());
  for (const auto& [u, v] : pairs) specs.push_back({u, v, ""});
  return Graph({}, specs);
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  auto it = std::lower_bound(vertex_labels_.begin(), vertex_labels_.end(), label);
  if (it == vertex_labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - vertex_labels_.begin());
}

VertexId Graph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

std::optional<EdgeId> Graph::find_edge_label(std::string_view label) const {
  for (const auto& e : edges_) {
    if (e.label == label) return e.id;
  }
  return std::nullopt;
}

EdgeId Graph::edge_by_label(std::string_view label) const {
  if (auto e = find_edge_label(label)) return *e;
  throw InputError("unknown edge '" + std::string(label) + "'");
}

bool Subgraph::contains_vertex(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<std::string> Subgraph::vertex_labels() const {
  std::vector<std::string> out;
  for (VertexId v : vertices) out.push_back(parent->vertex_label(v));
  return out;
}

std::vector<std::string> Subgraph::edge_labels() const {
  std::vector<std::string> out;
  for (EdgeId e : edges) out.push_back(parent->edge(e).label);
  return out;
}

namespace {

std::vector<EdgeId> sorted_unique(std::span<const EdgeId> ids) {
  std::vector<EdgeId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<bool> edge_mask(const Graph& g, std::span<const EdgeId> ids) {
  std::vector<bool> mask(g.num_edges(), false);
  for (EdgeId e : ids) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) {
      throw InputError("edge id " + std::to_string(e) + " out of range");
    }
    mask[e] = true;
  }
  return mask;
}

std::vector<VertexId> endpoints_of(const Graph& g, std::span<const EdgeId> ids) {
  std::vector<VertexId> out;
  for (EdgeId e : ids) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Subgraph re-indexed to local vertex ids 0..k-1.
struct LocalGraph {
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, local edge)
  std::vector<EdgeId> edge_ids;
};

LocalGraph localize(const Subgraph& s) {
  const Graph& g = *s.parent;
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) local[s.vertices[i]] = static_cast<int>(i);
  LocalGraph lg;
  lg.adj.resize(s.vertices.size());
  for (EdgeId e : s.edges) {
    const int a = local[g.edge(e).u];
    const int b = local[g.edge(e).v];
    const int le = static_cast<int>(lg.edge_ids.size());
    lg.edge_ids.push_back(e);
    lg.adj[a].push_back({b, le});
    lg.adj[b].push_back({a, le});
  }
  return lg;
}

struct BlockScan {
  std::vector<std::vector<int>> blocks;  // local edge ids
  std::vector<bool> is_cut;
  int components = 0;
};

// Hopcroft-Tarjan lowpoint DFS with an explicit edge stack. Parallel edges are
// distinguished by edge id, so a 2-vertex multi-edge forms one block.
BlockScan scan_blocks(const LocalGraph& lg) {
  const int n = static_cast<int>(lg.adj.size());
  BlockScan out;
  out.is_cut.assign(n, false);
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> edge_stack;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
    int children;
  };
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    ++out.components;
    std::vector<Frame> frames{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < lg.adj[f.v].size()) {
        auto [w, e] = lg.adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          ++f.children;
          frames.push_back({w, e, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) {
        if (done.children > 1) out.is_cut[done.v] = true;
        continue;
      }
      const int u = frames.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        if (frames.size() > 1) out.is_cut[u] = true;
        std::vector<int> block;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
  }
  return out;
}

}  // namespace

Subgraph whole_graph(const Graph& g) {
  Subgraph s{&g, {}, {}};
  s.vertices.resize(g.num_vertices());
  std::iota(s.vertices.begin(), s.vertices.end(), 0);
  s.edges.resize(g.num_edges());
  std::iota(s.edges.begin(), s.edges.end(), 0);
  return s;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<bool> in(g.num_vertices(), false);
  Subgraph s{&g, {}, {}};
  for (VertexId v : vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) {
      throw InputError("vertex id " + std::to_string(v) + " out of range");
    }
    if (!in[v]) s.vertices.push_back(v);
    in[v] = true;
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) s.edges.push_back(e.id);
  }
  return s;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(g.vertex(l));
  return induced_subgraph(g, ids);
}

Subgraph complement_subgraph(const Graph& g, std::span<const EdgeId> removed) {
  const auto mask = edge_mask(g, removed);
  std::vector<EdgeId> rest;
  for (const auto& e : g.edges()) {
    if (!mask[e.id]) rest.push_back(e.id);
  }
  return edge_subgraph(g, rest);
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  edge_mask(g, edges);
  Subgraph s{&g, endpoints_of(g, edges), sorted_unique(edges)};
  return s;
}

Subgraph subgraph_union(const Subgraph& a, std::span<const EdgeId> edges) {
  const Graph& g = *a.parent;
  edge_mask(g, edges);
  Subgraph s{&g, a.vertices, a.edges};
  auto extra = endpoints_of(g, edges);
  s.vertices.insert(s.vertices.end(), extra.begin(), extra.end());
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
  s.edges.insert(s.edges.end(), edges.begin(), edges.end());
  s.edges = sorted_unique(s.edges);
  return s;
}

bool is_connected(const Subgraph& s) {
  if (s.vertices.empty()) return false;
  const auto lg = localize(s);
  std::vector<bool> seen(lg.adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : lg.adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == lg.adj.size();
}

bool is_connected(const Graph& g) { return is_connected(whole_graph(g)); }

bool is_biconnected(const Subgraph& s) {
  const std::size_t n = s.vertices.size();
  if (n < 2) return false;
  if (!is_connected(s)) return false;
  if (n == 2) return s.edges.size() >= 2;
  const auto scan = scan_blocks(localize(s));
  return std::none_of(scan.is_cut.begin(), scan.is_cut.end(), [](bool c) { return c; });
}

bool is_biconnected(const Graph& g) { return is_biconnected(whole_graph(g)); }

std::vector<VertexId> cut_vertices(const Graph& g) {
  const auto scan = scan_blocks(localize(whole_graph(g)));
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < scan.is_cut.size(); ++v) {
    if (scan.is_cut[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

DerivedGraph contract_edges(const Graph& g, std::span<const EdgeId> contracted) {
  const auto mask = edge_mask(g, contracted);
  UnionFind uf(g.num_vertices());
  for (EdgeId e : contracted) uf.unite(g.edge(e).u, g.edge(e).v);

  std::vector<std::vector<std::string>> members(g.num_vertices());
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    members[uf.find(v)].push_back(g.vertex_label(v));
  }
  std::vector<std::string> class_label(g.num_vertices());
  std::vector<std::string> vertices;
  for (std::size_t root = 0; root < members.size(); ++root) {
    if (members[root].empty()) continue;
    std::string label;
    for (const auto& m : members[root]) label += (label.empty() ? "" : "+") + m;
    class_label[root] = label;
    vertices.push_back(label);
  }

  DerivedGraph out;
  std::vector<EdgeSpec> specs;
  for (const auto& e : g.edges()) {
    if (mask[e.id]) continue;
    const int a = uf.find(e.u);
    const int b = uf.find(e.v);
    if (a == b) continue;
    specs.push_back({class_label[a], class_label[b], e.label});
    out.original_edge.push_back(e.id);
  }
  out.graph = Graph(std::move(vertices), specs);
  return out;
}

DerivedGraph delete_edges(const Graph& g, std::span<const EdgeId> deleted) {
  return extract(complement_subgraph(g, deleted));
}

DerivedGraph extract(const Subgraph& s) {
  const Graph& g = *s.parent;
  DerivedGraph out;
  std::vector<EdgeSpec> specs;
  for (EdgeId e : s.edges) {
    const auto& edge = g.edge(e);
    specs.push_back({g.vertex_label(edge.u), g.vertex_label(edge.v), edge.label});
    out.original_edge.push_back(e);
  }
  out.graph = Graph(s.vertex_labels(), specs);
  return out;
}

BlockDecomposition blocks(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("graph is not connected; it has no spanning tree");
  const auto lg = localize(whole_graph(g));
  auto scan = scan_blocks(lg);
  BlockDecomposition out;
  for (auto& local : scan.blocks) {
    std::vector<EdgeId> ids;
    for (int le : local) ids.push_back(lg.edge_ids[le]);
    Subgraph b = edge_subgraph(g, ids);
    if (b.edges.size() == 1) out.bridge_edges.push_back(b.edges.front());
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Subgraph& a, const Subgraph& b) { return a.edges.front() < b.edges.front(); });
  std::sort(out.bridge_edges.begin(), out.bridge_edges.end());
  return out;
}

int edge_rank(const Graph& g, std::span<const EdgeId> edges) {
  UnionFind uf(g.num_vertices());
  int rank = 0;
  for (EdgeId e : edges) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) ++rank;
  }
  return rank;
}

}  // namespace stp
