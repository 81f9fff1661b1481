#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "stp/io.hpp"

namespace stp::testing {

namespace {

std::string name_of(int v) { return std::string(1, static_cast<char>('a' + v)); }

using Pairs = std::vector<std::pair<int, int>>;

Pairs all_pairs(int n) {
  Pairs out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

// Connectivity of the vertices in `alive` using adjacency bitmasks.
bool connected(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  if (alive == 0) return false;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

bool biconnected_simple(int n, const Pairs& pairs, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) {
      adj[pairs[i].first] |= 1u << pairs[i].second;
      adj[pairs[i].second] |= 1u << pairs[i].first;
    }
  }
  const std::uint32_t all = (1u << n) - 1;
  if (!connected(adj, all)) return false;
  for (int v = 0; v < n; ++v) {
    if (!connected(adj, all & ~(1u << v))) return false;
  }
  return true;
}

Graph build(int n, const Pairs& pairs, std::uint32_t mask) {
  std::vector<std::string> vertices;
  for (int v = 0; v < n; ++v) vertices.push_back(name_of(v));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) {
      const auto u = name_of(pairs[i].first);
      const auto v = name_of(pairs[i].second);
      edges.push_back({u, v, u + v});
    }
  }
  return Graph(vertices, edges);
}

}  // namespace

Graph ce_graph() {
  return graph_from_text("a b ab\na f af\nb f bf\nb c bc\nc d cd\nc e ce\nd e de\ne f ef\n");
}

Graph complete_graph(int n) {
  const auto pairs = all_pairs(n);
  return build(n, pairs, pairs.empty() ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << pairs.size()) - 1));
}

Graph cycle_graph(int n) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) {
    auto u = name_of(i);
    auto v = name_of((i + 1) % n);
    edges.push_back({u, v, u + v});
  }
  return Graph({}, edges);
}

Graph graph_from_text(const std::string& text) { return parse_edge_list(text).graph; }

std::vector<NamedGraph> biconnected_catalog(int max_n) {
  std::vector<NamedGraph> out;
  for (int n = 3; n <= max_n; ++n) {
    const auto pairs = all_pairs(n);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> perm_maps;  // perm_maps[p][i] = image of pair i
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> map(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        int a = perm[pairs[i].first];
        int b = perm[pairs[i].second];
        map[i] = index[{std::min(a, b), std::max(a, b)}];
      }
      perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      if (std::popcount(mask) < n || !biconnected_simple(n, pairs, mask)) continue;
      std::uint32_t canon = ~0u;
      for (const auto& map : perm_maps) {
        std::uint32_t image = 0;
        for (std::uint32_t m = mask; m; m &= m - 1) image |= 1u << map[std::countr_zero(m)];
        canon = std::min(canon, image);
      }
      if (!seen.insert(canon).second) continue;
      std::ostringstream name;
      name << "n" << n << "m" << std::popcount(canon) << "#" << std::hex << canon;
      out.push_back({name.str(), build(n, pairs, canon)});
    }
  }
  return out;
}

std::vector<NamedGraph> random_multigraphs(int count, int max_n, int max_m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const int m = std::uniform_int_distribution<int>(std::max(n, 2), max_m)(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < m; ++i) {
      int u = pick(rng);
      int v = pick(rng);
      while (v == u) v = pick(rng);
      edges.push_back({name_of(u), name_of(v), "e" + std::to_string(i)});
    }
    Graph g({}, edges);
    if (static_cast<int>(g.num_vertices()) != n || !is_biconnected(g)) continue;
    out.push_back({"rand" + std::to_string(out.size()) + "_n" + std::to_string(n) + "m" + std::to_string(m),
                   std::move(g)});
  }
  return out;
}

}  // namespace stp::testing
