#include "stp/locked.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "stp/errors.hpp"
#include "stp/matroid.hpp"

namespace stp {

const char* condition_name(NotLockedReason::Condition c) {
  switch (c) {
    case NotLockedReason::Condition::NotInduced2Connected: return "not-induced-2-connected";
    case NotLockedReason::Condition::SizeBounds: return "size-bounds";
    case NotLockedReason::Condition::EdgeOrBoundary: return "edge-or-boundary-condition";
    case NotLockedReason::Condition::OutsideDisconnected: return "outside-disconnected";
  }
  return "unknown";
}

namespace {

std::vector<VertexId> outside_of(const Graph& g, std::span<const VertexId> u) {
  std::vector<bool> in(g.num_vertices(), false);
  for (VertexId v : u) in.at(v) = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

int count_union_vertices(const Subgraph& h, std::span<const EdgeId> extra) {
  return static_cast<int>(subgraph_union(h, extra).num_vertices());
}

}  // namespace

CriterionResult complement_connectivity_criterion(const Graph& g, const Subgraph& h, std::span<const EdgeId> l1,
                                                  std::span<const EdgeId> l2) {
  if (!is_biconnected(h)) throw InputError("H must be 2-connected");
  if (l1.empty() || l2.empty()) throw InputError("L1 and L2 must be nonempty");
  std::vector<int> owner(g.num_edges(), 0);
  for (EdgeId e : h.edges) owner.at(e) = 3;
  for (EdgeId e : l1) {
    if (owner.at(e) != 0) throw InputError("L1 overlaps E(H) or repeats an edge");
    owner[e] = 1;
  }
  for (EdgeId e : l2) {
    if (owner.at(e) != 0) throw InputError("L2 overlaps E(H) or L1");
    owner[e] = 2;
  }
  if (std::count(owner.begin(), owner.end(), 0) != 0) throw InputError("L1 u L2 does not cover E \\ E(H)");
  if (!is_connected(edge_subgraph(g, l1)) || !is_connected(edge_subgraph(g, l2))) {
    throw InputError("each (V(Li), Li) must be connected");
  }

  CriterionResult r;
  r.lhs = is_connected(induced_subgraph(g, outside_of(g, h.vertices)));
  r.n_h = static_cast<int>(h.num_vertices());
  r.n = static_cast<int>(g.num_vertices());
  r.n_h_l1 = count_union_vertices(h, l1);
  r.n_h_l2 = count_union_vertices(h, l2);
  r.rhs = r.n_h + r.n < r.n_h_l1 + r.n_h_l2;
  return r;
}

std::optional<CountingWitness> counting_witness(const Graph& g, std::span<const VertexId> u) {
  const Subgraph h = induced_subgraph(g, u);
  const auto outside = outside_of(g, h.vertices);
  if (outside.empty()) return std::nullopt;

  // Components of G(V \ U).
  std::vector<int> comp(g.num_vertices(), -1);
  int components = 0;
  for (VertexId start : outside) {
    if (comp[start] != -1) continue;
    std::vector<VertexId> stack{start};
    comp[start] = components;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (!h.contains_vertex(inc.neighbor) && comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = components;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++components;
  }
  if (components < 2) return std::nullopt;

  // Every edge outside E(U) has an endpoint outside U since G(U) is induced.
  std::vector<std::vector<EdgeId>> pieces(components);
  const Subgraph hbar = complement_subgraph(g, h.edges);
  for (EdgeId e : hbar.edges) {
    const auto& edge = g.edge(e);
    const int c = comp[edge.u] != -1 ? comp[edge.u] : comp[edge.v];
    pieces[c].push_back(e);
  }
  auto shares_vertex = [&](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
    const auto va = edge_subgraph(g, a).vertices;
    const auto vb = edge_subgraph(g, b).vertices;
    std::vector<VertexId> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    return !common.empty();
  };
  while (pieces.size() > 2) {
    bool merged = false;
    for (std::size_t i = 0; i < pieces.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < pieces.size() && !merged; ++j) {
        if (!shares_vertex(pieces[i], pieces[j])) continue;
        pieces[i].insert(pieces[i].end(), pieces[j].begin(), pieces[j].end());
        std::sort(pieces[i].begin(), pieces[i].end());
        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
    if (!merged) return std::nullopt;
  }
  if (pieces[0].empty() || pieces[1].empty()) return std::nullopt;

  CountingWitness w;
  w.l1 = pieces[0];
  w.l2 = pieces[1];
  w.n_h = static_cast<int>(h.num_vertices());
  w.n = static_cast<int>(g.num_vertices());
  w.n_h_l1 = count_union_vertices(h, w.l1);
  w.n_h_l2 = count_union_vertices(h, w.l2);
  return w;
}

LockedVerdict is_locked_subgraph(const Graph& g, std::span<const VertexId> u) {
  if (!is_biconnected(g)) throw InputError("locked subgraphs are defined for 2-connected graphs");
  using C = NotLockedReason::Condition;
  const Subgraph h = induced_subgraph(g, u);
  if (!is_biconnected(h)) return NotLockedReason{C::NotInduced2Connected, std::nullopt};
  const int n = static_cast<int>(g.num_vertices());
  const int n_h = static_cast<int>(h.num_vertices());
  if (n_h < 3 || n_h > n - 1) return NotLockedReason{C::SizeBounds, std::nullopt};

  LockedCertificate cert;
  cert.vertices = h.vertices;
  cert.edges = h.edges;
  cert.n_h = n_h;
  cert.m_h = static_cast<int>(h.num_edges());
  cert.complement = complement_subgraph(g, h.edges);
  cert.n_hbar = static_cast<int>(cert.complement.num_vertices());
  cert.m_hbar = static_cast<int>(cert.complement.num_edges());
  cert.boundary_size = static_cast<int>(std::count_if(
      cert.complement.vertices.begin(), cert.complement.vertices.end(), [&](VertexId v) { return h.contains_vertex(v); }));
  if (!(cert.m_hbar >= cert.n_hbar || cert.boundary_size >= 3)) return NotLockedReason{C::EdgeOrBoundary, std::nullopt};

  cert.outside_connected = is_connected(induced_subgraph(g, outside_of(g, h.vertices)));
  if (!cert.outside_connected) return NotLockedReason{C::OutsideDisconnected, counting_witness(g, h.vertices)};
  return cert;
}

namespace {

class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g) : adj_(g.num_vertices(), 0) {
    for (const auto& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  bool connected(std::uint64_t set) const {
    if (set == 0) return false;
    std::uint64_t reached = set & (~set + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= set & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == set;
  }

  // Valid for |set| >= 3, where parallel edges do not matter.
  bool biconnected(std::uint64_t set) const {
    if (!connected(set)) return false;
    for (std::uint64_t s = set; s != 0; s &= s - 1) {
      if (!connected(set & ~(s & (~s + 1)))) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> adj_;
};

void check_limits(std::size_t n, const EnumerationLimits& limits) {
  if (std::getenv("STP_MAX_SUBSETS") != nullptr) {
    if (n >= 63 || (std::uint64_t{1} << n) > max_subset_scan()) {
      throw CapacityError("locked enumeration over " + std::to_string(n) +
                          " vertices exceeds STP_MAX_SUBSETS");
    }
    return;
  }
  if (n > static_cast<std::size_t>(limits.max_vertices)) {
    throw CapacityError("locked enumeration over " + std::to_string(n) + " vertices exceeds the bound of " +
                        std::to_string(limits.max_vertices) + " (raise it with --max-n)");
  }
}

}  // namespace

std::vector<LockedCertificate> enumerate_locked_subgraphs(const Graph& g, const EnumerationLimits& limits) {
  if (!is_biconnected(g)) throw InputError("locked subgraphs are defined for 2-connected graphs");
  const std::size_t n = g.num_vertices();
  check_limits(n, limits);
  const MaskGraph mg(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  std::vector<LockedCertificate> out;
  for (std::uint64_t set = 1; set < full; ++set) {
    if (std::popcount(set) < 3) continue;
    if (!mg.connected(set) || !mg.connected(full & ~set)) continue;
    if (!mg.biconnected(set)) continue;

    int m_hbar = 0;
    std::uint64_t hbar_vertices = 0;
    for (const auto& e : g.edges()) {
      const bool inside = ((set >> e.u) & 1U) && ((set >> e.v) & 1U);
      if (inside) continue;
      ++m_hbar;
      hbar_vertices |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    }
    const int n_hbar = std::popcount(hbar_vertices);
    const int boundary = std::popcount(hbar_vertices & set);
    if (!(m_hbar >= n_hbar || boundary >= 3)) continue;

    std::vector<VertexId> u;
    for (std::uint64_t s = set; s != 0; s &= s - 1) u.push_back(std::countr_zero(s));
    auto verdict = is_locked_subgraph(g, u);
    if (!std::holds_alternative<LockedCertificate>(verdict)) {
      throw std::logic_error("mask filter and certificate check disagree");
    }
    out.push_back(std::move(std::get<LockedCertificate>(verdict)));
  }
  std::sort(out.begin(), out.end(),
            [](const LockedCertificate& a, const LockedCertificate& b) { return a.vertices < b.vertices; });
  return out;
}

}  // namespace stp
