#include "stp/facets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <variant>

#include "stp/closures.hpp"
#include "stp/errors.hpp"
#include "stp/matroid.hpp"

namespace stp {

namespace {

std::vector<int> to_global(const DerivedGraph& d, const std::vector<EdgeId>& local) {
  std::vector<int> out;
  for (EdgeId e : local) out.push_back(d.original_edge[e]);
  std::sort(out.begin(), out.end());
  return out;
}

void append_block_rows(const Graph& g, const Subgraph& block, int block_index, const EnumerationLimits& limits,
                       ConstraintSystem& sys) {
  const std::size_t m = g.num_edges();
  const DerivedGraph d = extract(block);
  const std::size_t mb = d.graph.num_edges();
  auto prov = [&](Provenance::Kind kind, std::vector<int> elements, std::vector<int> vertices = {}) {
    return Provenance{kind, false, std::move(elements), std::move(vertices), block_index};
  };

  if (mb == 2) {
    for (EdgeId e : block.edges) {
      std::vector<int> single{e};
      sys.inequalities.push_back(
          Inequality::set_sum(m, single, Sense::Ge, 0, prov(Provenance::Kind::Nonnegativity, single)));
    }
    return;
  }
  std::vector<std::vector<int>> emitted_parallel;
  for (const auto& p : parallel_closures_graph(d.graph)) {
    if (!p.essential) continue;
    auto els = to_global(d, p.edges);
    emitted_parallel.push_back(els);
    sys.inequalities.push_back(Inequality::set_sum(m, els, Sense::Le, 1, prov(Provenance::Kind::Parallel, els)));
  }
  for (const auto& s : coparallel_closures_graph(d.graph)) {
    if (!s.essential) continue;
    auto els = to_global(d, s.edges);
    // Cycle with one multiplied edge: the series path S and the parallel
    // class E_B \ S give the same facet under the block equality.
    std::vector<int> rest;
    std::set_difference(block.edges.begin(), block.edges.end(), els.begin(), els.end(), std::back_inserter(rest));
    if (std::find(emitted_parallel.begin(), emitted_parallel.end(), rest) != emitted_parallel.end()) continue;
    const auto rhs = static_cast<std::int64_t>(els.size()) - 1;
    sys.inequalities.push_back(Inequality::set_sum(m, els, Sense::Ge, rhs, prov(Provenance::Kind::Coparallel, els)));
  }
  for (const auto& cert : enumerate_locked_subgraphs(d.graph, limits)) {
    auto els = to_global(d, cert.edges);
    std::vector<int> vertices;
    for (VertexId v : cert.vertices) vertices.push_back(g.vertex(d.graph.vertex_label(v)));
    std::sort(vertices.begin(), vertices.end());
    sys.inequalities.push_back(
        Inequality::set_sum(m, els, Sense::Le, cert.n_h - 1, prov(Provenance::Kind::Locked, els, vertices)));
  }
}

}  // namespace

FacetSystem spanning_tree_polytope_system(const Graph& g, const EnumerationLimits& limits) {
  const auto decomposition = blocks(g);
  FacetSystem out{g, {}};
  ConstraintSystem& sys = out.system;
  sys.coordinates = g.num_edges();
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
    const Subgraph& block = decomposition.blocks[b];
    const int index = static_cast<int>(b);
    std::vector<int> edges(block.edges.begin(), block.edges.end());
    if (block.num_edges() == 1) {
      sys.equalities.push_back(Inequality::set_sum(sys.coordinates, edges, Sense::Eq, 1,
                                                   {Provenance::Kind::Bridge, false, edges, {}, index}));
      continue;
    }
    append_block_rows(g, block, index, limits, sys);
    sys.equalities.push_back(Inequality::set_sum(sys.coordinates, edges, Sense::Eq,
                                                 static_cast<std::int64_t>(block.num_vertices()) - 1,
                                                 {Provenance::Kind::Cardinality, false, edges, {}, index}));
  }
  sys.dimension = static_cast<int>(g.num_edges()) - static_cast<int>(decomposition.blocks.size());

  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  for (const auto& row : sys.inequalities) {
    const auto c = canonicalize(row);
    if (!seen.insert({c.coeffs, c.rhs}).second) {
      throw std::logic_error("two emitted rows canonicalize identically; the description would not be minimal");
    }
  }
  return out;
}

FacetSystem alternative_facet_system(const FacetSystem& sys, const FamilySelection& flips) {
  const Graph& g = sys.graph;
  auto rank = [&g](const std::vector<int>& edges) -> std::int64_t { return edge_rank(g, edges); };
  return FacetSystem{g, alternative_system(rank, sys.system, flips)};
}

const char* route_name(RedundancyWitness::Route route) {
  return route == RedundancyWitness::Route::CountingPartition ? "counting-partition" : "equality-substitution";
}

namespace {

Inequality as_le(const Inequality& row) {
  if (row.sense != Sense::Ge) return row;
  Inequality out = row;
  for (auto& c : out.coeffs) c = -c;
  out.rhs = -out.rhs;
  out.sense = Sense::Le;
  return out;
}

}  // namespace

bool RedundancyWitness::validates() const {
  if (terms.empty()) return false;
  std::vector<std::int64_t> coeffs(target.coeffs.size(), 0);
  std::int64_t rhs = 0;
  for (const auto& t : terms) {
    if (t.row.sense == Sense::Ge) return false;
    if (t.row.sense == Sense::Le && t.multiplier < 0) return false;
    if (t.row.coeffs.size() != coeffs.size()) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += t.multiplier * t.row.coeffs[i];
    rhs += t.multiplier * t.row.rhs;
  }
  return coeffs == combined.coeffs && rhs == combined.rhs && combined.sense == Sense::Le &&
         combined.coeffs == target.coeffs && combined.rhs <= target.rhs;
}

RedundancyWitness redundancy_witness(const Graph& g, std::span<const VertexId> u) {
  const auto verdict = is_locked_subgraph(g, u);
  if (std::holds_alternative<LockedCertificate>(verdict)) {
    throw InputError("G(U) is locked; its inequality is a facet, not redundant");
  }
  const auto& reason = std::get<NotLockedReason>(verdict);
  if (reason.failed == NotLockedReason::Condition::NotInduced2Connected) {
    throw InputError("G(U) is not an induced 2-connected subgraph");
  }

  const std::size_t m = g.num_edges();
  const Subgraph h = induced_subgraph(g, u);
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const auto n_h = static_cast<std::int64_t>(h.num_vertices());
  std::vector<int> all(m);
  for (std::size_t e = 0; e < m; ++e) all[e] = static_cast<int>(e);
  const std::vector<int> h_edges(h.edges.begin(), h.edges.end());

  RedundancyWitness w;
  w.vertices = h.vertices;
  w.target = Inequality::set_sum(m, h_edges, Sense::Le, n_h - 1, {Provenance::Kind::External, false, h_edges, w.vertices, 0});
  const Inequality equality =
      Inequality::set_sum(m, all, Sense::Eq, n - 1, {Provenance::Kind::Cardinality, false, all, {}, 0});

  auto partition = counting_witness(g, h.vertices);
  const Subgraph hbar = complement_subgraph(g, h.edges);
  const std::vector<int> s(hbar.edges.begin(), hbar.edges.end());
  if (partition) {
    w.route = RedundancyWitness::Route::CountingPartition;
    for (const auto* piece : {&partition->l1, &partition->l2}) {
      const Subgraph joined = subgraph_union(h, *piece);
      const std::vector<int> edges(joined.edges.begin(), joined.edges.end());
      w.terms.push_back({1, Inequality::set_sum(m, edges, Sense::Le, static_cast<std::int64_t>(joined.num_vertices()) - 1,
                                                {Provenance::Kind::External, false, edges, joined.vertices, 0})});
    }
    w.terms.push_back({-1, equality});
    w.partition = std::move(partition);
  } else if (!s.empty() && n_h >= 3 && edge_rank(g, h_edges) == n_h - 1 &&
             static_cast<std::int64_t>(s.size()) - (n - 1) + (n_h - 1) == 1) {
    // r*(E \ E(H)) = 1: the complement is the coparallel closure of a series path.
    w.route = RedundancyWitness::Route::EqualitySubstitution;
    const auto rhs = static_cast<std::int64_t>(s.size()) - 1;
    w.terms.push_back({1, as_le(Inequality::set_sum(m, s, Sense::Ge, rhs,
                                                     {Provenance::Kind::Coparallel, false, s, {}, 0}))});
    w.terms.push_back({1, equality});
  } else {
    throw InputError(std::string("no redundancy derivation for a subgraph failing ") + condition_name(reason.failed));
  }

  w.combined.coeffs.assign(m, 0);
  w.combined.sense = Sense::Le;
  for (const auto& t : w.terms) {
    for (std::size_t i = 0; i < m; ++i) w.combined.coeffs[i] += t.multiplier * t.row.coeffs[i];
    w.combined.rhs += t.multiplier * t.row.rhs;
  }
  return w;
}

}  // namespace stp
