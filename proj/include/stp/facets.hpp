#pragma once

#include <span>
#include <vector>

#include "stp/graph.hpp"
#include "stp/inequality.hpp"
#include "stp/locked.hpp"

namespace stp {

// H-representation of the spanning tree polytope of `graph`. Coordinates are
// edge ids; one equality per block (x(e) = 1 for a bridge, x(E_B) = n_B - 1
// otherwise) and every inequality names its block through provenance.block.
struct FacetSystem {
  Graph graph;
  ConstraintSystem system;
};

// Per 2-connected block: x(P) <= 1 for essential parallel closures,
// x(S) >= |S| - 1 for essential coparallel closures, x(E(H)) <= n_H - 1 for
// locked subgraphs, and the block cardinality equality. A block made of two
// parallel edges gets x(e) >= 0 for both edges instead.
// Throws DisconnectedError when g is not connected.
FacetSystem spanning_tree_polytope_system(const Graph& g, const EnumerationLimits& limits = {});

// Complement forms for the selected families, ranks taken in M(G).
FacetSystem alternative_facet_system(const FacetSystem& sys, const FamilySelection& flips);

// One term of a derivation: multiplier * row, where inequality rows are in
// <= form and only equalities may carry a negative multiplier.
struct DerivationTerm {
  std::int64_t multiplier;
  Inequality row;
};

struct RedundancyWitness {
  enum class Route {
    CountingPartition,     // outside of H disconnected: x(E(H)) = x(E(H) u L1) + x(E(H) u L2) - x(E)
    EqualitySubstitution,  // E \ E(H) is an essential coparallel closure S: x(E(H)) = x(E) - x(S)
  };

  Route route;
  std::vector<VertexId> vertices;
  std::optional<CountingWitness> partition;
  std::vector<DerivationTerm> terms;
  Inequality combined;  // sum of the terms
  Inequality target;    // x(E(H)) <= n_H - 1

  // Multipliers sign-correct, sum of terms equals `combined` exactly, and
  // `combined` has the target's coefficients with rhs <= target rhs.
  bool validates() const;
};

// Derivation of x(E(U)) <= |U| - 1 from other valid rows, for G(U) induced,
// 2-connected and not locked. g must be 2-connected. Throws InputError when
// U is locked or neither route applies.
RedundancyWitness redundancy_witness(const Graph& g, std::span<const VertexId> u);

const char* route_name(RedundancyWitness::Route route);

}  // namespace stp
