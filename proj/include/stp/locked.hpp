#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "stp/graph.hpp"

namespace stp {

// H = G(U) with its complement H-bar = (V(E \ E(U)), E \ E(U)).
struct LockedCertificate {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  int n_h = 0;
  int m_h = 0;
  Subgraph complement;
  int n_hbar = 0;
  int m_hbar = 0;
  int boundary_size = 0;  // |V(H) n V(H-bar)|
  bool outside_connected = false;
};

// {L1, L2} partitions E \ E(H) into connected pieces with
// n_H + n >= n_{H u L1} + n_{H u L2}.
struct CountingWitness {
  std::vector<EdgeId> l1;
  std::vector<EdgeId> l2;
  int n_h = 0;
  int n = 0;
  int n_h_l1 = 0;
  int n_h_l2 = 0;
};

struct NotLockedReason {
  enum class Condition { NotInduced2Connected, SizeBounds, EdgeOrBoundary, OutsideDisconnected };

  Condition failed;
  std::optional<CountingWitness> witness;  // only for OutsideDisconnected
};

const char* condition_name(NotLockedReason::Condition c);

using LockedVerdict = std::variant<LockedCertificate, NotLockedReason>;

struct CriterionResult {
  bool lhs = false;  // G(V \ V(H)) is connected
  bool rhs = false;  // n_H + n < n_{H u L1} + n_{H u L2}
  int n_h = 0;
  int n = 0;
  int n_h_l1 = 0;
  int n_h_l2 = 0;
};

// Evaluates both sides of the complement-connectivity counting criterion.
// Throws InputError unless H is 2-connected, {L1, L2} partitions E \ E(H)
// into nonempty parts and each (V(Li), Li) is connected.
CriterionResult complement_connectivity_criterion(const Graph& g, const Subgraph& h, std::span<const EdgeId> l1,
                                                  std::span<const EdgeId> l2);

// Checks, in order: G(U) 2-connected; 3 <= |U| <= n-1; m_Hbar >= n_Hbar or
// boundary >= 3; G(V \ U) connected. Throws InputError unless g is 2-connected.
LockedVerdict is_locked_subgraph(const Graph& g, std::span<const VertexId> u);

// Groups E \ E(U) by the component of G(V \ U) each edge touches and merges
// groups through shared vertices until two remain. nullopt when the outside
// is connected or no connected 2-split is found.
std::optional<CountingWitness> counting_witness(const Graph& g, std::span<const VertexId> u);

struct EnumerationLimits {
  int max_vertices = 24;  // ignored when STP_MAX_SUBSETS is set
};

// All locked subgraphs, scanning vertex subsets with 3 <= |U| <= n-1.
// Sorted by vertex set. Throws CapacityError above the limits.
std::vector<LockedCertificate> enumerate_locked_subgraphs(const Graph& g, const EnumerationLimits& limits = {});

}  // namespace stp
