#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stp/exact.hpp"
#include "stp/facets.hpp"
#include "stp/graph.hpp"
#include "stp/inequality.hpp"

namespace stp {

// Characteristic vector of a spanning tree, indexed by edge id.
struct TreeVector {
  std::vector<std::uint8_t> bits;

  std::vector<EdgeId> edges() const;
  bool operator==(const TreeVector&) const = default;
};

// All spanning trees by include/exclude backtracking, where an edge may only
// be excluded while the remaining graph stays connected. Throws
// DisconnectedError, or CapacityError past `max_count`.
std::vector<TreeVector> spanning_trees(const Graph& g, std::uint64_t max_count = 1'000'000);

// Kirchhoff: determinant of the Laplacian with one vertex removed.
BigInt tree_count_determinant(const Graph& g);

// Dimension of the affine hull. Throws InputError on an empty list.
int affine_rank(std::span<const TreeVector> points);

// Affine rank of the points where `row` is tight, -1 when there are none.
// Throws ValidityError if some point violates the row.
int face_dimension(const Inequality& row, std::span<const TreeVector> points);

// face_dimension == polytope_dim - 1. Rows with fewer than polytope_dim tight
// points are rejected before any rank computation.
bool is_facet(const Inequality& row, std::span<const TreeVector> points, int polytope_dim);

struct HullLimits {
  std::size_t max_coordinates = 10;
  std::size_t max_points = 500;
};

// Exact description of conv(points): affine-hull equalities and facets,
// facets reduced modulo the equalities and canonicalized.
struct HullDescription {
  std::vector<Inequality> equalities;
  std::vector<Inequality> facets;
};

// Double description over exact integers. Throws CapacityError above limits.
HullDescription hull_facets(std::span<const TreeVector> points, const HullLimits& limits = {});

struct RowReport {
  bool valid = false;
  std::optional<TreeVector> violating_tree;
  std::size_t tight_trees = 0;
  std::optional<int> face_dimension;  // absent when too few tight trees
  bool is_facet = false;
  std::optional<Inequality> reduced;  // normal form modulo the equalities
};

struct VerificationReport {
  std::size_t tree_count = 0;
  int polytope_dimension = 0;
  int declared_dimension = 0;
  std::vector<RowReport> rows;
  std::vector<bool> equality_valid;
  bool equalities_span_affine_hull = false;
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
  bool hull_checked = false;
  std::string hull_skipped_reason;
  std::vector<Inequality> missing_facets;  // hull facets with no matching row
  std::vector<std::size_t> extra_rows;     // rows that match no hull facet
  bool hull_match = false;

  bool dimension_ok() const { return polytope_dimension == declared_dimension; }
  bool ok() const;
};

struct VerifyOptions {
  std::uint64_t max_trees = 1'000'000;
  HullLimits hull;
};

VerificationReport verify_system(const Graph& g, const ConstraintSystem& sys, const VerifyOptions& options = {});

}  // namespace stp
