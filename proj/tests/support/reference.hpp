#pragma once

// Small, deliberately naive reimplementations used to cross-check the
// library: nothing here calls into the oracle or the exact linear algebra.

#include <cstdint>
#include <vector>

#include "stp/graph.hpp"
#include "stp/inequality.hpp"

namespace stp::testing {

// Every (n-1)-subset of edges that is acyclic, as 0/1 vectors.
std::vector<std::vector<std::uint8_t>> trees_by_subsets(const Graph& g);

// Rank of an integer matrix by Gaussian elimination over __int128 fractions.
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

int affine_rank_ref(const std::vector<std::vector<std::uint8_t>>& points);

// Dimension of the face {x in P : row tight}; -1 if no point is tight,
// -2 if some point violates the row.
int face_dimension_ref(const Inequality& row, const std::vector<std::vector<std::uint8_t>>& points);

}  // namespace stp::testing
