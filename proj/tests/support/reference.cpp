#include "reference.hpp"

#include <numeric>

namespace stp::testing {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> trees_by_subsets(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  const int m = static_cast<int>(g.num_edges());
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(parent, g.edge(e).u);
      int b = find(parent, g.edge(e).v);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (!acyclic) continue;
    std::vector<std::uint8_t> bits(m);
    for (int e = 0; e < m; ++e) bits[e] = mask >> e & 1;
    out.push_back(std::move(bits));
  }
  return out;
}

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<__int128>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  int rank = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int affine_rank_ref(const std::vector<std::vector<std::uint8_t>>& points) {
  std::vector<std::vector<std::int64_t>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<std::int64_t> d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = int(points[i][c]) - int(points[0][c]);
    diffs.push_back(std::move(d));
  }
  return integer_rank(std::move(diffs));
}

int face_dimension_ref(const Inequality& row, const std::vector<std::vector<std::uint8_t>>& points) {
  std::vector<std::vector<std::uint8_t>> tight;
  for (const auto& p : points) {
    std::int64_t lhs = 0;
    for (std::size_t c = 0; c < p.size(); ++c) lhs += row.coeffs[c] * p[c];
    const bool ok = row.sense == Sense::Le ? lhs <= row.rhs : row.sense == Sense::Ge ? lhs >= row.rhs : lhs == row.rhs;
    if (!ok) return -2;
    if (lhs == row.rhs) tight.push_back(p);
  }
  if (tight.empty()) return -1;
  return affine_rank_ref(tight);
}

}  // namespace stp::testing
