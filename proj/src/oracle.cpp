#include "stp/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stp/errors.hpp"

namespace stp {

std::vector<EdgeId> TreeVector::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < bits.size(); ++e) {
    if (bits[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, std::uint64_t max_count)
      : g_(g), max_count_(max_count), state_(g.num_edges(), kOpen) {}

  std::vector<TreeVector> run() {
    if (g_.num_vertices() <= 1) {
      out_.push_back(TreeVector{std::vector<std::uint8_t>(g_.num_edges(), 0)});
      return std::move(out_);
    }
    recurse(0, 0);
    return std::move(out_);
  }

 private:
  static constexpr std::uint8_t kOpen = 0;
  static constexpr std::uint8_t kIn = 1;
  static constexpr std::uint8_t kOut = 2;

  // Are a and b joined using edges in `allowed` state(s)?
  bool joined(VertexId a, VertexId b, bool include_open) const {
    std::vector<bool> seen(g_.num_vertices(), false);
    std::vector<VertexId> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      if (v == b) return true;
      for (const auto& inc : g_.incident(v)) {
        const auto s = state_[inc.edge];
        if (s == kOut || (s == kOpen && !include_open)) continue;
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    return false;
  }

  void recurse(std::size_t i, std::size_t chosen) {
    if (chosen + 1 == g_.num_vertices()) {
      TreeVector t{std::vector<std::uint8_t>(g_.num_edges(), 0)};
      for (std::size_t e = 0; e < state_.size(); ++e) t.bits[e] = state_[e] == kIn ? 1 : 0;
      out_.push_back(std::move(t));
      if (out_.size() > max_count_) {
        throw CapacityError("more than " + std::to_string(max_count_) + " spanning trees");
      }
      return;
    }
    if (i == g_.num_edges()) return;
    const auto& e = g_.edge(static_cast<EdgeId>(i));
    const bool closes_cycle = joined(e.u, e.v, false);
    if (!closes_cycle) {
      state_[i] = kIn;
      recurse(i + 1, chosen + 1);
    }
    // Excluding a bridge of the remaining graph would disconnect it.
    state_[i] = kOut;
    if (joined(e.u, e.v, true)) recurse(i + 1, chosen);
    state_[i] = kOpen;
  }

  const Graph& g_;
  std::uint64_t max_count_;
  std::vector<std::uint8_t> state_;
  std::vector<TreeVector> out_;
};

}  // namespace

std::vector<TreeVector> spanning_trees(const Graph& g, std::uint64_t max_count) {
  if (!is_connected(g)) throw DisconnectedError("graph is not connected; it has no spanning tree");
  return TreeEnumerator(g, max_count).run();
}

BigInt tree_count_determinant(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return 1;
  ExactMatrix lap(n - 1, n - 1);
  for (const auto& e : g.edges()) {
    const std::size_t a = e.u;
    const std::size_t b = e.v;
    if (a < n - 1) lap.at(a, a) += 1;
    if (b < n - 1) lap.at(b, b) += 1;
    if (a < n - 1 && b < n - 1) {
      lap.at(a, b) -= 1;
      lap.at(b, a) -= 1;
    }
  }
  return lap.determinant();
}

int affine_rank(std::span<const TreeVector> points) {
  if (points.empty()) throw InputError("affine rank of an empty point set");
  const std::size_t dim = points.front().bits.size();
  ExactMatrix diff(0, dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<BigInt> row(dim);
    for (std::size_t c = 0; c < dim; ++c) row[c] = int(points[i].bits[c]) - int(points[0].bits[c]);
    diff.append_row(std::move(row));
  }
  return static_cast<int>(diff.rank());
}

namespace {

std::vector<TreeVector> tight_points(const Inequality& row, std::span<const TreeVector> points) {
  std::vector<TreeVector> tight;
  for (const auto& p : points) {
    if (!row.satisfied_by(p.bits)) {
      throw ValidityError("inequality violated by a spanning tree", p.edges());
    }
    if (row.tight_at(p.bits)) tight.push_back(p);
  }
  return tight;
}

}  // namespace

int face_dimension(const Inequality& row, std::span<const TreeVector> points) {
  const auto tight = tight_points(row, points);
  if (tight.empty()) return -1;
  return affine_rank(tight);
}

bool is_facet(const Inequality& row, std::span<const TreeVector> points, int polytope_dim) {
  const auto tight = tight_points(row, points);
  if (static_cast<int>(tight.size()) < polytope_dim || tight.empty()) return false;
  return affine_rank(tight) == polytope_dim - 1;
}

bool VerificationReport::ok() const {
  for (const auto& r : rows) {
    if (!r.valid || !r.is_facet) return false;
  }
  for (bool v : equality_valid) {
    if (!v) return false;
  }
  if (!duplicates.empty() || !dimension_ok() || !equalities_span_affine_hull) return false;
  return !hull_checked || hull_match;
}

VerificationReport verify_system(const Graph& g, const ConstraintSystem& sys, const VerifyOptions& options) {
  if (sys.coordinates != g.num_edges()) throw InputError("system and graph have different edge counts");
  const auto trees = spanning_trees(g, options.max_trees);
  VerificationReport report;
  report.tree_count = trees.size();
  report.polytope_dimension = affine_rank(trees);
  report.declared_dimension = sys.dimension;

  for (const auto& eq : sys.equalities) {
    report.equality_valid.push_back(
        std::all_of(trees.begin(), trees.end(), [&](const TreeVector& t) { return eq.satisfied_by(t.bits); }));
  }
  std::optional<EqualityReducer> reducer;
  try {
    reducer.emplace(sys.equalities, sys.coordinates);
  } catch (const InputError&) {
  }
  const bool equalities_valid = std::all_of(report.equality_valid.begin(), report.equality_valid.end(), [](bool v) { return v; });
  report.equalities_span_affine_hull =
      reducer && equalities_valid &&
      static_cast<int>(reducer->rank()) == static_cast<int>(sys.coordinates) - report.polytope_dimension;

  for (const auto& row : sys.inequalities) {
    RowReport r;
    try {
      const auto tight = tight_points(row, trees);
      r.valid = true;
      r.tight_trees = tight.size();
      if (static_cast<int>(tight.size()) >= report.polytope_dimension && !tight.empty()) {
        r.face_dimension = affine_rank(tight);
        r.is_facet = *r.face_dimension == report.polytope_dimension - 1;
      }
    } catch (const ValidityError& err) {
      TreeVector t{std::vector<std::uint8_t>(g.num_edges(), 0)};
      for (int e : err.violating_tree()) t.bits[e] = 1;
      r.violating_tree = std::move(t);
    }
    if (reducer) r.reduced = reducer->reduce(row);
    report.rows.push_back(std::move(r));
  }

  std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, std::size_t> first_seen;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& reduced = report.rows[i].reduced;
    if (!reduced) continue;
    auto [it, inserted] = first_seen.insert({{reduced->coeffs, reduced->rhs}, i});
    if (!inserted) report.duplicates.push_back({it->second, i});
  }

  if (g.num_edges() > options.hull.max_coordinates || trees.size() > options.hull.max_points) {
    report.hull_skipped_reason = "hull comparison skipped: " + std::to_string(g.num_edges()) + " edges, " +
                                 std::to_string(trees.size()) + " trees exceed the hull bounds";
    return report;
  }
  const auto hull = hull_facets(trees, options.hull);
  report.hull_checked = true;
  const EqualityReducer hull_reducer(hull.equalities, sys.coordinates);
  const bool same_space = reducer && reducer->same_subspace(hull_reducer);
  for (const auto& facet : hull.facets) {
    const bool found = std::any_of(report.rows.begin(), report.rows.end(), [&](const RowReport& r) {
      return r.reduced && r.reduced->coeffs == facet.coeffs && r.reduced->rhs == facet.rhs;
    });
    if (!found || !same_space) report.missing_facets.push_back(facet);
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i].reduced;
    const bool found = r && std::any_of(hull.facets.begin(), hull.facets.end(), [&](const Inequality& f) {
                         return f.coeffs == r->coeffs && f.rhs == r->rhs;
                       });
    if (!found || !same_space) report.extra_rows.push_back(i);
  }
  report.hull_match = same_space && report.missing_facets.empty() && report.extra_rows.empty();
  return report;
}

}  // namespace stp
