#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>

#include "stp/errors.hpp"
#include "stp/oracle.hpp"

namespace stp {

namespace {

using Vec = std::vector<BigInt>;

BigInt dot(const Vec& a, const Vec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void make_primitive(Vec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

struct Ray {
  Vec y;
  boost::dynamic_bitset<> zero;  // processed rows tight at y
};

// Extreme rays of the pointed cone {y : A y >= 0}, A of full column rank.
std::vector<Vec> extreme_rays(const std::vector<Vec>& rows) {
  const std::size_t dim = rows.front().size();

  // Greedy basis of independent rows.
  std::vector<std::size_t> basis;
  ExactMatrix chosen(0, dim);
  for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
    ExactMatrix trial = chosen;
    trial.append_row(rows[i]);
    if (trial.rank() > basis.size()) {
      chosen = std::move(trial);
      basis.push_back(i);
    }
  }
  if (basis.size() != dim) throw std::logic_error("constraint matrix is not of full column rank");

  // Columns of the inverse of the basis rows are the initial rays.
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug[r][c] = Rational(rows[basis[r]][c]);
    aug[r][dim + r] = 1;
  }
  const auto ech = reduced_row_echelon(std::move(aug), 2 * dim);
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Rational> col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = ech.rows[r][dim + k];
    Ray ray{primitive(col), boost::dynamic_bitset<>(rows.size())};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) ray.zero.set(basis[j]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto b : basis) processed[b] = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<BigInt> value(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rows[i], rays[r].y);
      if (value[r] > 0) plus.push_back(r);
      else if (value[r] < 0) minus.push_back(r);
      else zero.push_back(r);
    }
    if (minus.empty()) {
      for (auto r : zero) rays[r].zero.set(i);
      continue;
    }
    std::vector<Ray> next;
    for (auto p : plus) {
      for (auto q : minus) {
        const auto common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{Vec(dim), common};
        for (std::size_t c = 0; c < dim; ++c) fresh.y[c] = value[p] * rays[q].y[c] - value[q] * rays[p].y[c];
        make_primitive(fresh.y);
        fresh.zero.set(i);
        next.push_back(std::move(fresh));
      }
    }
    for (auto r : plus) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zero.set(i);
    }
    rays = std::move(next);
  }

  std::vector<Vec> out;
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

}  // namespace

HullDescription hull_facets(std::span<const TreeVector> points, const HullLimits& limits) {
  if (points.empty()) throw InputError("hull of an empty point set");
  const std::size_t m = points.front().bits.size();
  if (m > limits.max_coordinates || points.size() > limits.max_points) {
    throw CapacityError("hull computation limited to " + std::to_string(limits.max_coordinates) +
                        " coordinates and " + std::to_string(limits.max_points) + " points");
  }

  std::set<std::vector<std::uint8_t>> distinct;
  for (const auto& p : points) distinct.insert(p.bits);

  // Affine hull: all (a, b) with a.p = b for every point.
  ExactMatrix lifted(0, m + 1);
  for (const auto& p : distinct) {
    Vec row(m + 1);
    for (std::size_t c = 0; c < m; ++c) row[c] = p[c];
    row[m] = -1;
    lifted.append_row(std::move(row));
  }
  HullDescription out;
  for (const auto& v : null_space(lifted)) {
    Inequality eq;
    eq.sense = Sense::Eq;
    for (std::size_t c = 0; c < m; ++c) eq.coeffs.push_back(static_cast<std::int64_t>(v[c]));
    eq.rhs = static_cast<std::int64_t>(v[m]);
    eq.provenance.kind = Provenance::Kind::Hull;
    out.equalities.push_back(std::move(eq));
  }

  const EqualityReducer reducer(out.equalities, m);
  const auto free = reducer.free_coordinates();
  if (free.empty()) return out;

  // Full-dimensional projection onto the free coordinates; row (1, -q) per point.
  std::vector<Vec> rows;
  for (const auto& p : distinct) {
    Vec row(free.size() + 1);
    row[0] = 1;
    for (std::size_t j = 0; j < free.size(); ++j) row[j + 1] = -int(p[free[j]]);
    rows.push_back(std::move(row));
  }
  for (const auto& ray : extreme_rays(rows)) {
    Inequality f;
    f.coeffs.assign(m, 0);
    f.sense = Sense::Le;
    bool nonzero = false;
    for (std::size_t j = 0; j < free.size(); ++j) {
      f.coeffs[free[j]] = static_cast<std::int64_t>(ray[j + 1]);
      nonzero = nonzero || ray[j + 1] != 0;
    }
    if (!nonzero) continue;
    f.rhs = static_cast<std::int64_t>(ray[0]);
    f.provenance.kind = Provenance::Kind::Hull;
    auto reduced = reducer.reduce(f);
    if (reduced) out.facets.push_back(std::move(*reduced));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const Inequality& a, const Inequality& b) {
    return std::tie(a.coeffs, a.rhs) < std::tie(b.coeffs, b.rhs);
  });
  return out;
}

}  // namespace stp
