#include "stp/exact.hpp"

#include <algorithm>

#include "stp/errors.hpp"

namespace stp {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) m.data_[r][c] = rows[r].at(c);
  }
  return m;
}

void ExactMatrix::append_row(std::vector<BigInt> row) {
  if (data_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw InputError("row length mismatch");
  data_.push_back(std::move(row));
}

std::size_t ExactMatrix::rank() const {
  auto m = data_;
  const std::size_t rows = m.size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols_ && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

BigInt ExactMatrix::determinant() const {
  const std::size_t n = data_.size();
  if (n != cols_) throw InputError("determinant of a non-square matrix");
  if (n == 0) return 1;
  auto m = data_;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RowEchelon reduced_row_echelon(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational pivot = rows[r][c];
    for (auto& x : rows[r]) x /= pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<BigInt> primitive(const std::vector<Rational>& v) {
  BigInt lcm = 1;
  for (const auto& x : v) {
    const BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::vector<std::vector<BigInt>> null_space(const ExactMatrix& a) {
  std::vector<std::vector<Rational>> rows(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = Rational(a.at(r, c));
  }
  const auto ech = reduced_row_echelon(std::move(rows), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) v[ech.pivots[i]] = -ech.rows[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

EqualityReducer::EqualityReducer(const std::vector<Inequality>& equalities, std::size_t coordinates)
    : coordinates_(coordinates) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : equalities) {
    if (eq.coeffs.size() != coordinates) throw InputError("equality has the wrong number of coordinates");
    std::vector<Rational> row(coordinates + 1);
    for (std::size_t c = 0; c < coordinates; ++c) row[c] = eq.coeffs[c];
    row[coordinates] = eq.rhs;
    rows.push_back(std::move(row));
  }
  echelon_ = reduced_row_echelon(std::move(rows), coordinates + 1);
  if (!echelon_.pivots.empty() && echelon_.pivots.back() == coordinates) {
    throw InputError("equalities are inconsistent");
  }
}

std::vector<std::size_t> EqualityReducer::free_coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < coordinates_; ++c) {
    if (!std::binary_search(echelon_.pivots.begin(), echelon_.pivots.end(), c)) out.push_back(c);
  }
  return out;
}

bool EqualityReducer::same_subspace(const EqualityReducer& other) const {
  return coordinates_ == other.coordinates_ && echelon_.pivots == other.echelon_.pivots &&
         echelon_.rows == other.echelon_.rows;
}

std::optional<Inequality> EqualityReducer::reduce(const Inequality& row) const {
  if (row.coeffs.size() != coordinates_) throw InputError("inequality has the wrong number of coordinates");
  std::vector<Rational> v(coordinates_ + 1);
  const Rational sign = row.sense == Sense::Ge ? -1 : 1;
  for (std::size_t c = 0; c < coordinates_; ++c) v[c] = sign * row.coeffs[c];
  v[coordinates_] = sign * row.rhs;
  for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
    const Rational f = v[echelon_.pivots[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c <= coordinates_; ++c) v[c] -= f * echelon_.rows[i][c];
  }
  if (std::all_of(v.begin(), v.end() - 1, [](const Rational& x) { return x == 0; })) return std::nullopt;
  const auto ints = primitive(v);
  Inequality out;
  out.sense = row.sense == Sense::Eq ? Sense::Eq : Sense::Le;
  out.provenance = row.provenance;
  for (std::size_t c = 0; c < coordinates_; ++c) out.coeffs.push_back(static_cast<std::int64_t>(ints[c]));
  out.rhs = static_cast<std::int64_t>(ints[coordinates_]);
  return out;
}

}  // namespace stp
