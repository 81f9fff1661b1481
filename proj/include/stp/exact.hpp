#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "stp/inequality.hpp"

namespace stp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense integer matrix; rank and determinant use fraction-free (Bareiss)
// elimination, so every intermediate stays an exact integer.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, std::vector<BigInt>(cols)) {}
  static ExactMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  void append_row(std::vector<BigInt> row);

  std::size_t rank() const;
  BigInt determinant() const;  // square matrices only

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<BigInt>> data_;
};

struct RowEchelon {
  std::vector<std::vector<Rational>> rows;  // nonzero rows only, pivot entries 1
  std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(std::vector<std::vector<Rational>> rows, std::size_t cols);

// Smallest integer multiple with coprime entries, sign preserved.
std::vector<BigInt> primitive(const std::vector<Rational>& v);

// Integer basis of {y : A y = 0}.
std::vector<std::vector<BigInt>> null_space(const ExactMatrix& a);

// Normal form of inequalities modulo a system of equalities: coefficients on
// the echelon pivot coordinates are eliminated, then the row is canonicalized.
// Two inequalities define the same halfspace within the affine subspace iff
// their reduced rows coincide.
class EqualityReducer {
 public:
  EqualityReducer(const std::vector<Inequality>& equalities, std::size_t coordinates);

  // nullopt when the row reduces to 0 <= b (implied by or contradicting the
  // equalities rather than cutting the subspace).
  std::optional<Inequality> reduce(const Inequality& row) const;

  std::size_t rank() const { return echelon_.pivots.size(); }
  std::size_t coordinates() const { return coordinates_; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }
  std::vector<std::size_t> free_coordinates() const;
  bool same_subspace(const EqualityReducer& other) const;

 private:
  std::size_t coordinates_;
  RowEchelon echelon_;  // augmented with the rhs as the last column
};

}  // namespace stp
