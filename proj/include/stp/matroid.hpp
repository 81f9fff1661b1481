#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "stp/graph.hpp"
#include "stp/inequality.hpp"

namespace stp {

inline constexpr std::size_t kMaxElements = 64;

// Subset of a matroid ground set {0, ..., n-1}, n <= 64.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<int> elements);
  static ElementSet of(std::span<const int> elements);
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint64_t{1} << e)); }
  std::vector<int> elements() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// A matroid given by its ground set size and an exact rank function.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual std::size_t size() const = 0;
  virtual int rank(ElementSet x) const = 0;

  ElementSet ground() const { return ElementSet::full(size()); }
  int rank() const { return rank(ground()); }
};

// M(G): rank(X) = |V(X)| - #components of (V(X), X). Elements are edge ids.
class GraphicMatroid final : public RankOracle {
 public:
  explicit GraphicMatroid(const Graph& g);  // throws CapacityError when m > 64

  std::size_t size() const override { return u_.size(); }
  int rank(ElementSet x) const override;
  using RankOracle::rank;

 private:
  std::size_t num_vertices_;
  std::vector<int> u_;
  std::vector<int> v_;
};

// U_{r,k}: rank(X) = min(|X|, r).
class UniformMatroid final : public RankOracle {
 public:
  UniformMatroid(int rank, std::size_t size);

  std::size_t size() const override { return size_; }
  int rank(ElementSet x) const override { return std::min(x.size(), rank_); }
  using RankOracle::rank;

 private:
  int rank_;
  std::size_t size_;
};

// M \ D / C, re-indexed so survivors are 0..k-1 in base order:
// rank(Y) = r(Y u C) - r(C).
class MinorView final : public RankOracle {
 public:
  MinorView(const RankOracle& base, ElementSet deleted, ElementSet contracted);

  std::size_t size() const override { return survivors_.size(); }
  int rank(ElementSet x) const override;
  using RankOracle::rank;

  int original(int local) const { return survivors_[local]; }
  ElementSet lift(ElementSet local) const;

 private:
  const RankOracle& base_;
  ElementSet contracted_;
  int contracted_rank_;
  std::vector<int> survivors_;
};

// M*: rank is the dual rank of the base.
class DualView final : public RankOracle {
 public:
  explicit DualView(const RankOracle& base) : base_(base) {}

  std::size_t size() const override { return base_.size(); }
  int rank(ElementSet x) const override;
  using RankOracle::rank;

 private:
  const RankOracle& base_;
};

MinorView restriction(const RankOracle& m, ElementSet kept);
MinorView contraction(const RankOracle& m, ElementSet contracted);
MinorView deletion(const RankOracle& m, ElementSet deleted);

// r*(X) = |X| - r(E) + r(E \ X)
int dual_rank(const RankOracle& m, ElementSet x);

// No proper nonempty X with r(X) + r(E \ X) = r(E). The empty matroid is
// not 2-connected; a single element is.
bool is_2connected_matroid(const RankOracle& m);

enum class ClosureKind { Parallel, Coparallel };

struct ElementClass {
  ClosureKind kind;
  ElementSet elements;
};

// Classes of e ~ f <=> r({e,f}) = 1. Throws InputError on a loop.
std::vector<ElementClass> parallel_classes(const RankOracle& m);
// Classes of e ~ f <=> r*({e,f}) = 1. Throws InputError on a coloop.
std::vector<ElementClass> coparallel_classes(const RankOracle& m);

// M/C (parallel) or M\C (coparallel) is 2-connected.
bool is_essential_closure(const RankOracle& m, ElementSet closure, ClosureKind kind);

// Every proper nonempty L with M|L and M/L 2-connected and
// r(L) >= max(2, 2 + r(E) - |E \ L|), by exhaustive scan. Sorted.
std::vector<ElementSet> locked_subsets_bruteforce(const RankOracle& m);

// Rows x(P) <= 1, x(S) >= |S|-1, x(L) <= r(L) and x(E) = r(E) of a
// 2-connected matroid. Throws InputError otherwise.
ConstraintSystem bases_polytope_system(const RankOracle& m);

using RankFunction = std::function<std::int64_t(const std::vector<int>&)>;

// Replaces each selected closure / locked row by its complement form
// relative to its block equality:
//   x(P) <= 1        ->  x(E\P) >= r(E) - 1
//   x(S) >= |S| - 1  ->  x(E\S) <= r(E\S)
//   x(L) <= r(L)     ->  x(E\L) >= r(E) - r(L)
// Throws InputError when a selected set is not a member of its family.
ConstraintSystem alternative_system(const RankFunction& rank, const ConstraintSystem& sys,
                                    const FamilySelection& flips);
ConstraintSystem alternative_system(const RankOracle& m, const ConstraintSystem& sys,
                                    const FamilySelection& flips);

// (r(E \ S), r(E) - |S| + 1) for a coparallel class S.
std::pair<int, int> coparallel_rank_identity(const RankOracle& m, ElementSet s);

// Upper bound on 2^k subset scans; STP_MAX_SUBSETS overrides the default 2^24.
std::uint64_t max_subset_scan();

}  // namespace stp
