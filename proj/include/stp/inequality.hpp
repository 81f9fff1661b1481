#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stp {

enum class Sense { Le, Ge, Eq };

// Where a row came from. `elements` is the closure / locked edge set (sorted),
// `vertices` the vertex set U of a locked subgraph when known, and `block`
// the index of the equality the row lives under.
struct Provenance {
  enum class Kind { Parallel, Coparallel, Locked, Cardinality, Bridge, Nonnegativity, Hull, External };

  Kind kind = Kind::External;
  bool complement = false;
  std::vector<int> elements;
  std::vector<int> vertices;
  int block = 0;

  bool operator==(const Provenance&) const = default;
};

const char* kind_name(Provenance::Kind kind);
Provenance::Kind kind_from_name(const std::string& name);  // throws ParseError

// Integer row sum_e coeffs[e] * x(e) <sense> rhs, coefficients dense by edge id.
struct Inequality {
  std::vector<std::int64_t> coeffs;
  Sense sense = Sense::Le;
  std::int64_t rhs = 0;
  Provenance provenance;

  // x(F) <sense> rhs over a ground set of `size` coordinates.
  static Inequality set_sum(std::size_t size, std::span<const int> subset, Sense sense, std::int64_t rhs,
                            Provenance provenance = {});

  std::int64_t lhs_at(std::span<const std::uint8_t> point) const;
  bool satisfied_by(std::span<const std::uint8_t> point) const;
  bool tight_at(std::span<const std::uint8_t> point) const { return lhs_at(point) == rhs; }
  std::vector<int> support() const;

  bool operator==(const Inequality&) const = default;
};

// Sense flipped to <= (>= rows negated, equalities kept), divided by the gcd
// of all entries including rhs. Idempotent. Throws InputError on an all-zero
// coefficient vector.
Inequality canonicalize(const Inequality& row);

// Same coefficients, sense and rhs; provenance is ignored.
bool same_constraint(const Inequality& a, const Inequality& b);

struct ConstraintSystem {
  std::size_t coordinates = 0;
  int dimension = 0;
  std::vector<Inequality> inequalities;
  std::vector<Inequality> equalities;

  bool operator==(const ConstraintSystem&) const = default;
};

// Closures and locked sets (edge sets) whose row is replaced by its
// complement form.
struct FamilySelection {
  std::vector<std::vector<int>> parallel;
  std::vector<std::vector<int>> coparallel;
  std::vector<std::vector<int>> locked;
};

}  // namespace stp
