#include "stp/inequality.hpp"

#include <algorithm>
#include <numeric>

#include "stp/errors.hpp"

namespace stp {

namespace {

struct KindName {
  Provenance::Kind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {Provenance::Kind::Parallel, "parallel"},   {Provenance::Kind::Coparallel, "coparallel"},
    {Provenance::Kind::Locked, "locked"},       {Provenance::Kind::Cardinality, "cardinality"},
    {Provenance::Kind::Bridge, "bridge"},       {Provenance::Kind::Nonnegativity, "nonnegativity"},
    {Provenance::Kind::Hull, "hull"},           {Provenance::Kind::External, "external"},
};

}  // namespace

const char* kind_name(Provenance::Kind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "external";
}

Provenance::Kind kind_from_name(const std::string& name) {
  for (const auto& entry : kKindNames) {
    if (name == entry.name) return entry.kind;
  }
  throw ParseError("unknown provenance kind '" + name + "'");
}

Inequality Inequality::set_sum(std::size_t size, std::span<const int> subset, Sense sense, std::int64_t rhs,
                               Provenance provenance) {
  Inequality row;
  row.coeffs.assign(size, 0);
  for (int e : subset) row.coeffs.at(e) = 1;
  row.sense = sense;
  row.rhs = rhs;
  row.provenance = std::move(provenance);
  return row;
}

std::int64_t Inequality::lhs_at(std::span<const std::uint8_t> point) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (point[i]) sum += coeffs[i];
  }
  return sum;
}

bool Inequality::satisfied_by(std::span<const std::uint8_t> point) const {
  const auto lhs = lhs_at(point);
  switch (sense) {
    case Sense::Le: return lhs <= rhs;
    case Sense::Ge: return lhs >= rhs;
    case Sense::Eq: return lhs == rhs;
  }
  return false;
}

std::vector<int> Inequality::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

Inequality canonicalize(const Inequality& row) {
  Inequality out = row;
  if (std::all_of(out.coeffs.begin(), out.coeffs.end(), [](std::int64_t c) { return c == 0; })) {
    throw InputError("inequality has an all-zero coefficient vector");
  }
  if (out.sense == Sense::Ge) {
    for (auto& c : out.coeffs) c = -c;
    out.rhs = -out.rhs;
    out.sense = Sense::Le;
  }
  std::int64_t g = 0;
  for (auto c : out.coeffs) g = std::gcd(g, c);
  g = std::gcd(g, out.rhs);
  if (g > 1) {
    for (auto& c : out.coeffs) c /= g;
    out.rhs /= g;
  }
  return out;
}

bool same_constraint(const Inequality& a, const Inequality& b) {
  return a.coeffs == b.coeffs && a.sense == b.sense && a.rhs == b.rhs;
}

}  // namespace stp
