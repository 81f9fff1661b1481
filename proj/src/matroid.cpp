#include "stp/matroid.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <string>

#include "stp/errors.hpp"

namespace stp {

ElementSet ElementSet::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

ElementSet ElementSet::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= static_cast<int>(kMaxElements)) {
      throw CapacityError("element " + std::to_string(e) + " exceeds the 64-element ground set limit");
    }
    bits |= std::uint64_t{1} << e;
  }
  return ElementSet(bits);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::uint64_t max_subset_scan() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 24;
  const char* env = std::getenv("STP_MAX_SUBSETS");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw InputError(std::string("STP_MAX_SUBSETS is not an integer: '") + env + "'");
  }
}

namespace {

void require_scan(std::size_t bits, const char* what) {
  if (bits >= 63 || (std::uint64_t{1} << bits) > max_subset_scan()) {
    throw CapacityError(std::string(what) + " needs 2^" + std::to_string(bits) +
                        " subsets, above the scan limit (set STP_MAX_SUBSETS to raise it)");
  }
}

template <class Related>
std::vector<ElementClass> classes_of(std::size_t n, ClosureKind kind, Related related) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      if (related(static_cast<int>(e), static_cast<int>(f))) {
        parent[find(static_cast<int>(f))] = find(static_cast<int>(e));
      }
    }
  }
  std::vector<ElementSet> by_root(n);
  for (std::size_t e = 0; e < n; ++e) by_root[find(static_cast<int>(e))] = by_root[find(static_cast<int>(e))].with(static_cast<int>(e));
  std::vector<ElementClass> out;
  for (const auto& s : by_root) {
    if (!s.empty()) out.push_back({kind, s});
  }
  std::sort(out.begin(), out.end(),
            [](const ElementClass& a, const ElementClass& b) { return a.elements.lowest() < b.elements.lowest(); });
  return out;
}

}  // namespace

GraphicMatroid::GraphicMatroid(const Graph& g) : num_vertices_(g.num_vertices()) {
  if (g.num_edges() > kMaxElements) {
    throw CapacityError("graphic matroid limited to 64 edges, got " + std::to_string(g.num_edges()));
  }
  for (const auto& e : g.edges()) {
    u_.push_back(e.u);
    v_.push_back(e.v);
  }
}

int GraphicMatroid::rank(ElementSet x) const {
  std::array<int, 130> small{};
  std::vector<int> large;
  int* parent = small.data();
  if (num_vertices_ > small.size()) {
    large.resize(num_vertices_);
    parent = large.data();
  }
  for (std::uint64_t b = x.bits(); b != 0; b &= b - 1) {
    const int e = std::countr_zero(b);
    parent[u_[e]] = u_[e];
    parent[v_[e]] = v_[e];
  }
  auto find = [parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int rank = 0;
  for (std::uint64_t b = x.bits(); b != 0; b &= b - 1) {
    const int e = std::countr_zero(b);
    const int a = find(u_[e]);
    const int c = find(v_[e]);
    if (a != c) {
      parent[a] = c;
      ++rank;
    }
  }
  return rank;
}

UniformMatroid::UniformMatroid(int rank, std::size_t size) : rank_(rank), size_(size) {
  if (size > kMaxElements) throw CapacityError("uniform matroid limited to 64 elements");
  if (rank < 0 || static_cast<std::size_t>(rank) > size) throw InputError("uniform matroid needs 0 <= r <= k");
}

MinorView::MinorView(const RankOracle& base, ElementSet deleted, ElementSet contracted)
    : base_(base), contracted_(contracted), contracted_rank_(base.rank(contracted)) {
  if (!(deleted & contracted).empty()) throw InputError("deleted and contracted sets overlap");
  const ElementSet ground = base.ground();
  if (!deleted.is_subset_of(ground) || !contracted.is_subset_of(ground)) {
    throw InputError("minor sets are not subsets of the ground set");
  }
  survivors_ = (ground - deleted - contracted).elements();
}

ElementSet MinorView::lift(ElementSet local) const {
  std::uint64_t bits = 0;
  for (std::uint64_t b = local.bits(); b != 0; b &= b - 1) {
    bits |= std::uint64_t{1} << survivors_[std::countr_zero(b)];
  }
  return ElementSet(bits);
}

int MinorView::rank(ElementSet x) const { return base_.rank(lift(x) | contracted_) - contracted_rank_; }

int DualView::rank(ElementSet x) const { return dual_rank(base_, x); }

MinorView restriction(const RankOracle& m, ElementSet kept) { return MinorView(m, m.ground() - kept, {}); }
MinorView contraction(const RankOracle& m, ElementSet contracted) { return MinorView(m, {}, contracted); }
MinorView deletion(const RankOracle& m, ElementSet deleted) { return MinorView(m, deleted, {}); }

int dual_rank(const RankOracle& m, ElementSet x) {
  const ElementSet e = m.ground();
  return x.size() - m.rank(e) + m.rank(e - x);
}

bool is_2connected_matroid(const RankOracle& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  if (n == 1) return true;
  require_scan(n - 1, "matroid 2-connectivity scan");
  const ElementSet full = m.ground();
  const int total = m.rank(full);
  // Every separator pair {X, E\X} has exactly one side containing element 0.
  const std::uint64_t rest = full.without(0).bits();
  std::uint64_t y = 0;
  while (true) {
    const ElementSet x(y | 1U);
    if (x != full && m.rank(x) + m.rank(full - x) == total) return false;
    if (y == rest) break;
    y = (y - rest) & rest;
  }
  return true;
}

std::vector<ElementClass> parallel_classes(const RankOracle& m) {
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m.rank(ElementSet().with(static_cast<int>(e))) == 0) {
      throw InputError("element " + std::to_string(e) + " is a loop");
    }
  }
  return classes_of(m.size(), ClosureKind::Parallel,
                    [&](int e, int f) { return m.rank(ElementSet().with(e).with(f)) == 1; });
}

std::vector<ElementClass> coparallel_classes(const RankOracle& m) {
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (dual_rank(m, ElementSet().with(static_cast<int>(e))) == 0) {
      throw InputError("element " + std::to_string(e) + " is a coloop");
    }
  }
  return classes_of(m.size(), ClosureKind::Coparallel,
                    [&](int e, int f) { return dual_rank(m, ElementSet().with(e).with(f)) == 1; });
}

bool is_essential_closure(const RankOracle& m, ElementSet closure, ClosureKind kind) {
  if (kind == ClosureKind::Parallel) return is_2connected_matroid(contraction(m, closure));
  return is_2connected_matroid(deletion(m, closure));
}

std::vector<ElementSet> locked_subsets_bruteforce(const RankOracle& m) {
  if (!is_2connected_matroid(m)) throw InputError("locked subsets need a 2-connected matroid");
  const std::size_t n = m.size();
  require_scan(n, "locked subset scan");
  const ElementSet full = m.ground();
  const int total = m.rank(full);
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 1; bits < full.bits(); ++bits) {
    const ElementSet l(bits);
    const int rl = m.rank(l);
    const int outside = static_cast<int>(n) - l.size();
    if (rl < 2 || rl < 2 + total - outside) continue;
    if (!is_2connected_matroid(restriction(m, l))) continue;
    if (!is_2connected_matroid(contraction(m, l))) continue;
    out.push_back(l);
  }
  return out;
}

ConstraintSystem bases_polytope_system(const RankOracle& m) {
  if (!is_2connected_matroid(m)) throw InputError("bases polytope system needs a 2-connected matroid");
  const std::size_t n = m.size();
  ConstraintSystem sys;
  sys.coordinates = n;
  sys.dimension = static_cast<int>(n) - 1;
  const auto all = m.ground().elements();

  if (n == 2) {
    // U_{1,2}: both closures equal E, yet the segment has two facets.
    for (int e : all) {
      std::vector<int> single{e};
      sys.inequalities.push_back(
          Inequality::set_sum(n, single, Sense::Ge, 0, {Provenance::Kind::Nonnegativity, false, single, {}, 0}));
    }
  } else if (n > 2) {
    std::vector<ElementSet> emitted_parallel;
    for (const auto& p : parallel_classes(m)) {
      if (!is_essential_closure(m, p.elements, ClosureKind::Parallel)) continue;
      emitted_parallel.push_back(p.elements);
      const auto els = p.elements.elements();
      sys.inequalities.push_back(
          Inequality::set_sum(n, els, Sense::Le, 1, {Provenance::Kind::Parallel, false, els, {}, 0}));
    }
    for (const auto& s : coparallel_classes(m)) {
      if (!is_essential_closure(m, s.elements, ClosureKind::Coparallel)) continue;
      // A circuit with one fattened element: x(S) >= |S|-1 and x(E\S) <= 1
      // are the same facet modulo x(E) = r(E).
      const ElementSet rest = m.ground() - s.elements;
      if (std::find(emitted_parallel.begin(), emitted_parallel.end(), rest) != emitted_parallel.end()) continue;
      const auto els = s.elements.elements();
      sys.inequalities.push_back(Inequality::set_sum(n, els, Sense::Ge, s.elements.size() - 1,
                                                     {Provenance::Kind::Coparallel, false, els, {}, 0}));
    }
    for (const auto& l : locked_subsets_bruteforce(m)) {
      const auto els = l.elements();
      sys.inequalities.push_back(
          Inequality::set_sum(n, els, Sense::Le, m.rank(l), {Provenance::Kind::Locked, false, els, {}, 0}));
    }
  }
  sys.equalities.push_back(
      Inequality::set_sum(n, all, Sense::Eq, m.rank(), {Provenance::Kind::Cardinality, false, all, {}, 0}));
  return sys;
}

ConstraintSystem alternative_system(const RankFunction& rank, const ConstraintSystem& sys,
                                    const FamilySelection& flips) {
  struct Pending {
    Provenance::Kind kind;
    std::vector<int> elements;
    bool used = false;
  };
  std::vector<Pending> pending;
  auto add = [&](Provenance::Kind kind, const std::vector<std::vector<int>>& sets) {
    for (auto s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      pending.push_back({kind, std::move(s)});
    }
  };
  add(Provenance::Kind::Parallel, flips.parallel);
  add(Provenance::Kind::Coparallel, flips.coparallel);
  add(Provenance::Kind::Locked, flips.locked);

  ConstraintSystem out = sys;
  for (auto& row : out.inequalities) {
    const auto& prov = row.provenance;
    if (prov.complement) continue;
    auto it = std::find_if(pending.begin(), pending.end(), [&](const Pending& p) {
      return p.kind == prov.kind && p.elements == prov.elements;
    });
    if (it == pending.end()) continue;
    it->used = true;

    const auto scope = sys.equalities.at(prov.block).support();
    std::vector<int> rest;
    std::set_difference(scope.begin(), scope.end(), prov.elements.begin(), prov.elements.end(),
                        std::back_inserter(rest));
    const std::int64_t total = rank(scope);
    Provenance flipped = prov;
    flipped.complement = true;
    switch (prov.kind) {
      case Provenance::Kind::Parallel:
        row = Inequality::set_sum(sys.coordinates, rest, Sense::Ge, total - 1, flipped);
        break;
      case Provenance::Kind::Coparallel:
        row = Inequality::set_sum(sys.coordinates, rest, Sense::Le, rank(rest), flipped);
        break;
      case Provenance::Kind::Locked:
        row = Inequality::set_sum(sys.coordinates, rest, Sense::Ge, total - rank(prov.elements), flipped);
        break;
      default: break;
    }
  }
  for (const auto& p : pending) {
    if (p.used) continue;
    std::string set;
    for (int e : p.elements) set += (set.empty() ? "" : ",") + std::to_string(e);
    throw InputError(std::string("{") + set + "} is not a " + kind_name(p.kind) + " member of the system");
  }
  return out;
}

ConstraintSystem alternative_system(const RankOracle& m, const ConstraintSystem& sys,
                                    const FamilySelection& flips) {
  return alternative_system([&m](const std::vector<int>& s) -> std::int64_t { return m.rank(ElementSet::of(s)); },
                            sys, flips);
}

std::pair<int, int> coparallel_rank_identity(const RankOracle& m, ElementSet s) {
  const ElementSet e = m.ground();
  return {m.rank(e - s), m.rank(e) - s.size() + 1};
}

}  // namespace stp
