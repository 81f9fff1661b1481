#pragma once

#include <string>
#include <vector>

#include "stp/graph.hpp"
#include "stp/matroid.hpp"

namespace stp {

struct Closure {
  ClosureKind kind;
  std::vector<EdgeId> edges;
  bool essential = false;
  std::string witness;  // why the minor fails 2-connectivity; empty when essential
};

// Edges grouped by endpoint pair. Essential when contracting the class keeps
// the graph 2-connected. Throws InputError unless g is 2-connected.
std::vector<Closure> parallel_closures_graph(const Graph& g);

// Classes of "e and f form a 2-edge cut". This covers series paths as well
// as non-adjacent cut pairs. Essential when deleting the class keeps the graph
// 2-connected. Throws InputError unless g is 2-connected.
std::vector<Closure> coparallel_closures_graph(const Graph& g);

}  // namespace stp
