#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stp/closures.hpp"
#include "stp/errors.hpp"
#include "stp/facets.hpp"
#include "stp/io.hpp"
#include "stp/locked.hpp"
#include "stp/oracle.hpp"

namespace {

using nlohmann::json;
using namespace stp;

constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitVerify = 5;

Graph load_graph(const std::string& path) {
  ParsedGraph parsed;
  if (path == "-") {
    parsed = parse_edge_list(std::cin);
  } else {
    parsed = read_edge_list_file(path);
  }
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(parsed.graph);
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(g.edge(e).label);
  return out;
}

std::vector<std::string> names_of(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex_label(v));
  return out;
}

// 2-connected blocks with at least three vertices, as standalone graphs.
std::vector<DerivedGraph> nontrivial_blocks(const Graph& g) {
  std::vector<DerivedGraph> out;
  for (const auto& b : blocks(g).blocks) {
    if (b.num_vertices() >= 3) out.push_back(extract(b));
  }
  return out;
}

// Reports print to stderr so stdout stays a clean system stream.
bool run_verification(const FacetSystem& fs, bool as_json) {
  const auto report = verify_system(fs.graph, fs.system);
  if (as_json) {
    std::cerr << report_to_json(report, fs.graph, fs.system).dump(2) << '\n';
  } else {
    std::cerr << report_to_text(report, fs.graph, fs.system);
  }
  return report.ok();
}

void print_system(const FacetSystem& fs, const std::string& format, bool relaxed_bounds) {
  if (format == "json") {
    std::cout << system_to_json(fs).dump(2) << '\n';
  } else if (format == "ine") {
    std::cout << to_ine(fs.system);
  } else if (format == "lp") {
    std::cout << to_lp(fs, relaxed_bounds);
  } else {
    std::cout << format_system(fs);
  }
}

// Resolves "all", family indices and '+'-joined edge labels against the
// non-complemented rows of one family.
std::vector<std::vector<int>> resolve_flips(const FacetSystem& fs, Provenance::Kind kind, const std::string& spec,
                                            const char* family) {
  std::vector<std::vector<int>> members;
  for (const auto& row : fs.system.inequalities) {
    if (row.provenance.kind == kind && !row.provenance.complement) members.push_back(row.provenance.elements);
  }
  std::vector<std::vector<int>> out;
  std::stringstream items(spec);
  for (std::string item; std::getline(items, item, ',');) {
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(out.end(), members.begin(), members.end());
      continue;
    }
    if (std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const auto index = std::stoul(item);
      if (index >= members.size()) {
        throw ParseError(std::string("no ") + family + " row with index " + item + " (family has " +
                         std::to_string(members.size()) + ")");
      }
      out.push_back(members[index]);
      continue;
    }
    std::vector<int> edges;
    std::stringstream parts(item);
    for (std::string label; std::getline(parts, label, '+');) {
      const auto e = fs.graph.find_edge_label(label);
      if (!e) throw ParseError("unknown edge label '" + label + "' in --flip-" + family);
      edges.push_back(*e);
    }
    std::sort(edges.begin(), edges.end());
    if (std::find(members.begin(), members.end(), edges) == members.end()) {
      throw ParseError("'" + item + "' is not an emitted " + family + " row");
    }
    out.push_back(std::move(edges));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_facets(const std::string& input, const std::string& format, bool verify, int max_n, bool relaxed,
               bool json_report) {
  const Graph g = load_graph(input);
  if (max_n > 0 && static_cast<int>(g.num_vertices()) > max_n) {
    throw CapacityError("graph has " + std::to_string(g.num_vertices()) + " vertices; --max-n is " +
                        std::to_string(max_n));
  }
  const auto fs = spanning_tree_polytope_system(g);
  print_system(fs, format, relaxed);
  if (verify && !run_verification(fs, json_report)) return kExitVerify;
  return 0;
}

int cmd_alt(const std::string& input, const std::string& flip_parallel, const std::string& flip_coparallel,
            const std::string& flip_locked, const std::string& format, bool verify, bool relaxed, bool json_report) {
  const Graph g = load_graph(input);
  const auto fs = spanning_tree_polytope_system(g);
  FamilySelection flips;
  flips.parallel = resolve_flips(fs, Provenance::Kind::Parallel, flip_parallel, "parallel");
  flips.coparallel = resolve_flips(fs, Provenance::Kind::Coparallel, flip_coparallel, "coparallel");
  flips.locked = resolve_flips(fs, Provenance::Kind::Locked, flip_locked, "locked");
  const auto alt = alternative_facet_system(fs, flips);
  print_system(alt, format, relaxed);
  if (verify && !run_verification(alt, json_report)) return kExitVerify;
  return 0;
}

std::string witness_text(const Graph& g, const CountingWitness& w) {
  std::ostringstream s;
  s << "L1={" << join(labels_of(g, w.l1), ",") << "} L2={" << join(labels_of(g, w.l2), ",") << "}: n_H + n = "
    << w.n_h + w.n << " >= " << w.n_h_l1 + w.n_h_l2 << " = n(H+L1) + n(H+L2)";
  return s.str();
}

// Induced 2-connected vertex sets of `g` (3 <= |U| <= n-1) that are not locked.
std::vector<std::pair<std::vector<VertexId>, NotLockedReason>> rejections(const Graph& g) {
  const auto n = g.num_vertices();
  if (n > 20) throw CapacityError("--verbose scans vertex subsets and is limited to 20 vertices per block");
  std::vector<std::pair<std::vector<VertexId>, NotLockedReason>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < 3 || size > static_cast<int>(n) - 1) continue;
    std::vector<VertexId> u;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (1u << v)) u.push_back(static_cast<VertexId>(v));
    }
    if (!is_biconnected(induced_subgraph(g, u))) continue;
    auto verdict = is_locked_subgraph(g, u);
    if (auto* reason = std::get_if<NotLockedReason>(&verdict)) out.emplace_back(std::move(u), *reason);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int cmd_locked(const std::string& input, bool as_json, bool verbose) {
  const Graph g = load_graph(input);
  json out = json::array();
  for (const auto& block : nontrivial_blocks(g)) {
    const Graph& b = block.graph;
    json entry = {{"block", b.vertex_labels()}, {"locked", json::array()}};
    for (const auto& cert : enumerate_locked_subgraphs(b)) {
      entry["locked"].push_back(certificate_to_json(cert, b));
      if (!as_json) {
        std::cout << "locked {" << join(names_of(b, cert.vertices), ",") << "} edges "
                  << join(labels_of(b, cert.edges), " ") << "  n_H=" << cert.n_h << " m_H=" << cert.m_h
                  << ", complement " << cert.m_hbar << " edges on " << cert.n_hbar << " vertices, boundary "
                  << cert.boundary_size << ", outside connected\n";
      }
    }
    if (verbose) {
      entry["rejected"] = json::array();
      for (const auto& [u, reason] : rejections(b)) {
        json r = reason_to_json(reason, b);
        r["vertices"] = names_of(b, u);
        entry["rejected"].push_back(r);
        if (!as_json) {
          std::cout << "rejected {" << join(names_of(b, u), ",") << "}: " << condition_name(reason.failed);
          if (reason.witness) std::cout << "; " << witness_text(b, *reason.witness);
          std::cout << '\n';
        }
      }
    }
    out.push_back(entry);
  }
  if (as_json) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_closures(const std::string& input, bool as_json) {
  const Graph g = load_graph(input);
  json out = json::array();
  for (const auto& block : nontrivial_blocks(g)) {
    const Graph& b = block.graph;
    json entry = {{"block", b.vertex_labels()}, {"parallel", json::array()}, {"coparallel", json::array()}};
    if (!as_json) std::cout << "block {" << join(b.vertex_labels(), ",") << "}\n";
    for (const auto& family : {parallel_closures_graph(b), coparallel_closures_graph(b)}) {
      for (const auto& c : family) {
        const bool parallel = c.kind == ClosureKind::Parallel;
        entry[parallel ? "parallel" : "coparallel"].push_back(closure_to_json(c, b));
        if (!as_json) {
          std::cout << "  " << (parallel ? "parallel   " : "coparallel ") << '{' << join(labels_of(b, c.edges), ",")
                    << "} " << (c.essential ? "essential" : "nonessential: " + c.witness) << '\n';
        }
      }
    }
    out.push_back(entry);
  }
  if (as_json) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_blocks(const std::string& input, bool as_json) {
  const Graph g = load_graph(input);
  const auto d = blocks(g);
  if (as_json) {
    std::cout << blocks_to_json(d, g).dump(2) << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    std::cout << "block " << i << ": vertices {" << join(b.vertex_labels(), ",") << "} edges {"
              << join(b.edge_labels(), ",") << "}" << (b.num_edges() == 1 ? " bridge" : "") << '\n';
  }
  std::cout << "cut vertices: {" << join(names_of(g, cut_vertices(g)), ",") << "}\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& system_path, bool as_json) {
  const Graph g = load_graph(input);
  std::ifstream in(system_path);
  if (!in) throw ParseError("cannot open '" + system_path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const auto sys = system_from_json(j, g);
  const auto report = verify_system(g, sys);
  if (as_json) {
    std::cout << report_to_json(report, g, sys).dump(2) << '\n';
  } else {
    std::cout << report_to_text(report, g, sys);
  }
  return report.ok() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facets of spanning tree polytopes"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  bool verify = false;
  bool relaxed = false;
  bool as_json = false;
  bool verbose = false;
  int max_n = 0;

  auto* facets = app.add_subcommand("facets", "Print the facet system of a graph");
  facets->add_option("input", input, "Edge-list file, '-' for stdin")->required();
  facets->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "ine", "lp", "text"}));
  facets->add_flag("--verify", verify, "Check every row against the spanning trees (report on stderr)");
  facets->add_option("--max-n", max_n, "Refuse graphs with more vertices");
  facets->add_flag("--relaxed-bounds", relaxed, "LP: declare 0 <= x <= 1 for every edge");
  facets->add_flag("--json-report", as_json, "Write the verification report as JSON");

  auto* locked = app.add_subcommand("locked", "List locked subgraphs");
  locked->add_option("input", input)->required();
  locked->add_flag("--json", as_json);
  locked->add_flag("--verbose,-v", verbose, "Also list rejected induced 2-connected subgraphs");

  auto* closures = app.add_subcommand("closures", "Parallel and coparallel closures per block");
  closures->add_option("input", input)->required();
  closures->add_flag("--json", as_json);

  auto* blocks_cmd = app.add_subcommand("blocks", "Block decomposition");
  blocks_cmd->add_option("input", input)->required();
  blocks_cmd->add_flag("--json", as_json);

  std::string flip_parallel, flip_coparallel, flip_locked;
  auto* alt = app.add_subcommand("alt", "Facet system with complemented rows");
  alt->add_option("input", input)->required();
  alt->add_option("--flip-parallel", flip_parallel, "'all', row indices or '+'-joined labels, comma separated");
  alt->add_option("--flip-coparallel", flip_coparallel);
  alt->add_option("--flip-locked", flip_locked);
  alt->add_option("--format", format)->check(CLI::IsMember({"json", "ine", "lp", "text"}));
  alt->add_flag("--verify", verify);
  alt->add_flag("--relaxed-bounds", relaxed);
  alt->add_flag("--json-report", as_json);

  std::string system_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a SystemJSON file against a graph");
  verify_cmd->add_option("input", input)->required();
  verify_cmd->add_option("system", system_path)->required();
  verify_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*facets) return cmd_facets(input, format, verify, max_n, relaxed, as_json);
    if (*locked) return cmd_locked(input, as_json, verbose);
    if (*closures) return cmd_closures(input, as_json);
    if (*blocks_cmd) return cmd_blocks(input, as_json);
    if (*alt) return cmd_alt(input, flip_parallel, flip_coparallel, flip_locked, format, verify, relaxed, as_json);
    if (*verify_cmd) return cmd_verify(input, system_path, as_json);
  } catch (const DisconnectedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
