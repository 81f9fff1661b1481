#include "stp/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stp/errors.hpp"

namespace stp {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::Le: return "<=";
    case Sense::Ge: return ">=";
    case Sense::Eq: return "=";
  }
  return "?";
}

Sense sense_from_text(const std::string& s) {
  if (s == "<=") return Sense::Le;
  if (s == ">=") return Sense::Ge;
  if (s == "=" || s == "==") return Sense::Eq;
  throw ParseError("unknown sense '" + s + "'");
}

std::vector<std::string> edge_labels(const Graph& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int e : ids) out.push_back(g.edge(e).label);
  return out;
}

std::vector<std::string> vertex_labels(const Graph& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int v : ids) out.push_back(g.vertex_label(v));
  return out;
}

EdgeId edge_id_of(const Graph& g, const std::string& label) {
  if (auto e = g.find_edge_label(label)) return *e;
  throw ParseError("unknown edge label '" + label + "'");
}

json row_to_json(const Inequality& row, const Graph& g) {
  json coeffs = json::object();
  for (std::size_t e = 0; e < row.coeffs.size(); ++e) {
    if (row.coeffs[e] != 0) coeffs[g.edge(static_cast<EdgeId>(e)).label] = row.coeffs[e];
  }
  json prov = {{"kind", kind_name(row.provenance.kind)},
               {"subset", edge_labels(g, row.provenance.elements)},
               {"block", row.provenance.block}};
  if (!row.provenance.vertices.empty()) prov["vertices"] = vertex_labels(g, row.provenance.vertices);
  if (row.provenance.complement) prov["complement"] = true;
  return {{"coeffs", coeffs}, {"sense", sense_text(row.sense)}, {"rhs", row.rhs}, {"provenance", prov}};
}

Inequality row_from_json(const json& j, const Graph& g) {
  try {
    Inequality row;
    row.coeffs.assign(g.num_edges(), 0);
    for (const auto& [label, value] : j.at("coeffs").items()) {
      if (!value.is_number_integer()) throw ParseError("coefficient of '" + label + "' is not an integer");
      row.coeffs[edge_id_of(g, label)] = value.get<std::int64_t>();
    }
    row.sense = sense_from_text(j.at("sense").get<std::string>());
    if (!j.at("rhs").is_number_integer()) throw ParseError("rhs is not an integer");
    row.rhs = j.at("rhs").get<std::int64_t>();
    if (j.contains("provenance")) {
      const auto& p = j["provenance"];
      row.provenance.kind = kind_from_name(p.value("kind", std::string("external")));
      for (const auto& label : p.value("subset", std::vector<std::string>{})) {
        row.provenance.elements.push_back(edge_id_of(g, label));
      }
      std::sort(row.provenance.elements.begin(), row.provenance.elements.end());
      for (const auto& label : p.value("vertices", std::vector<std::string>{})) {
        auto v = g.find_vertex(label);
        if (!v) throw ParseError("unknown vertex label '" + label + "'");
        row.provenance.vertices.push_back(*v);
      }
      std::sort(row.provenance.vertices.begin(), row.provenance.vertices.end());
      row.provenance.complement = p.value("complement", false);
      row.provenance.block = p.value("block", 0);
    }
    return row;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed row: ") + e.what());
  }
}

std::string lp_name(const Graph& g, EdgeId e, const std::set<std::string>& taken_before) {
  std::string name = "x_";
  for (char c : g.edge(e).label) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    name += ok ? c : '_';
  }
  if (taken_before.count(name) != 0) name = "x_e" + std::to_string(e) + "_";
  return name;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
  ParsedGraph out;
  std::vector<std::string> declared;
  bool have_directive = false;
  std::vector<EdgeSpec> specs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      if (have_directive || !specs.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": 'vertices:' must be the first directive");
      }
      have_directive = true;
      declared = split_ws(line.substr(9));
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v> [label]'");
    }
    if (have_directive) {
      for (int k = 0; k < 2; ++k) {
        if (std::find(declared.begin(), declared.end(), tokens[k]) == declared.end()) {
          throw ParseError("line " + std::to_string(line_no) + ": vertex '" + tokens[k] + "' not declared");
        }
      }
    }
    if (tokens[0] == tokens[1]) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": dropped loop at '" + tokens[0] + "'");
      continue;
    }
    specs.push_back({tokens[0], tokens[1], tokens.size() == 3 ? tokens[2] : ""});
  }
  if (specs.empty() && declared.empty()) throw ParseError("no edges in input");
  try {
    out.graph = Graph(declared, specs);
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  if (out.graph.num_vertices() > 1) {
    for (VertexId v = 0; v < static_cast<VertexId>(out.graph.num_vertices()); ++v) {
      if (out.graph.incident(v).empty()) {
        throw DisconnectedError("declared vertex '" + out.graph.vertex_label(v) + "' has no edges");
      }
    }
  }
  return out;
}

ParsedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

ParsedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", g.vertex_label(e.u)}, {"v", g.vertex_label(e.v)}, {"label", e.label}});
  }
  return {{"vertices", g.vertex_labels()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  try {
    std::vector<EdgeSpec> specs;
    int expected = 0;
    for (const auto& e : j.at("edges")) {
      if (e.at("id").get<int>() != expected++) throw ParseError("edge ids must be dense and in order");
      specs.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(), e.value("label", std::string())});
    }
    return Graph(j.value("vertices", std::vector<std::string>{}), specs);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

json system_to_json(const FacetSystem& sys) {
  json eqs = json::array();
  json ineqs = json::array();
  for (const auto& r : sys.system.equalities) eqs.push_back(row_to_json(r, sys.graph));
  for (const auto& r : sys.system.inequalities) ineqs.push_back(row_to_json(r, sys.graph));
  return {{"graph", graph_to_json(sys.graph)},
          {"dimension", sys.system.dimension},
          {"equalities", eqs},
          {"inequalities", ineqs}};
}

FacetSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph")) throw ParseError("system JSON needs a 'graph' object");
  FacetSystem out{graph_from_json(j["graph"]), {}};
  out.system = system_from_json(j, out.graph);
  return out;
}

ConstraintSystem system_from_json(const json& j, const Graph& g) {
  if (!j.is_object()) throw ParseError("system JSON must be an object");
  ConstraintSystem sys;
  sys.coordinates = g.num_edges();
  for (const auto& r : j.value("equalities", json::array())) {
    auto row = row_from_json(r, g);
    if (row.sense != Sense::Eq) throw ParseError("row in 'equalities' is not an equality");
    sys.equalities.push_back(std::move(row));
  }
  for (const auto& r : j.value("inequalities", json::array())) {
    auto row = row_from_json(r, g);
    if (row.sense == Sense::Eq) throw ParseError("row in 'inequalities' is an equality");
    sys.inequalities.push_back(std::move(row));
  }
  if (j.contains("dimension")) {
    if (!j["dimension"].is_number_integer()) throw ParseError("dimension is not an integer");
    sys.dimension = j["dimension"].get<int>();
  } else {
    sys.dimension = static_cast<int>(g.num_edges()) -
                    static_cast<int>(EqualityReducer(sys.equalities, sys.coordinates).rank());
  }
  return sys;
}

std::string to_ine(const ConstraintSystem& sys) {
  std::ostringstream out;
  const std::size_t rows = sys.inequalities.size() + sys.equalities.size();
  out << "H-representation\n";
  if (!sys.equalities.empty()) {
    out << "linearity " << sys.equalities.size();
    for (std::size_t i = 0; i < sys.equalities.size(); ++i) out << ' ' << sys.inequalities.size() + i + 1;
    out << '\n';
  }
  out << "begin\n" << rows << ' ' << sys.coordinates + 1 << " integer\n";
  auto emit = [&](const Inequality& r) {
    // a.x >= b is written as -b + a.x >= 0.
    const std::int64_t sign = r.sense == Sense::Ge ? -1 : 1;
    out << sign * r.rhs;
    for (auto c : r.coeffs) out << ' ' << -sign * c;
    out << '\n';
  };
  for (const auto& r : sys.inequalities) emit(r);
  for (const auto& r : sys.equalities) emit(r);
  out << "end\n";
  return out.str();
}

std::string to_lp(const FacetSystem& fs, bool relaxed_bounds) {
  const Graph& g = fs.graph;
  const auto& sys = fs.system;
  std::vector<std::string> names;
  std::set<std::string> taken;
  for (const auto& e : g.edges()) {
    names.push_back(lp_name(g, e.id, taken));
    taken.insert(names.back());
  }
  std::vector<bool> lower(g.num_edges(), relaxed_bounds);
  std::vector<bool> upper(g.num_edges(), relaxed_bounds);

  auto linear = [&](const Inequality& r) {
    std::ostringstream s;
    bool first = true;
    for (std::size_t e = 0; e < r.coeffs.size(); ++e) {
      const auto c = r.coeffs[e];
      if (c == 0) continue;
      s << (first ? (c < 0 ? "- " : "") : (c < 0 ? " - " : " + "));
      if (std::abs(c) != 1) s << std::abs(c) << ' ';
      s << names[e];
      first = false;
    }
    return s.str();
  };

  std::ostringstream body;
  int count = 0;
  for (const auto& r : sys.inequalities) {
    const auto support = r.support();
    if (support.size() == 1 && r.coeffs[support[0]] == 1) {
      if (r.sense == Sense::Le && r.rhs == 1) {
        upper[support[0]] = true;
        continue;
      }
      if (r.sense == Sense::Ge && r.rhs == 0) {
        lower[support[0]] = true;
        continue;
      }
    }
    body << " c" << ++count << ": " << linear(r) << ' ' << sense_text(r.sense) << ' ' << r.rhs << '\n';
  }
  count = 0;
  for (const auto& r : sys.equalities) {
    body << " eq" << ++count << ": " << linear(r) << " = " << r.rhs << '\n';
  }

  std::ostringstream out;
  out << "\\ spanning tree polytope: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  out << "Minimize\n obj:";
  if (!names.empty()) out << " 0 " << names.front();
  out << "\nSubject To\n" << body.str() << "Bounds\n";
  for (std::size_t e = 0; e < names.size(); ++e) {
    if (lower[e] && upper[e]) out << " 0 <= " << names[e] << " <= 1\n";
    else if (lower[e]) out << ' ' << names[e] << " >= 0\n";
    else if (upper[e]) out << " -inf <= " << names[e] << " <= 1\n";
    else out << ' ' << names[e] << " free\n";
  }
  out << "End\n";
  return out.str();
}

std::string format_row(const Inequality& row, const Graph& g) {
  std::ostringstream s;
  bool first = true;
  for (std::size_t e = 0; e < row.coeffs.size(); ++e) {
    const auto c = row.coeffs[e];
    if (c == 0) continue;
    s << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (std::abs(c) != 1) s << std::abs(c) << ' ';
    s << "x(" << g.edge(static_cast<EdgeId>(e)).label << ')';
    first = false;
  }
  if (first) s << '0';
  s << ' ' << sense_text(row.sense) << ' ' << row.rhs;
  return s.str();
}

std::string format_system(const FacetSystem& fs) {
  std::ostringstream out;
  for (const auto& r : fs.system.inequalities) {
    out << format_row(r, fs.graph) << "    [" << kind_name(r.provenance.kind);
    if (r.provenance.complement) out << ", complement";
    out << "]\n";
  }
  for (const auto& r : fs.system.equalities) out << format_row(r, fs.graph) << '\n';
  return out.str();
}

json report_to_json(const VerificationReport& report, const Graph& g, const ConstraintSystem& sys) {
  json rows = json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    json jr = {{"index", i},
               {"row", format_row(sys.inequalities[i], g)},
               {"valid", r.valid},
               {"tight_trees", r.tight_trees},
               {"is_facet", r.is_facet}};
    jr["face_dimension"] = r.face_dimension ? json(*r.face_dimension) : json(nullptr);
    if (r.violating_tree) jr["violating_tree"] = edge_labels(g, r.violating_tree->edges());
    rows.push_back(jr);
  }
  json dups = json::array();
  for (auto [a, b] : report.duplicates) dups.push_back({a, b});
  json missing = json::array();
  for (const auto& f : report.missing_facets) missing.push_back(format_row(f, g));
  return {{"ok", report.ok()},
          {"tree_count", report.tree_count},
          {"polytope_dimension", report.polytope_dimension},
          {"declared_dimension", report.declared_dimension},
          {"equalities_valid", report.equality_valid},
          {"equalities_span_affine_hull", report.equalities_span_affine_hull},
          {"rows", rows},
          {"duplicates", dups},
          {"hull_checked", report.hull_checked},
          {"hull_skipped_reason", report.hull_skipped_reason},
          {"hull_match", report.hull_match},
          {"missing_facets", missing},
          {"extra_rows", report.extra_rows}};
}

std::string report_to_text(const VerificationReport& report, const Graph& g, const ConstraintSystem& sys) {
  std::ostringstream out;
  out << "verification: " << report.tree_count << " spanning trees, polytope dimension "
      << report.polytope_dimension << " (declared " << report.declared_dimension << ")\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    out << "  row " << i << ": " << format_row(sys.inequalities[i], g) << "  ";
    if (!r.valid) {
      out << "INVALID, violated by tree {";
      const auto labels = edge_labels(g, r.violating_tree->edges());
      for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? "," : "") << labels[k];
      out << "}\n";
      continue;
    }
    out << "valid, tight on " << r.tight_trees << ", face dimension ";
    if (r.face_dimension) out << *r.face_dimension;
    else out << "< " << report.polytope_dimension - 1;
    out << (r.is_facet ? ", facet\n" : ", NOT a facet (redundant)\n");
  }
  const bool eq_ok = std::all_of(report.equality_valid.begin(), report.equality_valid.end(), [](bool v) { return v; });
  out << "  equalities: " << (eq_ok ? "valid" : "INVALID") << ", "
      << (report.equalities_span_affine_hull ? "span the affine hull" : "do NOT span the affine hull") << '\n';
  if (report.duplicates.empty()) out << "  duplicates: none\n";
  for (auto [a, b] : report.duplicates) out << "  duplicate: rows " << a << " and " << b << " define the same face\n";
  if (!report.hull_checked) {
    out << "  " << report.hull_skipped_reason << '\n';
  } else if (report.hull_match) {
    out << "  hull: emitted rows equal the facets of the tree hull\n";
  } else {
    out << "  hull: MISMATCH\n";
    for (const auto& f : report.missing_facets) out << "    missing facet: " << format_row(f, g) << '\n';
    for (auto i : report.extra_rows) out << "    row " << i << " is not a hull facet\n";
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

json closure_to_json(const Closure& c, const Graph& g) {
  std::vector<int> ids(c.edges.begin(), c.edges.end());
  json j = {{"kind", c.kind == ClosureKind::Parallel ? "parallel" : "coparallel"},
            {"edges", edge_labels(g, ids)},
            {"essential", c.essential}};
  if (!c.essential) j["witness"] = c.witness;
  return j;
}

json certificate_to_json(const LockedCertificate& c, const Graph& g) {
  std::vector<int> vs(c.vertices.begin(), c.vertices.end());
  std::vector<int> es(c.edges.begin(), c.edges.end());
  return {{"vertices", vertex_labels(g, vs)},
          {"edges", edge_labels(g, es)},
          {"n_h", c.n_h},
          {"m_h", c.m_h},
          {"complement_edges", c.complement.edge_labels()},
          {"n_hbar", c.n_hbar},
          {"m_hbar", c.m_hbar},
          {"boundary_size", c.boundary_size},
          {"outside_connected", c.outside_connected}};
}

json reason_to_json(const NotLockedReason& r, const Graph& g) {
  json j = {{"failed_condition", condition_name(r.failed)}};
  if (r.witness) {
    std::vector<int> l1(r.witness->l1.begin(), r.witness->l1.end());
    std::vector<int> l2(r.witness->l2.begin(), r.witness->l2.end());
    j["counting_witness"] = {{"L1", edge_labels(g, l1)},
                             {"L2", edge_labels(g, l2)},
                             {"n_h", r.witness->n_h},
                             {"n", r.witness->n},
                             {"n_h_l1", r.witness->n_h_l1},
                             {"n_h_l2", r.witness->n_h_l2}};
  }
  return j;
}

json blocks_to_json(const BlockDecomposition& d, const Graph& g) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back({{"vertices", b.vertex_labels()},
                      {"edges", b.edge_labels()},
                      {"bridge", b.num_edges() == 1},
                      {"biconnected", is_biconnected(b)}});
  }
  std::vector<int> bridges(d.bridge_edges.begin(), d.bridge_edges.end());
  std::vector<int> cuts;
  for (VertexId v : cut_vertices(g)) cuts.push_back(v);
  return {{"blocks", blocks}, {"bridges", edge_labels(g, bridges)}, {"cut_vertices", vertex_labels(g, cuts)}};
}

}  // namespace stp
