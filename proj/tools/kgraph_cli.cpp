// kgraph: command-line front end. Exit codes: 0 holds, 1 property fails,
// 2 input error, 3 guard exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "kgraph/boundary.hpp"
#include "kgraph/ck_rep.hpp"
#include "kgraph/ideals.hpp"
#include "kgraph/io.hpp"
#include "kgraph/path_spaces.hpp"
#include "kgraph/span.hpp"

namespace {

using namespace kgraph;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "kgraph-cli/1";
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;
constexpr int kGuard = 3;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLocallyConvex:
    case ErrorCode::NotSaturated:
    case ErrorCode::NotHereditary:
      return kFails;
    case ErrorCode::TooLarge:
    case ErrorCode::InfiniteBoundary:
      return kGuard;
    default:
      return kInputError;
  }
}

struct Report {
  bool as_json = false;
  json doc;
  std::ostringstream text;

  explicit Report(bool j, const std::string& command) : as_json(j) {
    doc["schema"] = kSchema;
    doc["command"] = command;
  }
  void emit(std::ostream& out) const {
    if (as_json)
      out << doc.dump(2) << '\n';
    else
      out << text.str();
  }
};

KGraph load(const std::string& file) {
  Document d = parse_file(file);
  return validate(std::move(d.skeleton), std::move(d.squares));
}

VertexId vertex_arg(const KGraph& g, const std::string& name) {
  auto v = g.skeleton().find_vertex(name);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
  return *v;
}

Degree degree_arg(const KGraph& g, const std::string& text) {
  Degree d;
  try {
    d = Degree::parse(text);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::SyntaxError, "bad degree '" + text + "'");
  }
  if (d.size() != g.k())
    throw Error(ErrorCode::DegreeMismatch, "degree " + d.to_string() + " does not have " + std::to_string(g.k()) + " entries");
  return d;
}

std::string path_text(const KGraph& g, const Path& p) { return p.degree().to_string() + " " + g.describe(p); }

json path_json(const KGraph& g, const Path& p) {
  json out;
  out["degree"] = p.degree().entries();
  out["range"] = g.skeleton().vertex_name(p.range());
  out["source"] = g.skeleton().vertex_name(p.source());
  json edges = json::array();
  for (EdgeId e : p.edges()) edges.push_back(g.skeleton().edge(e).id);
  out["edges"] = std::move(edges);
  return out;
}

std::string witness_text(const Skeleton& sk, const ConvexityWitness& w) {
  return "(" + sk.vertex_name(w.vertex) + "," + std::to_string(w.i) + "," + std::to_string(w.j) + "," +
         sk.edge(w.lambda).id + "," + sk.edge(w.mu).id + ")";
}

int cmd_validate(Report& r, const std::string& file) {
  const KGraph g = load(file);
  const auto convex = is_locally_convex(g);
  r.doc["k"] = g.k();
  r.doc["vertices"] = g.vertex_count();
  r.doc["edges"] = g.skeleton().edge_count();
  r.doc["squares"] = g.squares().size();
  r.doc["locally_convex"] = convex.locally_convex;
  json witnesses = json::array();
  for (const auto& w : convex.witnesses) witnesses.push_back(witness_text(g.skeleton(), w));
  r.doc["witnesses"] = std::move(witnesses);
  r.text << "valid " << g.k() << "-graph: " << g.vertex_count() << " vertices, " << g.skeleton().edge_count()
         << " edges, " << g.squares().size() << " squares\n";
  if (convex.locally_convex) {
    r.text << "locally convex\n";
    return kHolds;
  }
  r.text << "not locally convex\n";
  for (const auto& w : convex.witnesses) r.text << "witness " << witness_text(g.skeleton(), w) << "\n";
  return kFails;
}

int print_paths(Report& r, const KGraph& g, const std::vector<Path>& paths) {
  r.doc["count"] = paths.size();
  json list = json::array();
  for (const Path& p : paths) list.push_back(path_json(g, p));
  r.doc["paths"] = std::move(list);
  r.text << paths.size() << " paths\n";
  for (const Path& p : paths) r.text << path_text(g, p) << "\n";
  return kHolds;
}

int cmd_paths(Report& r, const std::string& file, const std::string& vertex, const std::string& degree) {
  const KGraph g = load(file);
  return print_paths(r, g, paths_of_degree(g, vertex_arg(g, vertex), degree_arg(g, degree)));
}

int cmd_le_paths(Report& r, const std::string& file, const std::string& vertex, const std::string& cap) {
  const KGraph g = load(file);
  return print_paths(r, g, le_paths(g, vertex_arg(g, vertex), degree_arg(g, cap)));
}

int cmd_boundary(Report& r, const std::string& file, const std::string& vertex, const std::string& cap) {
  const KGraph g = load(file);
  const auto paths = boundary_paths(g, vertex_arg(g, vertex), degree_arg(g, cap));
  std::size_t complete = 0;
  json list = json::array();
  for (const auto& x : paths) {
    complete += x.complete();
    json item = path_json(g, x.prefix);
    item["exhausted"] = x.exhausted;
    item["complete"] = x.complete();
    list.push_back(std::move(item));
  }
  r.doc["count"] = paths.size();
  r.doc["complete"] = complete;
  r.doc["paths"] = std::move(list);
  r.text << paths.size() << " boundary paths (" << complete << " complete)\n";
  for (const auto& x : paths) {
    r.text << path_text(g, x.prefix) << (x.complete() ? " complete" : " truncated") << " exhausted=";
    for (bool e : x.exhausted) r.text << (e ? '1' : '0');
    r.text << "\n";
  }
  return kHolds;
}

int cmd_squares(Report& r, const std::string& file) {
  Document d = parse_file(file);
  const auto tables = enumerate_square_sets(d.skeleton);
  json list = json::array();
  r.text << tables.size() << " square sets\n";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    json rows = json::array();
    r.text << "set " << t + 1 << ":\n";
    for (const Square& s : tables[t]) {
      const auto& sk = d.skeleton;
      const std::array<std::string, 4> ids{sk.edge(s.outer_lo).id, sk.edge(s.inner_lo).id, sk.edge(s.outer_hi).id,
                                           sk.edge(s.inner_hi).id};
      rows.push_back(ids);
      r.text << "  square " << ids[0] << " " << ids[1] << " " << ids[2] << " " << ids[3] << "\n";
    }
    list.push_back(std::move(rows));
  }
  r.doc["count"] = tables.size();
  r.doc["square_sets"] = std::move(list);
  return kHolds;
}

json violations_json(const std::vector<RelationViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"relation", v.relation}, {"description", v.description}});
  return out;
}

int cmd_ck_verify(Report& r, const std::string& file, const std::string& cap_text) {
  const KGraph g = load(file);
  const Degree cap = degree_arg(g, cap_text);
  const CKRep rep = build_rep(g);
  const auto relations = verify_ck_relations(rep, cap);
  const auto edge_level = verify_edge_level_relations(rep);
  const auto spanning = verify_spanning_formula(rep, cap);
  const std::size_t dim = span_dimension(rep);
  r.doc["basis_size"] = rep.dimension();
  r.doc["relations"] = violations_json(relations);
  r.doc["edge_level"] = violations_json(edge_level);
  r.doc["spanning"] = violations_json(spanning);
  r.doc["span_dimension"] = dim;
  r.text << "basis of " << rep.dimension() << " boundary paths\n";
  for (const auto* vs : {&relations, &edge_level, &spanning})
    for (const auto& v : *vs) r.text << "violation [" << v.relation << "] " << v.description << "\n";
  r.text << (relations.empty() ? "relations (1)-(4) verified" : "relations (1)-(4) FAILED") << "; "
         << (spanning.empty() ? "spanning formula verified" : "spanning formula FAILED") << "; span dimension "
         << dim << "\n";
  return relations.empty() && edge_level.empty() && spanning.empty() ? kHolds : kFails;
}

int cmd_forced_zeros(Report& r, const std::string& file) {
  const KGraph g = load(file);
  const auto zeros = forced_zero_generators(g);
  json list = json::array();
  for (const Path& p : zeros) list.push_back(g.describe(p));
  r.doc["forced_zero"] = std::move(list);
  r.text << zeros.size() << " forced zero generators\n";
  for (const Path& p : zeros) r.text << g.describe(p) << "\n";
  return zeros.empty() ? kHolds : kFails;
}

int cmd_core(Report& r, const std::string& file, const std::string& q_text) {
  const KGraph g = load(file);
  const auto report = core_report(g, degree_arg(g, q_text));
  const auto& sk = g.skeleton();
  json blocks = json::array();
  r.text << report.blocks.size() << " blocks, total dimension " << report.total_dimension() << "\n";
  for (const auto& b : report.blocks) {
    blocks.push_back({{"p", b.p.entries()}, {"vertex", sk.vertex_name(b.vertex)}, {"dimension", b.dimension}});
    r.text << "block p=" << b.p.to_string() << " v=" << sk.vertex_name(b.vertex) << " dim " << b.dimension << "\n";
  }
  json inclusions = json::array();
  for (const auto& inc : report.inclusions) {
    inclusions.push_back({{"level", inc.level.entries()},
                          {"from_p", inc.from_p.entries()},
                          {"from_vertex", sk.vertex_name(inc.from_vertex)},
                          {"to_p", inc.to_p.entries()},
                          {"to_vertex", sk.vertex_name(inc.to_vertex)},
                          {"multiplicity", inc.multiplicity}});
    r.text << "inclusion level " << inc.level.to_string() << ": (" << inc.from_p.to_string() << ","
           << sk.vertex_name(inc.from_vertex) << ") -> (" << inc.to_p.to_string() << ","
           << sk.vertex_name(inc.to_vertex) << ") x" << inc.multiplicity << "\n";
  }
  r.doc["q"] = report.q.entries();
  r.doc["total_dimension"] = report.total_dimension();
  r.doc["blocks"] = std::move(blocks);
  r.doc["inclusions"] = std::move(inclusions);
  return kHolds;
}

int cmd_condition_b(Report& r, const std::string& file, const std::string& depth_text, const std::string& vertex) {
  const KGraph g = load(file);
  const Degree depth = degree_arg(g, depth_text);
  std::vector<VertexId> targets;
  if (vertex.empty())
    for (VertexId v = 0; v < g.vertex_count(); ++v) targets.push_back(v);
  else
    targets.push_back(vertex_arg(g, vertex));
  bool all_hold = true;
  json list = json::array();
  for (VertexId v : targets) {
    const auto result = condition_b_check(g, v, depth);
    all_hold = all_hold && result.verdict != ConditionBVerdict::RefutedToDepth;
    json item{{"vertex", g.skeleton().vertex_name(v)}, {"verdict", to_string(result.verdict)}};
    r.text << g.skeleton().vertex_name(v) << ": " << to_string(result.verdict);
    if (result.witness) {
      item["witness"] = path_json(g, result.witness->prefix);
      r.text << " x=" << path_text(g, result.witness->prefix);
    }
    if (result.collision) {
      item["collision"] = {g.describe(result.collision->first), g.describe(result.collision->second)};
      r.text << " collision " << g.describe(result.collision->first) << " / " << g.describe(result.collision->second);
    }
    r.text << "\n";
    list.push_back(std::move(item));
  }
  r.doc["depth"] = depth.entries();
  r.doc["vertices"] = std::move(list);
  return all_hold ? kHolds : kFails;
}

int cmd_ideals(Report& r, const std::string& file) {
  const KGraph g = load(file);
  const auto lattice = enumerate_sat_hered(g);
  json list = json::array();
  r.text << lattice.size() << " saturated hereditary sets\n";
  for (const auto& h : lattice) {
    json members = json::array();
    for (VertexId v : h.members()) members.push_back(g.skeleton().vertex_name(v));
    list.push_back(std::move(members));
    r.text << "{" << h.describe(g.skeleton()) << "}\n";
  }
  r.doc["count"] = lattice.size();
  r.doc["sets"] = std::move(list);
  return kHolds;
}

int cmd_subgraph(Report& r, const std::string& file, const std::string& set, bool quotient) {
  const KGraph g = load(file);
  const VertexSet h = parse_vertex_set(g, set);
  const KGraph out = quotient ? quotient_graph(g, h) : restriction_graph(g, h);
  const auto convex = is_locally_convex(out);
  r.doc["locally_convex"] = convex.locally_convex;
  r.doc["document"] = serialise(out);
  r.text << serialise(out);
  return kHolds;
}

int cmd_export_dot(Report& r, const std::string& file) {
  const KGraph g = load(file);
  const std::string dot = export_dot(g);
  r.doc["dot"] = dot;
  r.text << dot;
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite k-graphs: validation, path spaces, Cuntz-Krieger relations, ideals"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, vertex, degree, set;
  bool enumerate = false, list = false;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Graph document")->required();
    sub->fallthrough();
    return sub;
  };
  auto* validate_cmd = with_file(app.add_subcommand("validate", "Validate and check local convexity"));
  auto* paths_cmd = with_file(app.add_subcommand("paths", "List Lambda^m(v)"));
  paths_cmd->add_option("--vertex", vertex)->required();
  paths_cmd->add_option("--degree", degree)->required();
  auto* le_cmd = with_file(app.add_subcommand("le-paths", "List Lambda^{<=q}(v)"));
  le_cmd->add_option("--vertex", vertex)->required();
  le_cmd->add_option("--cap", degree)->required();
  auto* boundary_cmd = with_file(app.add_subcommand("boundary", "List boundary paths up to a cap"));
  boundary_cmd->add_option("--vertex", vertex)->required();
  boundary_cmd->add_option("--cap", degree)->required();
  auto* squares_cmd = with_file(app.add_subcommand("squares", "Square tables compatible with the skeleton"));
  squares_cmd->add_flag("--enumerate", enumerate)->required();
  auto* ck_cmd = with_file(app.add_subcommand("ck-verify", "Build the boundary-path representation and verify"));
  ck_cmd->add_option("--cap", degree)->required();
  auto* zeros_cmd = with_file(app.add_subcommand("forced-zeros", "Generators forced to vanish"));
  auto* core_cmd = with_file(app.add_subcommand("core", "Core block structure at level q"));
  core_cmd->add_option("--q", degree)->required();
  auto* b_cmd = with_file(app.add_subcommand("condition-b", "Bounded condition (B) check"));
  b_cmd->add_option("--depth", degree)->required();
  b_cmd->add_option("--vertex", vertex, "Only this vertex");
  auto* ideals_cmd = with_file(app.add_subcommand("ideals", "Saturated hereditary vertex sets"));
  ideals_cmd->add_flag("--list", list)->required();
  auto* quotient_cmd = with_file(app.add_subcommand("quotient", "Quotient graph by a saturated hereditary set"));
  quotient_cmd->add_option("--set", set)->required();
  auto* restrict_cmd = with_file(app.add_subcommand("restrict", "Restriction to a hereditary set"));
  restrict_cmd->add_option("--set", set)->required();
  auto* dot_cmd = with_file(app.add_subcommand("export-dot", "Graphviz rendering"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  auto* sub = app.get_subcommands().front();
  Report report(as_json, sub->get_name());
  int code = kHolds;
  try {
    if (sub == validate_cmd) code = cmd_validate(report, file);
    else if (sub == paths_cmd) code = cmd_paths(report, file, vertex, degree);
    else if (sub == le_cmd) code = cmd_le_paths(report, file, vertex, degree);
    else if (sub == boundary_cmd) code = cmd_boundary(report, file, vertex, degree);
    else if (sub == squares_cmd) code = cmd_squares(report, file);
    else if (sub == ck_cmd) code = cmd_ck_verify(report, file, degree);
    else if (sub == zeros_cmd) code = cmd_forced_zeros(report, file);
    else if (sub == core_cmd) code = cmd_core(report, file, degree);
    else if (sub == b_cmd) code = cmd_condition_b(report, file, degree, vertex);
    else if (sub == ideals_cmd) code = cmd_ideals(report, file);
    else if (sub == quotient_cmd) code = cmd_subgraph(report, file, set, true);
    else if (sub == restrict_cmd) code = cmd_subgraph(report, file, set, false);
    else if (sub == dot_cmd) code = cmd_export_dot(report, file);
  } catch (const Error& e) {
    code = exit_code(e.code());
    if (code == kFails) {
      // A failed property is a result, not a crash: report it on stdout.
      report.doc["error"] = e.what();
      report.text << e.what() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
      return code;
    }
  }
  report.doc["exit_code"] = code;
  report.emit(std::cout);
  return code;
}
