// gkmkit command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gkmkit/catalog.hpp"
#include "gkmkit/checks.hpp"
#include "gkmkit/error.hpp"
#include "gkmkit/genus.hpp"
#include "gkmkit/graph_build.hpp"
#include "gkmkit/io.hpp"
#include "gkmkit/localization.hpp"
#include "gkmkit/petrie.hpp"

using namespace gkmkit;
using nlohmann::ordered_json;

namespace {

enum Exit : int { ok = 0, semantic = 2, precondition = 3, io = 4, usage = 64 };

struct LoadFailure {
  Error error;
};

Document load(const std::string& path) {
  try {
    return read_document(path);
  } catch (const Error& e) {
    throw LoadFailure{e};
  }
}

ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

ordered_json weight_json(const Weight& w) {
  ordered_json out = ordered_json::array();
  for (const auto& x : w.entries()) out.push_back(integer_json(x));
  return out;
}

ordered_json report_json(const ValidationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : c.witnesses) {
      ordered_json j;
      if (!w.point.empty()) j["point"] = w.point;
      if (w.weight) j["weight"] = weight_json(*w.weight);
      if (w.edge) j["edge"] = *w.edge;
      j["message"] = w.message;
      witnesses.push_back(std::move(j));
    }
    ordered_json j{{"name", c.name}, {"passed", c.passed}, {"witnesses", std::move(witnesses)}};
    if (!c.evidence.empty()) j["evidence"] = c.evidence;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

Weight parse_vector(const std::string& text) {
  std::vector<Integer> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      entries.emplace_back(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad integer '" + item + "' in vector '" + text + "'");
    }
  }
  if (entries.empty()) throw CLI::ValidationError("empty vector");
  return Weight(std::move(entries));
}

// "1,0;0,1" -> two vectors.
std::vector<Weight> parse_vectors(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(parse_vector(item));
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int cmd_validate(const std::string& path, bool as_json) {
  const Document doc = load(path);
  const ValidationReport report = validate_all(doc.data, doc.graph ? &*doc.graph : nullptr);
  if (as_json) {
    std::cout << report_json(report).dump(2) << "\n";
  } else {
    std::cout << report.to_string() << (report.passed() ? "valid\n" : "invalid\n");
  }
  return report.passed() ? ok : semantic;
}

int cmd_genus(const std::string& path, const std::string& xi_text, bool as_json) {
  const Document doc = load(path);
  const FixedPointData& data = doc.data;
  const Weight xi = xi_text.empty() ? default_circle(data) : parse_vector(xi_text);
  if (xi.rank() != data.torus_rank()) {
    throw Error(ErrorKind::dimension, "circle " + xi.to_string() + " has length " + std::to_string(xi.rank()) +
                                          ", torus rank is " + std::to_string(data.torus_rank()));
  }
  const ChiYPolynomial chi = chi_y(data, xi);

  ValidationReport checks = check_pairing(data);
  checks.append(check_symmetry(data));
  if (data.torus_manifold() && check_unimodular_bases(data).passed()) checks.append(check_positivity(data));

  if (as_json) {
    ordered_json j{{"circle", weight_json(xi)},
                   {"chi_y", chi.to_string()},
                   {"coefficients", chi.coeffs()},
                   {"euler", chi.euler()},
                   {"todd", chi.todd()},
                   {"signature", chi.signature()},
                   {"checks", report_json(checks)["checks"]}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "circle: " << xi.to_string() << "\n"
              << "chi_y: " << chi.to_string() << "\n"
              << "euler: " << chi.euler() << "\n"
              << "todd: " << chi.todd() << "\n"
              << "signature: " << chi.signature() << "\n"
              << checks.to_string();
  }
  return checks.passed() ? ok : semantic;
}

int cmd_chern(const std::string& path, const std::string& partition_text, bool all, EvalMode mode, bool as_json) {
  const Document doc = load(path);
  std::map<Partition, Integer> values;
  std::vector<std::string> problems;
  if (!partition_text.empty() && !all) {
    const Partition p = parse_partition(partition_text);
    values[p] = chern_number(doc.data, p, mode);
  } else {
    ChernReport report = chern_numbers(doc.data, mode);
    values = std::move(report.values);
    problems = std::move(report.problems);
  }
  if (as_json) {
    ordered_json rows = ordered_json::array();
    for (const auto& [p, v] : values) rows.push_back({{"partition", p.parts}, {"value", integer_json(v)}});
    ordered_json j{{"mode", std::string(to_string(mode))}, {"chern_numbers", std::move(rows)}, {"problems", problems}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mode: " << to_string(mode) << "\n";
    for (const auto& [p, v] : values) std::cout << "c[" << p.to_string() << "] = " << to_string(v) << "\n";
    for (const auto& p : problems) std::cout << "problem: " << p << "\n";
  }
  return problems.empty() ? ok : semantic;
}

int petrie_exit(PetrieVerdict v) {
  switch (v) {
    case PetrieVerdict::match: return ok;
    case PetrieVerdict::no_match: return semantic;
    case PetrieVerdict::precondition_failed: return precondition;
  }
  return precondition;
}

int cmd_petrie(const std::string& path, bool up_to_gl, bool as_json, EvalMode mode) {
  const Document doc = load(path);
  PetrieOptions options;
  options.up_to_gl = up_to_gl;
  options.mode = mode;
  const PetrieReport r = petrie_verify(doc.data, doc.graph ? &*doc.graph : nullptr, options);
  const bool matched = r.verdict == PetrieVerdict::match;
  const auto relations = matched ? gkm_relations(r) : std::vector<GkmRelation>{};

  if (as_json) {
    ordered_json j{{"verdict", std::string(to_string(r.verdict))}};
    if (!r.base_point.empty()) j["base_point"] = r.base_point;
    if (!r.witness.empty()) j["witness"] = r.witness;
    j["base_point_independent"] = r.base_point_independent;
    if (matched) {
      j["order"] = r.order;
      ordered_json basis = ordered_json::array();
      for (const auto& w : r.basis) basis.push_back(weight_json(w));
      j["basis"] = std::move(basis);
      ordered_json simplex = ordered_json::array();
      for (const auto& w : r.simplex) simplex.push_back(weight_json(w));
      j["simplex"] = std::move(simplex);
      ordered_json rel = ordered_json::array();
      for (const auto& g : relations) rel.push_back({{"from", g.from}, {"to", g.to}, {"divisor", weight_json(g.divisor)}});
      j["gkm_relations"] = std::move(rel);
    }
    if (r.gl_equivalent) j["gl_equivalent"] = *r.gl_equivalent;
    if (r.invariants) {
      const InvariantTable& t = *r.invariants;
      ordered_json chern = ordered_json::array();
      for (const auto& [p, v] : t.chern_numbers) chern.push_back({{"partition", p.parts}, {"value", integer_json(v)}});
      j["invariants"] = {{"chi_y", t.chi_y.coeffs()},     {"euler", t.euler},
                         {"todd", t.todd},                {"signature", t.signature},
                         {"chern_numbers", std::move(chern)}, {"chern_equal_to_model", t.chern_equal_to_model}};
    }
    std::cout << j.dump(2) << "\n";
    return petrie_exit(r.verdict);
  }

  std::cout << to_string(r.verdict) << "\n";
  if (!r.witness.empty()) std::cout << "witness: " << r.witness << "\n";
  if (matched) {
    std::cout << "base point: " << r.base_point << "\n";
    std::cout << "relabeling:";
    for (std::size_t i = 0; i < r.order.size(); ++i) std::cout << " " << r.order[i] << "->p" << i;
    std::cout << "\nbasis:";
    for (const auto& w : r.basis) std::cout << " " << w.to_string();
    std::cout << "\nsimplex:";
    for (const auto& w : r.simplex) std::cout << " " << w.to_string();
    std::cout << "\ngkm relations:\n";
    for (const auto& g : relations) std::cout << "  f(" << g.to << ") - f(" << g.from << ") in (" << g.divisor.to_string() << ")\n";
  }
  std::cout << "base point independent: " << (r.base_point_independent ? "yes" : "no") << "\n";
  if (r.gl_equivalent) std::cout << "GL(n,Z) equivalent to standard CP^n: " << (*r.gl_equivalent ? "yes" : "no") << "\n";
  if (r.invariants) {
    const InvariantTable& t = *r.invariants;
    std::cout << "chi_y: " << t.chi_y.to_string() << "\n"
              << "euler: " << t.euler << "  todd: " << t.todd << "  signature: " << t.signature << "\n";
    for (const auto& [p, v] : t.chern_numbers) std::cout << "c[" << p.to_string() << "] = " << to_string(v) << "\n";
    std::cout << "Chern numbers equal to the linear model: " << (t.chern_equal_to_model ? "yes" : "no") << "\n";
  }
  return petrie_exit(r.verdict);
}

int cmd_graph(const std::string& path, const std::string& format, bool build) {
  const Document doc = load(path);
  Multigraph graph;
  if (doc.graph && !build) {
    graph = *doc.graph;
  } else {
    const BuildResult built = build_multigraph(doc.data);
    if (!built.loop_free) std::cerr << "note: built graph contains self-loops\n";
    graph = built.graph;
  }
  if (format == "dot") {
    std::cout << to_dot(graph);
  } else {
    std::cout << serialize_json(doc.data, &graph);
  }
  return ok;
}

EvalMode default_mode() {
  const char* env = std::getenv("GKMKIT_MODE");
  if (env == nullptr || *env == '\0') return EvalMode::generic;
  return parse_eval_mode(env);
}

int map_error(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::precondition:
    case ErrorKind::non_generic_point:
    case ErrorKind::degenerate:
    case ErrorKind::dimension:
    case ErrorKind::out_of_range:
      return precondition;
    case ErrorKind::parse:
      return io;
    default:
      return semantic;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point data of torus actions: validation, genera, Chern numbers, rigidity checks."};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "Run every data-model check and print the report");
  validate->add_option("file", file, "input JSON")->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  std::string xi;
  auto* genus = app.add_subcommand("genus", "chi_y genus, Euler number, Todd genus and signature");
  genus->add_option("file", file, "input JSON")->required();
  genus->add_option("--xi", xi, "circle as comma-separated integers (default: deterministic generic point)");
  genus->add_flag("--json", as_json, "machine-readable output");

  std::string partition, mode_text;
  bool all = false;
  auto* chern = app.add_subcommand("chern", "Chern numbers by localization");
  chern->add_option("file", file, "input JSON")->required();
  chern->add_option("--partition", partition, "partition of n, e.g. 1,1,2");
  chern->add_flag("--all", all, "every partition of n (default)");
  chern->add_option("--mode", mode_text, "generic|expanded (default: $GKMKIT_MODE or generic)")
      ->check(CLI::IsMember({"generic", "expanded"}));
  chern->add_flag("--json", as_json, "machine-readable output");

  bool up_to_gl = false;
  auto* petrie = app.add_subcommand("petrie", "Decide whether the data is that of a linear action on CP^n");
  petrie->add_option("file", file, "input JSON")->required();
  petrie->add_flag("--up-to-gl", up_to_gl, "also compare with the standard action after a change of basis");
  petrie->add_flag("--json", as_json, "machine-readable output");

  std::string format = "dot";
  bool build = false;
  auto* graph = app.add_subcommand("graph", "Emit the supplied or built multigraph");
  graph->add_option("file", file, "input JSON")->required();
  graph->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_flag("--build", build, "build the multigraph from the weights even if edges are supplied");

  std::string out_path;
  auto* example = app.add_subcommand("example", "Write a catalog fixture as canonical JSON");
  example->require_subcommand(1);
  example->add_option("--out", out_path, "output file (default: stdout)");

  std::size_t n = 2;
  std::string basis;
  auto* ex_cpn = example->add_subcommand("cpn", "linear action on CP^n");
  ex_cpn->add_option("--n", n, "complex dimension")->check(CLI::Range(0, 64));
  ex_cpn->add_option("--basis", basis, "basis vectors, e.g. 1,0;0,1 (default: standard)");
  auto* ex_nongkm = example->add_subcommand("cp3-nongkm", "T^2 on CP^3, not GKM");
  std::string a = "1,0", b = "0,1";
  auto* ex_s6 = example->add_subcommand("s6", "T^2 on S^6");
  auto* ex_blowup = example->add_subcommand("s6-blowup", "S^6 blown up at a fixed point");
  for (auto* sub : {ex_s6, ex_blowup}) {
    sub->add_option("--a", a, "first weight, e.g. 1,0");
    sub->add_option("--b", b, "second weight, e.g. 0,1");
  }
  std::string variant = "V5";
  auto* ex_fano = example->add_subcommand("fano", "circle action on a Fano 3-fold");
  ex_fano->add_option("--variant", variant, "V5|V22")->check(CLI::IsMember({"V5", "V22"}));
  for (auto* sub : {ex_cpn, ex_nongkm, ex_s6, ex_blowup, ex_fano}) {
    sub->add_option("--out", out_path, "output file (default: stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*validate) return cmd_validate(file, as_json);
    if (*genus) return cmd_genus(file, xi, as_json);
    if (*chern) {
      EvalMode mode;
      try {
        mode = mode_text.empty() ? default_mode() : parse_eval_mode(mode_text);
      } catch (const Error& e) {
        std::cerr << "GKMKIT_MODE: " << e.what() << "\n";
        return usage;
      }
      return cmd_chern(file, partition, all, mode, as_json);
    }
    if (*petrie) {
      EvalMode mode;
      try {
        mode = default_mode();
      } catch (const Error& e) {
        std::cerr << "GKMKIT_MODE: " << e.what() << "\n";
        return usage;
      }
      return cmd_petrie(file, up_to_gl, as_json, mode);
    }
    if (*graph) return cmd_graph(file, format, build);
    if (*example) {
      CatalogEntry entry = [&] {
        if (*ex_cpn) {
          if (basis.empty()) return cpn(n);
          const auto vectors = parse_vectors(basis);
          return cpn(n, vectors);
        }
        if (*ex_nongkm) return cp3_nongkm();
        if (*ex_s6) return s6(parse_vector(a), parse_vector(b));
        if (*ex_blowup) return s6_blowup(parse_vector(a), parse_vector(b));
        return fano(variant == "V22" ? FanoVariant::v22 : FanoVariant::v5);
      }();
      emit(serialize_json(entry.data, entry.graph ? &*entry.graph : nullptr), out_path);
      return ok;
    }
  } catch (const LoadFailure& f) {
    std::cerr << "error: " << f.error.what() << "\n";
    return io;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::parse && *example) return io;
    return map_error(e);
  }
  return usage;
}
