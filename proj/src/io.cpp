#include "gkmkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

using json = nlohmann::json;

// DOM builder that keeps integer literals too large for 64 bits as their digit strings,
// tagged so they can be told apart from genuine JSON strings.
constexpr std::string_view kBigIntTag = "\x01bigint:";

class BigIntDomParser : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_float(double value, const std::string& raw) {
    const bool integral = !raw.empty() && std::all_of(raw.begin() + (raw[0] == '-' ? 1 : 0), raw.end(),
                                                      [](char c) { return c >= '0' && c <= '9'; });
    if (integral) {
      std::string tagged = std::string(kBigIntTag) + raw;
      return Base::string(tagged);
    }
    return Base::number_float(value, raw);
  }
};

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::parse, msg); }

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

Integer to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.rfind(kBigIntTag, 0) == 0) return Integer(s.substr(kBigIntTag.size()));
  }
  fail(where + ": expected an integer");
}

std::size_t to_size(const json& v, const char* key) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Weight to_weight(const json& v, std::size_t rank, const std::string& where) {
  if (!v.is_array()) fail(where + ": weight must be an array of integers");
  if (v.size() != rank) {
    throw Error(ErrorKind::dimension, where + ": weight has " + std::to_string(v.size()) + " entries, expected " +
                                          std::to_string(rank));
  }
  std::vector<Integer> entries;
  entries.reserve(v.size());
  for (const auto& e : v) entries.push_back(to_integer(e, where));
  return Weight(std::move(entries));
}

std::string to_id(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + ": id must be a string");
  const auto& s = v.get_ref<const std::string&>();
  if (s.rfind(kBigIntTag, 0) == 0) fail(where + ": id must be a string");
  return s;
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string weight_json(const Weight& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ",";
    out += w[i].str();
  }
  return out + "]";
}

}  // namespace

Document parse_json(std::string_view text) {
  json root;
  BigIntDomParser sax(root, true);
  try {
    if (!json::sax_parse(text.begin(), text.end(), &sax)) fail("malformed JSON document");
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON document: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");

  const std::size_t rank = to_size(require(root, "torus_rank"), "torus_rank");
  const std::size_t half_dim = to_size(require(root, "half_dim"), "half_dim");
  bool torus_manifold = false;
  if (auto it = root.find("torus_manifold"); it != root.end()) {
    if (!it->is_boolean()) fail("\"torus_manifold\" must be a boolean");
    torus_manifold = it->get<bool>();
  }

  const json& fps = require(root, "fixed_points");
  if (!fps.is_array()) fail("\"fixed_points\" must be an array");
  std::vector<FixedPoint> points;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    const json& fp = fps[i];
    const std::string where = "fixed_points[" + std::to_string(i) + "]";
    if (!fp.is_object()) fail(where + " must be an object");
    FixedPoint p;
    p.id = to_id(require(fp, "id"), where);
    const json& ws = require(fp, "weights");
    if (!ws.is_array()) fail(where + ": \"weights\" must be an array");
    for (const auto& w : ws) p.weights.push_back(to_weight(w, rank, where + " (" + p.id + ")"));
    points.push_back(std::move(p));
  }

  Document doc{FixedPointData(rank, half_dim, std::move(points), torus_manifold), std::nullopt};

  if (auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) fail("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_object()) fail(where + " must be an object");
      edges.push_back({to_id(require(e, "from"), where), to_id(require(e, "to"), where),
                       to_weight(require(e, "label"), rank, where)});
    }
    doc.graph = make_graph(doc.data, std::move(edges));
  }
  return doc;
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string serialize_json(const FixedPointData& data, const Multigraph* graph) {
  std::vector<FixedPoint> points = data.points();
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  std::string out = "{\n";
  out += "  \"torus_rank\": " + std::to_string(data.torus_rank()) + ",\n";
  out += "  \"half_dim\": " + std::to_string(data.half_dim()) + ",\n";
  out += std::string("  \"torus_manifold\": ") + (data.torus_manifold() ? "true" : "false") + ",\n";
  out += "  \"fixed_points\": [";
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto ws = points[i].weights;
    std::sort(ws.begin(), ws.end());
    out += i ? ",\n" : "\n";
    out += "    {\"id\": " + quote(points[i].id) + ", \"weights\": [";
    for (std::size_t j = 0; j < ws.size(); ++j) out += (j ? "," : "") + weight_json(ws[j]);
    out += "]}";
  }
  out += points.empty() ? "]" : "\n  ]";
  if (graph != nullptr) {
    auto edges = graph->edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });
    out += ",\n  \"edges\": [";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out += i ? ",\n" : "\n";
      out += "    {\"from\": " + quote(edges[i].from) + ", \"to\": " + quote(edges[i].to) +
             ", \"label\": " + weight_json(edges[i].label) + "}";
    }
    out += edges.empty() ? "]" : "\n  ]";
  }
  out += "\n}\n";
  return out;
}

std::string label_text(const Weight& w) {
  if (w.rank() == 1) return w[0].str();
  return w.to_string();
}

std::string to_dot(const Multigraph& graph, const std::string& name) {
  std::string out = "digraph " + quote(name) + " {\n";
  for (const auto& v : graph.vertices) out += "  " + quote(v) + ";\n";
  for (const auto& e : graph.edges) {
    out += "  " + quote(e.from) + " -> " + quote(e.to) + " [label=" + quote(label_text(e.label)) + "];\n";
  }
  return out + "}\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::parse, "write failed for " + path.string());
}

}  // namespace gkmkit
