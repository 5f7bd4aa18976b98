#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gkmkit/fpdata.hpp"

namespace gkmkit {

/// A parsed input file: fixed-point data plus an optional edge list.
struct Document {
  FixedPointData data;
  std::optional<Multigraph> graph;
};

/// Parses the canonical JSON schema:
///   { "torus_rank": k, "half_dim": n, "torus_manifold": bool,
///     "fixed_points": [ {"id": "p0", "weights": [[1,0],[0,1]]}, ... ],
///     "edges": [ {"from": "p0", "to": "p1", "label": [1,0]}, ... ] }   // optional
/// Integers of any size are accepted. Throws Error (parse, dimension, duplicate_id,
/// invalid_weight, precondition).
Document parse_json(std::string_view text);
Document read_document(const std::filesystem::path& path);

/// Byte-stable canonical form: points sorted by id, weights sorted lexicographically within
/// each point, edges sorted by (from, to, label).
std::string serialize_json(const FixedPointData& data, const Multigraph* graph = nullptr);

/// Graphviz digraph; labels are "(a,b,...)" for k >= 2 and bare integers for k = 1.
std::string to_dot(const Multigraph& graph, const std::string& name = "G");

/// Weight rendering used by DOT labels and text output.
std::string label_text(const Weight& w);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace gkmkit
