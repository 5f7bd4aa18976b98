#include "gkmkit/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkmkit/error.hpp"
#include "gkmkit/graph_build.hpp"
#include "gkmkit/matching.hpp"

namespace gkmkit {

namespace {

void require_same_vertices(const FixedPointData& data, const Multigraph& graph) {
  graph.validate();
  std::set<std::string> ids;
  for (const auto& p : data.points()) ids.insert(p.id);
  std::set<std::string> vs(graph.vertices.begin(), graph.vertices.end());
  if (ids != vs) throw Error(ErrorKind::precondition, "graph vertices do not match the fixed point ids");
  for (const auto& e : graph.edges) {
    if (e.label.rank() != data.torus_rank()) {
      throw Error(ErrorKind::dimension, "edge label " + e.label.to_string() + " has wrong length");
    }
  }
}

std::vector<Weight> sorted(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::string join(const std::vector<Weight>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += ws[i].to_string();
  }
  return out + "}";
}

}  // namespace

ValidationReport check_pairing(const FixedPointData& data) {
  // canonical class -> (count of +w, count of -w)
  std::map<Weight, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& p : data.points()) {
    for (const auto& w : p.weights) {
      const Canonical c = canonicalize(w);
      auto& slot = counts[c.weight];
      (c.sign > 0 ? slot.first : slot.second)++;
    }
  }
  CheckResult r{.name = "pairing"};
  for (const auto& [w, n] : counts) {
    if (n.first == n.second) continue;
    const Weight excess = n.first > n.second ? w : -w;
    r.witnesses.push_back({.weight = excess,
                           .message = "occurs " + std::to_string(std::max(n.first, n.second)) + " times but its negative " +
                                      std::to_string(std::min(n.first, n.second)) + " times"});
  }
  return single_check(std::move(r));
}

ValidationReport check_weight_sum_zero(const FixedPointData& data) {
  Weight sum = Weight::zero(data.torus_rank());
  for (const auto& p : data.points()) {
    for (const auto& w : p.weights) sum += w;
  }
  CheckResult r{.name = "weight_sum_zero"};
  if (!sum.is_zero()) r.witnesses.push_back({.weight = sum, .message = "sum of all weights is non-zero"});
  return single_check(std::move(r));
}

ValidationReport check_gkm(const FixedPointData& data) {
  CheckResult r{.name = "gkm"};
  for (const auto& p : data.points()) {
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
      for (std::size_t j = i + 1; j < p.weights.size(); ++j) {
        if (parallel(p.weights[i], p.weights[j])) {
          r.witnesses.push_back({.point = p.id,
                                 .weight = p.weights[j],
                                 .message = p.weights[i].to_string() + " and " + p.weights[j].to_string() +
                                            " are linearly dependent"});
        }
      }
    }
  }
  return single_check(std::move(r));
}

ValidationReport check_unimodular_bases(const FixedPointData& data) {
  CheckResult r{.name = "unimodular_bases"};
  if (data.torus_rank() != data.half_dim()) {
    r.witnesses.push_back({.message = "torus rank " + std::to_string(data.torus_rank()) + " differs from half dimension " +
                                      std::to_string(data.half_dim())});
    return single_check(std::move(r));
  }
  for (const auto& p : data.points()) {
    const Integer det = determinant(p.weights);
    if (det != 1 && det != -1) {
      r.witnesses.push_back({.point = p.id, .message = "weights have determinant " + det.str() + ", not a basis of Z^n"});
    }
  }
  return single_check(std::move(r));
}

ValidationReport check_edge_congruence(const FixedPointData& data, const Multigraph& graph) {
  require_same_vertices(data, graph);
  CheckResult r{.name = "edge_congruence"};
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const Edge& e = graph.edges[i];
    const auto& from = data.at(e.from).weights;
    const auto& to = data.at(e.to).weights;
    auto m = max_bipartite_matching(from.size(), to.size(), [&](std::size_t a, std::size_t b) {
      return congruent_mod(from[a], to[b], e.label);
    });
    if (!is_perfect(m, to.size())) {
      r.witnesses.push_back({.point = e.from,
                             .weight = e.label,
                             .edge = i,
                             .message = "weights at " + e.from + " and " + e.to + " are not congruent modulo " +
                                        e.label.to_string()});
      continue;
    }
    std::string pairs = "edge " + std::to_string(i) + " " + e.from + "->" + e.to + ":";
    for (std::size_t a = 0; a < m.size(); ++a) pairs += " " + from[a].to_string() + "<->" + to[*m[a]].to_string();
    r.evidence.push_back(std::move(pairs));
  }
  return single_check(std::move(r));
}

ValidationReport check_describes(const FixedPointData& data, const Multigraph& graph) {
  require_same_vertices(data, graph);
  std::map<std::string, std::vector<Weight>> induced;
  for (const auto& e : graph.edges) {
    induced[e.from].push_back(e.label);
    induced[e.to].push_back(-e.label);
  }
  CheckResult r{.name = "describes"};
  for (const auto& p : data.points()) {
    const auto want = sorted(p.weights);
    const auto got = sorted(induced[p.id]);
    if (want != got) {
      r.witnesses.push_back({.point = p.id, .message = "graph induces " + join(got) + " but the data has " + join(want)});
    }
  }
  ValidationReport out = single_check(std::move(r));
  ValidationReport cong = check_edge_congruence(data, graph);
  cong.checks.front().note = "congruence modulo each label stands in for the isotropy-component condition";
  out.append(cong);
  return out;
}

ValidationReport check_simple(const Multigraph& graph) {
  CheckResult r{.name = "simple"};
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const Edge& e = graph.edges[i];
    if (e.from == e.to) {
      r.witnesses.push_back({.point = e.from, .weight = e.label, .edge = i, .message = "self-loop"});
      continue;
    }
    auto key = std::minmax(e.from, e.to);
    auto [it, inserted] = seen.try_emplace({key.first, key.second}, i);
    if (!inserted) {
      r.witnesses.push_back({.weight = e.label,
                             .edge = i,
                             .message = "parallel to edge " + std::to_string(it->second) + " between " + key.first +
                                        " and " + key.second});
    }
  }
  return single_check(std::move(r));
}

ValidationReport validate_all(const FixedPointData& data, const Multigraph* graph) {
  ValidationReport report = check_pairing(data);
  const bool pairing_ok = report.passed();
  report.append(check_weight_sum_zero(data));
  report.append(check_gkm(data));
  if (data.torus_manifold()) {
    report.append(check_unimodular_bases(data));
    // A torus manifold is described by a simple graph in which each vertex has n distinct neighbours.
    CheckResult built{.name = "torus_graph"};
    if (!pairing_ok) {
      built.witnesses.push_back({.message = "no describing graph can be built: pairing fails"});
    } else {
      try {
        const BuildResult b = build_multigraph(data);
        const ValidationReport simple = check_simple(b.graph);
        for (const auto& c : simple.checks.front().witnesses) built.witnesses.push_back(c);
      } catch (const Error& e) {
        built.witnesses.push_back({.message = e.what()});
      }
    }
    report.append(single_check(std::move(built)));
  }
  if (graph != nullptr) {
    report.append(check_describes(data, *graph));
    if (data.torus_manifold()) report.append(check_simple(*graph));
  }
  return report;
}

}  // namespace gkmkit
