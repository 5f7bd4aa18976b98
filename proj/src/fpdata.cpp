#include "gkmkit/fpdata.hpp"

#include <set>

#include "gkmkit/error.hpp"

namespace gkmkit {

FixedPointData::FixedPointData(std::size_t torus_rank, std::size_t half_dim, std::vector<FixedPoint> points,
                               bool torus_manifold)
    : torus_rank_(torus_rank), half_dim_(half_dim), torus_manifold_(torus_manifold), points_(std::move(points)) {
  if (torus_rank_ == 0) throw Error(ErrorKind::dimension, "torus_rank must be >= 1");
  if (torus_manifold_ && torus_rank_ != half_dim_) {
    throw Error(ErrorKind::dimension, "torus_manifold requires torus_rank == half_dim (got k=" +
                                          std::to_string(torus_rank_) + ", n=" + std::to_string(half_dim_) + ")");
  }
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p.id).second) throw Error(ErrorKind::duplicate_id, "duplicate fixed point id '" + p.id + "'");
    if (p.weights.size() != half_dim_) {
      throw Error(ErrorKind::dimension, "point '" + p.id + "' has " + std::to_string(p.weights.size()) +
                                            " weights, expected " + std::to_string(half_dim_));
    }
    for (const auto& w : p.weights) {
      if (w.rank() != torus_rank_) {
        throw Error(ErrorKind::dimension, "point '" + p.id + "': weight " + w.to_string() + " has length " +
                                              std::to_string(w.rank()) + ", expected " + std::to_string(torus_rank_));
      }
      if (w.is_zero()) throw Error(ErrorKind::invalid_weight, "point '" + p.id + "' has a zero weight");
    }
  }
}

std::optional<std::size_t> FixedPointData::find(const std::string& id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id == id) return i;
  }
  return std::nullopt;
}

const FixedPoint& FixedPointData::at(const std::string& id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorKind::precondition, "no fixed point with id '" + id + "'");
  return points_[*i];
}

std::vector<Weight> FixedPointData::all_weights() const {
  std::vector<Weight> out;
  out.reserve(points_.size() * half_dim_);
  for (const auto& p : points_) out.insert(out.end(), p.weights.begin(), p.weights.end());
  return out;
}

void Multigraph::validate() const {
  std::set<std::string> ids(vertices.begin(), vertices.end());
  if (ids.size() != vertices.size()) throw Error(ErrorKind::duplicate_id, "multigraph has duplicate vertices");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!ids.count(e.from) || !ids.count(e.to)) {
      throw Error(ErrorKind::precondition, "edge " + std::to_string(i) + " (" + e.from + " -> " + e.to +
                                               ") has an endpoint that is not a vertex");
    }
    if (e.label.is_zero()) throw Error(ErrorKind::invalid_weight, "edge " + std::to_string(i) + " has a zero label");
  }
}

Multigraph make_graph(const FixedPointData& data, std::vector<Edge> edges) {
  Multigraph g;
  for (const auto& p : data.points()) g.vertices.push_back(p.id);
  g.edges = std::move(edges);
  g.validate();
  return g;
}

}  // namespace gkmkit
