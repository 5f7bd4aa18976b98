#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gkmkit/weight.hpp"

namespace gkmkit {

/// An isolated fixed point and the multiset of its tangent weights.
struct FixedPoint {
  std::string id;
  std::vector<Weight> weights;
};

/// Fixed-point data of a T^k action on a 2n-dimensional almost complex manifold.
///
/// The constructor enforces: k >= 1; every point has exactly n non-zero weights of length k;
/// ids are unique; a torus_manifold flag requires k == n. Unimodularity of the weight sets of
/// a flagged dataset is a reportable check (check_unimodular_bases), not a construction error.
class FixedPointData {
 public:
  FixedPointData(std::size_t torus_rank, std::size_t half_dim, std::vector<FixedPoint> points,
                 bool torus_manifold = false);

  std::size_t torus_rank() const noexcept { return torus_rank_; }
  std::size_t half_dim() const noexcept { return half_dim_; }
  bool torus_manifold() const noexcept { return torus_manifold_; }
  const std::vector<FixedPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Index of the point with this id, or nullopt.
  std::optional<std::size_t> find(const std::string& id) const;
  const FixedPoint& at(const std::string& id) const;

  /// Every weight of every point, in storage order.
  std::vector<Weight> all_weights() const;

 private:
  std::size_t torus_rank_;
  std::size_t half_dim_;
  bool torus_manifold_;
  std::vector<FixedPoint> points_;
};

struct Edge {
  std::string from;
  std::string to;
  Weight label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled directed k-multigraph: vertices are fixed-point ids.
struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  /// Throws precondition if an edge endpoint is not a vertex or a label is zero.
  void validate() const;
};

/// The multigraph whose vertex set is the data's ids and whose edges are `edges`.
Multigraph make_graph(const FixedPointData& data, std::vector<Edge> edges);

}  // namespace gkmkit
