#pragma once

#include "gkmkit/fpdata.hpp"
#include "gkmkit/report.hpp"

namespace gkmkit {

/// Every weight value occurs globally as often as its negative.
ValidationReport check_pairing(const FixedPointData& data);

/// The sum of all weights over all points is zero.
ValidationReport check_weight_sum_zero(const FixedPointData& data);

/// Weights at each point are pairwise linearly independent.
ValidationReport check_gkm(const FixedPointData& data);

/// For torus-manifold data: k == n and each point's weights form a basis of Z^n.
ValidationReport check_unimodular_bases(const FixedPointData& data);

/// For each edge, the weight multisets of its endpoints are congruent modulo the label
/// under some bijection. Matchings found are listed as evidence.
ValidationReport check_edge_congruence(const FixedPointData& data, const Multigraph& graph);

/// The graph induces exactly the declared weight multisets, and edge congruence holds.
/// The congruence stands in for the isotropy-component condition, which data cannot see.
ValidationReport check_describes(const FixedPointData& data, const Multigraph& graph);

/// No self-loops and no two edges on the same unordered vertex pair.
ValidationReport check_simple(const Multigraph& graph);

/// All data-level checks: pairing, weight sum, GKM, bases (flagged data), and the graph
/// checks when a graph is given.
ValidationReport validate_all(const FixedPointData& data, const Multigraph* graph);

}  // namespace gkmkit
