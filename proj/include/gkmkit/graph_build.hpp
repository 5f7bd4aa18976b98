#pragma once

#include "gkmkit/fpdata.hpp"

namespace gkmkit {

struct BuildResult {
  Multigraph graph;
  bool loop_free = true;
};

/// Builds a multigraph describing the data by matching, per class {w, -w}, occurrences of w
/// with occurrences of -w at points whose weight multisets agree modulo w. Edges run from the
/// w occurrence to the -w occurrence (w the canonical representative). Self-loops are used only
/// when a class has no loop-free perfect matching, and then loop_free is false.
///
/// Throws precondition if pairing fails, no_matching if a class admits no perfect matching.
/// Failure means no matching under this admissibility, not that no manifold exists.
BuildResult build_multigraph(const FixedPointData& data);

/// Sorted residues of a weight multiset modulo w.
std::vector<Weight> residues_mod(const std::vector<Weight>& weights, const Weight& w);

}  // namespace gkmkit
