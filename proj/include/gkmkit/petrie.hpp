#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmkit/fpdata.hpp"
#include "gkmkit/genus.hpp"
#include "gkmkit/localization.hpp"

namespace gkmkit {

enum class PetrieVerdict { match, no_match, precondition_failed };

std::string_view to_string(PetrieVerdict verdict);

/// Invariants of a matched dataset, all computed from the data itself.
struct InvariantTable {
  ChiYPolynomial chi_y{{1}};
  std::int64_t euler = 0;
  std::int64_t todd = 0;
  std::int64_t signature = 0;
  std::map<Partition, Integer> chern_numbers;
  bool chern_equal_to_model = false;  // compare_chern against cpn(n, basis)
};

struct PetrieReport {
  PetrieVerdict verdict = PetrieVerdict::precondition_failed;
  std::string base_point;
  /// order[i] is the input id playing the role of p_i in the linear model (order[0] = base).
  std::vector<std::string> order;
  std::map<std::string, std::size_t> relabeling;  // input id -> model index
  std::vector<Weight> basis;                      // a_1..a_n = weights at the base point
  std::vector<Weight> simplex;                    // 0, a_1, ..., a_n
  std::optional<InvariantTable> invariants;
  bool base_point_independent = true;
  std::optional<bool> gl_equivalent;  // set with up_to_gl: B^{-1} maps the data onto cpn(n, identity)
  std::string witness;                // first failed check or multiset equality
};

struct PetrieOptions {
  bool up_to_gl = false;
  bool compute_invariants = true;
  bool check_all_bases = true;
  EvalMode mode = EvalMode::generic;
};

/// Decides whether torus-manifold data with n + 1 fixed points coincides with the fixed-point
/// data of a linear action on CP^n: picks the first id as base p_0, assigns every other point
/// p_i the base weight w with -w at p_i (backtracking over ambiguous choices), checks the
/// weights at p_i are exactly {-w_{0,i}} + {w_{0,j} - w_{0,i} : j != 0, i}, cross-validates every
/// triangle, and regenerates the model to compare. A supplied edge list is checked against
/// the reconstruction.
PetrieReport petrie_verify(const FixedPointData& data, const Multigraph* graph = nullptr,
                           const PetrieOptions& options = {});

/// 1/(w0i w0j) + 1/((-w0i) wij) + 1/((-w0j)(-wij)) == 0, summed as factored fractions.
/// Equivalent to wij == w0j - w0i. Throws degenerate if w0i and w0j are dependent.
bool triangle_identity(const Weight& w0i, const Weight& w0j, const Weight& wij);

/// 1 - y + y^2 - ... + (-y)^n.
ChiYPolynomial expected_chi_y(std::size_t n);

struct GkmRelation {
  std::string from;
  std::string to;
  Weight divisor;  // f_to - f_from must lie in the ideal generated by this linear form
};

/// The C(n+1, 2) relations f_{p_j} - f_{p_i} in (w_{0,j} - w_{0,i}), i < j, with w_{0,0} = 0.
/// Throws precondition unless the report is a match.
std::vector<GkmRelation> gkm_relations(const PetrieReport& report);

/// Vertices 0, a_1, ..., a_n; asserts every edge label of the data is the difference of its
/// endpoints (inconsistency otherwise). Throws precondition unless the report is a match.
std::vector<Weight> simplex_realization(const FixedPointData& data, const PetrieReport& report);

}  // namespace gkmkit
