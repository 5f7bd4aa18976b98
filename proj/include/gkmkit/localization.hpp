#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkmkit/fpdata.hpp"
#include "gkmkit/fraction.hpp"
#include "gkmkit/numeric.hpp"
#include "gkmkit/report.hpp"
#include "gkmkit/sparse_poly.hpp"

namespace gkmkit {

/// generic: evaluate every fixed-point term at one exact generic point and sum (cross-checked
/// at a second point). expanded: add the terms as FactoredFractions and cancel; used as oracle.
enum class EvalMode { generic, expanded };

EvalMode parse_eval_mode(std::string_view text);
std::string_view to_string(EvalMode mode);

/// Weakly decreasing positive parts; indexes the Chern monomial c_{l1} ... c_{lr}.
struct Partition {
  std::vector<unsigned> parts;

  unsigned total() const;
  std::string to_string() const;  // "2,1"; "" for the empty partition
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of m, largest first: (m), (m-1,1), ..., (1,...,1). partitions_of(0) = {()}.
std::vector<Partition> partitions_of(unsigned m);

/// "1,2,1" -> (2,1,1). Throws out_of_range on empty parts or zeros.
Partition parse_partition(std::string_view text);

/// The two exact evaluation points: rho1 = (1, N, ..., N^(k-1)) from generic_point over all
/// weights, rho2 = (2, M, ..., M^(k-1)) for the smallest M > N avoiding every weight form.
struct EvaluationPoints {
  Weight first;
  Weight second;
};
EvaluationPoints evaluation_points(const FixedPointData& data);

/// sum_p numerator_p / prod_i <w_{p,i}, t>.
///
/// generic: rejects numerators of degree > n (precondition), evaluates at both points and
/// throws inconsistency if they disagree. expanded: throws inconsistency if the sum does
/// not reduce to a constant.
Rational integrate(const FixedPointData& data, std::span<const SparsePoly> numerators,
                   EvalMode mode = EvalMode::generic);

/// The full rational function, any numerator degree.
FactoredFraction integrate_expanded(const FixedPointData& data, std::span<const SparsePoly> numerators);

/// prod_j e_{lambda_j}(weights) as a polynomial: the equivariant Chern monomial at a point.
SparsePoly chern_monomial(std::span<const Weight> weights, const Partition& partition, std::size_t rank);

/// Chern number c_lambda by localization. Requires |lambda| == n (precondition);
/// throws inconsistency on a non-integral or point-dependent result.
Integer chern_number(const FixedPointData& data, const Partition& partition, EvalMode mode = EvalMode::generic);

struct ChernReport {
  std::map<Partition, Integer> values;
  bool two_point_agreement = true;
  bool integral = true;
  std::vector<std::string> problems;  // partitions whose value could not be certified

  bool consistent() const { return two_point_agreement && integral; }
};

/// Every Chern number c_lambda, lambda a partition of n.
ChernReport chern_numbers(const FixedPointData& data, EvalMode mode = EvalMode::generic);

/// Integrals of all Chern monomials of degree < n vanish. In expanded mode both modes run.
ValidationReport check_lower_degree_vanishing(const FixedPointData& data, EvalMode mode = EvalMode::generic);

struct ChernComparison {
  struct Row {
    Partition partition;
    std::optional<Integer> value;        // nullopt when not certifiable
    std::optional<Integer> model_value;
    bool equal = false;
  };
  std::vector<Row> rows;
  bool cobordant = false;  // all Chern numbers agree

  std::string to_string() const;
};

/// Side-by-side Chern numbers. Throws precondition unless both have the same n.
ChernComparison compare_chern(const FixedPointData& data, const FixedPointData& model,
                              EvalMode mode = EvalMode::generic);

}  // namespace gkmkit
