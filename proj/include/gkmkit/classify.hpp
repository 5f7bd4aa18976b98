#pragma once

#include <optional>
#include <string>

#include "gkmkit/fpdata.hpp"
#include "gkmkit/numeric.hpp"

namespace gkmkit {

/// Known shapes of circle-action data with at most three fixed points.
enum class FewPointShape { point, sphere_dim2, dim6_pair, dim4_triple, nonconforming };

struct FewPointClass {
  FewPointShape shape = FewPointShape::nonconforming;
  std::optional<Integer> a;
  std::optional<Integer> b;

  std::string to_string() const;
};

/// Pattern-matches k = 1 data with 1..3 fixed points against:
///   1 point, n = 0;  {a}, {-a};  {-a-b, a, b}, {-a, -b, a+b};  {a+b, a}, {-a, b}, {-b, -a-b}
/// with a, b > 0. Anything else is nonconforming (not realizable).
/// Throws precondition unless k == 1 and 1 <= |points| <= 3.
FewPointClass classify_few_fixed_points(const FixedPointData& data);

}  // namespace gkmkit
