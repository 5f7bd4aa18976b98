#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkmkit/fpdata.hpp"
#include "gkmkit/report.hpp"

namespace gkmkit {

/// chi_y = sum_i a_i (-y)^i, stored as a_0..a_n.
class ChiYPolynomial {
 public:
  explicit ChiYPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t n() const noexcept { return coeffs_.size() - 1; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }

  /// chi_y at an integer y.
  std::int64_t evaluate(std::int64_t y) const;
  std::int64_t euler() const { return evaluate(-1); }
  std::int64_t todd() const { return coeffs_.front(); }
  std::int64_t signature() const { return evaluate(1); }

  /// Expanded in powers of y, e.g. "1 - y + y^2 - y^3"; "0" when zero.
  std::string to_string() const;

  friend bool operator==(const ChiYPolynomial&, const ChiYPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Number of weights w at p with <xi, w> < 0. Throws non_generic_point on a zero pairing.
std::size_t index_d_minus(const FixedPoint& p, const Weight& xi);
std::size_t index_d_plus(const FixedPoint& p, const Weight& xi);

/// The circle used when none is given: generic_point over all weights of the data.
Weight default_circle(const FixedPointData& data);

/// a_i = number of fixed points with exactly i negative pairings against xi.
ChiYPolynomial chi_y(const FixedPointData& data, const Weight& xi);
ChiYPolynomial chi_y(const FixedPointData& data);

/// Same count with positive pairings; for manifold data this is chi_y with the coefficients
/// reversed.
ChiYPolynomial chi_y_by_d_plus(const FixedPointData& data, const Weight& xi);

std::int64_t euler(const FixedPointData& data);
std::int64_t todd(const FixedPointData& data);
std::int64_t signature(const FixedPointData& data);

/// a_i == a_{n-i} for all i.
ValidationReport check_symmetry(const FixedPointData& data);

/// a_i >= 1 for all i. Requires torus-manifold data (flag set, unimodular weight bases);
/// throws precondition otherwise. Failure marks the data unrealizable.
ValidationReport check_positivity(const FixedPointData& data);

}  // namespace gkmkit
