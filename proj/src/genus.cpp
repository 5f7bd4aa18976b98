#include "gkmkit/genus.hpp"

#include "gkmkit/checks.hpp"
#include "gkmkit/error.hpp"

namespace gkmkit {

std::int64_t ChiYPolynomial::evaluate(std::int64_t y) const {
  // sum_i a_i (-y)^i by Horner
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * (-y) + *it;
  return acc;
}

std::string ChiYPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = (i % 2 == 0) ? coeffs_[i] : -coeffs_[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += i == 1 ? "y" : "y^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::size_t index_d_minus(const FixedPoint& p, const Weight& xi) {
  std::size_t negative = 0;
  for (const auto& w : p.weights) {
    const Integer s = dot(xi, w);
    if (s == 0) {
      throw Error(ErrorKind::non_generic_point, "circle " + xi.to_string() + " pairs to zero with weight " + w.to_string() +
                                                    " at " + p.id);
    }
    if (s < 0) ++negative;
  }
  return negative;
}

std::size_t index_d_plus(const FixedPoint& p, const Weight& xi) { return p.weights.size() - index_d_minus(p, xi); }

Weight default_circle(const FixedPointData& data) {
  return generic_point(data.all_weights(), data.torus_rank());
}

ChiYPolynomial chi_y(const FixedPointData& data, const Weight& xi) {
  std::vector<std::int64_t> a(data.half_dim() + 1, 0);
  for (const auto& p : data.points()) ++a[index_d_minus(p, xi)];
  return ChiYPolynomial(std::move(a));
}

ChiYPolynomial chi_y(const FixedPointData& data) { return chi_y(data, default_circle(data)); }

ChiYPolynomial chi_y_by_d_plus(const FixedPointData& data, const Weight& xi) {
  std::vector<std::int64_t> a(data.half_dim() + 1, 0);
  for (const auto& p : data.points()) ++a[index_d_plus(p, xi)];
  return ChiYPolynomial(std::move(a));
}

std::int64_t euler(const FixedPointData& data) { return static_cast<std::int64_t>(data.size()); }
std::int64_t todd(const FixedPointData& data) { return chi_y(data).todd(); }
std::int64_t signature(const FixedPointData& data) { return chi_y(data).signature(); }

ValidationReport check_symmetry(const FixedPointData& data) {
  const Weight xi = default_circle(data);
  const ChiYPolynomial c = chi_y(data, xi);
  CheckResult r{.name = "chi_y_symmetry", .note = "circle " + xi.to_string()};
  const std::size_t n = c.n();
  for (std::size_t i = 0; i <= n / 2; ++i) {
    if (c[i] != c[n - i]) {
      r.witnesses.push_back({.message = "a_" + std::to_string(i) + " = " + std::to_string(c[i]) + " but a_" +
                                        std::to_string(n - i) + " = " + std::to_string(c[n - i])});
    }
  }
  return single_check(std::move(r));
}

ValidationReport check_positivity(const FixedPointData& data) {
  if (!data.torus_manifold()) throw Error(ErrorKind::precondition, "check_positivity: data is not flagged as a torus manifold");
  if (!check_unimodular_bases(data).passed()) {
    throw Error(ErrorKind::precondition, "check_positivity: weights at some point do not form a basis of Z^n");
  }
  const ChiYPolynomial c = chi_y(data);
  CheckResult r{.name = "chi_y_positivity"};
  for (std::size_t i = 0; i <= c.n(); ++i) {
    if (c[i] < 1) r.witnesses.push_back({.message = "a_" + std::to_string(i) + " = " + std::to_string(c[i])});
  }
  if (!r.witnesses.empty()) {
    r.note = "data unrealizable: every almost complex torus manifold has all chi_y coefficients a_i > 0";
  }
  return single_check(std::move(r));
}

}  // namespace gkmkit
