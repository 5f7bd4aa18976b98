#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkmkit/numeric.hpp"
#include "gkmkit/weight.hpp"

namespace gkmkit {

/// Dense exponent tuple (e_1, ..., e_k) of a monomial t_1^e_1 ... t_k^e_k.
using Exponent = std::vector<unsigned>;

/// Polynomial in t_1..t_k with exact rational coefficients. Zero coefficients are never stored.
class SparsePoly {
 public:
  explicit SparsePoly(std::size_t rank) : rank_(rank) {}

  static SparsePoly constant(std::size_t rank, const Rational& value);
  /// The linear form <w, t>.
  static SparsePoly linear_form(const Weight& w);
  static SparsePoly monomial(const Exponent& exponent, const Rational& coefficient);

  std::size_t rank() const noexcept { return rank_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_constant() const { return degree() <= 0; }
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  Rational coefficient(const Exponent& exponent) const;

  void add_term(const Exponent& exponent, const Rational& coefficient);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& scalar);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

  SparsePoly pow(unsigned exponent) const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(const Weight& point) const;

  /// Quotient by the linear form <w, t> if it divides exactly, otherwise nullopt.
  std::optional<SparsePoly> divide_by_linear_form(const Weight& w) const;

  /// Human readable, variables named t1..tk, e.g. "-2*t1 + t2".
  std::string to_string() const;

 private:
  void check_rank(std::size_t other, const char* op) const;

  std::size_t rank_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace gkmkit
