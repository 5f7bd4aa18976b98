#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gkmkit/numeric.hpp"

namespace gkmkit {

/// An integer vector in Z^k, read as the linear form <w, t> on the torus Lie algebra.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  Weight(std::initializer_list<long long> entries);

  static Weight zero(std::size_t rank);
  static Weight unit(std::size_t rank, std::size_t index);

  std::size_t rank() const noexcept { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  bool is_zero() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Integer& c, const Weight& w);

  friend bool operator==(const Weight& a, const Weight& b) { return a.entries_ == b.entries_; }
  /// Lexicographic on entries; shorter vectors first.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "(1,-2)"; rank-1 weights render as "(3)".
  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

/// Exact pairing sum_i xi_i * w_i. Throws ErrorKind::dimension on rank mismatch.
Integer dot(const Weight& xi, const Weight& w);

/// Determinant of the square matrix whose rows are `rows` (fraction-free Bareiss elimination).
Integer determinant(std::span<const Weight> rows);

/// True iff `vectors` are n vectors of length n spanning Z^n, i.e. det = +-1.
bool is_unimodular_basis(std::span<const Weight> vectors);

/// True iff u and v are linearly dependent over Q (all 2x2 minors vanish).
bool parallel(const Weight& u, const Weight& v);

struct Canonical {
  int sign;       // +1 or -1
  Weight weight;  // sign * w, first non-zero entry positive
};

/// Representative of {w, -w} whose first non-zero entry is positive. Zero -> invalid_weight.
Canonical canonicalize(const Weight& w);

/// gcd of the entries (positive for non-zero w).
Integer content(const Weight& w);

/// w / content(w), keeping the sign.
Weight primitive(const Weight& w);

/// Evaluation point xi = (1, N, N^2, ..., N^(k-1)) for the smallest N >= start with
/// dot(xi, w) != 0 for every form. Deterministic; `start` defaults to the documented 2.
struct GenericPoint {
  Weight xi;
  Integer base;  // the N that was selected
};
GenericPoint find_generic_point(std::span<const Weight> forms, std::size_t rank, long long start = 2);
Weight generic_point(std::span<const Weight> forms, std::size_t rank);

/// u == v modulo the subgroup Z w, i.e. u - v = c w for some integer c.
bool congruent_mod(const Weight& u, const Weight& v, const Weight& w);

/// Canonical representative of the coset u + Z w: the pivot entry (first non-zero entry of
/// canonicalize(w)) is reduced into [0, |w_pivot|).
Weight residue_mod(const Weight& u, const Weight& w);

}  // namespace gkmkit
