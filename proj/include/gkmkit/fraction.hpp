#pragma once

#include <span>
#include <string>
#include <vector>

#include "gkmkit/numeric.hpp"
#include "gkmkit/sparse_poly.hpp"
#include "gkmkit/weight.hpp"

namespace gkmkit {

/// numerator / prod_i <d_i, t> with every d_i a non-zero weight.
///
/// Internally each denominator factor is stored primitive with a positive leading entry;
/// the scalar and sign taken off are folded into the numerator. The stored multiset is
/// sorted. Common factors are cancelled by trial division with the individual linear forms.
class FactoredFraction {
 public:
  explicit FactoredFraction(std::size_t rank) : numerator_(rank) {}
  explicit FactoredFraction(SparsePoly numerator, std::vector<Weight> denominator = {});

  std::size_t rank() const noexcept { return numerator_.rank(); }
  const SparsePoly& numerator() const noexcept { return numerator_; }
  const std::vector<Weight>& denominator() const noexcept { return denominator_; }

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  /// True when the fraction reduced to a polynomial of degree <= 0.
  bool is_constant() const { return denominator_.empty() && numerator_.is_constant(); }

  std::string to_string() const;

 private:
  void cancel();

  SparsePoly numerator_;
  std::vector<Weight> denominator_;
};

/// Exact sum. The denominator is the multiset lcm; the result is cancelled against each
/// remaining linear factor that divides the new numerator.
FactoredFraction frac_add(const FactoredFraction& f, const FactoredFraction& g);
inline FactoredFraction operator+(const FactoredFraction& f, const FactoredFraction& g) {
  return frac_add(f, g);
}

/// Value at a point. Throws ErrorKind::non_generic_point naming the vanishing form.
Rational frac_eval(const FactoredFraction& f, std::span<const Rational> point);

/// Cross-multiplied polynomial equality.
bool equivalent(const FactoredFraction& f, const FactoredFraction& g);

/// j-th elementary symmetric polynomial of the linear forms <w, t>, w in `forms`.
/// elem_sym(0, ...) = 1. Throws out_of_range unless 0 <= j <= |forms|.
SparsePoly elem_sym(int j, std::span<const Weight> forms, std::size_t rank);

}  // namespace gkmkit
