#include "gkmkit/fraction.hpp"

#include <algorithm>
#include <map>

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

using FactorCounts = std::map<Weight, unsigned>;

FactorCounts count(const std::vector<Weight>& factors) {
  FactorCounts out;
  for (const auto& w : factors) ++out[w];
  return out;
}

SparsePoly product_of_forms(const FactorCounts& factors, std::size_t rank) {
  SparsePoly out = SparsePoly::constant(rank, 1);
  for (const auto& [w, mult] : factors) {
    for (unsigned i = 0; i < mult; ++i) out = out * SparsePoly::linear_form(w);
  }
  return out;
}

}  // namespace

FactoredFraction::FactoredFraction(SparsePoly numerator, std::vector<Weight> denominator)
    : numerator_(std::move(numerator)) {
  Rational scale = 1;
  denominator_.reserve(denominator.size());
  for (const auto& d : denominator) {
    if (d.rank() != rank()) throw Error(ErrorKind::dimension, "FactoredFraction: denominator form " + d.to_string() + " has wrong rank");
    if (d.is_zero()) throw Error(ErrorKind::invalid_weight, "FactoredFraction: zero denominator form");
    const Canonical c = canonicalize(d);
    const Integer g = content(d);
    scale /= Rational(c.sign * g);
    denominator_.push_back(primitive(c.weight));
  }
  numerator_ *= scale;
  std::sort(denominator_.begin(), denominator_.end());
  cancel();
}

void FactoredFraction::cancel() {
  if (numerator_.is_zero()) {
    denominator_.clear();
    return;
  }
  std::vector<Weight> kept;
  kept.reserve(denominator_.size());
  for (const auto& d : denominator_) {
    if (auto q = numerator_.divide_by_linear_form(d)) {
      numerator_ = std::move(*q);
    } else {
      kept.push_back(d);
    }
  }
  denominator_ = std::move(kept);
}

std::string FactoredFraction::to_string() const {
  std::string out = "(" + numerator_.to_string() + ")";
  if (denominator_.empty()) return out;
  out += " / (";
  for (std::size_t i = 0; i < denominator_.size(); ++i) {
    if (i) out += " * ";
    out += "<" + denominator_[i].to_string() + ",t>";
  }
  return out + ")";
}

FactoredFraction frac_add(const FactoredFraction& f, const FactoredFraction& g) {
  if (f.rank() != g.rank()) throw Error(ErrorKind::dimension, "frac_add: rank mismatch");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;

  const FactorCounts cf = count(f.denominator());
  const FactorCounts cg = count(g.denominator());
  FactorCounts lcm = cf;
  for (const auto& [w, m] : cg) lcm[w] = std::max(lcm[w], m);

  FactorCounts missing_f, missing_g;
  for (const auto& [w, m] : lcm) {
    const unsigned inf = cf.count(w) ? cf.at(w) : 0u;
    const unsigned ing = cg.count(w) ? cg.at(w) : 0u;
    if (m > inf) missing_f[w] = m - inf;
    if (m > ing) missing_g[w] = m - ing;
  }

  SparsePoly numerator = f.numerator() * product_of_forms(missing_f, f.rank()) +
                         g.numerator() * product_of_forms(missing_g, f.rank());
  std::vector<Weight> denominator;
  for (const auto& [w, m] : lcm) denominator.insert(denominator.end(), m, w);
  // Factors are already primitive and canonical, so the constructor only sorts and cancels.
  return FactoredFraction(std::move(numerator), std::move(denominator));
}

Rational frac_eval(const FactoredFraction& f, std::span<const Rational> point) {
  if (point.size() != f.rank()) throw Error(ErrorKind::dimension, "frac_eval: point has wrong rank");
  Rational denom = 1;
  for (const auto& d : f.denominator()) {
    Rational v = 0;
    for (std::size_t i = 0; i < d.rank(); ++i) v += Rational(d[i]) * point[i];
    if (v == 0) throw Error(ErrorKind::non_generic_point, "frac_eval: form " + d.to_string() + " vanishes at the evaluation point");
    denom *= v;
  }
  return f.numerator().evaluate(point) / denom;
}

bool equivalent(const FactoredFraction& f, const FactoredFraction& g) {
  if (f.rank() != g.rank()) return false;
  return f.numerator() * product_of_forms(count(g.denominator()), g.rank()) ==
         g.numerator() * product_of_forms(count(f.denominator()), f.rank());
}

SparsePoly elem_sym(int j, std::span<const Weight> forms, std::size_t rank) {
  if (j < 0 || static_cast<std::size_t>(j) > forms.size()) {
    throw Error(ErrorKind::out_of_range, "elem_sym: degree " + std::to_string(j) + " outside [0, " +
                                             std::to_string(forms.size()) + "]");
  }
  // e[i] holds e_i of the forms processed so far.
  std::vector<SparsePoly> e(static_cast<std::size_t>(j) + 1, SparsePoly(rank));
  e[0] = SparsePoly::constant(rank, 1);
  for (const auto& w : forms) {
    if (w.rank() != rank) throw Error(ErrorKind::dimension, "elem_sym: form " + w.to_string() + " has wrong rank");
    const SparsePoly l = SparsePoly::linear_form(w);
    for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] += l * e[i - 1];
  }
  return e.back();
}

}  // namespace gkmkit
