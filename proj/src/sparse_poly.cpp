#include "gkmkit/sparse_poly.hpp"

#include <numeric>

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

void SparsePoly::check_rank(std::size_t other, const char* op) const {
  if (other != rank_) {
    throw Error(ErrorKind::dimension, std::string("SparsePoly::") + op + ": rank " +
                                          std::to_string(rank_) + " vs " + std::to_string(other));
  }
}

SparsePoly SparsePoly::constant(std::size_t rank, const Rational& value) {
  SparsePoly p(rank);
  p.add_term(Exponent(rank, 0), value);
  return p;
}

SparsePoly SparsePoly::linear_form(const Weight& w) {
  SparsePoly p(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) {
    Exponent e(w.rank(), 0);
    e[i] = 1;
    p.add_term(e, Rational(w[i]));
  }
  return p;
}

SparsePoly SparsePoly::monomial(const Exponent& exponent, const Rational& coefficient) {
  SparsePoly p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

Rational SparsePoly::constant_term() const { return coefficient(Exponent(rank_, 0)); }

Rational SparsePoly::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& exponent, const Rational& coefficient) {
  check_rank(exponent.size(), "add_term");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_rank(other.rank_, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_rank(other.rank_, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_rank(b.rank_, "multiply");
  SparsePoly out(a.rank_);
  Exponent e(a.rank_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly out = constant(rank_, 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  check_rank(point.size(), "evaluate");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned p = 0; p < e[i]; ++p) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Rational SparsePoly::evaluate(const Weight& point) const {
  std::vector<Rational> values(point.entries().begin(), point.entries().end());
  return evaluate(values);
}

std::optional<SparsePoly> SparsePoly::divide_by_linear_form(const Weight& w) const {
  check_rank(w.rank(), "divide_by_linear_form");
  std::size_t pivot = 0;
  while (pivot < w.rank() && w[pivot] == 0) ++pivot;
  if (pivot == w.rank()) throw Error(ErrorKind::invalid_weight, "divide_by_linear_form: zero form");

  const SparsePoly divisor = linear_form(w);
  const Rational lead(w[pivot]);
  SparsePoly remainder = *this;
  SparsePoly quotient(rank_);
  // Eliminate the pivot variable from the highest pivot-degree term downwards; each step
  // replaces one such term by terms of strictly lower pivot degree.
  for (;;) {
    const Exponent* best = nullptr;
    for (const auto& [e, c] : remainder.terms_) {
      if (e[pivot] > 0 && (best == nullptr || e[pivot] > (*best)[pivot])) best = &e;
    }
    if (best == nullptr) break;
    Exponent qe = *best;
    --qe[pivot];
    const SparsePoly step = monomial(qe, remainder.terms_.at(*best) / lead);
    remainder -= step * divisor;
    quotient += step;
  }
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first, then lexicographically larger exponents first.
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += gkmkit::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += gkmkit::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace gkmkit
