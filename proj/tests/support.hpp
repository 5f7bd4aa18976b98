#pragma once

// Generators and brute-force oracles shared by the unit and acceptance tests. The oracles use
// only machine integers and Boost rationals; none of them calls into the library's algebra.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gkmkit/error.hpp"
#include "gkmkit/fpdata.hpp"
#include "gkmkit/numeric.hpp"
#include "gkmkit/weight.hpp"

namespace gkmtest {

using gkmkit::FixedPoint;
using gkmkit::FixedPointData;
using gkmkit::Integer;
using gkmkit::Rational;
using gkmkit::Weight;

using Matrix = std::vector<std::vector<long long>>;

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Weight random_weight(std::mt19937_64& rng, std::size_t k, long long lo, long long hi) {
  std::vector<Integer> e(k);
  for (auto& x : e) x = uniform(rng, lo, hi);
  return Weight(std::move(e));
}

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Random matrix in GL(n,Z): identity followed by random elementary row operations.
inline Matrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = -1) {
  Matrix m = identity(n);
  if (n == 1) {
    if (uniform(rng, 0, 1)) m[0][0] = -1;
    return m;
  }
  if (steps < 0) steps = static_cast<int>(3 * n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 3)) {
      case 0: std::swap(m[i], m[j]); break;
      case 1: for (auto& x : m[i]) x = -x; break;
      default: {
        long long c = uniform(rng, -2, 2);
        if (c == 0) c = 1;
        for (std::size_t t = 0; t < n; ++t) m[i][t] += c * m[j][t];
      }
    }
  }
  return m;
}

inline std::vector<Weight> rows_of(const Matrix& m) {
  std::vector<Weight> out;
  for (const auto& row : m) {
    std::vector<Integer> e(row.begin(), row.end());
    out.emplace_back(std::move(e));
  }
  return out;
}

inline Weight apply(const Matrix& m, const Weight& w) {
  std::vector<Integer> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < w.rank(); ++j) out[i] += Integer(m[i][j]) * w[j];
  }
  return Weight(std::move(out));
}

/// Applies m to every weight of every point.
inline FixedPointData transform(const FixedPointData& data, const Matrix& m) {
  std::vector<FixedPoint> pts;
  for (const auto& p : data.points()) {
    FixedPoint q{p.id, {}};
    for (const auto& w : p.weights) q.weights.push_back(apply(m, w));
    pts.push_back(std::move(q));
  }
  return FixedPointData(data.torus_rank(), data.half_dim(), std::move(pts), data.torus_manifold());
}

/// Shuffles point order and weight order and renames the ids with a random permutation.
inline FixedPointData relabel(const FixedPointData& data, std::mt19937_64& rng, const std::string& prefix = "v") {
  std::vector<FixedPoint> pts = data.points();
  std::vector<std::size_t> names(pts.size());
  std::iota(names.begin(), names.end(), 0);
  std::shuffle(names.begin(), names.end(), rng);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i].id = prefix + std::to_string(names[i]);
    std::shuffle(pts[i].weights.begin(), pts[i].weights.end(), rng);
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  return FixedPointData(data.torus_rank(), data.half_dim(), std::move(pts), data.torus_manifold());
}

/// Determinant by cofactor expansion along the first row.
inline long long laplace_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t t = 0; t < n; ++t) {
        if (t != c) row.push_back(m[r][t]);
      }
      minor.push_back(std::move(row));
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * laplace_det(minor);
  }
  return det;
}

inline long long dot_ll(const Weight& a, const Weight& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += static_cast<long long>(a[i]) * static_cast<long long>(b[i]);
  return s;
}

/// e_j of the numbers xs, by summing over all j-subsets.
inline Rational subset_elem_sym(const std::vector<Rational>& xs, unsigned j) {
  Rational total = 0;
  const std::size_t n = xs.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != j) continue;
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) term *= xs[i];
    }
    total += term;
  }
  return total;
}

/// Localization sum of prod_j e_{parts[j]} over the fixed points, evaluated at the integer point rho.
inline Rational brute_chern(const FixedPointData& data, const std::vector<unsigned>& parts, const Weight& rho) {
  Rational total = 0;
  for (const auto& p : data.points()) {
    std::vector<Rational> xs;
    Rational euler = 1;
    for (const auto& w : p.weights) {
      xs.emplace_back(dot_ll(w, rho));
      euler *= xs.back();
    }
    Rational num = 1;
    for (unsigned part : parts) num *= subset_elem_sym(xs, part);
    total += num / euler;
  }
  return total;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// c_lambda[CP^n] = prod_j C(n+1, lambda_j), from c(CP^n) = (1+x)^{n+1}.
inline long long cpn_chern(std::size_t n, const std::vector<unsigned>& parts) {
  long long r = 1;
  for (unsigned part : parts) r *= binomial(static_cast<long long>(n) + 1, part);
  return r;
}

/// chi_y coefficients counted directly: a_i = #{p : exactly i weights pair negatively with xi}.
inline std::vector<std::int64_t> brute_chi_y(const FixedPointData& data, const Weight& xi) {
  std::vector<std::int64_t> a(data.half_dim() + 1, 0);
  for (const auto& p : data.points()) {
    std::size_t neg = 0;
    for (const auto& w : p.weights) neg += dot_ll(w, xi) < 0;
    ++a[neg];
  }
  return a;
}

/// True iff some permutation pairs left i with right sigma(i), all admissible.
template <class F>
bool brute_perfect_matching(std::size_t n, F admissible) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = admissible(i, sigma[i]);
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

/// Random circle with all pairings non-zero against the data's weights.
inline Weight random_generic_circle(std::mt19937_64& rng, const FixedPointData& data, long long bound = 50) {
  const auto forms = data.all_weights();
  for (;;) {
    Weight xi = random_weight(rng, data.torus_rank(), -bound, bound);
    if (std::all_of(forms.begin(), forms.end(), [&](const Weight& w) { return dot_ll(w, xi) != 0; })) return xi;
  }
}

/// True iff f throws gkmkit::Error of the given kind.
template <class F>
bool throws_kind(F&& f, gkmkit::ErrorKind kind) {
  try {
    f();
  } catch (const gkmkit::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace gkmtest
