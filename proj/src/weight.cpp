#include "gkmkit/weight.hpp"

#include <algorithm>
#include <utility>

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

void require_same_rank(const Weight& a, const Weight& b, const char* op) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::dimension, std::string(op) + ": rank mismatch " + a.to_string() +
                                          " vs " + b.to_string());
  }
}

std::size_t pivot_index(const Weight& w) {
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] != 0) return i;
  }
  return w.rank();
}

}  // namespace

Weight::Weight(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (long long e : entries) entries_.emplace_back(e);
}

Weight Weight::zero(std::size_t rank) { return Weight(std::vector<Integer>(rank)); }

Weight Weight::unit(std::size_t rank, std::size_t index) {
  Weight w = zero(rank);
  w.entries_.at(index) = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other, "subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Weight operator*(const Integer& c, const Weight& w) {
  Weight out = w;
  for (auto& e : out.entries_) e *= c;
  return out;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out + ")";
}

Integer dot(const Weight& xi, const Weight& w) {
  require_same_rank(xi, w, "dot");
  Integer sum = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) sum += xi[i] * w[i];
  return sum;
}

Integer determinant(std::span<const Weight> rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.rank() != n) {
      throw Error(ErrorKind::dimension, "determinant: expected " + std::to_string(n) +
                                            " vectors of length " + std::to_string(n));
    }
  }
  if (n == 0) return 1;

  std::vector<std::vector<Integer>> m;
  m.reserve(n);
  for (const auto& r : rows) m.push_back(r.entries());

  // Bareiss: every intermediate entry is a minor of the input, so divisions are exact.
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_unimodular_basis(std::span<const Weight> vectors) {
  for (const auto& v : vectors) {
    if (v.rank() != vectors.size()) return false;
  }
  const Integer det = determinant(vectors);
  return det == 1 || det == -1;
}

bool parallel(const Weight& u, const Weight& v) {
  require_same_rank(u, v, "parallel");
  for (std::size_t i = 0; i < u.rank(); ++i) {
    for (std::size_t j = i + 1; j < u.rank(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

Canonical canonicalize(const Weight& w) {
  const std::size_t p = pivot_index(w);
  if (p == w.rank()) throw Error(ErrorKind::invalid_weight, "canonicalize: zero weight " + w.to_string());
  if (w[p] > 0) return {1, w};
  return {-1, -w};
}

Integer content(const Weight& w) {
  Integer g = 0;
  for (const auto& e : w.entries()) g = gcd(g, e);
  return abs(g);
}

Weight primitive(const Weight& w) {
  const Integer g = content(w);
  if (g == 0) throw Error(ErrorKind::invalid_weight, "primitive: zero weight");
  std::vector<Integer> entries = w.entries();
  for (auto& e : entries) e /= g;
  return Weight(std::move(entries));
}

GenericPoint find_generic_point(std::span<const Weight> forms, std::size_t rank, long long start) {
  if (rank == 0) throw Error(ErrorKind::dimension, "generic_point: torus rank must be >= 1");
  for (const auto& w : forms) {
    if (w.rank() != rank) throw Error(ErrorKind::dimension, "generic_point: form " + w.to_string() + " has wrong rank");
    if (w.is_zero()) throw Error(ErrorKind::invalid_weight, "generic_point: zero form");
  }
  // Each non-zero form is a non-zero polynomial of degree < k in N, so only finitely many N fail.
  for (Integer base = start;; ++base) {
    std::vector<Integer> entries(rank);
    Integer power = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      entries[i] = power;
      power *= base;
    }
    Weight xi(std::move(entries));
    const bool ok = std::all_of(forms.begin(), forms.end(), [&](const Weight& w) { return dot(xi, w) != 0; });
    if (ok) return {std::move(xi), base};
  }
}

Weight generic_point(std::span<const Weight> forms, std::size_t rank) {
  return find_generic_point(forms, rank).xi;
}

bool congruent_mod(const Weight& u, const Weight& v, const Weight& w) {
  require_same_rank(u, v, "congruent_mod");
  require_same_rank(u, w, "congruent_mod");
  const std::size_t p = pivot_index(w);
  if (p == w.rank()) throw Error(ErrorKind::invalid_weight, "congruent_mod: zero modulus");
  const Weight diff = u - v;
  if (diff[p] % w[p] != 0) return false;
  const Integer c = diff[p] / w[p];
  return diff == c * w;
}

Weight residue_mod(const Weight& u, const Weight& w) {
  require_same_rank(u, w, "residue_mod");
  const Weight m = canonicalize(w).weight;
  const std::size_t p = pivot_index(m);
  const Integer c = floor_div(u[p], m[p]);
  return u - c * m;
}

}  // namespace gkmkit
