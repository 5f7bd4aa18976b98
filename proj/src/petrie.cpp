#include "gkmkit/petrie.hpp"

#include <algorithm>
#include <functional>

#include "gkmkit/catalog.hpp"
#include "gkmkit/checks.hpp"
#include "gkmkit/error.hpp"
#include "gkmkit/fraction.hpp"

namespace gkmkit {

namespace {

std::vector<Weight> sorted(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::string join(const std::vector<Weight>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + ws[i].to_string();
  return out + "}";
}

struct Reconstruction {
  std::vector<std::size_t> order;  // point indices, order[0] = base
  std::vector<Weight> basis;
};

// Weights a linear model puts at the point joined to the base by w = base[s].
std::vector<Weight> expected_at(const std::vector<Weight>& base, std::size_t s) {
  std::vector<Weight> out{-base[s]};
  for (std::size_t r = 0; r < base.size(); ++r) {
    if (r != s) out.push_back(base[r] - base[s]);
  }
  return sorted(std::move(out));
}

std::optional<Reconstruction> reconstruct(const FixedPointData& data, const std::vector<std::size_t>& id_order,
                                          std::size_t base_pos, std::string& witness) {
  const auto& pts = data.points();
  const std::size_t base = id_order[base_pos];
  const std::vector<Weight>& w0 = pts[base].weights;
  std::vector<std::size_t> others;
  for (std::size_t i : id_order) {
    if (i != base) others.push_back(i);
  }

  std::vector<std::vector<Weight>> expected;
  for (std::size_t s = 0; s < w0.size(); ++s) expected.push_back(expected_at(w0, s));

  // candidates[t]: base-weight indices whose model multiset equals the weights at others[t]
  std::vector<std::vector<std::size_t>> candidates(others.size());
  for (std::size_t t = 0; t < others.size(); ++t) {
    const FixedPoint& q = pts[others[t]];
    const auto have = sorted(q.weights);
    for (std::size_t s = 0; s < w0.size(); ++s) {
      if (std::find(q.weights.begin(), q.weights.end(), -w0[s]) == q.weights.end()) continue;
      if (have == expected[s]) candidates[t].push_back(s);
    }
    if (candidates[t].empty() && witness.empty()) {
      std::string detail;
      for (std::size_t s = 0; s < w0.size(); ++s) {
        if (std::find(q.weights.begin(), q.weights.end(), -w0[s]) != q.weights.end()) {
          detail = "; joined to " + pts[base].id + " by " + w0[s].to_string() + " the model requires " + join(expected[s]);
          break;
        }
      }
      witness = "weights at " + q.id + " are " + join(have) + detail;
    }
  }

  std::vector<std::size_t> assigned(others.size());
  std::vector<char> used(w0.size(), 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t t) {
    if (t == others.size()) return true;
    for (std::size_t s : candidates[t]) {
      if (used[s]) continue;
      used[s] = 1;
      assigned[t] = s;
      if (assign(t + 1)) return true;
      used[s] = 0;
    }
    return false;
  };
  if (!assign(0)) {
    if (witness.empty()) witness = "no bijection between the other fixed points and the weights at " + pts[base].id;
    return std::nullopt;
  }

  Reconstruction r;
  r.order.push_back(base);
  for (std::size_t t = 0; t < others.size(); ++t) {
    r.order.push_back(others[t]);
    r.basis.push_back(w0[assigned[t]]);
  }
  return r;
}

// The weight at p whose negative is a weight at q, excluding `skip`.
std::optional<Weight> joining_weight(const FixedPoint& p, const FixedPoint& q, const Weight& skip) {
  for (const auto& u : p.weights) {
    if (u == skip) continue;
    if (std::find(q.weights.begin(), q.weights.end(), -u) != q.weights.end()) return u;
  }
  return std::nullopt;
}

// Exact inverse of the matrix with the given columns, if it is integral.
std::optional<std::vector<std::vector<Integer>>> integral_inverse(const std::vector<Weight>& columns) {
  const std::size_t n = columns.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(columns[j][i]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[c], m[pivot]);
    const Rational inv = Rational(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(m[i][n + j])) return std::nullopt;
      out[i][j] = numerator(m[i][n + j]);
    }
  }
  return out;
}

Weight apply(const std::vector<std::vector<Integer>>& matrix, const Weight& w) {
  std::vector<Integer> out(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < w.rank(); ++j) out[i] += matrix[i][j] * w[j];
  }
  return Weight(std::move(out));
}

// Weights at order[m] equal the weights at model point p_m, for every m.
bool equals_model(const FixedPointData& data, const std::vector<std::size_t>& order, const FixedPointData& model,
                  const std::function<Weight(const Weight&)>& transform) {
  for (std::size_t m = 0; m < order.size(); ++m) {
    std::vector<Weight> have;
    for (const auto& w : data.points()[order[m]].weights) have.push_back(transform(w));
    if (sorted(std::move(have)) != sorted(model.points()[m].weights)) return false;
  }
  return true;
}

std::string precondition_witness(const FixedPointData& data) {
  if (!data.torus_manifold()) return "data is not flagged as a torus manifold";
  if (data.torus_rank() != data.half_dim()) return "torus rank differs from half dimension";
  if (data.half_dim() == 0) return "half dimension must be at least 1";
  const ValidationReport bases = check_unimodular_bases(data);
  if (!bases.passed()) {
    const Witness& w = bases.checks.front().witnesses.front();
    return "weights at " + w.point + " do not form a basis of Z^n";
  }
  if (data.size() != data.half_dim() + 1) {
    return "Euler number " + std::to_string(data.size()) + " differs from n + 1 = " + std::to_string(data.half_dim() + 1);
  }
  return {};
}

}  // namespace

std::string_view to_string(PetrieVerdict verdict) {
  switch (verdict) {
    case PetrieVerdict::match: return "match";
    case PetrieVerdict::no_match: return "no-match";
    case PetrieVerdict::precondition_failed: return "precondition-failed";
  }
  return "precondition-failed";
}

bool triangle_identity(const Weight& w0i, const Weight& w0j, const Weight& wij) {
  if (parallel(w0i, w0j)) {
    throw Error(ErrorKind::degenerate, "triangle_identity: " + w0i.to_string() + " and " + w0j.to_string() + " are dependent");
  }
  const std::size_t k = w0i.rank();
  const SparsePoly one = SparsePoly::constant(k, 1);
  const FactoredFraction sum = FactoredFraction(one, {w0i, w0j}) + FactoredFraction(one, {-w0i, wij}) +
                               FactoredFraction(one, {-w0j, -wij});
  return sum.is_zero();
}

ChiYPolynomial expected_chi_y(std::size_t n) { return ChiYPolynomial(std::vector<std::int64_t>(n + 1, 1)); }

PetrieReport petrie_verify(const FixedPointData& data, const Multigraph* graph, const PetrieOptions& options) {
  PetrieReport report;
  if (std::string why = precondition_witness(data); !why.empty()) {
    report.verdict = PetrieVerdict::precondition_failed;
    report.witness = std::move(why);
    return report;
  }

  const auto& pts = data.points();
  std::vector<std::size_t> id_order(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) id_order[i] = i;
  std::sort(id_order.begin(), id_order.end(), [&](std::size_t a, std::size_t b) { return pts[a].id < pts[b].id; });

  std::string witness;
  const auto rec = reconstruct(data, id_order, 0, witness);
  report.base_point = pts[id_order[0]].id;
  if (options.check_all_bases) {
    for (std::size_t b = 1; b < id_order.size(); ++b) {
      std::string ignored;
      if (reconstruct(data, id_order, b, ignored).has_value() != rec.has_value()) report.base_point_independent = false;
    }
  }
  if (!rec) {
    report.verdict = PetrieVerdict::no_match;
    report.witness = std::move(witness);
    return report;
  }

  const std::size_t n = data.half_dim();
  std::vector<Weight> position{Weight::zero(n)};
  position.insert(position.end(), rec->basis.begin(), rec->basis.end());

  auto fail = [&](std::string why) {
    report.verdict = PetrieVerdict::no_match;
    report.witness = std::move(why);
    return report;
  };

  // Every triangle p0, p_i, p_j must satisfy the localization identity with the label joining p_i to p_j.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const FixedPoint& pi = pts[rec->order[i]];
      const FixedPoint& pj = pts[rec->order[j]];
      const auto wij = joining_weight(pi, pj, -rec->basis[i - 1]);
      if (!wij) return fail("no weight at " + pi.id + " pairs with a weight at " + pj.id);
      if (!triangle_identity(rec->basis[i - 1], rec->basis[j - 1], *wij)) {
        return fail("triangle " + report.base_point + ", " + pi.id + ", " + pj.id + " violates the localization identity");
      }
    }
  }

  const FixedPointData model = cpn(n, rec->basis).data;
  if (!equals_model(data, rec->order, model, [](const Weight& w) { return w; })) {
    return fail("regenerated linear model differs from the input");
  }

  for (std::size_t m = 0; m <= n; ++m) {
    report.order.push_back(pts[rec->order[m]].id);
    report.relabeling[pts[rec->order[m]].id] = m;
  }
  report.basis = rec->basis;
  report.simplex = position;

  if (graph != nullptr) {
    if (!check_describes(data, *graph).passed()) return fail("supplied edge list does not describe the data");
    for (const auto& e : graph->edges) {
      const Weight expect = position[report.relabeling.at(e.to)] - position[report.relabeling.at(e.from)];
      if (e.label != expect) {
        return fail("edge " + e.from + " -> " + e.to + " has label " + e.label.to_string() + ", reconstruction gives " +
                    expect.to_string());
      }
    }
  }

  if (options.up_to_gl) {
    const auto inverse = integral_inverse(rec->basis);
    const FixedPointData standard = cpn(n).data;
    report.gl_equivalent =
        inverse && equals_model(data, rec->order, standard, [&](const Weight& w) { return apply(*inverse, w); });
  }

  if (options.compute_invariants) {
    InvariantTable t;
    t.chi_y = chi_y(data);
    t.euler = euler(data);
    t.todd = t.chi_y.todd();
    t.signature = t.chi_y.signature();
    t.chern_numbers = chern_numbers(data, options.mode).values;
    t.chern_equal_to_model = compare_chern(data, model, options.mode).cobordant;
    report.invariants = std::move(t);
  }

  report.verdict = PetrieVerdict::match;
  return report;
}

std::vector<GkmRelation> gkm_relations(const PetrieReport& report) {
  if (report.verdict != PetrieVerdict::match) throw Error(ErrorKind::precondition, "gkm_relations: requires a match verdict");
  std::vector<GkmRelation> out;
  for (std::size_t i = 0; i < report.order.size(); ++i) {
    for (std::size_t j = i + 1; j < report.order.size(); ++j) {
      out.push_back({report.order[i], report.order[j], report.simplex[j] - report.simplex[i]});
    }
  }
  return out;
}

std::vector<Weight> simplex_realization(const FixedPointData& data, const PetrieReport& report) {
  if (report.verdict != PetrieVerdict::match) {
    throw Error(ErrorKind::precondition, "simplex_realization: requires a match verdict");
  }
  const auto& v = report.simplex;
  for (std::size_t i = 0; i < report.order.size(); ++i) {
    for (std::size_t j = i + 1; j < report.order.size(); ++j) {
      const FixedPoint& pi = data.at(report.order[i]);
      const FixedPoint& pj = data.at(report.order[j]);
      const auto label = joining_weight(pi, pj, Weight::zero(data.torus_rank()));
      if (!label || *label != v[j] - v[i]) {
        throw Error(ErrorKind::inconsistency, "edge " + pi.id + " -> " + pj.id + " label is not the vertex difference");
      }
    }
  }
  return v;
}

}  // namespace gkmkit
