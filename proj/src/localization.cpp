#include "gkmkit/localization.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

// Weighted pairings <w, rho> of a point's weights.
std::vector<Integer> pairings(const FixedPoint& p, const Weight& rho) {
  std::vector<Integer> out;
  out.reserve(p.weights.size());
  for (const auto& w : p.weights) out.push_back(dot(rho, w));
  return out;
}

// e_0..e_max of a list of integers.
std::vector<Integer> elementary_values(const std::vector<Integer>& xs, std::size_t max) {
  std::vector<Integer> e(max + 1, Integer(0));
  e[0] = 1;
  for (const auto& x : xs) {
    for (std::size_t i = max; i >= 1; --i) e[i] += x * e[i - 1];
  }
  return e;
}

// Localization sum of the Chern monomial for `partition` evaluated at rho.
Rational chern_sum_at(const FixedPointData& data, const Partition& partition, const Weight& rho) {
  Rational sum = 0;
  for (const auto& p : data.points()) {
    const auto xs = pairings(p, rho);
    const auto e = elementary_values(xs, data.half_dim());
    Integer num = 1;
    for (unsigned part : partition.parts) num *= part <= data.half_dim() ? e[part] : Integer(0);
    Integer den = 1;
    for (const auto& x : xs) den *= x;
    sum += Rational(num) / Rational(den);
  }
  return sum;
}

Rational poly_sum_at(const FixedPointData& data, std::span<const SparsePoly> numerators, const Weight& rho) {
  Rational sum = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    Integer den = 1;
    for (const auto& x : pairings(data.points()[i], rho)) den *= x;
    sum += numerators[i].evaluate(rho) / Rational(den);
  }
  return sum;
}

void require_numerators(const FixedPointData& data, std::span<const SparsePoly> numerators) {
  if (numerators.size() != data.size()) {
    throw Error(ErrorKind::precondition, "integrate: expected one numerator per fixed point");
  }
  for (const auto& q : numerators) {
    if (q.rank() != data.torus_rank()) throw Error(ErrorKind::dimension, "integrate: numerator has wrong rank");
  }
}

Rational expanded_constant(const FactoredFraction& f) {
  if (!f.is_constant()) {
    throw Error(ErrorKind::inconsistency, "localization sum is not constant: " + f.to_string());
  }
  return f.numerator().constant_term();
}

Integer require_integer(const Rational& value, const Partition& partition) {
  if (!is_integer(value)) {
    throw Error(ErrorKind::inconsistency, "Chern number c[" + partition.to_string() + "] = " + to_string(value) +
                                              " is not an integer; the data is not realizable");
  }
  return numerator(value);
}

std::vector<SparsePoly> chern_numerators(const FixedPointData& data, const Partition& partition) {
  std::vector<SparsePoly> out;
  for (const auto& p : data.points()) out.push_back(chern_monomial(p.weights, partition, data.torus_rank()));
  return out;
}

}  // namespace

EvalMode parse_eval_mode(std::string_view text) {
  if (text == "generic") return EvalMode::generic;
  if (text == "expanded") return EvalMode::expanded;
  throw Error(ErrorKind::out_of_range, "unknown evaluation mode '" + std::string(text) + "' (generic|expanded)");
}

std::string_view to_string(EvalMode mode) { return mode == EvalMode::generic ? "generic" : "expanded"; }

unsigned Partition::total() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out;
}

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back({current});
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    unsigned value = 0;
    const auto piece = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || value == 0) {
      throw Error(ErrorKind::out_of_range, "bad partition '" + std::string(text) + "': parts must be positive integers");
    }
    p.parts.push_back(value);
    pos = end + 1;
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

EvaluationPoints evaluation_points(const FixedPointData& data) {
  const auto forms = data.all_weights();
  const std::size_t k = data.torus_rank();
  GenericPoint first = find_generic_point(forms, k);
  for (Integer base = first.base + 1;; ++base) {
    std::vector<Integer> entries(k);
    entries[0] = 2;
    Integer power = base;
    for (std::size_t i = 1; i < k; ++i) {
      entries[i] = power;
      power *= base;
    }
    Weight rho(std::move(entries));
    bool ok = true;
    for (const auto& w : forms) {
      if (dot(rho, w) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return {std::move(first.xi), std::move(rho)};
  }
}

FactoredFraction integrate_expanded(const FixedPointData& data, std::span<const SparsePoly> numerators) {
  require_numerators(data, numerators);
  FactoredFraction sum(data.torus_rank());
  for (std::size_t i = 0; i < data.size(); ++i) {
    sum = frac_add(sum, FactoredFraction(numerators[i], data.points()[i].weights));
  }
  return sum;
}

Rational integrate(const FixedPointData& data, std::span<const SparsePoly> numerators, EvalMode mode) {
  require_numerators(data, numerators);
  if (mode == EvalMode::expanded) return expanded_constant(integrate_expanded(data, numerators));

  for (const auto& q : numerators) {
    if (q.degree() > static_cast<int>(data.half_dim())) {
      throw Error(ErrorKind::precondition, "integrate: numerator degree exceeds n; use expanded mode");
    }
  }
  const EvaluationPoints pts = evaluation_points(data);
  const Rational a = poly_sum_at(data, numerators, pts.first);
  const Rational b = poly_sum_at(data, numerators, pts.second);
  if (a != b) {
    throw Error(ErrorKind::inconsistency, "localization sum differs between evaluation points " + pts.first.to_string() +
                                              " (" + to_string(a) + ") and " + pts.second.to_string() + " (" +
                                              to_string(b) + ")");
  }
  return a;
}

SparsePoly chern_monomial(std::span<const Weight> weights, const Partition& partition, std::size_t rank) {
  SparsePoly out = SparsePoly::constant(rank, 1);
  for (unsigned part : partition.parts) {
    if (part > weights.size()) return SparsePoly(rank);  // c_j = 0 above the dimension
    out = out * elem_sym(static_cast<int>(part), weights, rank);
  }
  return out;
}

Integer chern_number(const FixedPointData& data, const Partition& partition, EvalMode mode) {
  if (partition.total() != data.half_dim()) {
    throw Error(ErrorKind::precondition, "chern_number: partition " + partition.to_string() + " does not sum to n = " +
                                             std::to_string(data.half_dim()));
  }
  if (mode == EvalMode::expanded) {
    const auto numerators = chern_numerators(data, partition);
    return require_integer(expanded_constant(integrate_expanded(data, numerators)), partition);
  }
  const EvaluationPoints pts = evaluation_points(data);
  const Rational a = chern_sum_at(data, partition, pts.first);
  const Rational b = chern_sum_at(data, partition, pts.second);
  if (a != b) {
    throw Error(ErrorKind::inconsistency, "c[" + partition.to_string() + "] differs between evaluation points (" +
                                              to_string(a) + " vs " + to_string(b) + ")");
  }
  return require_integer(a, partition);
}

ChernReport chern_numbers(const FixedPointData& data, EvalMode mode) {
  ChernReport report;
  for (const auto& lambda : partitions_of(static_cast<unsigned>(data.half_dim()))) {
    try {
      report.values.emplace(lambda, chern_number(data, lambda, mode));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::inconsistency) throw;
      const std::string msg = e.what();
      if (msg.find("not an integer") != std::string::npos) {
        report.integral = false;
      } else {
        report.two_point_agreement = false;
      }
      report.problems.push_back(msg);
    }
  }
  return report;
}

ValidationReport check_lower_degree_vanishing(const FixedPointData& data, EvalMode mode) {
  CheckResult r{.name = "lower_degree_vanishing", .note = std::string("mode ") + std::string(to_string(mode))};
  const EvaluationPoints pts = evaluation_points(data);
  for (unsigned m = 0; m < data.half_dim(); ++m) {
    for (const auto& lambda : partitions_of(m)) {
      const std::string label = "c[" + lambda.to_string() + "]";
      const Rational a = chern_sum_at(data, lambda, pts.first);
      const Rational b = chern_sum_at(data, lambda, pts.second);
      if (a != 0 || b != 0) {
        r.witnesses.push_back({.message = label + " integrates to " + to_string(a) + " at " + pts.first.to_string() +
                                          " and " + to_string(b) + " at " + pts.second.to_string()});
      }
      if (mode == EvalMode::expanded) {
        const auto numerators = chern_numerators(data, lambda);
        const FactoredFraction sum = integrate_expanded(data, numerators);
        if (!sum.is_zero()) {
          r.witnesses.push_back({.message = label + " expanded localization sum is " + sum.to_string()});
        }
      }
    }
  }
  return single_check(std::move(r));
}

std::string ChernComparison::to_string() const {
  std::string out;
  auto show = [](const std::optional<Integer>& v) { return v ? v->str() : std::string("n/a"); };
  for (const auto& row : rows) {
    out += "c[" + row.partition.to_string() + "]  " + show(row.value) + "  " + show(row.model_value) + "  " +
           (row.equal ? "equal" : "UNEQUAL") + "\n";
  }
  out += cobordant ? "all Chern numbers agree: equivariantly cobordant\n" : "Chern numbers differ: not cobordant\n";
  return out;
}

ChernComparison compare_chern(const FixedPointData& data, const FixedPointData& model, EvalMode mode) {
  if (data.half_dim() != model.half_dim()) throw Error(ErrorKind::precondition, "compare_chern: dimensions differ");
  auto certified = [&](const FixedPointData& d, const Partition& lambda) -> std::optional<Integer> {
    try {
      return chern_number(d, lambda, mode);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::inconsistency) return std::nullopt;
      throw;
    }
  };
  ChernComparison cmp;
  cmp.cobordant = true;
  for (const auto& lambda : partitions_of(static_cast<unsigned>(data.half_dim()))) {
    ChernComparison::Row row{lambda, certified(data, lambda), certified(model, lambda)};
    row.equal = row.value && row.model_value && *row.value == *row.model_value;
    cmp.cobordant = cmp.cobordant && row.equal;
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

}  // namespace gkmkit
