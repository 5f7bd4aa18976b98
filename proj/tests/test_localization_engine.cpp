#include <doctest.h>

#include <random>

#include "gkmkit/catalog.hpp"
#include "gkmkit/genus.hpp"
#include "gkmkit/localization.hpp"
#include "support.hpp"

using namespace gkmkit;
using gkmtest::throws_kind;

namespace {

std::vector<SparsePoly> per_point(const FixedPointData& d, const std::function<SparsePoly(const FixedPoint&)>& f) {
  std::vector<SparsePoly> out;
  for (const auto& p : d.points()) out.push_back(f(p));
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(3).size() == 3);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(3).front().to_string() == "3");
  CHECK(parse_partition("1,1,2").to_string() == "2,1,1");
  CHECK(parse_partition("2,1,1").total() == 4);
  CHECK(throws_kind([] { parse_partition("1,x"); }, ErrorKind::out_of_range));
  CHECK(throws_kind([] { parse_partition("0,2"); }, ErrorKind::out_of_range));
  CHECK(parse_eval_mode("expanded") == EvalMode::expanded);
  CHECK(throws_kind([] { parse_eval_mode("fast"); }, ErrorKind::out_of_range));
}

TEST_CASE("integrate examples") {
  const FixedPointData cp2 = cpn(2).data;
  const auto ones = per_point(cp2, [](const FixedPoint&) { return SparsePoly::constant(2, 1); });
  CHECK(integrate(cp2, ones) == 0);
  CHECK(integrate(cp2, ones, EvalMode::expanded) == 0);
  const auto c1sq = per_point(cp2, [](const FixedPoint& p) { return elem_sym(1, p.weights, 2).pow(2); });
  CHECK(integrate(cp2, c1sq) == 9);
  CHECK(integrate(cp2, c1sq, EvalMode::expanded) == 9);

  const FixedPointData single(2, 2, {{"p", {{1, 0}, {0, 1}}}});
  const std::vector<SparsePoly> top{elem_sym(2, single.points()[0].weights, 2)};
  CHECK(integrate(single, top) == 1);

  const auto cubic = per_point(cp2, [](const FixedPoint& p) { return elem_sym(1, p.weights, 2).pow(3); });
  CHECK(throws_kind([&] { integrate(cp2, cubic); }, ErrorKind::precondition));
  CHECK(throws_kind([&] { integrate(cp2, std::vector<SparsePoly>{}); }, ErrorKind::precondition));
}

TEST_CASE("localization at rho = (1,3) agrees with the hand computation") {
  // c_1^2 on CP^2: 16/3 - 1/2 + 25/6 = 9.
  const FixedPointData cp2 = cpn(2).data;
  CHECK(gkmtest::brute_chern(cp2, {1, 1}, Weight{1, 3}) == 9);
  CHECK(Rational(16, 3) - Rational(1, 2) + Rational(25, 6) == 9);
}

TEST_CASE("chern numbers of projective spaces") {
  CHECK(chern_number(cpn(2).data, parse_partition("1,1")) == 9);
  CHECK(chern_number(cpn(2).data, parse_partition("2")) == 3);
  CHECK(chern_number(cpn(3).data, parse_partition("3")) == 4);
  CHECK(chern_number(cpn(1).data, parse_partition("1")) == 2);
  CHECK(throws_kind([] { chern_number(cpn(2).data, parse_partition("1")); }, ErrorKind::precondition));
  for (std::size_t n = 1; n <= 4; ++n) {
    const EvaluationPoints rho = evaluation_points(cpn(n).data);
    for (const auto& p : partitions_of(static_cast<unsigned>(n))) {
      INFO(n, " ", p.to_string());
      const long long oracle = gkmtest::cpn_chern(n, p.parts);
      CHECK(gkmtest::brute_chern(cpn(n).data, p.parts, rho.first) == oracle);
      CHECK(gkmtest::brute_chern(cpn(n).data, p.parts, rho.second) == oracle);
      CHECK(chern_number(cpn(n).data, p) == oracle);
    }
    Integer pow = 1;
    for (std::size_t i = 0; i < n; ++i) pow *= Integer(n + 1);
    CHECK(chern_number(cpn(n).data, Partition{std::vector<unsigned>(n, 1)}) == pow);
  }
}

TEST_CASE("the two evaluation modes agree on the catalog") {
  for (const auto& e : default_catalog()) {
    if (e.data.half_dim() > 4) continue;
    INFO(e.name);
    const ChernReport g = chern_numbers(e.data, EvalMode::generic);
    const ChernReport x = chern_numbers(e.data, EvalMode::expanded);
    CHECK(g.consistent());
    CHECK(x.consistent());
    CHECK(g.values == x.values);
  }
}

TEST_CASE("c_n equals the Euler number") {
  for (const auto& e : default_catalog()) {
    if (e.data.half_dim() == 0) continue;
    const Partition top{{static_cast<unsigned>(e.data.half_dim())}};
    CHECK(chern_number(e.data, top) == euler(e.data));
  }
}

TEST_CASE("s6 family Chern numbers") {
  // c_1^3 and c_1 c_2 vanish on S^6 (Todd genus 0 and c_1 c_2 = 24 todd); c_3 = 2.
  const ChernReport r = chern_numbers(s6().data);
  CHECK(r.values.at(parse_partition("1,1,1")) == 0);
  CHECK(r.values.at(parse_partition("2,1")) == 0);
  CHECK(r.values.at(parse_partition("3")) == 2);
  const ChernReport b = chern_numbers(s6_blowup().data);
  CHECK(b.values.at(parse_partition("3")) == 4);
  CHECK(b.values.at(parse_partition("2,1")) == 24 * todd(s6_blowup().data));
}

TEST_CASE("Chern numbers are invariant under GL(n,Z)") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(gkmtest::uniform(rng, 2, 4));
    const auto m = gkmtest::random_unimodular(rng, n);
    const FixedPointData d = cpn(n, gkmtest::rows_of(gkmtest::random_unimodular(rng, n))).data;
    CHECK(chern_numbers(gkmtest::transform(d, m)).values == chern_numbers(d).values);
  }
  for (const auto& e : default_catalog()) {
    const auto m = gkmtest::random_unimodular(rng, e.data.torus_rank());
    CHECK(chern_numbers(gkmtest::transform(e.data, m)).values == chern_numbers(e.data).values);
  }
}

TEST_CASE("lower-degree vanishing") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_lower_degree_vanishing(cpn(n).data).passed());
  for (std::size_t n = 1; n <= 3; ++n) CHECK(check_lower_degree_vanishing(cpn(n).data, EvalMode::expanded).passed());
  // cpn(2) with the weight (1,0) at p0 replaced by (3,1).
  std::vector<FixedPoint> pts = cpn(2).data.points();
  for (auto& p : pts) {
    if (p.id != "p0") continue;
    for (auto& w : p.weights) {
      if (w == Weight{1, 0}) w = Weight{3, 1};
    }
  }
  const FixedPointData corrupt(2, 2, pts, true);
  CHECK_FALSE(check_lower_degree_vanishing(corrupt).passed());
  CHECK_FALSE(check_lower_degree_vanishing(corrupt, EvalMode::expanded).passed());
  // The oracle sees the same non-zero degree-zero integral at rho = (1,2).
  CHECK(gkmtest::brute_chern(corrupt, {}, Weight{1, 2}) == Rational(-2, 5));
}

TEST_CASE("non-integral Chern numbers are reported") {
  // c_1^2 = 2^2/1 + (-1)^2/(-2) = 7/2 on this synthetic data.
  const std::vector<FixedPoint> odd{{"p", {{1}, {1}}}, {"q", {{-2}, {1}}}};
  const FixedPointData e(1, 2, odd);
  CHECK(gkmtest::brute_chern(e, {1, 1}, Weight{1}) == Rational(7, 2));
  const ChernReport r = chern_numbers(e);
  CHECK_FALSE(r.consistent());
  CHECK_FALSE(r.problems.empty());
  CHECK(throws_kind([&] { chern_number(e, parse_partition("1,1")); }, ErrorKind::inconsistency));
}

TEST_CASE("compare_chern") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const FixedPointData b = cpn(3, gkmtest::rows_of(gkmtest::random_unimodular(rng, 3))).data;
    CHECK(compare_chern(b, cpn(3).data).cobordant);
  }
  const ChernComparison c = compare_chern(s6_blowup().data, cpn(3).data);
  CHECK_FALSE(c.cobordant);
  CHECK(compare_chern(s6().data, s6().data).cobordant);
}
