#include "gkmkit/catalog.hpp"

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

std::vector<std::int64_t> ones(std::size_t n) { return std::vector<std::int64_t>(n + 1, 1); }

void require_independent(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank() || a.rank() < 2) throw Error(ErrorKind::dimension, "a and b must be weights of equal length >= 2");
  if (parallel(a, b)) throw Error(ErrorKind::degenerate, "a = " + a.to_string() + " and b = " + b.to_string() + " are dependent");
}

}  // namespace

CatalogEntry cpn(std::size_t n, std::span<const Weight> basis) {
  if (basis.size() != n) throw Error(ErrorKind::dimension, "cpn: expected " + std::to_string(n) + " basis vectors");
  if (n == 0) {
    return {"cp0", FixedPointData(1, 0, {FixedPoint{"p0", {}}}), Multigraph{{"p0"}, {}},
            {{"euler", std::int64_t{1}}, {"chi_y", ones(0)}}};
  }
  if (!is_unimodular_basis(basis)) throw Error(ErrorKind::precondition, "cpn: vectors do not form a basis of Z^n");

  std::vector<Weight> a;
  a.push_back(Weight::zero(n));
  a.insert(a.end(), basis.begin(), basis.end());

  std::vector<FixedPoint> points;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= n; ++i) {
    FixedPoint p{"p" + std::to_string(i), {}};
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != i) p.weights.push_back(a[j] - a[i]);
    }
    points.push_back(std::move(p));
    for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({"p" + std::to_string(i), "p" + std::to_string(j), a[j] - a[i]});
  }
  FixedPointData data(n, n, std::move(points), true);
  Multigraph graph = make_graph(data, std::move(edges));
  return {"cp" + std::to_string(n), std::move(data), std::move(graph),
          {{"euler", static_cast<std::int64_t>(n + 1)},
           {"chi_y", ones(n)},
           {"gkm", true},
           {"pairing", true},
           {"weight_sum_zero", true},
           {"simple", true}}};
}

CatalogEntry cpn(std::size_t n) {
  std::vector<Weight> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Weight::unit(n, i));
  return cpn(n, basis);
}

CatalogEntry cp3_nongkm() {
  FixedPointData data(2, 3,
                      {{"p0", {{1, 0}, {2, 0}, {0, 1}}},
                       {"p1", {{-1, 0}, {1, 0}, {-1, 1}}},
                       {"p2", {{-2, 0}, {-1, 0}, {-2, 1}}},
                       {"p3", {{0, -1}, {1, -1}, {2, -1}}}});
  Multigraph graph = make_graph(data, {{"p0", "p1", {1, 0}},
                                       {"p0", "p2", {2, 0}},
                                       {"p0", "p3", {0, 1}},
                                       {"p1", "p2", {1, 0}},
                                       {"p1", "p3", {-1, 1}},
                                       {"p2", "p3", {-2, 1}}});
  return {"cp3_nongkm", std::move(data), std::move(graph),
          {{"euler", std::int64_t{4}},
           {"chi_y", ones(3)},
           {"gkm", false},
           {"pairing", true},
           {"weight_sum_zero", true}}};
}

CatalogEntry s6(const Weight& a, const Weight& b) {
  require_independent(a, b);
  FixedPointData data(a.rank(), 3, {{"p", {-a - b, a, b}}, {"q", {-a, -b, a + b}}});
  return {"s6", std::move(data), std::nullopt,
          {{"euler", std::int64_t{2}},
           {"chi_y", std::vector<std::int64_t>{0, 1, 1, 0}},
           {"pairing", true},
           {"weight_sum_zero", true}}};
}

CatalogEntry s6_blowup(const Weight& a, const Weight& b) {
  require_independent(a, b);
  const Weight two_a = Integer(2) * a, two_b = Integer(2) * b;
  FixedPointData data(a.rank(), 3,
                      {{"p1", {-two_a - b, a, b - a}},
                       {"p2", {-a - b, two_a + b, a + two_b}},
                       {"p3", {a - b, -a - two_b, b}},
                       {"q", {-a, -b, a + b}}});
  return {"s6_blowup", std::move(data), std::nullopt,
          {{"euler", std::int64_t{4}},
           {"chi_y", std::vector<std::int64_t>{0, 2, 2, 0}},
           {"pairing", true},
           {"weight_sum_zero", true}}};
}

CatalogEntry fano(FanoVariant variant) {
  const long long a = variant == FanoVariant::v5 ? 4 : 5;
  FixedPointData data(1, 3,
                      {{"p1", {{1}, {2}, {3}}},
                       {"p2", {{-1}, {1}, {a}}},
                       {"p3", {{-1}, {-a}, {1}}},
                       {"p4", {{-1}, {-2}, {-3}}}});
  Multigraph graph = make_graph(data, {{"p1", "p4", {2}},
                                       {"p1", "p4", {3}},
                                       {"p1", "p2", {1}},
                                       {"p2", "p3", {1}},
                                       {"p2", "p3", {a}},
                                       {"p3", "p4", {1}}});
  return {variant == FanoVariant::v5 ? "fano_v5" : "fano_v22", std::move(data), std::move(graph),
          {{"euler", std::int64_t{4}},
           {"chi_y", ones(3)},
           {"pairing", true},
           {"weight_sum_zero", true},
           {"simple", false}}};
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(cpn(n));
  out.push_back(cp3_nongkm());
  out.push_back(s6());
  out.push_back(s6_blowup());
  out.push_back(fano(FanoVariant::v5));
  out.push_back(fano(FanoVariant::v22));
  return out;
}

}  // namespace gkmkit
