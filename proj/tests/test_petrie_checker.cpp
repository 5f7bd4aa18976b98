#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gkmkit/catalog.hpp"
#include "gkmkit/petrie.hpp"
#include "support.hpp"

using namespace gkmkit;
using gkmtest::throws_kind;

namespace {

FixedPointData replace_weight(const FixedPointData& d, const std::string& id, const Weight& from, const Weight& to) {
  std::vector<FixedPoint> pts = d.points();
  for (auto& p : pts) {
    if (p.id != id) continue;
    *std::find(p.weights.begin(), p.weights.end(), from) = to;
  }
  return FixedPointData(d.torus_rank(), d.half_dim(), std::move(pts), d.torus_manifold());
}

std::multiset<Weight> as_set(const std::vector<Weight>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

TEST_CASE("petrie_verify on the standard CP^n") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const CatalogEntry e = cpn(n);
    const PetrieReport r = petrie_verify(e.data, &*e.graph);
    CHECK(r.verdict == PetrieVerdict::match);
    CHECK(r.base_point == "p0");
    CHECK(r.base_point_independent);
    REQUIRE(r.invariants.has_value());
    CHECK(r.invariants->chi_y == expected_chi_y(n));
    CHECK(r.invariants->todd == 1);
    CHECK(r.invariants->chern_equal_to_model);
  }
}

TEST_CASE("petrie_verify recovers a random basis through shuffling and renaming") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(gkmtest::uniform(rng, 2, 5));
    const auto basis = gkmtest::rows_of(gkmtest::random_unimodular(rng, n));
    const FixedPointData d = gkmtest::relabel(cpn(n, basis).data, rng);
    PetrieOptions opt;
    opt.up_to_gl = true;
    const PetrieReport r = petrie_verify(d, nullptr, opt);
    REQUIRE(r.verdict == PetrieVerdict::match);
    CHECK(r.gl_equivalent == std::optional<bool>{true});
    // The recovered basis is the weight set at the chosen base point.
    CHECK(as_set(r.basis) == as_set(d.at(r.base_point).weights));
    // Regenerating the model from it reproduces the input under the relabeling.
    const FixedPointData model = cpn(n, r.basis).data;
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(as_set(d.at(r.order[i]).weights) == as_set(model.points()[i].weights));
    }
    // Some base point recovers the original basis itself.
    bool original = false;
    for (const auto& p : d.points()) original = original || as_set(p.weights) == as_set(basis);
    CHECK(original);
  }
}

TEST_CASE("petrie_verify rejects a changed weight") {
  const FixedPointData bad = replace_weight(cpn(2).data, "p2", Weight{1, -1}, Weight{1, -2});
  const PetrieReport r = petrie_verify(bad);
  CHECK(r.verdict != PetrieVerdict::match);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("petrie_verify preconditions") {
  CHECK(petrie_verify(s6().data).verdict == PetrieVerdict::precondition_failed);
  CHECK(petrie_verify(fano(FanoVariant::v5).data).verdict == PetrieVerdict::precondition_failed);
  const FixedPointData skew(2, 2, {{"p", {{2, 0}, {0, 1}}}, {"q", {{-2, 0}, {0, -1}}}, {"r", {{1, 1}, {1, -1}}}}, true);
  const PetrieReport r = petrie_verify(skew);
  CHECK(r.verdict == PetrieVerdict::precondition_failed);
  CHECK(r.witness.find("basis") != std::string::npos);
  // Euler number n + 2 instead of n + 1.
  const FixedPointData four(1, 1, {{"a", {{1}}}, {"b", {{-1}}}, {"c", {{1}}}, {"d", {{-1}}}}, true);
  CHECK(petrie_verify(four).verdict == PetrieVerdict::precondition_failed);
}

TEST_CASE("petrie_verify checks a supplied edge list") {
  const CatalogEntry e = cpn(3);
  Multigraph g = *e.graph;
  CHECK(petrie_verify(e.data, &g).verdict == PetrieVerdict::match);
  // Reversing an edge and negating its label describes the same data.
  std::swap(g.edges[3].from, g.edges[3].to);
  g.edges[3].label = -g.edges[3].label;
  CHECK(petrie_verify(e.data, &g).verdict == PetrieVerdict::match);
  // Swapping two labels does not.
  Multigraph h = *e.graph;
  std::swap(h.edges[0].label, h.edges[1].label);
  CHECK(petrie_verify(e.data, &h).verdict == PetrieVerdict::no_match);
}

TEST_CASE("petrie verdict does not depend on point names or weight order") {
  std::mt19937_64 rng(62);
  const std::vector<FixedPointData> inputs{cpn(3).data, replace_weight(cpn(3).data, "p1", Weight{-1, 1, 0}, Weight{-1, 2, 0}),
                                           s6().data};
  for (const auto& d : inputs) {
    const PetrieVerdict v = petrie_verify(d).verdict;
    for (int trial = 0; trial < 10; ++trial) CHECK(petrie_verify(gkmtest::relabel(d, rng)).verdict == v);
  }
}

TEST_CASE("triangle_identity") {
  CHECK(triangle_identity({1, 0}, {0, 1}, {-1, 1}));
  CHECK_FALSE(triangle_identity({1, 0}, {0, 1}, {1, 1}));
  CHECK(throws_kind([] { triangle_identity({1, 0}, {2, 0}, {1, 0}); }, ErrorKind::degenerate));
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const Weight a = gkmtest::random_weight(rng, 3, -4, 4), b = gkmtest::random_weight(rng, 3, -4, 4);
    if (parallel(a, b) || a.is_zero() || b.is_zero()) continue;
    const Weight c = gkmtest::random_weight(rng, 3, -4, 4);
    if (c.is_zero()) continue;
    CHECK(triangle_identity(a, b, c) == (c == b - a));
    CHECK(triangle_identity(a, b, b - a));
  }
}

TEST_CASE("expected_chi_y") {
  CHECK(expected_chi_y(3) == ChiYPolynomial({1, 1, 1, 1}));
  CHECK(expected_chi_y(0) == ChiYPolynomial({1}));
  CHECK(expected_chi_y(3).to_string() == "1 - y + y^2 - y^3");
}

TEST_CASE("gkm_relations") {
  const PetrieReport r = petrie_verify(cpn(2).data);
  const auto rel = gkm_relations(r);
  REQUIRE(rel.size() == 3);
  CHECK(rel[0].from == "p0");
  CHECK(rel[0].to == "p1");
  CHECK(rel[0].divisor == Weight{1, 0});
  CHECK(rel[1].to == "p2");
  CHECK(rel[1].divisor == Weight{0, 1});
  CHECK(rel[2].from == "p1");
  CHECK(rel[2].divisor == Weight{-1, 1});
  const CatalogEntry cp3 = cpn(3);
  const auto rel3 = gkm_relations(petrie_verify(cp3.data));
  CHECK(rel3.size() == 6);
  for (const auto& g : rel3) {
    bool labelled = false;
    for (const auto& e : cp3.graph->edges) labelled = labelled || (e.from == g.from && e.to == g.to && e.label == g.divisor);
    CHECK(labelled);
  }
  CHECK(throws_kind([] { gkm_relations(petrie_verify(s6().data)); }, ErrorKind::precondition));
}

TEST_CASE("simplex_realization") {
  CHECK(simplex_realization(cpn(2).data, petrie_verify(cpn(2).data)) == std::vector<Weight>{{0, 0}, {1, 0}, {0, 1}});
  const std::vector<Weight> basis{{1, 1}, {1, 2}};
  const FixedPointData d = cpn(2, basis).data;
  CHECK(simplex_realization(d, petrie_verify(d)) == std::vector<Weight>{{0, 0}, {1, 1}, {1, 2}});
  const CatalogEntry cp3 = cpn(3);
  const PetrieReport r = petrie_verify(cp3.data);
  const auto v = simplex_realization(cp3.data, r);
  for (const auto& e : cp3.graph->edges) CHECK(e.label == v[r.relabeling.at(e.to)] - v[r.relabeling.at(e.from)]);
}
