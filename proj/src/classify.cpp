#include "gkmkit/classify.hpp"

#include <algorithm>

#include "gkmkit/error.hpp"

namespace gkmkit {

namespace {

std::vector<Integer> sorted_values(const FixedPoint& p) {
  std::vector<Integer> out;
  for (const auto& w : p.weights) out.push_back(w[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> sorted(std::vector<Integer> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t negatives(const std::vector<Integer>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return x < 0; }));
}

}  // namespace

std::string FewPointClass::to_string() const {
  switch (shape) {
    case FewPointShape::point: return "point";
    case FewPointShape::sphere_dim2: return "sphere-dim2(a=" + a->str() + ")";
    case FewPointShape::dim6_pair: return "dim6-pair(a=" + a->str() + ",b=" + b->str() + ")";
    case FewPointShape::dim4_triple: return "dim4-triple(a=" + a->str() + ",b=" + b->str() + ")";
    case FewPointShape::nonconforming: return "nonconforming";
  }
  return "nonconforming";
}

FewPointClass classify_few_fixed_points(const FixedPointData& data) {
  if (data.torus_rank() != 1) throw Error(ErrorKind::precondition, "classify_few_fixed_points: requires a circle action (k = 1)");
  const std::size_t count = data.size();
  if (count < 1 || count > 3) throw Error(ErrorKind::precondition, "classify_few_fixed_points: requires 1 to 3 fixed points");
  const std::size_t n = data.half_dim();
  const auto& pts = data.points();

  if (count == 1) {
    return n == 0 ? FewPointClass{FewPointShape::point, {}, {}} : FewPointClass{};
  }

  if (count == 2) {
    const auto u = sorted_values(pts[0]);
    const auto v = sorted_values(pts[1]);
    if (n == 1) {
      if (u[0] == -v[0]) return {FewPointShape::sphere_dim2, abs(u[0]), {}};
      return {};
    }
    if (n == 3) {
      // the point {-a-b, a, b} has exactly one negative weight
      const auto& p = negatives(u) == 1 ? u : v;
      const auto& q = negatives(u) == 1 ? v : u;
      if (negatives(p) != 1) return {};
      const Integer a = p[1], b = p[2];
      if (a <= 0 || b <= 0 || p[0] != -a - b) return {};
      if (q != sorted({-a, -b, a + b})) return {};
      return {FewPointShape::dim6_pair, a, b};
    }
    return {};
  }

  if (n != 2) return {};
  // {a+b, a} is the unique all-positive point
  for (std::size_t i = 0; i < 3; ++i) {
    const auto top = sorted_values(pts[i]);
    if (negatives(top) != 0) continue;
    const Integer a = top[0], b = top[1] - top[0];
    if (a <= 0 || b <= 0) return {};
    const auto x = sorted_values(pts[(i + 1) % 3]);
    const auto y = sorted_values(pts[(i + 2) % 3]);
    const auto mid = sorted({-a, b});
    const auto low = sorted({-b, -a - b});
    if ((x == mid && y == low) || (x == low && y == mid)) return {FewPointShape::dim4_triple, a, b};
    return {};
  }
  return {};
}

}  // namespace gkmkit
