#include "gkmkit/graph_build.hpp"

#include <algorithm>
#include <map>

#include "gkmkit/checks.hpp"
#include "gkmkit/error.hpp"
#include "gkmkit/matching.hpp"

namespace gkmkit {

std::vector<Weight> residues_mod(const std::vector<Weight>& weights, const Weight& w) {
  std::vector<Weight> out;
  out.reserve(weights.size());
  for (const auto& u : weights) out.push_back(residue_mod(u, w));
  std::sort(out.begin(), out.end());
  return out;
}

BuildResult build_multigraph(const FixedPointData& data) {
  if (!check_pairing(data).passed()) {
    throw Error(ErrorKind::precondition, "build_multigraph: pairing check fails, no describing multigraph exists");
  }

  // canonical w -> point indices holding w (plus) and -w (minus), one entry per occurrence
  struct Occurrences {
    std::vector<std::size_t> plus, minus;
  };
  std::map<Weight, Occurrences> classes;
  const auto& pts = data.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const auto& w : pts[i].weights) {
      const Canonical c = canonicalize(w);
      auto& occ = classes[c.weight];
      (c.sign > 0 ? occ.plus : occ.minus).push_back(i);
    }
  }

  BuildResult result;
  for (const auto& p : pts) result.graph.vertices.push_back(p.id);

  for (const auto& [w, occ] : classes) {
    // Equal sorted residue lists <=> a bijection of the full multisets congruent mod w exists.
    std::map<std::size_t, std::vector<Weight>> signature;
    for (std::size_t i : occ.plus) signature.try_emplace(i, residues_mod(pts[i].weights, w));
    for (std::size_t i : occ.minus) signature.try_emplace(i, residues_mod(pts[i].weights, w));

    auto solve = [&](bool allow_loops) {
      return max_bipartite_matching(occ.plus.size(), occ.minus.size(), [&](std::size_t a, std::size_t b) {
        const std::size_t p = occ.plus[a], q = occ.minus[b];
        if (p == q) return allow_loops;
        return signature.at(p) == signature.at(q);
      });
    };
    auto m = solve(false);
    if (!is_perfect(m, occ.minus.size())) {
      m = solve(true);
      if (!is_perfect(m, occ.minus.size())) {
        throw Error(ErrorKind::no_matching, "build_multigraph: no admissible perfect matching for weight class " +
                                                w.to_string());
      }
      result.loop_free = false;
    }
    for (std::size_t a = 0; a < m.size(); ++a) {
      result.graph.edges.push_back({pts[occ.plus[a]].id, pts[occ.minus[*m[a]]].id, w});
    }
  }
  return result;
}

}  // namespace gkmkit
