#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gkmkit/fpdata.hpp"

namespace gkmkit {

using ExpectedValue = std::variant<bool, std::int64_t, std::vector<std::int64_t>>;

/// A worked example: data, an optional describing graph, and the invariants it must have.
/// Keys used in `expected`: "euler", "chi_y" (coefficients a_0..a_n), "gkm", "pairing",
/// "weight_sum_zero", "simple".
struct CatalogEntry {
  std::string name;
  FixedPointData data;
  std::optional<Multigraph> graph;
  std::map<std::string, ExpectedValue> expected;
};

/// Linear T^n action on CP^n with a_0 = 0 and a_1..a_n the given basis. Fixed points p0..pn,
/// weights at p_i are {a_j - a_i : j != i}, edges p_i -> p_j (i < j) labelled a_j - a_i.
/// Throws precondition if `basis` is not a basis of Z^n.
CatalogEntry cpn(std::size_t n, std::span<const Weight> basis);
CatalogEntry cpn(std::size_t n);  // standard basis

/// T^2 on CP^3 with weights 0, (1,0), (2,0), (0,1): not GKM at p2.
CatalogEntry cp3_nongkm();

/// T^2 on S^6 with two fixed points; a, b must be linearly independent.
CatalogEntry s6(const Weight& a = Weight{1, 0}, const Weight& b = Weight{0, 1});

/// S^6 with one fixed point equivariantly blown up (four fixed points).
CatalogEntry s6_blowup(const Weight& a = Weight{1, 0}, const Weight& b = Weight{0, 1});

enum class FanoVariant { v5, v22 };

/// Circle actions on the Fano 3-folds V_5 (a = 4) and V_22 (a = 5), with the multigraph
/// carrying parallel edges p1-p4 and p2-p3.
CatalogEntry fano(FanoVariant variant);

/// Every fixed-parameter entry: cpn(1..4), cp3_nongkm, s6, s6_blowup, fano V5 and V22.
std::vector<CatalogEntry> default_catalog();

}  // namespace gkmkit
