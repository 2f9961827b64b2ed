// The named extremal functions, stored as their b-sequences.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "splus/bseq.hpp"
#include "splus/rational.hpp"

namespace splus {

// Each id names z/q(z) for the q listed here:
//   f1         1 + z^2                    (attains the Fekete-Szego lower edge)
//   koebe_plus 1 + 2z + z^2 = (1+z)^2     (koebe-type member z/(1+z)^2)
//   f3         1 + z + z^2
//   f4         1 + z^3/2
//   f_lambda   1 + (1+L)z + Lz^2 = (1+z)(1+Lz)
//   f6         1 + Lz^2
//   f7         1 + sqrt(2L/3) z + Lz^2
//   f7_star    1 + sqrt(3L/2) z + Lz^2
//   f8         1 + (L/3) z^4
enum class CatalogId { f1, koebe_plus, f3, f4, f_lambda, f6, f7, f7_star, f8 };

std::vector<CatalogId> all_catalog_ids();
std::string_view to_string(CatalogId id);
std::optional<CatalogId> catalog_id_from_string(std::string_view name);

// True for the lambda-parametric members (f_lambda, f6, f7, f7_star, f8).
bool catalog_needs_lambda(CatalogId id);

// False for f7 and f7_star, whose b1 is irrational for general lambda.
bool catalog_exact_representable(CatalogId id);

// lambda must be in (0,1] where applicable, and must be absent otherwise.
BSeq<double> catalog(CatalogId id, std::optional<double> lambda = std::nullopt);
BSeq<Rational> catalog_exact(CatalogId id, std::optional<Rational> lambda = std::nullopt);

}  // namespace splus
