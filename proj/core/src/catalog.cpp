#include "splus/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace splus {

namespace {

struct Entry {
  CatalogId id;
  std::string_view name;
  bool needs_lambda;
  bool exact_ok;
};

constexpr Entry kEntries[] = {
    {CatalogId::f1, "f1", false, true},
    {CatalogId::koebe_plus, "koebe_plus", false, true},
    {CatalogId::f3, "f3", false, true},
    {CatalogId::f4, "f4", false, true},
    {CatalogId::f_lambda, "f_lambda", true, true},
    {CatalogId::f6, "f6", true, true},
    {CatalogId::f7, "f7", true, false},
    {CatalogId::f7_star, "f7_star", true, false},
    {CatalogId::f8, "f8", true, true},
};

const Entry& entry(CatalogId id) {
  for (const auto& e : kEntries) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("catalog: unknown id");
}

template <typename S>
S checked_lambda(CatalogId id, const std::optional<S>& lambda) {
  if (!catalog_needs_lambda(id)) {
    if (lambda) throw std::invalid_argument("catalog: lambda given for a non-parametric member");
    return S(0);
  }
  if (!lambda) throw std::invalid_argument("catalog: lambda required for this member");
  if (!(*lambda > S(0)) || *lambda > S(1)) {
    throw std::domain_error("catalog: lambda outside (0,1]");
  }
  return *lambda;
}

}  // namespace

std::vector<CatalogId> all_catalog_ids() {
  std::vector<CatalogId> ids;
  for (const auto& e : kEntries) ids.push_back(e.id);
  return ids;
}

std::string_view to_string(CatalogId id) { return entry(id).name; }

std::optional<CatalogId> catalog_id_from_string(std::string_view name) {
  for (const auto& e : kEntries) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

bool catalog_needs_lambda(CatalogId id) { return entry(id).needs_lambda; }

bool catalog_exact_representable(CatalogId id) { return entry(id).exact_ok; }

BSeq<double> catalog(CatalogId id, std::optional<double> lambda) {
  const double L = checked_lambda(id, lambda);
  switch (id) {
    case CatalogId::f1: return BSeq<double>({0.0, 1.0});
    case CatalogId::koebe_plus: return BSeq<double>({2.0, 1.0});
    case CatalogId::f3: return BSeq<double>({1.0, 1.0});
    case CatalogId::f4: return BSeq<double>({0.0, 0.0, 0.5});
    case CatalogId::f_lambda: return BSeq<double>({1.0 + L, L});
    case CatalogId::f6: return BSeq<double>({0.0, L});
    case CatalogId::f7: return BSeq<double>({std::sqrt(2.0 * L / 3.0), L});
    case CatalogId::f7_star: return BSeq<double>({std::sqrt(3.0 * L / 2.0), L});
    case CatalogId::f8: return BSeq<double>({0.0, 0.0, 0.0, L / 3.0});
  }
  throw std::invalid_argument("catalog: unknown id");
}

BSeq<Rational> catalog_exact(CatalogId id, std::optional<Rational> lambda) {
  if (!catalog_exact_representable(id)) {
    throw std::domain_error("catalog_exact: member has irrational coefficients; use the floating catalog");
  }
  const Rational L = checked_lambda(id, lambda);
  const Rational zero(0), one(1);
  switch (id) {
    case CatalogId::f1: return BSeq<Rational>({zero, one});
    case CatalogId::koebe_plus: return BSeq<Rational>({Rational(2), one});
    case CatalogId::f3: return BSeq<Rational>({one, one});
    case CatalogId::f4: return BSeq<Rational>({zero, zero, Rational(1, 2)});
    case CatalogId::f_lambda: return BSeq<Rational>({one + L, L});
    case CatalogId::f6: return BSeq<Rational>({zero, L});
    case CatalogId::f8: return BSeq<Rational>({zero, zero, zero, L / 3});
    default: break;
  }
  throw std::invalid_argument("catalog_exact: unknown id");
}

}  // namespace splus
