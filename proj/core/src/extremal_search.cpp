#include "splus/extremal_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "splus/analyticity.hpp"
#include "splus/catalog.hpp"

namespace splus {

namespace {

constexpr double kGuardTol = 1e-9;   // rho = 1 - kGuardTol in the fast sign test
constexpr double kFeasTol = 1e-12;   // slack on continuous feasibility checks

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate_region(const FeasibleRegion& region) {
  if (region.lambda < 0.0) throw std::domain_error("feasible region: negative weight budget");
  if (region.lambda > 1.0) throw std::domain_error("feasible region: weight budget above 1");
  if (region.b1_max < 0.0) throw std::domain_error("feasible region: negative b1 box");
  if (region.max_index < 0) throw std::invalid_argument("feasible region: negative max index");
}

struct Incumbent {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> arg;
  long long evaluated = 0;
  long long violations = 0;
  bool any = false;
};

// #{(i_2..i_M) >= 0 : sum (n-1) i_n <= budget} in long double (cap estimates
// only; counts can exceed 2^63 on absurd grids).
long double count_budget_lattice(long long budget, int max_index) {
  if (max_index <= 1) return 1.0L;
  std::vector<long double> le(static_cast<std::size_t>(budget) + 1, 1.0L);
  for (int n = 2; n <= max_index; ++n) {
    const long long w = n - 1;
    std::vector<long double> next(le.size());
    for (long long j = 0; j < static_cast<long long>(le.size()); ++j) {
      next[j] = le[static_cast<std::size_t>(j)] +
                (j >= w ? next[static_cast<std::size_t>(j - w)] : 0.0L);
    }
    le = std::move(next);
  }
  return le.back();
}

struct GridSearch {
  FunctionalId f;
  int M;
  double step;
  double lambda;
  double b1_max;
  bool guard;
  std::optional<double> bound;
  double vtol;

  double rho = 1.0 - kGuardTol;
  double guard_slack = 0.0;
  std::vector<double> neg_rho_pow;  // (-rho)^n
  long long budget_units = 0;       // floor((lambda + eps)/step)
  long long i1_cap = 0;             // floor((b1_max + eps)/step)

  void prepare() {
    guard_slack = 1e-13 * (2.0 + b1_max + lambda);
    neg_rho_pow.assign(static_cast<std::size_t>(M) + 1, 1.0);
    for (int n = 1; n <= M; ++n) neg_rho_pow[static_cast<std::size_t>(n)] = neg_rho_pow[static_cast<std::size_t>(n - 1)] * -rho;
    budget_units = static_cast<long long>(std::floor((lambda + 1e-9) / step));
    i1_cap = static_cast<long long>(std::floor((b1_max + 1e-9) / step));
  }

  long double estimated_points() const {
    return (static_cast<long double>(i1_cap) + 1.0L) * count_budget_lattice(budget_units, M);
  }

  Incumbent run_b1_range(long long i1_lo, long long i1_hi) const {
    Incumbent inc;
    inc.arg.assign(static_cast<std::size_t>(M), 0.0);
    std::vector<double> coords(static_cast<std::size_t>(M), 0.0);
    for (long long i1 = i1_lo; i1 <= i1_hi; ++i1) {
      coords[0] = static_cast<double>(i1) * step;
      const double gpre = 1.0 + coords[0] * neg_rho_pow[1];
      if (M == 1) {
        scan_point(coords, gpre, inc);
      } else {
        walk(2, budget_units, gpre, coords, inc);
      }
    }
    return inc;
  }

  // Levels 2..M-1: plain nested loops with budget pruning.
  void walk(int n, long long remaining, double gpre, std::vector<double>& coords, Incumbent& inc) const {
    if (n == M) {
      innermost(remaining, gpre, coords, inc);
      return;
    }
    const long long cap = remaining / (n - 1);
    for (long long i = 0; i <= cap; ++i) {
      coords[static_cast<std::size_t>(n - 1)] = static_cast<double>(i) * step;
      walk(n + 1, remaining - (n - 1) * i,
           gpre + coords[static_cast<std::size_t>(n - 1)] * neg_rho_pow[static_cast<std::size_t>(n)],
           coords, inc);
    }
    coords[static_cast<std::size_t>(n - 1)] = 0.0;
  }

  // The innermost coordinate: both the functional and the guard polynomial are
  // linear in b_M along a fiber, so the whole index range collapses to O(1).
  void innermost(long long remaining, double gpre, std::vector<double>& coords, Incumbent& inc) const {
    long long lo = 0;
    long long hi = remaining / (M - 1);
    const double gs = step * neg_rho_pow[static_cast<std::size_t>(M)];
    if (guard && !clip_to_guard(gpre, gs, lo, hi)) return;

    inc.evaluated += hi - lo + 1;

    auto& bm = coords[static_cast<std::size_t>(M - 1)];
    bm = 0.0;
    const double v0 = f.eval(coords);
    bm = step;
    const double slope = f.eval(coords) - v0;

    const long long istar = slope > 0.0 ? hi : lo;
    bm = static_cast<double>(istar) * step;
    const double vstar = f.eval(coords);
    if (vstar > inc.best) {
      inc.best = vstar;
      inc.arg.assign(coords.begin(), coords.end());
      inc.any = true;
    }
    if (bound) count_linear_violations(v0, slope, lo, hi, inc);
    bm = 0.0;
  }

  // Single-coordinate region (M == 1): b1 is the only axis, no fiber trick.
  void scan_point(std::vector<double>& coords, double gvalue, Incumbent& inc) const {
    if (guard && gvalue < -guard_slack) return;
    ++inc.evaluated;
    const double v = f.eval(coords);
    if (v > inc.best) {
      inc.best = v;
      inc.arg.assign(coords.begin(), coords.end());
      inc.any = true;
    }
    if (bound && v > *bound + vtol) ++inc.violations;
  }

  // Restrict [lo, hi] to {i : gpre + gs*i >= -slack}; false when empty.
  bool clip_to_guard(double gpre, double gs, long long& lo, long long& hi) const {
    if (gs > 0.0) {
      if (gpre < -guard_slack) {
        const double x = (-guard_slack - gpre) / gs;
        lo = std::max(lo, static_cast<long long>(std::ceil(x - 1e-9)));
      }
    } else if (gs < 0.0) {
      const double x = (-guard_slack - gpre) / gs;
      hi = std::min(hi, static_cast<long long>(std::floor(x + 1e-9)));
    } else if (gpre < -guard_slack) {
      return false;
    }
    return lo <= hi;
  }

  void count_linear_violations(double v0, double slope, long long lo, long long hi, Incumbent& inc) const {
    const double thr = *bound + vtol;
    if (slope == 0.0) {
      if (v0 > thr) inc.violations += hi - lo + 1;
      return;
    }
    const double crossing = (thr - v0) / slope;
    if (slope > 0.0) {
      long long first = static_cast<long long>(std::floor(crossing)) + 1;
      first = std::max(first, lo);
      if (first <= hi) inc.violations += hi - first + 1;
    } else {
      long long last = static_cast<long long>(std::ceil(crossing)) - 1;
      last = std::min(last, hi);
      if (last >= lo) inc.violations += last - lo + 1;
    }
  }
};

// Feasibility of a continuous point (refinement rounds and brute checks).
bool point_feasible(std::span<const double> b, double lambda, double b1_max, bool guard) {
  if (!b.empty() && b[0] > b1_max + kFeasTol) return false;
  double weight = 0.0;
  for (std::size_t n = 2; n <= b.size(); ++n) weight += static_cast<double>(n - 1) * b[n - 1];
  if (weight > lambda + kFeasTol) return false;
  return !guard || analytic_in_disc_fast(b, kGuardTol);
}

}  // namespace

FeasibleRegion FeasibleRegion::for_lambda(double lambda, int max_index, bool guard) {
  FeasibleRegion region;
  region.lambda = lambda;
  region.b1_max = 1.0 + lambda;
  region.max_index = max_index;
  region.analyticity_guard = guard;
  validate_region(region);
  return region;
}

FunctionalId FunctionalId::parse(std::string_view name, std::optional<double> gamma) {
  FunctionalId f;
  std::string_view s = name;
  if (!s.empty() && s.front() == '-') {
    f.negated = true;
    s.remove_prefix(1);
  } else if (s.starts_with("neg_") || s.starts_with("neg-")) {
    f.negated = true;
    s.remove_prefix(4);
  }
  if (s == "a2") f.kind = FunctionalKind::a2;
  else if (s == "a3") f.kind = FunctionalKind::a3;
  else if (s == "a4") f.kind = FunctionalKind::a4;
  else if (s == "a5") f.kind = FunctionalKind::a5;
  else if (s == "gamma1") f.kind = FunctionalKind::gamma1;
  else if (s == "gamma2") f.kind = FunctionalKind::gamma2;
  else if (s == "gamma3") f.kind = FunctionalKind::gamma3;
  else if (s == "fs") f.kind = FunctionalKind::fs;
  else throw std::invalid_argument("unknown functional '" + std::string(name) + "'");

  if (f.kind == FunctionalKind::fs) {
    f.gamma = gamma.value_or(0.0);
    if (!(f.gamma >= 0.0) || f.gamma >= 1.0) {
      throw std::domain_error("functional fs: gamma outside [0,1)");
    }
  } else if (gamma) {
    throw std::invalid_argument("gamma applies to the fs functional only");
  }
  return f;
}

std::string FunctionalId::name() const {
  std::string base;
  switch (kind) {
    case FunctionalKind::a2: base = "a2"; break;
    case FunctionalKind::a3: base = "a3"; break;
    case FunctionalKind::a4: base = "a4"; break;
    case FunctionalKind::a5: base = "a5"; break;
    case FunctionalKind::gamma1: base = "gamma1"; break;
    case FunctionalKind::gamma2: base = "gamma2"; break;
    case FunctionalKind::gamma3: base = "gamma3"; break;
    case FunctionalKind::fs: {
      std::ostringstream out;
      out << "fs(" << gamma << ")";
      base = out.str();
      break;
    }
  }
  return negated ? "-" + base : base;
}

int FunctionalId::min_index() const {
  switch (kind) {
    case FunctionalKind::a2:
    case FunctionalKind::gamma1: return 1;
    case FunctionalKind::a3:
    case FunctionalKind::gamma2:
    case FunctionalKind::fs: return 2;
    case FunctionalKind::a4:
    case FunctionalKind::gamma3: return 3;
    case FunctionalKind::a5: return 4;
  }
  return 1;
}

double FunctionalId::eval(std::span<const double> b) const {
  const auto at = [&](std::size_t n) {
    return n <= b.size() ? b[n - 1] : 0.0;
  };
  const double b1 = at(1), b2 = at(2), b3 = at(3), b4 = at(4);
  double v = 0.0;
  switch (kind) {
    case FunctionalKind::a2: v = -b1; break;
    case FunctionalKind::a3: v = b1 * b1 - b2; break;
    case FunctionalKind::a4: v = -b3 + 2.0 * b1 * b2 - b1 * b1 * b1; break;
    case FunctionalKind::a5:
      v = b1 * b1 * b1 * b1 - 3.0 * b1 * b1 * b2 + b2 * b2 + 2.0 * b1 * b3 - b4;
      break;
    case FunctionalKind::gamma1: v = -b1 / 2.0; break;
    case FunctionalKind::gamma2: v = (b1 * b1 / 2.0 - b2) / 2.0; break;
    case FunctionalKind::gamma3: v = (-b1 * b1 * b1 / 3.0 + b1 * b2 - b3) / 2.0; break;
    case FunctionalKind::fs: v = (1.0 - gamma) * b1 * b1 - b2; break;
  }
  return negated ? -v : v;
}

std::vector<BSeq<double>> sample_feasible(const FeasibleRegion& region, long long count,
                                          std::uint64_t seed, SampleStats* stats) {
  validate_region(region);
  if (region.max_index < 1) {
    throw std::invalid_argument("sample_feasible: region needs max_index >= 1");
  }
  if (count <= 0) throw std::invalid_argument("sample_feasible: count must be positive");

  const int M = region.max_index;
  std::mt19937_64 rng(seed);
  std::vector<BSeq<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  SampleStats local;

  std::vector<double> b(static_cast<std::size_t>(M), 0.0);
  while (static_cast<long long>(out.size()) < count) {
    if (local.attempts > 1000 * count + 1000) {
      throw std::runtime_error("sample_feasible: guard rejection rate implausibly high");
    }
    ++local.attempts;

    double raw_weight = 0.0;
    for (int n = 2; n <= M; ++n) {
      b[static_cast<std::size_t>(n - 1)] = u01(rng);
      raw_weight += static_cast<double>(n - 1) * b[static_cast<std::size_t>(n - 1)];
    }
    const double target = u01(rng) * region.lambda;
    const double scale = raw_weight > 0.0 ? target / raw_weight : 0.0;
    for (int n = 2; n <= M; ++n) b[static_cast<std::size_t>(n - 1)] *= scale;
    b[0] = u01(rng) * region.b1_max;

    if (region.analyticity_guard && !analytic_in_disc_fast(std::span<const double>(b), kGuardTol)) {
      continue;
    }
    out.push_back(BSeq<double>(b).normalized());
    ++local.accepted;
  }
  if (stats) *stats = local;
  return out;
}

SearchResult maximize(const FunctionalId& functional, FeasibleRegion region, double grid_step,
                      const SearchOptions& options) {
  validate_region(region);
  if (!(grid_step > 0.0)) throw std::invalid_argument("maximize: grid_step must be positive");
  if (region.max_index == 0) region.max_index = functional.min_index();

  GridSearch search;
  search.f = functional;
  search.M = region.max_index;
  search.step = grid_step;
  search.lambda = region.lambda;
  search.b1_max = region.b1_max;
  search.guard = region.analyticity_guard;
  search.bound = options.bound;
  search.vtol = options.violation_tol;
  search.prepare();

  const long double estimate = search.estimated_points();
  if (estimate > static_cast<long double>(options.max_evaluations)) {
    const double factor = std::pow(static_cast<double>(estimate / static_cast<long double>(options.max_evaluations)),
                                   1.0 / static_cast<double>(search.M));
    const double suggested = grid_step * factor * 1.05;
    std::ostringstream msg;
    msg << "maximize: grid of ~" << static_cast<double>(estimate) << " points exceeds the "
        << options.max_evaluations << "-evaluation cap; use a step of at least " << suggested;
    throw std::runtime_error(msg.str());
  }

  int partitions = options.partitions;
  if (partitions <= 0) {
    partitions = static_cast<int>(std::thread::hardware_concurrency());
    if (partitions <= 0) partitions = 1;
    partitions = std::min(partitions, 16);
  }
  partitions = static_cast<int>(std::min<long long>(partitions, search.i1_cap + 1));
  partitions = std::max(partitions, 1);

  std::vector<Incumbent> parts(static_cast<std::size_t>(partitions));
  {
    std::vector<std::thread> threads;
    const long long total = search.i1_cap + 1;
    for (int p = 0; p < partitions; ++p) {
      const long long lo = total * p / partitions;
      const long long hi = total * (p + 1) / partitions - 1;
      threads.emplace_back([&search, &parts, p, lo, hi] { parts[static_cast<std::size_t>(p)] = search.run_b1_range(lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  // Ordered reduction: identical result for any partition count.
  Incumbent inc;
  inc.arg.assign(static_cast<std::size_t>(search.M), 0.0);
  for (const auto& part : parts) {
    inc.evaluated += part.evaluated;
    inc.violations += part.violations;
    if (part.any && part.best > inc.best) {
      inc.best = part.best;
      inc.arg = part.arg;
      inc.any = true;
    }
  }

  // Halve the step around the incumbent; each round re-checks feasibility
  // directly, so the refined points need not sit on the original lattice.
  double cur_step = grid_step;
  for (int round = 0; round < options.refine_rounds && inc.any; ++round) {
    const double new_step = cur_step / 2.0;
    std::vector<double> coords(static_cast<std::size_t>(search.M), 0.0);
    std::vector<double> lo(static_cast<std::size_t>(search.M), 0.0);
    std::vector<long long> steps(static_cast<std::size_t>(search.M), 0);
    for (int k = 0; k < search.M; ++k) {
      lo[static_cast<std::size_t>(k)] = std::max(0.0, inc.arg[static_cast<std::size_t>(k)] - 2.0 * cur_step);
      double hi = inc.arg[static_cast<std::size_t>(k)] + 2.0 * cur_step;
      if (k == 0) hi = std::min(hi, region.b1_max);
      steps[static_cast<std::size_t>(k)] =
          static_cast<long long>(std::floor((hi - lo[static_cast<std::size_t>(k)]) / new_step + 1e-9));
    }
    const std::function<void(int)> enumerate = [&](int k) {
      if (k == search.M) {
        if (!point_feasible(coords, region.lambda, region.b1_max, region.analyticity_guard)) return;
        ++inc.evaluated;
        const double v = functional.eval(coords);
        if (v > inc.best) {
          inc.best = v;
          inc.arg = coords;
        }
        if (options.bound && v > *options.bound + options.violation_tol) ++inc.violations;
        return;
      }
      for (long long j = 0; j <= steps[static_cast<std::size_t>(k)]; ++j) {
        coords[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)] + static_cast<double>(j) * new_step;
        enumerate(k + 1);
      }
    };
    enumerate(0);
    cur_step = new_step;
  }

  SearchResult result;
  result.functional_id = functional;
  result.best_value = inc.best;
  // Trailing zeros are an artifact of the fixed-length lattice vector.
  result.argmax = BSeq<double>(inc.arg).normalized();
  result.grid_step = grid_step;
  result.refined_step = cur_step;
  result.samples_evaluated = inc.evaluated;
  result.bound_compared = options.bound;
  result.direction = Direction::upper;
  result.violation_count = inc.violations;
  result.lambda = region.lambda;
  result.guard = region.analyticity_guard;
  return result;
}

SearchResult verify_bound(const FunctionalId& functional, double bound, Direction direction,
                          FeasibleRegion region, long long samples, std::uint64_t seed) {
  validate_region(region);
  if (samples <= 0) throw std::invalid_argument("verify_bound: samples must be positive");
  if (region.max_index == 0) region.max_index = functional.min_index();

  auto points = sample_feasible(region, samples, seed);
  for (CatalogId id : all_catalog_ids()) {
    BSeq<double> member = catalog_needs_lambda(id)
                              ? catalog(id, region.lambda > 0.0 ? region.lambda : 1.0)
                              : catalog(id);
    if (point_feasible(std::span<const double>(member.raw()), region.lambda, region.b1_max,
                       region.analyticity_guard)) {
      points.push_back(std::move(member));
    }
  }

  const double sign = direction == Direction::upper ? 1.0 : -1.0;
  SearchResult result;
  result.functional_id = functional;
  result.grid_step = 0.0;
  result.refined_step = 0.0;
  result.bound_compared = bound;
  result.direction = direction;
  result.lambda = region.lambda;
  result.guard = region.analyticity_guard;
  result.samples_evaluated = static_cast<long long>(points.size());

  double best_signed = -std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    const double v = functional.eval(p);
    if (sign * v > best_signed) {
      best_signed = sign * v;
      result.best_value = v;
      result.argmax = p;
    }
    if (direction == Direction::upper ? v > bound + 1e-9 : v < bound - 1e-9) {
      ++result.violation_count;
    }
  }
  return result;
}

std::string report_json(const SearchResult& result) {
  nlohmann::json report;
  report["functional"] = result.functional_id.name();
  report["lambda"] = result.lambda;
  if (result.grid_step > 0.0) {
    report["grid_step"] = result.grid_step;
  } else {
    report["grid_step"] = nullptr;
  }
  report["best_value"] = result.best_value;
  report["argmax"] = result.argmax.raw();
  if (result.bound_compared) {
    report["bound"] = *result.bound_compared;
    report["gap"] = result.direction == Direction::upper ? *result.bound_compared - result.best_value
                                                         : result.best_value - *result.bound_compared;
  } else {
    report["bound"] = nullptr;
    report["gap"] = nullptr;
  }
  report["violations"] = result.violation_count;
  report["guard"] = result.guard;
  return report.dump();
}

}  // namespace splus
