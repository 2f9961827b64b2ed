// Brute-force grid and sampling oracle over the feasible b-region. This is the
// independent check on every closed-form bound: it never reuses the bound
// formulas it is verifying, only the coefficient closed forms.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splus/bseq.hpp"

namespace splus {

// {b : b_n >= 0, b1 <= b1_max, sum_{n>=2} (n-1) b_n <= lambda, and optionally
// no root of q inside the unit disc}.
struct FeasibleRegion {
  int max_index = 0;  // M; 0 lets maximize/verify_bound derive it from the functional
  double lambda = 1.0;
  double b1_max = 2.0;
  bool analyticity_guard = false;

  // Standard region for a given budget: b1_max = 1 + lambda.
  static FeasibleRegion for_lambda(double lambda, int max_index = 0, bool guard = false);
};

enum class FunctionalKind { a2, a3, a4, a5, gamma1, gamma2, gamma3, fs };

// One member of the functional family, optionally negated; fs carries its
// gamma. Evaluation uses the coefficient closed forms.
struct FunctionalId {
  FunctionalKind kind = FunctionalKind::a3;
  bool negated = false;
  double gamma = 0.0;  // fs only

  // "a3", "-gamma3", "fs" (with the gamma argument supplied separately).
  static FunctionalId parse(std::string_view name, std::optional<double> gamma = std::nullopt);

  std::string name() const;
  int min_index() const;  // largest b-index the functional reads
  double eval(std::span<const double> b) const;
  double eval(const BSeq<double>& b) const { return eval(std::span<const double>(b.raw())); }
};

enum class Direction { upper, lower };

struct SearchResult {
  FunctionalId functional_id;
  double best_value = 0.0;
  BSeq<double> argmax;
  double grid_step = 0.0;     // initial step; 0 for sampling runs
  double refined_step = 0.0;  // step after refinement rounds (== grid_step when none)
  long long samples_evaluated = 0;
  std::optional<double> bound_compared;
  Direction direction = Direction::upper;
  long long violation_count = 0;
  double lambda = 1.0;
  bool guard = false;
};

struct SampleStats {
  long long attempts = 0;
  long long accepted = 0;

  double rejection_rate() const {
    return attempts > 0 ? 1.0 - static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0;
  }
};

// Deterministic for a fixed seed. Draw order per sample: raw values for
// b2..bM, then the weight target t uniform on [0, lambda), then b1 uniform on
// [0, b1_max); (b2..bM) are scaled so the weight equals t. The guard rejects
// afterwards, so enabling it changes acceptance, not the stream layout.
// lambda == 0 degenerates to {b2..bM = 0}; lambda < 0 is an error.
std::vector<BSeq<double>> sample_feasible(const FeasibleRegion& region, long long count,
                                          std::uint64_t seed, SampleStats* stats = nullptr);

struct SearchOptions {
  std::optional<double> bound;  // treated as an upper bound on the maximized value
  double violation_tol = 1e-9;
  int refine_rounds = 0;  // halve the step around the incumbent this many times
  long long max_evaluations = 4'000'000'000LL;
  int partitions = 0;  // concurrent chunks of the b1 range; 0 = hardware threads
};

// Exhaustive lattice search (b1 outer, bM inner, budget-pruned) returning the
// best value and the first-found argmax. Refuses with a suggested coarser
// step when the estimated lattice exceeds options.max_evaluations.
SearchResult maximize(const FunctionalId& functional, FeasibleRegion region, double grid_step,
                      const SearchOptions& options = {});

// Evaluates the functional on seeded samples plus every catalog member lying
// in the region; counts values beyond bound +/- 1e-9 and reports the most
// extreme value (max for upper, min for lower) with its witness.
SearchResult verify_bound(const FunctionalId& functional, double bound, Direction direction,
                          FeasibleRegion region, long long samples, std::uint64_t seed);

// {functional, lambda, grid_step, best_value, argmax, bound, gap, violations, guard}
std::string report_json(const SearchResult& result);

}  // namespace splus
