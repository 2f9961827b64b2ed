#include "cli_app.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splus/analytic_probe.hpp"
#include "splus/analyticity.hpp"
#include "splus/bounds.hpp"
#include "splus/bseq.hpp"
#include "splus/catalog.hpp"
#include "splus/extremal_search.hpp"
#include "splus/verification.hpp"
#include "splus/version.hpp"

namespace splus::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20250822;

std::string fmt(double v) { return json(v).dump(); }

json interval_json(const Interval& iv) { return json::array({iv.lower, iv.upper}); }

struct CsvRow {
  std::string quantity;
  std::string value;
  std::string bound;
  std::string verdict;
};

struct Output {
  std::string format = "text";
  std::string out_path;
  json doc;
  std::string text;
  std::vector<CsvRow> csv;

  int emit(std::ostream& out, std::ostream& err) const {
    std::string payload;
    if (format == "json") {
      payload = doc.dump(2);
      payload += '\n';
    } else if (format == "csv") {
      payload = "quantity,value,bound,verdict\n";
      for (const auto& row : csv) {
        payload += row.quantity + "," + row.value + "," + row.bound + "," + row.verdict + "\n";
      }
    } else {
      payload = text;
    }
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) {
        err << "error: cannot open " << out_path << " for writing\n";
        return 2;
      }
      file << payload;
      return -1;  // sentinel: emitted fine, keep the handler's exit code
    }
    out << payload;
    return -1;
  }
};

json make_doc(const std::string& command, json inputs, json results, json tolerances) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"tolerances", std::move(tolerances)},
              {"version", kVersion}};
}

// Shared --b / --catalog / --lambda input block.
struct BOptions {
  std::string b_text;
  std::string catalog_name;
  std::string lambda_text;

  void attach(CLI::App* cmd, bool lambda_help_ulambda) {
    cmd->add_option("--b", b_text,
                    "comma-separated nonnegative coefficients b1,b2,...; decimals or fractions, "
                    "not mixed");
    std::string names;
    for (CatalogId id : all_catalog_ids()) {
      if (!names.empty()) names += "|";
      names += std::string(to_string(id));
    }
    cmd->add_option("--catalog", catalog_name, "named member: " + names);
    cmd->add_option("--lambda", lambda_text,
                    lambda_help_ulambda
                        ? "budget in (0,1]: parameter for parametric catalog entries, and enables "
                          "the U+(lambda) test"
                        : "parameter in (0,1] for the parametric catalog entries");
  }
};

struct BInput {
  ScalarMode mode = ScalarMode::floating;
  BSeq<double> dbl{std::vector<double>{}};
  std::optional<BSeq<Rational>> exact;
  std::optional<Rational> lambda;
  json inputs;
};

BInput resolve_b(const BOptions& opt, bool lambda_allowed_with_b) {
  if (opt.b_text.empty() == opt.catalog_name.empty()) {
    throw std::invalid_argument("exactly one of --b or --catalog is required");
  }
  BInput in;
  if (!opt.lambda_text.empty()) in.lambda = parse_rational(opt.lambda_text);
  if (!opt.b_text.empty()) {
    if (in.lambda && !lambda_allowed_with_b) {
      throw std::invalid_argument("--lambda requires --catalog here");
    }
    in.mode = detect_scalar_mode(opt.b_text);
    if (in.mode == ScalarMode::exact) {
      in.exact = parse_bseq_exact(opt.b_text);
      std::vector<double> approx;
      for (int n = 1; n <= in.exact->max_index(); ++n) approx.push_back(to_double(in.exact->coeff(n)));
      in.dbl = BSeq<double>(std::move(approx));
    } else {
      in.dbl = parse_bseq(opt.b_text);
    }
    in.inputs["b"] = opt.b_text;
  } else {
    const auto id = catalog_id_from_string(opt.catalog_name);
    if (!id) throw std::invalid_argument("unknown catalog name: " + opt.catalog_name);
    std::optional<double> lam;
    if (in.lambda) lam = to_double(*in.lambda);
    in.dbl = catalog(*id, lam);
    if (catalog_exact_representable(*id)) {
      in.exact = catalog_exact(*id, in.lambda);
      in.mode = ScalarMode::exact;
    } else {
      in.mode = ScalarMode::floating;
    }
    in.inputs["catalog"] = opt.catalog_name;
  }
  if (in.lambda) in.inputs["lambda"] = opt.lambda_text;
  in.inputs["mode"] = in.mode == ScalarMode::exact ? "exact" : "floating";
  return in;
}

const char* yesno(bool v) { return v ? "yes" : "no"; }

// --- check ---
struct CheckCmd {
  BOptions b;
  bool starhalf = false;
  bool analytic = false;

  int execute(Output& o) const {
    BInput in = resolve_b(b, true);
    json results;
    std::ostringstream text;
    bool all_ok = true;

    const double weight = splus_weight(in.dbl);
    bool splus_ok;
    if (in.exact) {
      const Rational w = splus_weight(*in.exact);
      splus_ok = w <= Rational(1);
      results["weight_exact"] = to_string(w);
    } else {
      splus_ok = is_splus_member(in.dbl);
    }
    results["weight"] = weight;
    results["splus"] = splus_ok;
    all_ok = all_ok && splus_ok;
    text << "mode: " << (in.exact ? "exact" : "floating") << "\n";
    text << "weight sum (n-1) b_n = " << fmt(weight);
    if (in.exact) text << " (" << results["weight_exact"].get<std::string>() << ")";
    text << "\n";
    text << "S+ member: " << yesno(splus_ok) << "\n";
    o.csv.push_back({"splus", fmt(weight), "1", yesno(splus_ok)});

    if (in.lambda) {
      const double lam = to_double(*in.lambda);
      bool ul_ok;
      if (in.exact) {
        if (*in.lambda <= Rational(0) || *in.lambda > Rational(1)) {
          throw std::domain_error("lambda must lie in (0, 1]");
        }
        ul_ok = splus_weight(*in.exact) <= *in.lambda;
      } else {
        ul_ok = ulambda_weight_check(in.dbl, lam);
      }
      results["ulambda"] = ul_ok;
      all_ok = all_ok && ul_ok;
      text << "U+(" << fmt(lam) << ") member: " << yesno(ul_ok) << "\n";
      o.csv.push_back({"ulambda", fmt(weight), fmt(lam), yesno(ul_ok)});
    }

    if (starhalf) {
      const double s = starlike_half_sum(in.dbl);
      bool sh_ok;
      if (in.exact) {
        sh_ok = starlike_half_sum(*in.exact) <= Rational(1);
      } else {
        sh_ok = s <= 1.0;
      }
      results["starlike_half_sum"] = s;
      results["starlike_half"] = sh_ok;
      all_ok = all_ok && sh_ok;
      text << "starlike-1/2 sum (2n-1) b_n = " << fmt(s) << ": " << yesno(sh_ok) << "\n";
      o.csv.push_back({"starlike_half", fmt(s), "1", yesno(sh_ok)});
    }

    if (analytic) {
      const double root = min_root_modulus(in.dbl);
      const bool an_ok = analytic_in_disc(in.dbl);
      results["min_root_modulus"] = root;
      results["analytic"] = an_ok;
      all_ok = all_ok && an_ok;
      text << "analytic in the unit disc: " << yesno(an_ok) << " (min root modulus " << fmt(root)
           << ")\n";
      o.csv.push_back({"analytic", fmt(root), "1", yesno(an_ok)});
    }

    text << (all_ok ? "PASS" : "FAIL") << "\n";
    o.text = text.str();
    o.doc = make_doc("check", in.inputs, results, json{{"analytic_root_tol", 1e-7}});
    return all_ok ? 0 : 1;
  }
};

// --- coeffs ---
struct CoeffsCmd {
  BOptions b;
  int order = 12;
  std::vector<std::string> fs_gammas;

  int execute(Output& o) const {
    BInput in = resolve_b(b, false);
    in.inputs["N"] = order;
    json results;
    std::ostringstream text;
    text << "mode: " << (in.exact ? "exact" : "floating") << "\n";

    json a_json = json::object();
    json g_json = json::object();
    if (in.exact) {
      const auto taylor = taylor_from_b(*in.exact, order);
      for (int n = 2; n <= order; ++n) {
        const std::string v = to_string(taylor.at(n));
        a_json["a" + std::to_string(n)] = v;
        text << "a_" << n << " = " << v << "\n";
        o.csv.push_back({"a" + std::to_string(n), v, "", ""});
      }
      const auto logs = log_coeffs_from_b(*in.exact, 3);
      for (int n = 1; n <= 3; ++n) {
        const std::string v = to_string(logs.at(n));
        g_json["gamma" + std::to_string(n)] = v;
        text << "gamma_" << n << " = " << v << "\n";
        o.csv.push_back({"gamma" + std::to_string(n), v, "", ""});
      }
    } else {
      const auto taylor = taylor_from_b(in.dbl, order);
      for (int n = 2; n <= order; ++n) {
        a_json["a" + std::to_string(n)] = taylor.at(n);
        text << "a_" << n << " = " << fmt(taylor.at(n)) << "\n";
        o.csv.push_back({"a" + std::to_string(n), fmt(taylor.at(n)), "", ""});
      }
      const auto logs = log_coeffs_from_b(in.dbl, 3);
      for (int n = 1; n <= 3; ++n) {
        g_json["gamma" + std::to_string(n)] = logs.at(n);
        text << "gamma_" << n << " = " << fmt(logs.at(n)) << "\n";
        o.csv.push_back({"gamma" + std::to_string(n), fmt(logs.at(n)), "", ""});
      }
    }
    results["a"] = a_json;
    results["log"] = g_json;

    if (!fs_gammas.empty()) {
      json fs_json = json::array();
      for (const auto& gtext : fs_gammas) {
        const Rational gr = parse_rational(gtext);
        const std::string label = "fs(" + gtext + ")";
        if (in.exact) {
          const Rational v = fekete_szego_value(*in.exact, gr);
          fs_json.push_back({{"gamma", gtext}, {"value", to_string(v)}});
          text << label << " = " << to_string(v) << "\n";
          o.csv.push_back({label, to_string(v), "", ""});
        } else {
          const double v = fekete_szego_value(in.dbl, to_double(gr));
          fs_json.push_back({{"gamma", gtext}, {"value", v}});
          text << label << " = " << fmt(v) << "\n";
          o.csv.push_back({label, fmt(v), "", ""});
        }
      }
      results["fs"] = fs_json;
    }

    o.text = text.str();
    o.doc = make_doc("coeffs", in.inputs, results, json::object());
    return 0;
  }
};

// --- bounds ---
struct BoundsCmd {
  bool want_nu0 = false;
  bool want_log = false;
  bool want_fs_table = false;
  std::vector<double> fs_gammas;
  std::string lambda_text;

  int execute(Output& o) const {
    const bool lambda_given = !lambda_text.empty();
    const bool all = !want_nu0 && !want_log && !want_fs_table && fs_gammas.empty() && !lambda_given;
    json inputs;
    json results;
    std::ostringstream text;

    if (all || want_nu0) {
      const double nu0 = solve_nu0();
      const double residual = 2.0 * (2.0 * nu0 + 1.0) * std::exp(-2.0 * nu0) - 1.0;
      results["nu0"] = nu0;
      results["breakpoint"] = nu0 / (1.0 + nu0);
      results["nu0_residual"] = residual;
      text << "nu0 = " << fmt(nu0) << " (root of 2(2v+1)e^(-2v) = 1, residual " << fmt(residual)
           << ")\n";
      text << "breakpoint nu0/(1+nu0) = " << fmt(nu0 / (1.0 + nu0)) << "\n";
      o.csv.push_back({"nu0", fmt(nu0), "", ""});
      o.csv.push_back({"breakpoint", fmt(nu0 / (1.0 + nu0)), "", ""});
    }

    if (all || want_log) {
      const auto logs = log_coeff_bounds();
      results["gamma1"] = interval_json(logs.gamma1);
      results["gamma2"] = interval_json(logs.gamma2);
      results["gamma3"] = interval_json(logs.gamma3);
      text << "gamma1 in [" << fmt(logs.gamma1.lower) << ", " << fmt(logs.gamma1.upper) << "]\n";
      text << "gamma2 in [" << fmt(logs.gamma2.lower) << ", " << fmt(logs.gamma2.upper) << "]\n";
      text << "gamma3 in [" << fmt(logs.gamma3.lower) << ", " << fmt(logs.gamma3.upper) << "]\n";
      o.csv.push_back({"gamma1", fmt(logs.gamma1.lower), fmt(logs.gamma1.upper), ""});
      o.csv.push_back({"gamma2", fmt(logs.gamma2.lower), fmt(logs.gamma2.upper), ""});
      o.csv.push_back({"gamma3", fmt(logs.gamma3.lower), fmt(logs.gamma3.upper), ""});
    }

    std::vector<double> gammas = fs_gammas;
    if (all || want_fs_table) {
      for (int i = 0; i < 20; ++i) gammas.push_back(0.05 * i);
    }
    if (!gammas.empty()) {
      json fs_json = json::array();
      for (double g : gammas) {
        const auto bound = fs_upper(g);
        fs_json.push_back({{"gamma", g},
                           {"lower", bound.lower},
                           {"upper", bound.upper},
                           {"branch", bound.branch == FsBranch::exp_branch ? "exp" : "nu0"}});
        text << "fs(" << fmt(g) << ") in [" << fmt(bound.lower) << ", " << fmt(bound.upper)
             << "] (" << (bound.branch == FsBranch::exp_branch ? "exp" : "nu0") << " branch)\n";
        o.csv.push_back({"fs(" + fmt(g) + ")", fmt(bound.lower), fmt(bound.upper), ""});
      }
      results["fs"] = fs_json;
    }

    if (all || lambda_given) {
      const double lam = lambda_given ? to_double(parse_rational(lambda_text)) : 1.0;
      inputs["lambda"] = lam;
      const auto iv = uplus_coeff_intervals(lam);
      json c;
      c["lambda"] = iv.lambda;
      c["a2"] = interval_json(iv.a2);
      c["a3"] = interval_json(iv.a3);
      c["a4"] = interval_json(iv.a4);
      c["a5_lower"] = iv.a5_lower;
      if (iv.a5_upper) c["a5_upper"] = *iv.a5_upper;
      results["coeff_intervals"] = c;
      text << "U+(" << fmt(lam) << ") coefficient ranges:\n";
      text << "  a2 in [" << fmt(iv.a2.lower) << ", " << fmt(iv.a2.upper) << "]\n";
      text << "  a3 in [" << fmt(iv.a3.lower) << ", " << fmt(iv.a3.upper) << "]\n";
      text << "  a4 in [" << fmt(iv.a4.lower) << ", " << fmt(iv.a4.upper) << "]\n";
      text << "  a5 >= " << fmt(iv.a5_lower);
      if (iv.a5_upper) text << ", a5 <= " << fmt(*iv.a5_upper);
      text << "\n";
      o.csv.push_back({"a2", fmt(iv.a2.lower), fmt(iv.a2.upper), ""});
      o.csv.push_back({"a3", fmt(iv.a3.lower), fmt(iv.a3.upper), ""});
      o.csv.push_back({"a4", fmt(iv.a4.lower), fmt(iv.a4.upper), ""});
      o.csv.push_back({"a5_lower", fmt(iv.a5_lower), "", ""});
      if (iv.a5_upper) o.csv.push_back({"a5_upper", fmt(*iv.a5_upper), "", ""});
    }

    o.text = text.str();
    o.doc = make_doc("bounds", inputs, results, json{{"nu0_solver_tol", 1e-12}});
    return 0;
  }
};

// --- search ---
struct SearchCmd {
  std::string functional_name;
  double gamma = 0.0;
  bool gamma_given = false;
  std::string lambda_text = "1";
  int max_index = 0;
  double step = 0.005;
  int refine_rounds = 0;
  bool guard = false;
  double bound = 0.0;
  bool bound_given = false;
  std::string direction = "upper";
  long long samples = 0;
  long long max_evals = 4'000'000'000LL;
  int partitions = 0;
  double b1_max = -1.0;
  std::uint64_t seed = kDefaultSeed;

  int execute(Output& o) const {
    const auto functional =
        FunctionalId::parse(functional_name,
                            gamma_given ? std::optional<double>(gamma) : std::nullopt);
    const double lam = to_double(parse_rational(lambda_text));
    FeasibleRegion region = FeasibleRegion::for_lambda(lam, max_index, guard);
    if (b1_max >= 0.0) region.b1_max = b1_max;

    json inputs{{"functional", functional.name()}, {"lambda", lam},
                {"guard", guard},                 {"seed", seed}};
    SearchResult res;
    if (samples > 0) {
      if (!bound_given) {
        throw std::invalid_argument("--samples requires --bound to verify against");
      }
      const Direction dir = direction == "lower" ? Direction::lower : Direction::upper;
      inputs["samples"] = samples;
      inputs["direction"] = direction;
      res = verify_bound(functional, bound, dir, region, samples, seed);
    } else {
      SearchOptions options;
      if (bound_given) options.bound = bound;
      options.refine_rounds = refine_rounds;
      options.max_evaluations = max_evals;
      options.partitions = partitions;
      inputs["step"] = step;
      inputs["refine_rounds"] = refine_rounds;
      res = maximize(functional, region, step, options);
    }

    json results = json::parse(report_json(res));
    results["samples_evaluated"] = res.samples_evaluated;
    results["refined_step"] = res.refined_step;
    results["max_index"] = region.max_index == 0 ? functional.min_index() : region.max_index;

    std::ostringstream text;
    text << (samples > 0 ? "sampled extreme of " : "grid maximum of ") << functional.name()
         << " over lambda=" << fmt(lam) << (guard ? " (guard on)" : " (guard off)") << ": "
         << fmt(res.best_value) << " at b=(" << to_string(res.argmax) << ")\n";
    text << "evaluations: " << res.samples_evaluated << "\n";
    std::string verdict;
    if (bound_given) {
      text << "bound " << fmt(bound) << ": " << res.violation_count << " violation(s)\n";
      verdict = res.violation_count == 0 ? "ok" : "violated";
    }
    o.csv.push_back({functional.name(), fmt(res.best_value),
                     bound_given ? fmt(bound) : std::string{}, verdict});
    o.text = text.str();
    o.doc = make_doc("search", inputs, results,
                     json{{"violation_tol", 1e-9}, {"feasibility_tol", 1e-12},
                          {"guard_tol", 1e-9}});
    return bound_given && res.violation_count > 0 ? 1 : 0;
  }
};

// --- probe ---
struct ProbeCmd {
  BOptions b;
  std::string quantity = "starlike";
  double alpha = 0.0;
  double r = 0.99;
  DiscGrid grid;

  int execute(Output& o) const {
    BInput in = resolve_b(b, false);
    in.inputs["quantity"] = quantity;

    if (quantity == "convexity") {
      const double v = convexity_probe(in.dbl, r);
      in.inputs["r"] = r;
      o.doc = make_doc("probe", in.inputs, json{{"quantity", "convexity"}, {"r", r}, {"value", v}},
                       json::object());
      std::ostringstream text;
      text << "Re(1 + z f''/f') at z = " << fmt(r) << ": " << fmt(v) << "\n";
      o.text = text.str();
      o.csv.push_back({"convexity", fmt(v), "", ""});
      return 0;
    }

    ProbeReport rep;
    if (quantity == "starlike") {
      in.inputs["alpha"] = alpha;
      rep = starlike_re(in.dbl, grid, alpha);
    } else if (quantity == "u-residual") {
      rep = u_residual(in.dbl, grid);
    } else if (quantity == "g-prime") {
      rep = g_re_prime(in.dbl, grid);
    } else if (quantity == "f-over-z") {
      rep = f_over_z_re(in.dbl, grid);
    } else {
      throw std::invalid_argument("unknown probe quantity: " + quantity);
    }
    o.doc = make_doc("probe", in.inputs, json::parse(report_json(rep)),
                     json{{"grid_tolerance", rep.tolerance}});
    std::ostringstream text;
    text << rep.quantity << " over " << grid.radial_steps << "x" << grid.angular_steps
         << " grid up to r=" << fmt(grid.r_max) << ":\n";
    text << "  min " << fmt(rep.min_value) << " at (" << fmt(rep.arg_min.real()) << ", "
         << fmt(rep.arg_min.imag()) << ")\n";
    text << "  max " << fmt(rep.max_value) << " at (" << fmt(rep.arg_max.real()) << ", "
         << fmt(rep.arg_max.imag()) << ")\n";
    o.text = text.str();
    o.csv.push_back({rep.quantity + ".min", fmt(rep.min_value), "", ""});
    o.csv.push_back({rep.quantity + ".max", fmt(rep.max_value), "", ""});
    return 0;
  }
};

// --- verify ---
struct VerifyCmd {
  VerifyConfig config;

  int execute(Output& o) const {
    const auto checks = run_verification(config);
    int failed = 0;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& c : checks) {
      if (!c.passed) ++failed;
      arr.push_back({{"id", c.id},
                     {"name", c.name},
                     {"passed", c.passed},
                     {"runtime_ms", c.runtime_ms},
                     {"details", c.details}});
      text << "[" << (c.passed ? "PASS" : "FAIL") << "] " << c.id << " " << c.name << " ("
           << fmt(c.runtime_ms) << " ms)\n    " << c.details << "\n";
      std::ostringstream ms;
      ms << c.runtime_ms;
      o.csv.push_back({c.name, ms.str(), "", c.passed ? "PASS" : "FAIL"});
    }
    text << checks.size() - failed << " passed, " << failed << " failed\n";
    json inputs{{"seed", config.seed}};
    if (!config.only.empty()) inputs["only"] = config.only;
    o.doc = make_doc("verify", inputs,
                     json{{"checks", arr},
                          {"passed", static_cast<int>(checks.size()) - failed},
                          {"failed", failed}},
                     json{{"grid_target_window", 0.01},
                          {"violation_tol", 1e-9},
                          {"closed_vs_series", 1e-12},
                          {"fs_grid_max", 1e-6},
                          {"pinned_constant_window", 1e-5}});
    o.text = text.str();
    return failed > 0 ? 1 : 0;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"membership, coefficients, bounds, and verification for the b-sequence function "
               "class"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Output output;
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", output.out_path, "write output to this path instead of stdout");

  CheckCmd check_cmd;
  auto* check_sub = app.add_subcommand("check", "membership tests for one function");
  check_cmd.b.attach(check_sub, true);
  check_sub->add_flag("--starhalf", check_cmd.starhalf, "also test the starlike-1/2 criterion");
  check_sub->add_flag("--analytic", check_cmd.analytic,
                      "also test analyticity of z/q in the unit disc");

  CoeffsCmd coeffs_cmd;
  auto* coeffs_sub = app.add_subcommand("coeffs", "Taylor and logarithmic coefficients");
  coeffs_cmd.b.attach(coeffs_sub, false);
  coeffs_sub->add_option("--N", coeffs_cmd.order, "highest Taylor index (>= 5)")
      ->check(CLI::Range(5, 200))
      ->capture_default_str();
  coeffs_sub->add_option("--fs-gamma", coeffs_cmd.fs_gammas,
                         "evaluate a3 - gamma a2^2 at these gamma values");

  BoundsCmd bounds_cmd;
  auto* bounds_sub = app.add_subcommand("bounds", "closed-form bound tables");
  bounds_sub->add_flag("--nu0", bounds_cmd.want_nu0, "the controlling root and breakpoint");
  bounds_sub->add_flag("--log-coeffs", bounds_cmd.want_log, "logarithmic coefficient ranges");
  bounds_sub->add_flag("--fs-table", bounds_cmd.want_fs_table,
                       "Fekete-Szego range over a gamma grid");
  bounds_sub->add_option("--fs-gamma", bounds_cmd.fs_gammas, "Fekete-Szego range at these gammas")
      ->check(CLI::Range(0.0, 0.999999));
  bounds_sub->add_option("--lambda", bounds_cmd.lambda_text,
                         "coefficient intervals for this budget in (0,1]");

  SearchCmd search_cmd;
  auto* search_sub = app.add_subcommand(
      "search", "grid search or sampled verification over the feasible region");
  search_sub->add_option("--functional", search_cmd.functional_name,
                         "a2|a3|a4|a5|gamma1|gamma2|gamma3|fs, with optional leading -")
      ->required();
  auto* gamma_opt = search_sub->add_option("--gamma", search_cmd.gamma, "gamma for fs");
  search_sub->add_option("--lambda", search_cmd.lambda_text, "weight budget in (0,1]")
      ->capture_default_str();
  search_sub->add_option("--M", search_cmd.max_index,
                         "highest b index (0 derives it from the functional)");
  search_sub->add_option("--step", search_cmd.step, "grid step")->capture_default_str();
  search_sub->add_option("--refine-rounds", search_cmd.refine_rounds,
                         "halve the step around the incumbent this many times");
  search_sub->add_flag("--guard", search_cmd.guard, "restrict to q with no root in the disc");
  auto* bound_opt = search_sub->add_option("--bound", search_cmd.bound,
                                           "count grid or sample values beyond this bound");
  search_sub->add_option("--direction", search_cmd.direction,
                         "side the bound lives on (sampling mode)")
      ->check(CLI::IsMember({"upper", "lower"}));
  search_sub->add_option("--samples", search_cmd.samples,
                         "sampling mode: verify the bound on this many samples");
  search_sub->add_option("--max-evals", search_cmd.max_evals, "refuse grids larger than this");
  search_sub->add_option("--partitions", search_cmd.partitions,
                         "concurrent chunks (0 = hardware threads)");
  search_sub->add_option("--b1-max", search_cmd.b1_max, "override the b1 box");
  search_sub->add_option("--seed", search_cmd.seed, "sampling seed");

  ProbeCmd probe_cmd;
  auto* probe_sub = app.add_subcommand("probe", "geometric checks on unit-disc grids");
  probe_cmd.b.attach(probe_sub, false);
  probe_sub->add_option("--quantity", probe_cmd.quantity, "what to evaluate")
      ->check(CLI::IsMember({"starlike", "u-residual", "g-prime", "f-over-z", "convexity"}))
      ->capture_default_str();
  probe_sub->add_option("--alpha", probe_cmd.alpha, "starlike order to compare against");
  probe_sub->add_option("--r", probe_cmd.r, "radius for the convexity probe")
      ->capture_default_str();
  probe_sub->add_option("--r-max", probe_cmd.grid.r_max, "outer grid radius")
      ->capture_default_str();
  probe_sub->add_option("--radial-steps", probe_cmd.grid.radial_steps, "radii count")
      ->capture_default_str();
  probe_sub->add_option("--angular-steps", probe_cmd.grid.angular_steps, "angles per radius")
      ->capture_default_str();

  VerifyCmd verify_cmd;
  auto* verify_sub = app.add_subcommand("verify", "run the built-in verification battery");
  verify_sub->add_option("--only", verify_cmd.config.only,
                         "run only checks whose name contains one of these substrings");
  verify_sub->add_option("--seed", verify_cmd.config.seed, "sampling seed")
      ->capture_default_str();
  verify_sub->add_flag("--inject-failure", verify_cmd.config.inject_failure, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  search_cmd.gamma_given = gamma_opt->count() > 0;
  search_cmd.bound_given = bound_opt->count() > 0;

  try {
    int code = 2;
    if (check_sub->parsed()) {
      code = check_cmd.execute(output);
    } else if (coeffs_sub->parsed()) {
      code = coeffs_cmd.execute(output);
    } else if (bounds_sub->parsed()) {
      code = bounds_cmd.execute(output);
    } else if (search_sub->parsed()) {
      code = search_cmd.execute(output);
    } else if (probe_sub->parsed()) {
      code = probe_cmd.execute(output);
    } else if (verify_sub->parsed()) {
      code = verify_cmd.execute(output);
    }
    const int emit_code = output.emit(out, err);
    return emit_code == -1 ? code : emit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace splus::cli
