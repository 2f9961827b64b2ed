#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_app.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;

  bool out_has(const std::string& needle) const { return out.find(needle) != std::string::npos; }
};

CliRun run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage(args);
  std::vector<const char*> argv;
  argv.push_back("splus");
  for (const auto& a : storage) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      splus::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse_out(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli membership checks") {
  const auto member = run_cli({"check", "--catalog", "f1"});
  CHECK(member.code == 0);
  CHECK(member.out_has("S+ member: yes"));
  CHECK(member.out_has("PASS"));

  const auto heavy = run_cli({"check", "--b", "0,1.2"});
  CHECK(heavy.code == 1);
  CHECK(heavy.out_has("S+ member: no"));
  CHECK(heavy.out_has("FAIL"));

  const auto extras = run_cli({"check", "--b", "0,1/3", "--starhalf", "--analytic"});
  CHECK(extras.code == 0);
  CHECK(extras.out_has("starlike-1/2"));
  CHECK(extras.out_has("analytic in the unit disc: yes"));

  const auto ul_yes = run_cli({"check", "--catalog", "f6", "--lambda", "1/2"});
  CHECK(ul_yes.code == 0);
  CHECK(ul_yes.out_has("U+(0.5) member: yes"));

  const auto ul_no = run_cli({"check", "--b", "0,0.9", "--lambda", "1/2"});
  CHECK(ul_no.code == 1);
  CHECK(ul_no.out_has("member: no"));
}

TEST_CASE("cli input validation") {
  CHECK(run_cli({"check", "--b", "1/2,0.5"}).code == 2);  // mixed notation
  CHECK(run_cli({"check"}).code == 2);                    // no input
  CHECK(run_cli({"check", "--b", "1", "--catalog", "f1"}).code == 2);
  CHECK(run_cli({"check", "--catalog", "no_such_member"}).code == 2);
  CHECK(run_cli({"check", "--catalog", "f_lambda"}).code == 2);  // lambda required
  CHECK(run_cli({"check", "--b", "-1"}).code == 2);
  CHECK_FALSE(run_cli({"check", "--b", "1/2,0.5"}).err.empty());
}

TEST_CASE("cli json document shape") {
  const auto r = run_cli({"--format", "json", "check", "--catalog", "f1"});
  REQUIRE(r.code == 0);
  const auto doc = parse_out(r);
  for (const char* key : {"command", "inputs", "results", "tolerances", "version"}) {
    CAPTURE(key);
    CHECK(doc.contains(key));
  }
  CHECK(doc["command"] == "check");
  CHECK(doc["inputs"]["catalog"] == "f1");
  CHECK(doc["results"]["splus"] == true);
  CHECK(doc["version"] == "0.1.0");
}

TEST_CASE("cli coefficient listings") {
  const auto r = run_cli({"--format", "json", "coeffs", "--catalog", "f3"});
  REQUIRE(r.code == 0);
  const auto doc = parse_out(r);
  CHECK(doc["inputs"]["mode"] == "exact");
  CHECK(doc["results"]["a"]["a2"] == "-1");
  CHECK(doc["results"]["a"]["a3"] == "0");
  CHECK(doc["results"]["log"]["gamma3"] == "1/3");
  CHECK(doc["results"]["a"].contains("a12"));

  CHECK(run_cli({"coeffs", "--catalog", "f3", "--N", "4"}).code == 2);
  CHECK(run_cli({"coeffs", "--catalog", "f3", "--N", "201"}).code == 2);

  const auto fs = run_cli({"--format", "json", "coeffs", "--b", "0.5,0", "--fs-gamma", "1/2"});
  REQUIRE(fs.code == 0);
  const auto fs_doc = parse_out(fs);
  CHECK(fs_doc["inputs"]["mode"] == "floating");
  CHECK(fs_doc["results"]["fs"][0]["value"] == 0.125);
}

TEST_CASE("cli bound tables") {
  const auto nu0 = parse_out(run_cli({"--format", "json", "bounds", "--nu0"}));
  CHECK(std::abs(nu0["results"]["nu0"].get<double>() - 0.83917349500833033) <= 1e-12);
  CHECK(std::abs(nu0["results"]["breakpoint"].get<double>() - 0.45627750578502622) <= 1e-12);

  const auto fs = parse_out(run_cli({"--format", "json", "bounds", "--fs-gamma", "0.5"}));
  CHECK(std::abs(fs["results"]["fs"][0]["upper"].get<double>() - 1.2629279019295837) <= 1e-12);
  CHECK(fs["results"]["fs"][0]["branch"] == "nu0");

  const auto iv = parse_out(run_cli({"--format", "json", "bounds", "--lambda", "1"}));
  CHECK(iv["results"]["coeff_intervals"]["a5_upper"] == 5.0);
  CHECK(std::abs(iv["results"]["coeff_intervals"]["a4"][1].get<double>() - 1.0886621079036347) <=
        1e-12);

  const auto all = run_cli({"bounds"});
  CHECK(all.code == 0);
  CHECK(all.out_has("nu0 = "));
  CHECK(all.out_has("gamma1 in ["));
  CHECK(all.out_has("coefficient ranges"));
}

TEST_CASE("cli grid search") {
  const auto ok = run_cli({"--format", "json", "search", "--functional=-a3", "--M", "2", "--step",
                           "0.25", "--bound", "1"});
  REQUIRE(ok.code == 0);
  const auto doc = parse_out(ok);
  CHECK(doc["results"]["best_value"] == 1.0);
  CHECK(doc["results"]["functional"] == "-a3");
  CHECK(doc["results"]["violations"] == 0);
  CHECK(doc["results"]["max_index"] == 2);

  const auto broken = run_cli({"search", "--functional=-a3", "--M", "2", "--step", "0.25",
                               "--bound", "0.5"});
  CHECK(broken.code == 1);
  CHECK(broken.out_has("violation"));
}

TEST_CASE("cli sampled verification") {
  const auto ok = run_cli({"--format", "json", "search", "--functional", "gamma1", "--samples",
                           "2000", "--bound=-1", "--direction", "lower", "--M", "3", "--guard"});
  REQUIRE(ok.code == 0);
  const auto doc = parse_out(ok);
  CHECK(doc["results"]["grid_step"].is_null());
  CHECK(doc["results"]["violations"] == 0);
  CHECK(doc["results"]["best_value"] == -1.0);

  CHECK(run_cli({"search", "--functional", "a3", "--samples", "100"}).code == 2);
}

TEST_CASE("cli disc probes") {
  const auto conv = run_cli({"--format", "json", "probe", "--quantity", "convexity", "--b",
                             "0,1/3", "--r", "0.99"});
  REQUIRE(conv.code == 0);
  CHECK(parse_out(conv)["results"]["value"].get<double>() < 0.0);

  const auto star = run_cli({"--format", "json", "probe", "--catalog", "f1", "--quantity",
                             "starlike", "--r-max", "0.5", "--radial-steps", "5",
                             "--angular-steps", "16"});
  REQUIRE(star.code == 0);
  const auto doc = parse_out(star);
  CHECK(std::abs(doc["results"]["min"].get<double>() - 0.6) <= 1e-12);
  CHECK(std::abs(doc["results"]["max"].get<double>() - 5.0 / 3.0) <= 1e-12);

  CHECK(run_cli({"probe", "--catalog", "f1", "--quantity", "curvature"}).code == 2);
}

TEST_CASE("cli verification battery subset") {
  const auto pass = run_cli({"verify", "--only", "gamma2_upper"});
  CHECK(pass.code == 0);
  CHECK(pass.out_has("[PASS]"));
  CHECK(pass.out_has("1 passed, 0 failed"));

  const auto doc = parse_out(run_cli({"--format", "json", "verify", "--only", "gamma2_upper"}));
  CHECK(doc["results"]["checks"].size() == 1);
  CHECK(doc["results"]["checks"][0]["passed"] == true);
  CHECK(doc["tolerances"].contains("pinned_constant_window"));

  const auto injected = run_cli({"verify", "--only", "gamma2_upper", "--inject-failure"});
  CHECK(injected.code == 1);
  CHECK(injected.out_has("[FAIL] 0 injected_failure"));
}

TEST_CASE("cli csv output") {
  const auto r = run_cli({"--format", "csv", "check", "--catalog", "f1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("quantity,value,bound,verdict\n", 0) == 0);
  CHECK(r.out_has("splus,"));
}

TEST_CASE("cli file output") {
  const auto path = std::filesystem::temp_directory_path() / "bseq_cli_out_test.json";
  const auto r = run_cli({"--format", "json", "--out", path.string(), "check", "--catalog", "f1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  nlohmann::json doc;
  file >> doc;
  CHECK(doc["command"] == "check");
  file.close();
  std::filesystem::remove(path);

  const auto bad = run_cli({"--out", "/no_such_directory_xyz/out.txt", "bounds", "--nu0"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli usage surface") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"check", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"--format", "yaml", "bounds"}).code == 2);

  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out_has("Usage"));
  CHECK(help.out_has("check"));
  CHECK(help.out_has("verify"));

  const auto version = run_cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out_has("0.1.0"));
}
