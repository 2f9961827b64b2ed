// The end-to-end verification suite: every theoretical claim the library
// encodes, checked by an independent route (exact witnesses, grid oracles,
// sampling, disc probes). Shared by the acceptance test binary and the
// `verify` CLI command.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace splus {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
  double runtime_ms = 0.0;
};

struct VerifyConfig {
  // Substring filters on check names; empty means run everything.
  std::vector<std::string> only;
  // Appends a deliberately failing check (harness sanity hook).
  bool inject_failure = false;
  // Seed for the sampling-based checks.
  std::uint64_t seed = 20250822;
};

std::vector<CheckResult> run_verification(const VerifyConfig& config = {});

}  // namespace splus
