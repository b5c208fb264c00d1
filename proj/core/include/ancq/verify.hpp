// Named verification suites with reproducible seeds and machine-readable
// reports.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ancq/fp.hpp"

namespace ancq {

struct VerifyOptions {
  int n = 4;
  std::uint64_t seed = 0;
  int trials = 8;
  std::uint64_t prime = kDefaultPrime;
  bool serial = false;
  std::size_t budget_terms = 200000;
};

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail", "skipped"
  std::string note;
  long long ms = 0;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions opts;
  std::vector<CheckResult> checks;  // sorted by name
  bool pass = true;
};

std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);
// Timings are volatile; they are only emitted when asked for, keeping the
// default output byte-identical across runs.
std::string report_to_json(const VerifyReport& rep, bool with_timings);

}  // namespace ancq
