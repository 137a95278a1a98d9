// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/report.hpp"

#include <algorithm>
#include <sstream>

namespace ncdeform {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

Json SuiteReport::to_json(bool include_timing) const {
  Json results = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name},
               {"anchor", c.anchor},
               {"samples", c.samples},
               {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    results.push_back(std::move(entry));
  }
  Json out{{"suite", suite},
           {"config", config},
           {"passed", passed()},
           {"results", std::move(results)}};
  if (!artifacts.is_null()) out["artifacts"] = artifacts;
  if (include_timing) {
    Json timing;
    for (const auto& c : checks) timing[c.name] = c.wall_ms;
    out["timing"] = std::move(timing);
  }
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (const auto& c : checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << " ("
        << c.samples << " samples, " << c.wall_ms << " ms)";
    if (!c.passed) out << "\n         " << c.counterexample;
    out << "\n";
  }
  out << (passed() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  return out.str();
}

void CheckRunner::run(const std::string& name, const std::string& anchor,
                      std::size_t samples,
                      const std::function<std::string()>& body) {
  CheckResult result;
  result.name = name;
  result.anchor = anchor;
  result.samples = samples;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.counterexample = body();
  } catch (const std::exception& e) {
    result.counterexample = std::string("exception: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  result.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  result.passed = result.counterexample.empty();
  report_->checks.push_back(std::move(result));
}

}  // namespace ncdeform
