// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "ncdeform/serialize.hpp"

namespace ncdeform {

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity the check certifies
  std::size_t samples = 0;
  bool passed = false;
  std::string counterexample;  // empty when passed
  double wall_ms = 0;
};

/// Suite result. Everything except the timing block is a deterministic
/// function of (config, seed); reruns are byte-identical once timing is
/// stripped.
struct SuiteReport {
  std::string suite;
  Json config;
  std::vector<CheckResult> checks;
  Json artifacts;  // suite-specific payload (certified phases, tables, ...)

  bool passed() const;
  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

/// Runs one named check, timing it and capturing the first counterexample.
/// The body returns an empty string on success.
class CheckRunner {
 public:
  explicit CheckRunner(SuiteReport& report) : report_(&report) {}

  void run(const std::string& name, const std::string& anchor,
           std::size_t samples,
           const std::function<std::string()>& body);

 private:
  SuiteReport* report_;
};

}  // namespace ncdeform
