// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "ncdeform/report.hpp"

namespace ncdeform {

/// Configuration of a named verification suite. The seed fully determines
/// all random sampling; reruns with identical config are byte-identical
/// modulo the timing block of the report.
struct SuiteConfig {
  std::string suite;  // cocycle | torus | sphere | hopf | homog | spin | chern

  int l = 2;
  int N = 6;
  std::optional<DeformMatrix> theta;  // matrix parameter (suite-specific default)
  Rational theta_scalar{0};           // scalar parameter for sphere / chern
  bool theta_scalar_set = false;
  int max_degree = 3;
  int samples = 200;
  std::uint64_t seed = 1;

  std::string group = "u2";   // hopf: u2 | t2 | so5-entries
  std::string space = "s4";   // homog: s4 | s2l | u2-flag

  std::vector<Rational> offsets;            // spin; empty = all 1/2
  std::vector<int> p_values{1, 2, 4};       // spin Schatten indices
  std::vector<int> schatten_cutoffs{4, 6, 8};
  std::vector<LatticeVector> schatten_r{{1, 0}, {1, 1}, {2, 1}};

  int chern_k = 1;                 // chern: 0 or 1
  bool negative_control = false;   // chern controls

  /// The effective matrix parameter (falls back to theta_{12} = 1/3).
  DeformMatrix effective_theta() const;
  /// The effective scalar parameter (falls back to 1/3).
  Rational effective_scalar() const;
};

Json config_to_json(const SuiteConfig& cfg);

/// Executes the named suite and collects per-check results. Throws
/// std::invalid_argument on malformed configuration (unknown suite, bad
/// parameter ranges); check failures are recorded in the report instead.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace ncdeform
