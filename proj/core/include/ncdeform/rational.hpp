// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncdeform {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (whitespace tolerated). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q" in lowest terms.
std::string rational_to_string(const Rational& q);

/// Largest integer <= q.
Integer rational_floor(const Rational& q);

/// Conversion that refuses to truncate. Used by the JSON layer.
std::int64_t to_int64_checked(const Integer& n);

}  // namespace ncdeform
