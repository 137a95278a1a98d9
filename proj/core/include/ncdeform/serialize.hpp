// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "ncdeform/algebra.hpp"

namespace ncdeform {

using Json = nlohmann::json;

/// CycScalar wire format: a list of records
///   [angle_num, angle_den, re_num, re_den, im_num, im_den]
/// each standing for (re + i im) * e^{2 pi i angle}.
Json to_json(const CycScalar& z);
CycScalar cyc_from_json(const Json& j);

/// Deformation matrices travel as arrays of "p/q" strings; parsing rejects
/// non-skewsymmetric input.
Json to_json(const DeformMatrix& m);
DeformMatrix theta_from_json(const Json& j);

Json to_json(const StarContext& ctx);
StarContext context_from_json(const Json& j);

/// Torus elements: [{"degree": [...], "coeff": <CycScalar>}].
Json to_json(const TorusElement& f);
TorusElement torus_from_json(const Json& j);

/// Polynomial elements: [{"monomial": [["gen", exp], ...], "coeff": ...}];
/// the generator table comes from the supplied algebra.
Json to_json(const PolyElement& f);
PolyElement poly_from_json(const AlgebraPtr& alg, const Json& j);

}  // namespace ncdeform
