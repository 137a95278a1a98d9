// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/serialize.hpp"

#include <stdexcept>

namespace ncdeform {

namespace {
Json rational_pair(const Rational& q) {
  return Json::array({to_int64_checked(numerator(q)),
                      to_int64_checked(denominator(q))});
}
}  // namespace

Json to_json(const CycScalar& z) {
  Json out = Json::array();
  for (const auto& [angle, c] : z.terms()) {
    out.push_back(Json::array({to_int64_checked(angle.numerator()),
                               to_int64_checked(angle.denominator()),
                               to_int64_checked(numerator(c)),
                               to_int64_checked(denominator(c)),
                               std::int64_t{0}, std::int64_t{1}}));
  }
  return out;
}

CycScalar cyc_from_json(const Json& j) {
  CycScalar z;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 6) {
      throw std::invalid_argument("scalar record must have six fields");
    }
    const RationalAngle angle(Rational(rec[0].get<std::int64_t>(),
                                       rec[1].get<std::int64_t>()));
    const Rational re(rec[2].get<std::int64_t>(), rec[3].get<std::int64_t>());
    const Rational im(rec[4].get<std::int64_t>(), rec[5].get<std::int64_t>());
    z += CycScalar::phase(angle).scaled(re);
    if (im != 0) {
      z += CycScalar::phase(angle + RationalAngle::of(1, 4)).scaled(im);
    }
  }
  return z;
}

Json to_json(const DeformMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.rank(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DeformMatrix theta_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& v : row) {
      if (v.is_string()) {
        r.push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        r.push_back(Rational(v.get<std::int64_t>()));
      } else {
        throw std::invalid_argument("matrix entries must be rationals 'p/q'");
      }
    }
    rows.push_back(std::move(r));
  }
  return DeformMatrix::from_rows(rows);
}

Json to_json(const StarContext& ctx) {
  return Json{{"grading", ctx.grading == Grading::mono ? "mono" : "bi"},
              {"matrix", to_json(ctx.matrix)}};
}

StarContext context_from_json(const Json& j) {
  const std::string grading = j.at("grading").get<std::string>();
  const DeformMatrix m = theta_from_json(j.at("matrix"));
  if (grading == "mono") return StarContext::mono(m);
  if (grading != "bi") throw std::invalid_argument("grading must be mono|bi");
  StarContext ctx;
  ctx.grading = Grading::bi;
  ctx.matrix = m;
  return ctx;
}

Json to_json(const TorusElement& f) {
  Json terms = Json::array();
  for (const auto& [r, c] : f.coeffs()) {
    terms.push_back(Json{{"degree", r}, {"coeff", to_json(c)}});
  }
  return Json{{"rank", f.rank()}, {"terms", std::move(terms)}};
}

TorusElement torus_from_json(const Json& j) {
  TorusElement f(j.at("rank").get<int>());
  for (const auto& t : j.at("terms")) {
    f.add_term(t.at("degree").get<LatticeVector>(),
               cyc_from_json(t.at("coeff")));
  }
  return f;
}

Json to_json(const PolyElement& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json mono = Json::array();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono.push_back(Json::array(
          {f.algebra()->gen(static_cast<int>(i)).name, e[i]}));
    }
    terms.push_back(Json{{"monomial", std::move(mono)}, {"coeff", to_json(c)}});
  }
  return Json{{"algebra", f.algebra()->name()}, {"terms", std::move(terms)}};
}

PolyElement poly_from_json(const AlgebraPtr& alg, const Json& j) {
  PolyElement f(alg);
  for (const auto& t : j.at("terms")) {
    Exponents e(alg->size(), 0);
    for (const auto& factor : t.at("monomial")) {
      e.at(alg->index_of(factor.at(0).get<std::string>())) +=
          factor.at(1).get<int>();
    }
    f.add_term(e, cyc_from_json(t.at("coeff")));
  }
  return f;
}

}  // namespace ncdeform
