#include "cayley/json_io.hpp"

#include "cayley/errors.hpp"
#include "cayley/expr.hpp"

namespace cayley {

namespace {

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be encoded as a string", 0);
  return parse_rational(j.get<std::string>());
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (!s.is_complex()) return s.re().get_str();
  return json::array({s.re().get_str(), s.im().get_str()});
}

Scalar scalar_from_json(const json& j, Field field) {
  if (j.is_array()) {
    if (field == Field::Real)
      throw ImaginaryScalarInRealAlgebra("complex scalar in a real algebra", 0);
    if (j.size() != 2) throw ParseError("complex scalar must be a [re, im] pair", 0);
    return Scalar::complex(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return Scalar(rational_from_json(j)).in_field(field);
}

json element_to_json(const Element& a) {
  json coeffs = json::array();
  for (const Scalar& c : a.coeffs()) coeffs.push_back(scalar_to_json(c));
  return {{"algebra", std::string(a.algebra().name())}, {"coeffs", coeffs}};
}

Element element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("coeffs"))
    throw ParseError("element must be an object with 'algebra' and 'coeffs'", 0);
  const auto algebra = algebra_from_name(j.at("algebra").get<std::string>());
  if (!algebra) throw ParseError("unknown algebra '" + j.at("algebra").get<std::string>() + "'", 0);
  const json& cj = j.at("coeffs");
  if (!cj.is_array() || cj.size() != algebra->dim())
    throw ParseError("expected " + std::to_string(algebra->dim()) + " coefficients", 0);
  std::vector<Scalar> coeffs;
  for (const json& c : cj) coeffs.push_back(scalar_from_json(c, algebra->field()));
  return Element(*algebra, std::move(coeffs));
}

json witness_to_json(const ConjugacyWitness& w, bool verified) {
  json out = {{"kind", w.is_single() ? "single" : "double"},
              {"p", element_to_json(w.p())},
              {"branch", std::string(branch_name(w.branch()))},
              {"verified", verified}};
  if (w.is_double()) out["q"] = element_to_json(w.q());
  return out;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks) checks.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json commutant_to_json(const CommutantReport& r) {
  json basis = json::array();
  for (const Element& v : r.nullspace_basis) basis.push_back(element_to_json(v));
  json out = {{"matrix", matrix_to_json(r.matrix)},
              {"nullspace_basis", basis},
              {"norm_gram", matrix_to_json(r.norm_gram)},
              {"verdict", r.single_exists() ? "SingleExists" : "NoSingleConjugator"}};
  if (r.conjugator) out["p"] = element_to_json(*r.conjugator);
  return out;
}

}  // namespace cayley
