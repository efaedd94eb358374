#pragma once

#include <json.hpp>

#include "cayley/commutant.hpp"
#include "cayley/conjugator.hpp"
#include "cayley/element.hpp"

namespace cayley {

using nlohmann::json;

// Wire format. Rationals are strings in lowest terms ("3", "-1/2");
// complex scalars are [re, im] string pairs. Elements are
// {"algebra": "Os", "coeffs": [...]}.

json scalar_to_json(const Scalar& s);
/// Throws ParseError on malformed input, ImaginaryScalarInRealAlgebra when a
/// pair is given for a real field.
Scalar scalar_from_json(const json& j, Field field);

json element_to_json(const Element& a);
Element element_from_json(const json& j);

/// {"kind": "single"|"double", "p": ..., "q": ..., "branch": ..., "verified": ...}
json witness_to_json(const ConjugacyWitness& w, bool verified);
json report_to_json(const Report& r);
json matrix_to_json(const ExactMatrix& m);
json commutant_to_json(const CommutantReport& r);

}  // namespace cayley
