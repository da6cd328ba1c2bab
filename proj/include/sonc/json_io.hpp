#pragma once

#include <string>

#include <json.hpp>

#include "sonc/discriminant.hpp"
#include "sonc/expsum.hpp"
#include "sonc/geometry.hpp"
#include "sonc/subdivision.hpp"

namespace sonc {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (integers as "p"); plain JSON integers
// are accepted on input.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);

RatVec ratvec_from_json(const Json& j);
Json ratvec_to_json(const RatVec& v);

// {"n": int, "points": [[...], ...]}
SupportSet support_from_json(const Json& j);
Json support_to_json(const SupportSet& A);

// {"weights": [...]} or a bare array
WeightVector weights_from_json(const Json& j, std::size_t expected_len);
Json weights_to_json(const WeightVector& w);

// {"support": {...}, "coeffs": [...]} with optional "mode": "float"
ExponentialSum expsum_from_json(const Json& j);
Json expsum_to_json(const ExponentialSum& f);

// {"terms":[{"circuit":[...], "t":"p/q", "z":["p/q",...]}],
//  "monomials":[[idx,"p/q"],...]}
SoncDecomposition decomposition_from_json(const SupportSet& A, const Json& j);
Json decomposition_to_json(const SoncDecomposition& dec);

Json subdivision_to_json(const RegularSubdivision& sub);
Json sonc_complex_to_json(const SoncComplex& g);
Json tropical_to_json(const TropicalComplex& M);

Json read_json_file(const std::string& path);

}  // namespace sonc
