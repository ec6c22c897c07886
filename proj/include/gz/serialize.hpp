#pragma once

// JSON encodings. Complex numbers are [re, im]; matrices are row-major nested
// arrays; polynomials are ascending coefficient arrays. Decoders also accept a
// bare real number wherever a complex number is expected, and throw ParseError
// on anything else.

#include <json.hpp>

#include "gz/gzcore.hpp"
#include "gz/lax.hpp"
#include "gz/matricial.hpp"
#include "gz/spaces.hpp"
#include "gz/verify.hpp"

namespace gz {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Json to_json(const ComplexList& v);
Json to_json(const Polynomial& p);
Json to_json(const GZCoordinates& c);
Json to_json(const GZGroupElement& g);
Json to_json(const StratumSignature& s);
Json to_json(const VnPoint& p);
Json to_json(const CotangentPoint& x);
Json to_json(const MatricialData& f);
Json to_json(const LaxPath& path);
Json to_json(const verify::VerificationReport& r);

Complex complex_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);
ComplexList complex_list_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
GZCoordinates gz_coordinates_from_json(const Json& j);
/// Either {n, params} or a list of {m, i, z} entries (n taken from `n`).
GZGroupElement group_element_from_json(const Json& j, int n);
StratumSignature stratum_signature_from_json(const Json& j);
VnPoint vn_point_from_json(const Json& j);
CotangentPoint cotangent_point_from_json(const Json& j);
MatricialData matricial_from_json(const Json& j);
LaxPath lax_path_from_json(const Json& j);
verify::VerificationReport report_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace gz
