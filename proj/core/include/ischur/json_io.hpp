#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ischur/schur.hpp"
#include "ischur/tensor.hpp"
#include "ischur/verify.hpp"

namespace ischur {

// All serialization uses ordered_json and fixed insertion orders, so the
// rendered text is identical across runs and thread counts.  Coefficients
// are emitted as decimal strings because they are arbitrary-precision.
using Json = nlohmann::ordered_json;

// Laurent polynomial <-> {"<exp>": "<coeff>"} with exponents ascending.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// Matrix <-> row-major [[...], ...]; parsing validates centro-symmetry and
// nonnegative entries.
Json matrix_to_json(const ThetaMatrix& a);
ThetaMatrix matrix_from_json(const Json& j);

Json schur_to_json(const SchurElement& x);
Json tensor_to_json(const TensorVector& x);

Json params_to_json(const SuiteParams& p);
Json report_to_json(const SuiteReport& rep);

// A JSON array of integers; throws std::invalid_argument otherwise.
std::vector<int> int_vector_from_json(const Json& j);

}  // namespace ischur
