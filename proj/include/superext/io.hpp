#pragma once

#include "superext/cohomology.hpp"
#include "superext/comm.hpp"
#include "superext/rep.hpp"

#include <json.hpp>

namespace superext {

// Keys are sorted on output, which keeps emitted documents byte-stable.
using Json = nlohmann::json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Sparse triples [[row, col, "value"], ...].
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

// { "dim", "parity", "labels", "brackets": [[i, j, [[k, "c"], ...]], ...], "cartan", "nilpos", "nilneg" }
// with i <= j (odd squares are stored on the diagonal); "z_grading" and "realization" when present.
Json to_json(const LieSuperalgebra& l);
LieSuperalgebra algebra_from_json(const Json& j);

// { "dim", "parity", "action": [matrix per algebra basis index] }
Json to_json(const Representation& r);
Representation module_from_json(const Json& j, AlgebraPtr algebra);

// Either { "points": [["a", n], ...], "basis": "monomial" | "local" } or { "dim", "unit", "mult" }.
Json to_json(const CommutativeAlgebra& a);
CommutativeAlgebra comm_from_json(const Json& j);

Json to_json(const DegreeDims& d);
Json to_json(const LhsReport& r);

}  // namespace superext
