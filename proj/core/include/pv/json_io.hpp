#ifndef PV_JSON_IO_HPP
#define PV_JSON_IO_HPP

#include <json.hpp>

#include "pv/jet.hpp"
#include "pv/matrix.hpp"
#include "pv/parser.hpp"

namespace pv {

using Json = nlohmann::ordered_json;

// Matrices serialize as arrays of arrays of expression strings; jets as
// {"order": n, "matrices": [...]}.
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const OperatorSpec& spec, const Json& j);

Json jet_to_json(const Jet& b);
Jet jet_from_json(const OperatorSpec& spec, const Json& j);

Json block_to_json(const BlockMatrix& b);

}  // namespace pv

#endif
