#pragma once

#include <string>

#include <json.hpp>

#include "grouph1/coefficients.hpp"
#include "grouph1/presentation.hpp"
#include "grouph1/representation.hpp"
#include "grouph1/types.hpp"

namespace grouph1 {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal
// strings; the reader accepts both.
Json int_to_json(const Int& value);
Int int_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {"dimension": g, "generators": {name: {"matrix": [[row], ...]}, ...}}
Json representation_to_json(const MatrixRepresentation& rep);

// Entries are matched to p's generators by name (order in the file does not
// matter); a missing generator throws UnknownGenerator, an entry naming no
// generator of p or a non-unimodular matrix is an Error.
MatrixRepresentation representation_from_json(const Json& j,
                                              const GroupPresentation& p);

// {"rank": g, "relations": [[c1, ..., cg], ...]}
Json module_to_json(const CoefficientModule& m);
CoefficientModule module_from_json(const Json& j);

std::string read_text_file(const std::string& path);

}  // namespace grouph1
