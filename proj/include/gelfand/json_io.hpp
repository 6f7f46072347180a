#pragma once

#include <string>

#include <json.hpp>

#include "gelfand/canonical_form.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {

using Json = nlohmann::ordered_json;

// {"characteristic": p, "extension_degree": d, "modulus": [...]}. The modulus
// is omitted for prime fields. A field built over a non-prime base also
// carries "base", and its modulus coefficients are base elements.
Json field_to_json(const Field& field);
Json element_to_json(const Field& field, Code a);
// Coefficients low degree first, each encoded as an element.
Json polynomial_to_json(const Polynomial& f);
Json invariant_to_json(const ConjugacyInvariant& inv);
Json matrix_to_json(const Matrix& m);

// Parsers throw InvalidInput with a message naming the offending field, as a
// JSON-pointer-like path rooted at `where`.
Field field_from_json(const Json& j, const std::string& where = "field");
Code element_from_json(const Field& field, const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where = "");
Matrix read_matrix_file(const std::string& path);

}  // namespace gelfand
