#pragma once

// JSON forms of matrices, polynomials, reports, certificates and generator specs.
//
// Matrix:      {"field": "Q" | {"cyclotomic": q}, "rows": [[scalar, ...], ...]}
// Scalar:      "p/q", or in a cyclotomic field ["a0", "a1", ...] meaning sum a_i zeta^i
// Certificate: {"f": [...], "g": [...], "class": "general" | "odd" | {"q": k}}

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "commalg/canonical.hpp"
#include "commalg/equivalence.hpp"
#include "commalg/gen.hpp"
#include "commalg/linalg.hpp"
#include "commalg/polyring.hpp"

namespace commalg {

using Json = nlohmann::ordered_json;

/// Throws ParseError (kind ParseError, with line and column) on bad JSON,
/// FieldError on malformed scalars or field tags, RaggedRows on unequal rows.
Matrix parse_matrix(std::string_view text);
Matrix matrix_from_json(const Json& j);

Json field_to_json(FieldTag field);
FieldTag field_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, FieldTag field);

Json to_json(const Matrix& m);
/// Coefficient array, constant term first.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, FieldTag field);
Json to_json(const StructureReport& r);
Json to_json(CongruenceClass c);
CongruenceClass class_from_json(const Json& j);
Json to_json(const Certificate& c);
Json to_json(const SubspaceBasis& s, bool with_basis);

/// {"size": n, "seed": s, <profile>} where <profile> is exactly one of
///   "nilpotent_blocks": [2, 3]
///   "companion": ["c0", ..., "1"]
///   "diag_rational": ["1", "1/2"]
///   "block_diag": [spec, ...]
///   "conjugate_by": {"height": 3, "inner": spec}
/// "size" may be omitted and is then inferred. Nested specs without a seed
/// derive one from their parent. Throws InvalidSpec.
GenSpec genspec_from_json(const Json& j, std::uint64_t default_seed);

/// Parses `text` as JSON, mapping syntax errors to ParseError with a position.
Json parse_json_text(std::string_view text);

}  // namespace commalg
