#pragma once

#include "tqft/frobenius.hpp"
#include "tqft/group.hpp"
#include "tqft/lattice.hpp"

#include <json.hpp>

#include <string>

namespace tqft {

using Json = nlohmann::json;

/// Group spec: shorthand ("S3", "Z12", "D4", "Q8", "trivial",
/// "cyclic:7", "product:Z2,Z3"), a JSON file path, or inline JSON with either
/// {"preset": ..., "params": [...]} or {"name": ..., "order": n, "cayley": [[...]]}.
FiniteGroup load_group_spec(const std::string& spec);
FiniteGroup group_from_json(const Json& j);

/// Algebra spec: inline JSON or a file with one of
///   {"mu": [...], "unit": [...], "trace": [...]}   (complex entries as [re, im] or numbers)
///   {"class_functions_of": <group spec>}
///   {"semisimple": [t_1, ...]}
FrobeniusAlgebra load_algebra_spec(const std::string& spec);
FrobeniusAlgebra algebra_from_json(const Json& j);

/// Triangulation JSON: {"triangles": [[e1,e2,e3], ...], "pairings": [[slot, slot], ...],
/// "boundary": [[slots...], ...]}; or shorthand "genus:2".
Triangulation load_surface_spec(const std::string& spec);
Triangulation triangulation_from_json(const Json& j);

Json triangulation_to_json(const Triangulation& t);

/// Complex number as [re, im]; exact rationals as {"value": "p/q", "decimal": d}.
Json complex_to_json(const Cplx& z);
Json rational_to_json(const Rational& r);
Json matrix_to_json(const Eigen::MatrixXcd& m);

/// Top-level output envelope with the schema tag.
Json output_envelope(const std::string& subcommand);

} // namespace tqft
