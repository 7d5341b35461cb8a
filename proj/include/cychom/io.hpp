#ifndef CYCHOM_IO_HPP
#define CYCHOM_IO_HPP

#include <json.hpp>

#include "cychom/hopf.hpp"
#include "cychom/setlaws.hpp"
#include "cychom/nerve.hpp"
#include "cychom/simplicial.hpp"

namespace cychom::io {

using nlohmann::json;

// Schema violations (malformed JSON, wrong shapes) and domain-invariant
// failures (non-associative tables, broken coassociativity) are distinct
// error classes so the CLI can code them separately.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// field: "Q" or {"Fp": p}
Field parse_field(const json& j);
json field_json(const Field& f);

// matrices are row-major flat arrays of exact scalars as strings ("p/q")
Matrix parse_matrix(const json& j, int rows, int cols, const Field& f);
json matrix_json(const Matrix& m);

DuchainComplex parse_complex(const json& j);
json complex_json(const DuchainComplex& c);

TruncatedDuplicialModule parse_simplicial(const json& j);
json simplicial_json(const TruncatedDuplicialModule& x);

Algebra parse_algebra(const json& j);
json algebra_json(const Algebra& a);

Bimodule parse_bimodule(const json& j, const Algebra& a);
json bimodule_json(const Bimodule& m);

AlgebraMap parse_algebra_map(const json& j, const Algebra& a);

Bialgebra parse_bialgebra(const json& j);
json bialgebra_json(const Bialgebra& h);

FiniteCategory parse_category(const json& j);
json category_json(const FiniteCategory& c);

// {"n": size, "table": [[...]], "identity": e} for the reader comonad X^M
sets::FiniteMonoid parse_monoid(const json& j);

enum class SchemaKind { algebra, bimodule, algebra_map, bialgebra, category, complex, simplicial };
SchemaKind schema_from_string(const std::string& s);

json load_file(const std::string& path);

// Schema check plus domain-invariant check (associativity, coassociativity,
// category laws) before any computation.
ValidationReport validate_input(const std::string& path, SchemaKind kind);

}  // namespace cychom::io

#endif
