#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "octqft/catalog.hpp"
#include "octqft/complex.hpp"
#include "octqft/frobenius.hpp"
#include "octqft/morphism.hpp"

namespace octqft {

using Json = nlohmann::ordered_json;

/// Declared Frobenius structure of an algebra file.
struct FrobeniusChoice {
  enum class Kind { Counit, Window, Canonical };
  Kind kind = Kind::Canonical;
  Vector values;

  friend bool operator==(const FrobeniusChoice&, const FrobeniusChoice&) = default;
};

struct AlgebraFile {
  Algebra algebra;
  FrobeniusChoice frobenius;
  /// Matrix-block data, when the algebra is a direct sum of matrix algebras.
  std::vector<std::size_t> block_sizes;
  std::vector<Scalar> block_windows;

  /// Throws Math errors for non-invertible pairings or windows.
  FrobeniusStructure structure() const;
};

bool operator==(const AlgebraFile& a, const AlgebraFile& b);

/// Two-space indented JSON with arrays of scalars kept on one line.
std::string dump(const Json& j);

/// Reads a whole file as JSON. Throws Input/BadFile or Input/BadJson.
Json read_json_file(const std::string& path);

Json field_to_json(FieldSpec f);
FieldSpec field_from_json(const Json& j);

Json algebra_file_to_json(const AlgebraFile& a);
/// Throws Input/BadAlgebraFile on missing or malformed fields.
AlgebraFile algebra_file_from_json(const Json& j);
/// The catalog structure written with its counit.
AlgebraFile algebra_file_from_catalog(const CatalogAlgebra& c);

/// Simplicial files list vertex triples; complexes with loops or parallel
/// edges are written with explicit "edges" and signed triangle sides.
Json complex_to_json(const OpenClosedComplex& c);
/// Throws Input/BadComplexFile on malformed fields, Input/InvalidComplex when
/// the result fails validation.
OpenClosedComplex complex_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(FieldSpec f, const Json& j);
Json signature_to_json(const Signature& s);
Json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(FieldSpec f, const Json& j);

}  // namespace octqft
