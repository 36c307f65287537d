#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "octqft/linalg.hpp"

namespace octqft {

enum class FactorKind { FullAlgebra, SplitImage, Block };

struct Factor {
  FactorKind kind = FactorKind::FullAlgebra;
  std::size_t dim = 0;
  /// Optional label, e.g. "xy" for a block A_xy.
  std::string label;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.kind == b.kind && a.dim == b.dim && a.label == b.label;
  }
};

using Signature = std::vector<Factor>;

std::size_t signature_size(const Signature& s);
std::string to_string(const Factor& f);
std::string to_string(const Signature& s);

/// Linear map between tensor products of factors. Rows index the codomain
/// basis, columns the domain basis; the leftmost factor is most significant.
struct Morphism {
  Signature domain;
  Signature codomain;
  Matrix matrix;

  Morphism() = default;
  Morphism(Signature dom, Signature cod, Matrix m);

  FieldSpec field() const { return matrix.field(); }
  /// Single scalar for maps 1 -> 1.
  Scalar scalar() const;
};

/// f after g. Throws Input/SignatureMismatch unless g.codomain == f.domain.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
bool equal(const Morphism& f, const Morphism& g);

Morphism identity_morphism(FieldSpec field, const Signature& s);

inline Factor full_algebra(std::size_t n) { return {FactorKind::FullAlgebra, n, ""}; }
/// The closed-string space p(A).
inline Factor split_image(std::size_t d) { return {FactorKind::SplitImage, d, "C"}; }
/// Split image of a boundary idempotent, labelled e.g. "P3" or "Q2".
inline Factor reduced_image(std::string label, std::size_t d) { return {FactorKind::SplitImage, d, std::move(label)}; }
inline Factor block_factor(std::string label, std::size_t d) { return {FactorKind::Block, d, std::move(label)}; }

}  // namespace octqft
