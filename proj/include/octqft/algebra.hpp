#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octqft/linalg.hpp"

namespace octqft {

/// e_i e_j contributes coeff * e_k.
struct StructureConstant {
  std::size_t i, j, k;
  Scalar coeff;
};

/// Elements are coefficient vectors in the algebra's basis.
using Element = Vector;

/// Finite-dimensional associative unital algebra with sparse structure constants.
class Algebra {
 public:
  Algebra() = default;

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const Element& unit() const noexcept { return unit_; }

  /// Sparse product e_i e_j as (k, coeff) pairs sorted by k.
  const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  std::vector<StructureConstant> structure_constants() const;

  Element multiply(const Element& x, const Element& y) const;
  Element basis(std::size_t i) const { return unit_vector(field_, dim_, i); }
  Element zero() const { return zero_vector(field_, dim_); }
  Element scalar(const Scalar& s) const;

  /// Matrix of x -> a x.
  Matrix left_regular_matrix(const Element& a) const;
  /// Matrix of x -> x a.
  Matrix right_regular_matrix(const Element& a) const;
  /// mu as a dim x dim^2 matrix.
  Matrix multiplication_matrix() const;

  bool is_commutative() const;

  friend Algebra make_algebra(FieldSpec, std::size_t, const std::vector<StructureConstant>&, const Element&,
                              std::vector<std::string>);

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
  Element unit_;
};

/// Validates associativity and the unit law exhaustively. Repeated (i,j,k)
/// entries are summed. Empty names default to e0, e1, ...
Algebra make_algebra(FieldSpec field, std::size_t dim, const std::vector<StructureConstant>& mul,
                     const Element& unit, std::vector<std::string> names = {});

bool operator==(const Algebra& a, const Algebra& b);

/// G[i][j] = tr(L_{e_i e_j}).
Matrix canonical_pairing(const Algebra& A);
bool is_strongly_separable(const Algebra& A);

/// Kernel of the stacked commutator system x -> [x, e_i].
std::vector<Element> centre_basis(const Algebra& A);
bool is_central(const Algebra& A, const Element& a);
std::optional<Element> invert_element(const Algebra& A, const Element& a);

}  // namespace octqft
