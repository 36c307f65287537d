#include "octqft/algebra.hpp"

#include <algorithm>
#include <map>

#include "octqft/errors.hpp"

namespace octqft {

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) out.push_back({i, j, k, c});
  return out;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw input_error("DimensionMismatch", "element length");
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k].add_product(xy, c);
    }
  }
  return out;
}

Element Algebra::scalar(const Scalar& s) const {
  Element out = unit_;
  for (auto& x : out) x *= s;
  return out;
}

Matrix Algebra::left_regular_matrix(const Element& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) m(k, j).add_product(a[i], c);
  }
  return m;
}

Matrix Algebra::right_regular_matrix(const Element& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(j, i)) m(k, j).add_product(a[i], c);
  }
  return m;
}

Matrix Algebra::multiplication_matrix() const {
  Matrix m(field_, dim_, dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) m(k, i * dim_ + j) = c;
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

Algebra make_algebra(FieldSpec field, std::size_t dim, const std::vector<StructureConstant>& mul,
                     const Element& unit, std::vector<std::string> names) {
  if (dim == 0) throw input_error("BadParams", "algebra dimension must be positive");
  if (unit.size() != dim) throw input_error("DimensionMismatch", "unit vector length");
  if (names.empty())
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  if (names.size() != dim) throw input_error("DimensionMismatch", "basis name count");
  Algebra A;
  A.field_ = field;
  A.dim_ = dim;
  A.names_ = std::move(names);
  A.unit_ = unit;
  for (const auto& u : unit)
    if (u.field() != field) throw input_error("FieldMismatch", "unit coefficient");
  std::vector<std::map<std::size_t, Scalar>> acc(dim * dim);
  for (const auto& sc : mul) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim)
      throw input_error("IndexOutOfRange", "structure constant (" + std::to_string(sc.i) + "," +
                                               std::to_string(sc.j) + "," + std::to_string(sc.k) + ")");
    if (sc.coeff.field() != field) throw input_error("FieldMismatch", "structure constant");
    auto [it, fresh] = acc[sc.i * dim + sc.j].try_emplace(sc.k, sc.coeff);
    if (!fresh) it->second += sc.coeff;
  }
  A.table_.resize(dim * dim);
  for (std::size_t ij = 0; ij < dim * dim; ++ij)
    for (const auto& [k, c] : acc[ij])
      if (!c.is_zero()) A.table_[ij].emplace_back(k, c);

  for (std::size_t i = 0; i < dim; ++i) {
    const Element ei = A.basis(i);
    if (A.multiply(A.unit_, ei) != ei || A.multiply(ei, A.unit_) != ei)
      throw input_error("BadUnit", "unit law fails on basis element " + std::to_string(i));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Element eij = A.multiply(A.basis(i), A.basis(j));
      for (std::size_t k = 0; k < dim; ++k) {
        const Element left = A.multiply(eij, A.basis(k));
        const Element right = A.multiply(A.basis(i), A.multiply(A.basis(j), A.basis(k)));
        if (left != right)
          throw input_error("NotAssociative", "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                                 std::to_string(k) + " differs from e" + std::to_string(i) +
                                                 " (e" + std::to_string(j) + " e" + std::to_string(k) + ")");
      }
    }
  return A;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field() || a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

Matrix canonical_pairing(const Algebra& A) {
  const std::size_t n = A.dim();
  // tr(L_{e_k}) once per basis element, then extend linearly.
  std::vector<Scalar> trace(n, Scalar(A.field()));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : A.product(k, j))
        if (m == j) trace[k] += c;
  Matrix G(A.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) G(i, j).add_product(c, trace[k]);
  return G;
}

bool is_strongly_separable(const Algebra& A) { return rank(canonical_pairing(A)) == A.dim(); }

std::vector<Element> centre_basis(const Algebra& A) {
  const std::size_t n = A.dim();
  Matrix system(A.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    // column j: e_j e_i - e_i e_j
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : A.product(j, i)) system(i * n + k, j) += c;
      for (const auto& [k, c] : A.product(i, j)) system(i * n + k, j) -= c;
    }
  }
  return kernel_basis(system);
}

bool is_central(const Algebra& A, const Element& a) {
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Element ei = A.basis(i);
    if (A.multiply(a, ei) != A.multiply(ei, a)) return false;
  }
  return true;
}

std::optional<Element> invert_element(const Algebra& A, const Element& a) {
  auto x = solve(A.left_regular_matrix(a), A.unit());
  if (!x || A.multiply(*x, a) != A.unit()) return std::nullopt;
  return x;
}

}  // namespace octqft
