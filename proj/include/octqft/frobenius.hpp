#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octqft/algebra.hpp"
#include "octqft/morphism.hpp"

namespace octqft {

/// Delta(e_i) contains coeff * e_j (x) e_k.
struct CoproductTerm {
  std::size_t j, k;
  Scalar coeff;
};

/// Symmetric Frobenius structure on an algebra, keyed by its counit.
class FrobeniusStructure {
 public:
  FrobeniusStructure() = default;

  const Algebra& algebra() const noexcept { return A_; }
  FieldSpec field() const noexcept { return A_.field(); }
  std::size_t dim() const noexcept { return A_.dim(); }
  const Vector& counit() const noexcept { return counit_; }
  const Matrix& pairing() const noexcept { return g_; }
  const Matrix& pairing_inverse() const noexcept { return ginv_; }
  const std::vector<CoproductTerm>& coproduct(std::size_t i) const { return comul_[i]; }
  const Element& window() const noexcept { return window_; }
  bool has_invertible_window() const noexcept { return window_inverse_.has_value(); }
  /// Throws Math/WindowNotInvertible when absent.
  const Element& window_inverse() const;

  Scalar apply_counit(const Element& x) const;
  /// Delta(x) as a dim^2 vector.
  Vector comultiply(const Element& x) const;

  Matrix multiplication_matrix() const { return A_.multiplication_matrix(); }
  Matrix unit_matrix() const;
  Matrix counit_matrix() const;
  Matrix comultiplication_matrix() const;
  /// L_{a^power} for the window element a.
  Matrix window_power_matrix(long power) const;

  /// Window is a nonzero multiple of the unit.
  bool is_special() const;

  friend FrobeniusStructure frobenius_structure(const Algebra& A, const Vector& eps, bool require_invertible_window);

 private:
  Algebra A_;
  Vector counit_;
  Matrix g_, ginv_;
  std::vector<std::vector<CoproductTerm>> comul_;
  Element window_;
  std::optional<Element> window_inverse_;
};

/// Builds and verifies the structure. Errors: DegeneratePairing,
/// NotSymmetric, WindowNotInvertible (only when required).
FrobeniusStructure frobenius_structure(const Algebra& A, const Vector& eps, bool require_invertible_window);
FrobeniusStructure frobenius_from_counit(const Algebra& A, const Vector& eps);
/// eps(x) = tr(L_{z^-1 x}); z = unit gives the canonical structure.
FrobeniusStructure frobenius_from_window(const Algebra& A, const Element& z);
FrobeniusStructure canonical_frobenius(const Algebra& A);

Element window_element(const FrobeniusStructure& F);

struct TrilinearEntry {
  std::size_t i, j, k;
  Scalar value;
};
/// Nonzero entries of eps(e_i e_j e_k), lexicographic.
std::vector<TrilinearEntry> trilinear_form(const FrobeniusStructure& F);

/// Named exact checks with a witness on failure.
struct CheckReport {
  struct Item {
    std::string name;
    bool ok;
    std::string witness;
  };
  std::vector<Item> items;

  bool all_ok() const;
  void add(std::string name, bool ok, std::string witness = {});
  const Item* find(const std::string& name) const;
};

/// Frobenius relation, coassociativity, counit laws and symmetry on basis vectors.
CheckReport check_frobenius(const FrobeniusStructure& F);

/// The bubble identity (a^-1) mu Delta = id.
bool bubble_holds(const FrobeniusStructure& F);

/// p = (a^-1) mu tau Delta.
Matrix central_idempotent_p(const FrobeniusStructure& F);
/// The eight properties of p, each verified exactly.
CheckReport check_idempotent_properties(const FrobeniusStructure& F, const Matrix& p);

struct Splitting {
  Matrix im;    // n x d
  Matrix coim;  // d x n
};
/// Image basis: pivot columns of p, scaled to leading coefficient 1.
Splitting split_idempotent(const Matrix& p);

Morphism iterated_mu(const FrobeniusStructure& F, std::size_t l);
Morphism iterated_delta(const FrobeniusStructure& F, std::size_t k);
Morphism P_map(const FrobeniusStructure& F, std::size_t k, std::size_t l);
Morphism Q_map(const FrobeniusStructure& F, std::size_t k, std::size_t l);

struct IsoPair {
  Morphism forward;
  Morphism inverse;
};
IsoPair phi_iso(const FrobeniusStructure& F, std::size_t k);
IsoPair psi_iso(const FrobeniusStructure& F, std::size_t k);

/// Tuple (A, C, iota, iota*) with the structure maps of C as matrices.
struct KnowledgeableFrobenius {
  FrobeniusStructure A;
  Matrix mu_C;       // d x d^2
  Matrix eta_C;      // d x 1
  Matrix delta_C;    // d^2 x d
  Matrix epsilon_C;  // 1 x d
  Matrix iota;       // n x d
  Matrix iota_star;  // d x n
  /// C as an algebra with its own Frobenius structure, built from mu_C, eta_C, epsilon_C.
  std::optional<FrobeniusStructure> C;

  std::size_t dim_C() const noexcept { return iota.cols(); }
};

KnowledgeableFrobenius knowledgeable_from_frobenius(const FrobeniusStructure& F);
/// Attaches the C structure (algebra + Frobenius from epsilon_C) when the maps allow it.
void attach_centre_structure(KnowledgeableFrobenius& K);
CheckReport check_knowledgeable(const KnowledgeableFrobenius& K);

/// Swap of two tensor factors of dimensions m and n, as an (n m) x (m n) matrix.
Matrix swap_matrix(FieldSpec f, std::size_t m, std::size_t n);

}  // namespace octqft
