#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octqft/complex.hpp"
#include "octqft/frobenius.hpp"
#include "octqft/statesum.hpp"

namespace octqft {

/// Finite group given by its multiplication table (row times column).
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> names;

  /// Verifies the group axioms exhaustively. Throws Input/NotAGroup.
  static GroupTable from_table(std::vector<std::vector<std::size_t>> mul, std::vector<std::string> names = {});
  static GroupTable cyclic(std::size_t n);
  /// Permutations of {0..m-1}, composed as (g h)(i) = g(h(i)).
  static GroupTable symmetric(std::size_t m);
};

/// Finite groupoid. compose(g, h) is g o h, defined when target(g) == source(h).
struct FiniteGroupoid {
  std::size_t objects = 0;
  std::vector<std::string> object_names;
  std::vector<std::size_t> source, target;
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::size_t> identity;
  std::vector<std::size_t> inverse;
  std::vector<std::string> names;

  std::size_t size() const { return source.size(); }
  /// Checks the six groupoid axioms. Throws Input/NotAGroupoid.
  void validate() const;
  /// N_[x] = |{g : s(g) = x}|.
  std::size_t star_size(std::size_t x) const;

  /// X x X x H with (x,y,h) o (y,z,k) = (x,z,hk); morphisms ordered by (x, y, h).
  static FiniteGroupoid transitive(std::size_t objects, const GroupTable& H);
  static FiniteGroupoid pair(std::size_t objects);
};

/// Basis decomposition A = (+) A_xy of a groupoid algebra.
struct BlockModel {
  std::vector<std::string> objects;
  /// Basis index range [first, second) of A_xy.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> ranges;
  /// e_x = iota(x).
  std::vector<Element> idempotents;

  std::size_t object_index(const std::string& label) const;
};

struct CatalogAlgebra {
  std::string name;
  Algebra algebra;
  FrobeniusStructure frobenius;
  /// Block sizes and window coefficients for direct sums of matrix algebras.
  std::vector<std::size_t> block_sizes;
  std::vector<Scalar> block_windows;
  std::optional<BlockModel> blocks;
  std::optional<FiniteGroupoid> groupoid;
};

/// Direct sum of M_{m_j} with window sum_j a_j z_j. Basis names M<j>_<p><q>.
CatalogAlgebra matrix_direct_sum(FieldSpec field, const std::vector<std::size_t>& sizes,
                                 const std::vector<Scalar>& windows);
/// k[G] with eps = delta_e. Throws Math/CharDividesOrder.
CatalogAlgebra group_algebra(FieldSpec field, const GroupTable& G, const std::string& name = "group");
/// Groupoid algebra with eps(iota(x)) = N_[x]. Throws Math/CharDividesStar.
CatalogAlgebra groupoid_algebra(FieldSpec field, const FiniteGroupoid& G, const std::string& name = "groupoid");

/// p(g) = z_[g] / N_[t(g)] for automorphisms g, 0 otherwise, where z_[g] sums
/// h o g o h^-1 over every h with t(h) = t(g).
Matrix groupoid_p_closed_form(FieldSpec field, const FiniteGroupoid& G);

/// sum_j a_j^(k + 2(l-1)) m_j^(-2(l-1)).
Scalar surface_invariant_closed_form(FieldSpec field, const std::vector<std::size_t>& sizes,
                                     const std::vector<Scalar>& windows, std::size_t genus, std::size_t punctures);
/// eps_C (iota* iota)^k (mu_C Delta_C)^l eta_C.
Scalar genus_window_scalar(const KnowledgeableFrobenius& K, std::size_t genus, std::size_t punctures);

/// State sum with coloured edges carrying e_x for their arc label; each black
/// interval is restricted to the block A_xy of the colours at its ends.
Morphism colored_evaluate(const BlockModel& model, const FrobeniusStructure& F, const OpenClosedComplex& c);
/// Sets the brane label of every edge on coloured arc `arc` (validate() order).
OpenClosedComplex with_arc_colour(const OpenClosedComplex& c, std::size_t arc, const std::string& label);
/// Block inclusion A_xy -> A as an n x |A_xy| matrix.
Matrix block_inclusion(const BlockModel& model, FieldSpec field, std::size_t n, std::size_t x, std::size_t y);

/// The M_2 / k[X]/(X^2-1) tuple over F_11 with alpha = 4, whose C is not p(A).
KnowledgeableFrobenius not_centre_example();

/// Names accepted by catalog_algebra(): matsum, group_cyclic, group_symmetric, groupoid_pair, groupoid_transitive.
CatalogAlgebra catalog_algebra(const std::string& name, const std::vector<std::string>& params, FieldSpec field);

/// Structures used by the test suites: several algebras, each with at least two windows.
std::vector<CatalogAlgebra> standard_catalog();

}  // namespace octqft
