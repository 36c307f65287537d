#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octqft/complex.hpp"
#include "octqft/frobenius.hpp"
#include "octqft/morphism.hpp"
#include "octqft/tensor.hpp"

namespace octqft {

enum class StateSumMode { Raw, Reduced, Full };

StateSumMode parse_mode(const std::string& s);
std::string to_string(StateSumMode m);

struct StateSumOptions {
  ContractOptions contract;
  /// Per connected component, the position (within the component's triangle
  /// list) of the triangle carrying the a^-k weight. Default: first triangle.
  std::vector<std::size_t> weight_placement;
  /// Element inserted on coloured edges with a brane label.
  std::map<std::string, Element> brane_elements;
  /// Replaces g* on every connector. A hook for negative controls.
  std::optional<Matrix> copairing;
};

/// Tensor network dual to a triangulation, with boundary caps for the
/// reduced and full modes already attached.
struct DualNetwork {
  std::vector<SparseTensor> tensors;
  /// Output legs then input legs, in component-list order.
  std::vector<std::size_t> open_legs;
  std::size_t output_legs = 0;
  Signature domain, codomain;
  /// Vertex weight exponent k of each connected component.
  std::vector<long> exponents;
};

DualNetwork build_dual_network(const FrobeniusStructure& F, const OpenClosedComplex& c, StateSumMode mode,
                               const StateSumOptions& options = {});
SparseTensor contract(const DualNetwork& net, const ContractOptions& options = {});
Morphism to_morphism(const DualNetwork& net, const SparseTensor& t);

Morphism state_sum(const FrobeniusStructure& F, const OpenClosedComplex& c, StateSumMode mode,
                   const StateSumOptions& options = {});
Morphism state_sum_raw(const FrobeniusStructure& F, const OpenClosedComplex& c, const StateSumOptions& options = {});
Morphism state_sum_reduced(const FrobeniusStructure& F, const OpenClosedComplex& c,
                           const StateSumOptions& options = {});
Morphism state_sum(const FrobeniusStructure& F, const OpenClosedComplex& c, const StateSumOptions& options = {});

/// Reduced value computed densely: Z_raw composed with split_idempotent of R_hh.
Morphism state_sum_reduced_dense(const FrobeniusStructure& F, const OpenClosedComplex& c);
/// Full value computed densely through the Phi/Psi isomorphisms.
Morphism state_sum_dense(const FrobeniusStructure& F, const OpenClosedComplex& c);

/// Scalar of a complex without black boundary. Throws Input/HasBlackBoundary.
Scalar evaluate_closed(const FrobeniusStructure& F, const OpenClosedComplex& c);

/// eps(w e_i e_j e_k) for the element w, nonzero entries only.
std::vector<TrilinearEntry> weighted_trilinear_form(const FrobeniusStructure& F, const Element& w);

/// Boundary caps of one black component with h edges (n^h x r inputs, r x n^h outputs).
struct BoundaryCaps {
  Matrix in, out;
  Factor factor;
};
BoundaryCaps boundary_caps(const FrobeniusStructure& F, ComponentKind kind, std::size_t h, StateSumMode mode);

}  // namespace octqft
