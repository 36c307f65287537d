#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octqft {

/// Edge from vertex a to vertex b. Boundary edges are either coloured or
/// listed in exactly one black component.
struct Edge {
  std::size_t a = 0, b = 0;
  bool coloured = false;
  /// D-brane label of a coloured edge; empty when uncoloured.
  std::string brane;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One side of a triangle: an edge traversed forward (a to b) or backward.
struct Side {
  std::size_t edge = 0;
  bool forward = true;

  friend bool operator==(const Side&, const Side&) = default;
};

/// Sides in orientation order; end of side i is the start of side i+1.
using Triangle = std::array<Side, 3>;

enum class ComponentKind { Interval, Circle };

/// Ordered black boundary component. In-lists follow the boundary
/// orientation induced by the triangles, out-lists run against it.
struct BoundaryComponent {
  ComponentKind kind = ComponentKind::Interval;
  std::vector<std::size_t> edges;

  friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

/// Oriented triangulated surface with black/coloured boundary, stored as a
/// Delta-complex (edges have identity, so loops and parallel edges are allowed).
struct OpenClosedComplex {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::vector<BoundaryComponent> black_in, black_out;

  std::size_t side_start(const Side& s) const { return s.forward ? edges[s.edge].a : edges[s.edge].b; }
  std::size_t side_end(const Side& s) const { return s.forward ? edges[s.edge].b : edges[s.edge].a; }
  /// Vertices at the start of sides 0, 1, 2.
  std::array<std::size_t, 3> triangle_vertices(std::size_t t) const;

  friend bool operator==(const OpenClosedComplex&, const OpenClosedComplex&) = default;
};

enum class VertexKind { Interior, Boundary };

/// Per connected component topology.
struct ComponentInfo {
  long euler = 0;
  std::size_t boundary_cycles = 0;
  long genus = 0;
  std::size_t windows = 0;
  std::vector<std::size_t> triangles;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  bool simplicial = true;

  long euler = 0;
  std::vector<ComponentInfo> components;
  /// Component index of each triangle and vertex.
  std::vector<std::size_t> triangle_component, vertex_component;
  std::vector<VertexKind> vertex_kind;
  std::vector<bool> corner;
  /// Vertex lies on a black out-edge and is not a corner.
  std::vector<bool> out_noncorner;
  /// Number of triangle sides per edge and the sides themselves (3t+i).
  std::vector<std::vector<std::size_t>> edge_sides;
  /// Boundary edge direction along the induced orientation.
  std::vector<std::pair<std::size_t, std::size_t>> boundary_direction;
  /// Coloured arcs, each listed along the boundary orientation, sorted by minimum edge id.
  std::vector<std::vector<std::size_t>> arcs;

  void fail(std::string message) {
    valid = false;
    violations.push_back(std::move(message));
  }
};

ValidationReport validate(const OpenClosedComplex& c);
/// Throws Input/InvalidComplex listing the violations.
void require_valid(const OpenClosedComplex& c);

/// Builds a complex from oriented vertex triples. Edges are the sorted
/// vertex pairs, stored min -> max.
OpenClosedComplex from_simplicial(std::size_t vertex_count, const std::vector<std::array<std::size_t, 3>>& triangles,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& coloured,
                                  const std::vector<std::pair<ComponentKind, std::vector<std::pair<std::size_t, std::size_t>>>>& black_in,
                                  const std::vector<std::pair<ComponentKind, std::vector<std::pair<std::size_t, std::size_t>>>>& black_out);

/// Edge id joining u and v; throws when absent or ambiguous.
std::size_t find_edge(const OpenClosedComplex& c, std::size_t u, std::size_t v);

/// Orients each edge from its smaller endpoint, rotates every triangle to
/// start at its smallest (vertex, edge) side and sorts the triangles. Used to
/// compare complexes up to these presentation choices.
OpenClosedComplex canonical_form(const OpenClosedComplex& c);

/// Removes unused vertices and edges and renumbers densely, keeping relative order.
OpenClosedComplex compacted(const OpenClosedComplex& c);

/// Glues every black out-component of top to the matching black in-component of bottom.
OpenClosedComplex glue(const OpenClosedComplex& top, const OpenClosedComplex& bottom);
OpenClosedComplex disjoint_union(const OpenClosedComplex& x, const OpenClosedComplex& y);

/// Circle component with its edge list rotated left by `shift`.
OpenClosedComplex rotate_circle(const OpenClosedComplex& c, bool in, std::size_t component, std::size_t shift);

// Moves. Each throws Input/NotApplicable with a reason.
OpenClosedComplex pachner_22(const OpenClosedComplex& c, std::size_t edge);
OpenClosedComplex pachner_13(const OpenClosedComplex& c, std::size_t triangle);
OpenClosedComplex pachner_31(const OpenClosedComplex& c, std::size_t vertex);

enum class ShellingKind {
  /// Remove a triangle with two coloured boundary sides.
  RemoveEar,
  /// Attach a triangle on a coloured edge with a new vertex.
  AddEar,
  /// Remove a triangle with one coloured boundary side and an interior opposite vertex.
  RemoveCap,
  /// Close two consecutive coloured edges at a boundary vertex with a new triangle.
  AddCap,
};

struct ShellingSite {
  ShellingKind kind;
  /// Triangle, edge or vertex id depending on the kind.
  std::size_t index;
};

OpenClosedComplex shelling_type2(const OpenClosedComplex& c, const ShellingSite& site);

OpenClosedComplex random_moves(const OpenClosedComplex& c, std::uint64_t seed, std::size_t n);

// Builtins. Black components are ordered inputs top, outputs bottom, left to right.
OpenClosedComplex strip(std::size_t k, std::size_t l);
OpenClosedComplex annulus(std::size_t k, std::size_t l);
OpenClosedComplex open_mult();
OpenClosedComplex open_comult();
OpenClosedComplex open_unit();
OpenClosedComplex open_counit();
OpenClosedComplex closed_mult();
OpenClosedComplex closed_comult();
OpenClosedComplex closed_unit();
OpenClosedComplex closed_counit();
OpenClosedComplex zipper();
OpenClosedComplex cozipper();
OpenClosedComplex closed_surface(std::size_t genus, std::size_t windows);

/// Re-triangulates each black component to the requested edge counts by
/// gluing strips or annuli (counts are per component, inputs then outputs).
OpenClosedComplex with_boundary_counts(const OpenClosedComplex& c, const std::vector<std::size_t>& in_counts,
                                       const std::vector<std::size_t>& out_counts);

/// Names accepted by builtin(): strip, annulus (with k, l), the generator
/// names, closed_surface (genus, windows).
OpenClosedComplex builtin(const std::string& name, const std::vector<std::size_t>& params);
const std::vector<std::string>& generator_names();

}  // namespace octqft
