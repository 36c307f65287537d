#include <algorithm>
#include <set>

#include "octqft/complex.hpp"
#include "octqft/errors.hpp"

namespace octqft {

namespace {

using Tri = std::array<std::size_t, 3>;
using Pair = std::pair<std::size_t, std::size_t>;
using Comps = std::vector<std::pair<ComponentKind, std::vector<Pair>>>;

/// Strip or annulus between a top path of l edges and a bottom path of k
/// edges, triangulated by a zigzag of rungs. Periodic glues the left and
/// right rungs into one seam edge.
OpenClosedComplex zigzag(std::size_t k, std::size_t l, bool periodic) {
  if (k == 0 || l == 0) throw input_error("BadParams", "edge counts must be at least 1");
  OpenClosedComplex c;
  const std::size_t nt = periodic ? l : l + 1, nb = periodic ? k : k + 1;
  c.vertex_count = nt + nb;
  auto top = [&](std::size_t i) { return i % nt; };
  auto bot = [&](std::size_t j) { return nt + j % nb; };
  for (std::size_t i = 0; i < l; ++i) c.edges.push_back({top(i), top(i + 1), false, {}});
  for (std::size_t j = 0; j < k; ++j) c.edges.push_back({bot(j), bot(j + 1), false, {}});
  auto rung = [&](std::size_t i, std::size_t j) {
    c.edges.push_back({top(i), bot(j), false, {}});
    return c.edges.size() - 1;
  };
  const std::size_t first = rung(0, 0);
  std::size_t current = first, i = 0, j = 0;
  while (i < l || j < k) {
    const bool step_top = j == k || (i < l && (i + 1) * k <= (j + 1) * l);
    const std::size_t ni = step_top ? i + 1 : i, nj = step_top ? j : j + 1;
    const std::size_t next = (periodic && ni == l && nj == k) ? first : rung(ni, nj);
    if (step_top)
      c.triangles.push_back({Side{i, true}, Side{next, true}, Side{current, false}});
    else
      c.triangles.push_back({Side{l + j, false}, Side{current, false}, Side{next, true}});
    current = next;
    i = ni;
    j = nj;
  }
  BoundaryComponent in{periodic ? ComponentKind::Circle : ComponentKind::Interval, {}};
  BoundaryComponent out{in.kind, {}};
  for (std::size_t x = 0; x < l; ++x) in.edges.push_back(x);
  for (std::size_t x = 0; x < k; ++x) out.edges.push_back(l + x);
  c.black_in.push_back(in);
  c.black_out.push_back(out);
  if (!periodic) {
    c.edges[first].coloured = true;
    c.edges[current].coloured = true;
  }
  return c;
}

/// Boundary cycle (along the orientation) left by removing triangle t.
std::vector<Pair> hole_cycle(const Tri& t) { return {{t[0], t[2]}, {t[2], t[1]}, {t[1], t[0]}}; }

std::vector<Pair> as_in(std::vector<Pair> cycle) { return cycle; }
std::vector<Pair> as_out(std::vector<Pair> cycle) {
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

/// Triangles in index order whose vertices avoid all previously chosen ones.
std::vector<std::size_t> disjoint_triangles(const std::vector<Tri>& tris, std::size_t count) {
  std::vector<std::size_t> chosen;
  std::set<std::size_t> used;
  for (std::size_t t = 0; t < tris.size() && chosen.size() < count; ++t) {
    if (used.count(tris[t][0]) || used.count(tris[t][1]) || used.count(tris[t][2])) continue;
    chosen.push_back(t);
    used.insert(tris[t].begin(), tris[t].end());
  }
  if (chosen.size() < count) throw input_error("BadParams", "not enough disjoint triangles for the requested holes");
  return chosen;
}

struct Surface {
  std::size_t vertices = 0;
  std::vector<Tri> triangles;
};

/// Sphere made of `rings` triangular rings between two poles.
Surface ring_sphere(std::size_t rings) {
  Surface s;
  const std::size_t N = 0, S = 1 + 3 * rings;
  s.vertices = S + 1;
  auto v = [](std::size_t r, std::size_t i) { return 1 + 3 * r + i % 3; };
  for (std::size_t i = 0; i < 3; ++i) s.triangles.push_back({N, v(0, i), v(0, i + 1)});
  for (std::size_t r = 0; r + 1 < rings; ++r)
    for (std::size_t i = 0; i < 3; ++i) {
      s.triangles.push_back({v(r, i), v(r + 1, i), v(r + 1, i + 1)});
      s.triangles.push_back({v(r, i), v(r + 1, i + 1), v(r, i + 1)});
    }
  for (std::size_t i = 0; i < 3; ++i) s.triangles.push_back({S, v(rings - 1, i + 1), v(rings - 1, i)});
  return s;
}

Surface octahedron() {
  Surface s;
  s.vertices = 6;
  // Poles 0 and 5 around the equator 1,2,3,4.
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t a = 1 + i, b = 1 + (i + 1) % 4;
    s.triangles.push_back({0, a, b});
    s.triangles.push_back({5, b, a});
  }
  return s;
}

Surface grid_torus() {
  Surface s;
  s.vertices = 9;
  auto v = [](std::size_t i, std::size_t j) { return 3 * (i % 3) + j % 3; };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      s.triangles.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      s.triangles.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  return s;
}

/// Connected sum: removes x's last triangle and y's first, identifying the
/// two boundary circles with opposite orientations.
Surface connected_sum(const Surface& x, const Surface& y) {
  Surface out;
  const Tri s = x.triangles.back();
  const Tri t = y.triangles.front();
  out.triangles.assign(x.triangles.begin(), x.triangles.end() - 1);
  std::vector<std::size_t> map(y.vertices, 0);
  std::size_t next = x.vertices;
  for (std::size_t v = 0; v < y.vertices; ++v) {
    if (v == t[1]) map[v] = s[0];
    else if (v == t[0]) map[v] = s[1];
    else if (v == t[2]) map[v] = s[2];
    else map[v] = next++;
  }
  out.vertices = next;
  for (std::size_t k = 1; k < y.triangles.size(); ++k)
    out.triangles.push_back({map[y.triangles[k][0]], map[y.triangles[k][1]], map[y.triangles[k][2]]});
  return out;
}

enum class Hole { In, Out, Window, MixedIn, MixedOut };

/// Removes vertex-disjoint triangles from a closed surface, one per hole.
OpenClosedComplex punctured(const Surface& s, const std::vector<Hole>& holes) {
  const auto chosen = disjoint_triangles(s.triangles, holes.size());
  std::vector<Tri> kept;
  for (std::size_t t = 0; t < s.triangles.size(); ++t)
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) kept.push_back(s.triangles[t]);
  std::vector<Pair> coloured;
  Comps in, out;
  for (std::size_t h = 0; h < holes.size(); ++h) {
    const auto cyc = hole_cycle(s.triangles[chosen[h]]);
    switch (holes[h]) {
      case Hole::In: in.push_back({ComponentKind::Circle, as_in(cyc)}); break;
      case Hole::Out: out.push_back({ComponentKind::Circle, as_out(cyc)}); break;
      case Hole::Window: coloured.insert(coloured.end(), cyc.begin(), cyc.end()); break;
      case Hole::MixedIn:
      case Hole::MixedOut:
        (holes[h] == Hole::MixedIn ? in : out).push_back({ComponentKind::Interval, {cyc[0]}});
        coloured.push_back(cyc[1]);
        coloured.push_back(cyc[2]);
        break;
    }
  }
  return from_simplicial(s.vertices, kept, coloured, in, out);
}

}  // namespace

OpenClosedComplex strip(std::size_t k, std::size_t l) { return zigzag(k, l, false); }
OpenClosedComplex annulus(std::size_t k, std::size_t l) { return zigzag(k, l, true); }

OpenClosedComplex open_mult() {
  // a0 a1 | b0 b1 on top, c0 c1 below; fan from c0.
  enum { a0, a1, b0, b1, c1, c0 };
  return from_simplicial(6, {{c0, a0, a1}, {c0, a1, b0}, {c0, b0, b1}, {c0, b1, c1}}, {{a1, b0}, {b1, c1}, {c0, a0}},
                         {{ComponentKind::Interval, {{a0, a1}}}, {ComponentKind::Interval, {{b0, b1}}}},
                         {{ComponentKind::Interval, {{c0, c1}}}});
}

OpenClosedComplex open_comult() {
  enum { a0, a1, c1, c0, b1, b0 };
  return from_simplicial(6, {{a0, a1, c1}, {a0, c1, c0}, {a0, c0, b1}, {a0, b1, b0}}, {{a1, c1}, {c0, b1}, {b0, a0}},
                         {{ComponentKind::Interval, {{a0, a1}}}},
                         {{ComponentKind::Interval, {{b0, b1}}}, {ComponentKind::Interval, {{c0, c1}}}});
}

OpenClosedComplex open_unit() {
  enum { c0, t, c1 };
  return from_simplicial(3, {{c0, t, c1}}, {{c0, t}, {t, c1}}, {}, {{ComponentKind::Interval, {{c0, c1}}}});
}

OpenClosedComplex open_counit() {
  enum { c0, c1, t };
  return from_simplicial(3, {{c0, c1, t}}, {{c1, t}, {t, c0}}, {{ComponentKind::Interval, {{c0, c1}}}}, {});
}

OpenClosedComplex closed_unit() {
  return from_simplicial(3, {{0, 1, 2}}, {}, {}, {{ComponentKind::Circle, {{2, 0}, {1, 2}, {0, 1}}}});
}

OpenClosedComplex closed_counit() {
  return from_simplicial(3, {{0, 1, 2}}, {}, {{ComponentKind::Circle, {{0, 1}, {1, 2}, {2, 0}}}}, {});
}

OpenClosedComplex closed_mult() { return punctured(ring_sphere(3), {Hole::In, Hole::In, Hole::Out}); }
OpenClosedComplex closed_comult() { return punctured(ring_sphere(3), {Hole::In, Hole::Out, Hole::Out}); }
OpenClosedComplex zipper() { return punctured(ring_sphere(2), {Hole::In, Hole::MixedOut}); }
OpenClosedComplex cozipper() { return punctured(ring_sphere(2), {Hole::MixedIn, Hole::Out}); }

OpenClosedComplex closed_surface(std::size_t genus, std::size_t windows) {
  Surface s = genus == 0 ? octahedron() : grid_torus();
  for (std::size_t g = 1; g < genus; ++g) s = connected_sum(s, grid_torus());
  return punctured(s, std::vector<Hole>(windows, Hole::Window));
}

OpenClosedComplex with_boundary_counts(const OpenClosedComplex& c, const std::vector<std::size_t>& in_counts,
                                       const std::vector<std::size_t>& out_counts) {
  if (in_counts.size() != c.black_in.size() || out_counts.size() != c.black_out.size())
    throw input_error("BadParams", "one edge count per black component is required");
  auto cylinder = [](ComponentKind kind, std::size_t k, std::size_t l) {
    return kind == ComponentKind::Circle ? annulus(k, l) : strip(k, l);
  };
  OpenClosedComplex result = c;
  if (!c.black_in.empty()) {
    OpenClosedComplex top = cylinder(c.black_in[0].kind, c.black_in[0].edges.size(), in_counts[0]);
    for (std::size_t j = 1; j < c.black_in.size(); ++j)
      top = disjoint_union(top, cylinder(c.black_in[j].kind, c.black_in[j].edges.size(), in_counts[j]));
    result = glue(top, result);
  }
  if (!c.black_out.empty()) {
    OpenClosedComplex bottom = cylinder(c.black_out[0].kind, out_counts[0], c.black_out[0].edges.size());
    for (std::size_t j = 1; j < c.black_out.size(); ++j)
      bottom = disjoint_union(bottom, cylinder(c.black_out[j].kind, out_counts[j], c.black_out[j].edges.size()));
    result = glue(result, bottom);
  }
  return result;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"open_mult",   "open_comult",   "open_unit", "open_counit",
                                                 "closed_mult", "closed_comult", "closed_unit", "closed_counit",
                                                 "zipper",      "cozipper",      "closed_cylinder"};
  return names;
}

OpenClosedComplex builtin(const std::string& name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw input_error("BadParams", name + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "strip" || name == "annulus") {
    need(2);
    if (params[0] == 0 || params[1] == 0) throw input_error("BadParams", "edge counts must be at least 1");
    return name == "strip" ? strip(params[0], params[1]) : annulus(params[0], params[1]);
  }
  if (name == "closed_surface") {
    need(2);
    return closed_surface(params[0], params[1]);
  }
  need(0);
  if (name == "open_mult") return open_mult();
  if (name == "open_comult") return open_comult();
  if (name == "open_unit") return open_unit();
  if (name == "open_counit") return open_counit();
  if (name == "closed_mult") return closed_mult();
  if (name == "closed_comult") return closed_comult();
  if (name == "closed_unit") return closed_unit();
  if (name == "closed_counit") return closed_counit();
  if (name == "zipper") return zipper();
  if (name == "cozipper") return cozipper();
  if (name == "closed_cylinder") return annulus(1, 1);
  throw input_error("UnknownBuiltin", name);
}

}  // namespace octqft
