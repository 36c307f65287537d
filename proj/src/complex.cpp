#include "octqft/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "octqft/errors.hpp"

namespace octqft {

std::array<std::size_t, 3> OpenClosedComplex::triangle_vertices(std::size_t t) const {
  const auto& tri = triangles[t];
  return {side_start(tri[0]), side_start(tri[1]), side_start(tri[2])};
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

std::string edge_name(const OpenClosedComplex& c, std::size_t e) {
  return "edge " + std::to_string(e) + " (" + std::to_string(c.edges[e].a) + "," + std::to_string(c.edges[e].b) + ")";
}

// Edge-end node ids: 2e is the a-end, 2e+1 the b-end.
std::size_t start_node(const Side& s) { return 2 * s.edge + (s.forward ? 0 : 1); }
std::size_t end_node(const Side& s) { return 2 * s.edge + (s.forward ? 1 : 0); }

}  // namespace

ValidationReport validate(const OpenClosedComplex& c) {
  ValidationReport r;
  const std::size_t V = c.vertex_count, E = c.edges.size(), F = c.triangles.size();
  if (F == 0) r.fail("complex has no triangles");
  for (std::size_t e = 0; e < E; ++e)
    if (c.edges[e].a >= V || c.edges[e].b >= V) r.fail("edge " + std::to_string(e) + " has an out-of-range vertex");
  for (std::size_t t = 0; t < F; ++t)
    for (const auto& s : c.triangles[t])
      if (s.edge >= E) r.fail("triangle " + std::to_string(t) + " uses unknown edge " + std::to_string(s.edge));
  for (const auto* list : {&c.black_in, &c.black_out})
    for (const auto& comp : *list) {
      if (comp.edges.empty()) r.fail("empty black component");
      for (auto e : comp.edges)
        if (e >= E) r.fail("black component uses unknown edge " + std::to_string(e));
    }
  if (!r.valid) return r;

  for (std::size_t t = 0; t < F; ++t)
    for (std::size_t i = 0; i < 3; ++i)
      if (c.side_end(c.triangles[t][i]) != c.side_start(c.triangles[t][(i + 1) % 3]))
        r.fail("triangle " + std::to_string(t) + " sides do not close up at side " + std::to_string(i));
  if (!r.valid) return r;

  // Edge incidence and orientation.
  r.edge_sides.assign(E, {});
  for (std::size_t t = 0; t < F; ++t)
    for (std::size_t i = 0; i < 3; ++i) r.edge_sides[c.triangles[t][i].edge].push_back(3 * t + i);
  auto side_of = [&](std::size_t id) -> const Side& { return c.triangles[id / 3][id % 3]; };
  for (std::size_t e = 0; e < E; ++e) {
    const auto& es = r.edge_sides[e];
    if (es.empty())
      r.fail(edge_name(c, e) + " lies in no triangle");
    else if (es.size() > 2)
      r.fail(edge_name(c, e) + " lies in " + std::to_string(es.size()) + " triangles");
    else if (es.size() == 2 && side_of(es[0]).forward == side_of(es[1]).forward)
      r.fail(edge_name(c, e) + " has incompatible orientations");
  }
  if (!r.valid) return r;

  r.boundary_direction.assign(E, {V, V});
  for (std::size_t e = 0; e < E; ++e)
    if (r.edge_sides[e].size() == 1) {
      const Side& s = side_of(r.edge_sides[e][0]);
      r.boundary_direction[e] = {c.side_start(s), c.side_end(s)};
    }
  auto is_boundary = [&](std::size_t e) { return r.edge_sides[e].size() == 1; };

  // Black/coloured classification.
  std::vector<int> black_count(E, 0);
  std::vector<bool> black_out_edge(E, false);
  for (const auto& comp : c.black_in)
    for (auto e : comp.edges) ++black_count[e];
  for (const auto& comp : c.black_out)
    for (auto e : comp.edges) {
      ++black_count[e];
      black_out_edge[e] = true;
    }
  for (std::size_t e = 0; e < E; ++e) {
    const bool col = c.edges[e].coloured;
    if (!col && !c.edges[e].brane.empty()) r.fail(edge_name(c, e) + " has a brane colour but is not coloured");
    if (black_count[e] > 1) r.fail(edge_name(c, e) + " is listed in more than one black position");
    if (!is_boundary(e)) {
      if (col) r.fail(edge_name(c, e) + " is interior but marked coloured");
      if (black_count[e]) r.fail(edge_name(c, e) + " is interior but listed as black");
    } else if (col && black_count[e]) {
      r.fail(edge_name(c, e) + " is both coloured and black");
    } else if (!col && !black_count[e]) {
      r.fail(edge_name(c, e) + " is a boundary edge that is neither coloured nor black");
    }
  }

  // Vertex links.
  UnionFind ends(2 * E);
  for (std::size_t t = 0; t < F; ++t)
    for (std::size_t i = 0; i < 3; ++i) ends.unite(start_node(c.triangles[t][i]), end_node(c.triangles[t][(i + 2) % 3]));
  std::vector<std::vector<std::size_t>> vertex_nodes(V);
  for (std::size_t e = 0; e < E; ++e) {
    vertex_nodes[c.edges[e].a].push_back(2 * e);
    vertex_nodes[c.edges[e].b].push_back(2 * e + 1);
  }
  r.vertex_kind.assign(V, VertexKind::Interior);
  for (std::size_t v = 0; v < V; ++v) {
    const auto& nodes = vertex_nodes[v];
    if (nodes.empty()) {
      r.fail("vertex " + std::to_string(v) + " is isolated");
      continue;
    }
    std::size_t loose = 0;
    for (auto n : nodes) {
      if (ends.find(n) != ends.find(nodes[0])) {
        r.fail("link of vertex " + std::to_string(v) + " is disconnected");
        break;
      }
      if (is_boundary(n / 2)) ++loose;
    }
    if (loose == 2)
      r.vertex_kind[v] = VertexKind::Boundary;
    else if (loose != 0)
      r.fail("link of vertex " + std::to_string(v) + " is not a chain or cycle");
  }
  if (!r.valid) return r;

  // Boundary successor structure.
  std::vector<std::size_t> out_of(V, E), into(V, E);
  for (std::size_t e = 0; e < E; ++e)
    if (is_boundary(e)) {
      out_of[r.boundary_direction[e].first] = e;
      into[r.boundary_direction[e].second] = e;
    }
  auto succ = [&](std::size_t e) { return out_of[r.boundary_direction[e].second]; };

  std::set<std::pair<std::size_t, std::size_t>> consecutive;
  auto check_component = [&](const BoundaryComponent& comp, bool in) {
    std::vector<std::size_t> seq = comp.edges;
    if (!in) std::reverse(seq.begin(), seq.end());
    const std::string tag = std::string(in ? "in" : "out") + " component starting at " + edge_name(c, comp.edges[0]);
    for (auto e : seq)
      if (!is_boundary(e)) return;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (succ(seq[i]) != seq[i + 1]) r.fail(tag + ": edges " + std::to_string(seq[i]) + "," + std::to_string(seq[i + 1]) + " are not consecutive along the boundary");
      consecutive.insert({seq[i], seq[i + 1]});
    }
    if (comp.kind == ComponentKind::Circle) {
      if (succ(seq.back()) != seq.front()) r.fail(tag + ": circle does not close up");
      consecutive.insert({seq.back(), seq.front()});
    } else {
      const std::size_t before = into[r.boundary_direction[seq.front()].first];
      const std::size_t after = succ(seq.back());
      if (!c.edges[before].coloured || !c.edges[after].coloured) r.fail(tag + ": interval endpoint is not a corner");
    }
  };
  for (const auto& comp : c.black_in) check_component(comp, true);
  for (const auto& comp : c.black_out) check_component(comp, false);
  if (!r.valid) return r;

  r.corner.assign(V, false);
  r.out_noncorner.assign(V, false);
  for (std::size_t v = 0; v < V; ++v) {
    if (r.vertex_kind[v] != VertexKind::Boundary) continue;
    const std::size_t e = into[v], f = out_of[v];
    const bool be = !c.edges[e].coloured, bf = !c.edges[f].coloured;
    if (be && bf && !consecutive.count({e, f}))
      r.fail("black edges " + std::to_string(e) + " and " + std::to_string(f) + " meet at vertex " + std::to_string(v) +
             " without being consecutive in one component");
    r.corner[v] = be != bf;
    if (!r.corner[v] && (black_out_edge[e] || black_out_edge[f])) r.out_noncorner[v] = true;
  }

  // Coloured arcs.
  std::vector<bool> seen(E, false);
  for (std::size_t e = 0; e < E; ++e) {
    if (!is_boundary(e) || !c.edges[e].coloured || seen[e]) continue;
    std::size_t start = e;
    while (true) {
      const std::size_t prev = into[r.boundary_direction[start].first];
      if (!c.edges[prev].coloured || prev == e) break;
      start = prev;
    }
    std::vector<std::size_t> arc;
    for (std::size_t x = start; c.edges[x].coloured && !seen[x]; x = succ(x)) {
      seen[x] = true;
      arc.push_back(x);
    }
    for (auto x : arc)
      if (c.edges[x].brane != c.edges[arc[0]].brane) r.fail("coloured arc through " + edge_name(c, x) + " has mixed brane colours");
    r.arcs.push_back(std::move(arc));
  }
  std::sort(r.arcs.begin(), r.arcs.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
  });

  // Simplicial flag.
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& ed : c.edges) {
    if (ed.a == ed.b || !pairs.insert(std::minmax(ed.a, ed.b)).second) r.simplicial = false;
  }
  std::set<std::array<std::size_t, 3>> faces;
  for (std::size_t t = 0; t < F; ++t) {
    auto vs = c.triangle_vertices(t);
    std::sort(vs.begin(), vs.end());
    if (vs[0] == vs[1] || vs[1] == vs[2] || !faces.insert(vs).second) r.simplicial = false;
  }

  // Connected components and topology.
  UnionFind comp(F);
  for (std::size_t e = 0; e < E; ++e)
    if (r.edge_sides[e].size() == 2) comp.unite(r.edge_sides[e][0] / 3, r.edge_sides[e][1] / 3);
  std::map<std::size_t, std::size_t> index;
  r.triangle_component.assign(F, 0);
  for (std::size_t t = 0; t < F; ++t) {
    auto [it, fresh] = index.try_emplace(comp.find(t), index.size());
    if (fresh) r.components.emplace_back();
    r.triangle_component[t] = it->second;
    r.components[it->second].triangles.push_back(t);
  }
  r.vertex_component.assign(V, 0);
  std::vector<long> vcount(r.components.size(), 0), ecount(r.components.size(), 0);
  for (std::size_t e = 0; e < E; ++e) {
    const std::size_t k = r.triangle_component[r.edge_sides[e][0] / 3];
    ++ecount[k];
    r.vertex_component[c.edges[e].a] = k;
    r.vertex_component[c.edges[e].b] = k;
  }
  for (std::size_t v = 0; v < V; ++v) ++vcount[r.vertex_component[v]];
  std::vector<bool> walked(E, false);
  for (std::size_t e = 0; e < E; ++e) {
    if (!is_boundary(e) || walked[e]) continue;
    auto& info = r.components[r.triangle_component[r.edge_sides[e][0] / 3]];
    ++info.boundary_cycles;
    bool all_coloured = true;
    for (std::size_t x = e; !walked[x]; x = succ(x)) {
      walked[x] = true;
      all_coloured = all_coloured && c.edges[x].coloured;
    }
    if (all_coloured) ++info.windows;
  }
  r.euler = 0;
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    auto& info = r.components[k];
    info.euler = vcount[k] - ecount[k] + static_cast<long>(info.triangles.size());
    const long twice = 2 - info.euler - static_cast<long>(info.boundary_cycles);
    if (twice < 0 || twice % 2) r.fail("component " + std::to_string(k) + " has inconsistent Euler characteristic");
    info.genus = twice / 2;
    r.euler += info.euler;
  }
  return r;
}

void require_valid(const OpenClosedComplex& c) {
  const auto r = validate(c);
  if (r.valid) return;
  std::string msg;
  for (const auto& v : r.violations) msg += (msg.empty() ? "" : "; ") + v;
  throw input_error("InvalidComplex", msg);
}

OpenClosedComplex from_simplicial(
    std::size_t vertex_count, const std::vector<std::array<std::size_t, 3>>& triangles,
    const std::vector<std::pair<std::size_t, std::size_t>>& coloured,
    const std::vector<std::pair<ComponentKind, std::vector<std::pair<std::size_t, std::size_t>>>>& black_in,
    const std::vector<std::pair<ComponentKind, std::vector<std::pair<std::size_t, std::size_t>>>>& black_out) {
  OpenClosedComplex c;
  c.vertex_count = vertex_count;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& t : triangles) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (t[i] >= vertex_count) throw input_error("InvalidComplex", "triangle vertex out of range");
      if (t[i] == t[(i + 1) % 3]) throw input_error("InvalidComplex", "degenerate triangle");
      pairs.insert(std::minmax(t[i], t[(i + 1) % 3]));
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  for (const auto& p : pairs) {
    id[p] = c.edges.size();
    c.edges.push_back({p.first, p.second, false, {}});
  }
  auto lookup = [&](std::size_t u, std::size_t v) {
    auto it = id.find(std::minmax(u, v));
    if (it == id.end())
      throw input_error("InvalidComplex", "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not in any triangle");
    return it->second;
  };
  for (auto t : triangles) {
    std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
    Triangle tri;
    for (std::size_t i = 0; i < 3; ++i) tri[i] = {lookup(t[i], t[(i + 1) % 3]), t[i] < t[(i + 1) % 3]};
    c.triangles.push_back(tri);
  }
  for (const auto& [u, v] : coloured) c.edges[lookup(u, v)].coloured = true;
  auto convert = [&](const auto& comps, std::vector<BoundaryComponent>& out) {
    for (const auto& [kind, list] : comps) {
      BoundaryComponent bc{kind, {}};
      for (const auto& [u, v] : list) bc.edges.push_back(lookup(u, v));
      out.push_back(std::move(bc));
    }
  };
  convert(black_in, c.black_in);
  convert(black_out, c.black_out);
  return c;
}

std::size_t find_edge(const OpenClosedComplex& c, std::size_t u, std::size_t v) {
  std::optional<std::size_t> found;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const auto& ed = c.edges[e];
    if ((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)) {
      if (found) throw input_error("AmbiguousEdge", "several edges join " + std::to_string(u) + "," + std::to_string(v));
      found = e;
    }
  }
  if (!found) throw input_error("UnknownEdge", "no edge joins " + std::to_string(u) + "," + std::to_string(v));
  return *found;
}

OpenClosedComplex canonical_form(const OpenClosedComplex& c) {
  OpenClosedComplex out = c;
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    auto& ed = out.edges[e];
    if (ed.a <= ed.b) continue;
    std::swap(ed.a, ed.b);
    for (auto& t : out.triangles)
      for (auto& s : t)
        if (s.edge == e) s.forward = !s.forward;
  }
  for (std::size_t t = 0; t < out.triangles.size(); ++t) {
    auto& tri = out.triangles[t];
    auto key = [&](const Side& s) { return std::pair(out.side_start(s), s.edge); };
    auto first = std::min_element(tri.begin(), tri.end(), [&](const Side& x, const Side& y) { return key(x) < key(y); });
    std::rotate(tri.begin(), first, tri.end());
  }
  std::sort(out.triangles.begin(), out.triangles.end(), [](const Triangle& x, const Triangle& y) {
    auto flat = [](const Triangle& t) {
      return std::array{t[0].edge, std::size_t(t[0].forward), t[1].edge, std::size_t(t[1].forward), t[2].edge,
                        std::size_t(t[2].forward)};
    };
    return flat(x) < flat(y);
  });
  return out;
}

OpenClosedComplex compacted(const OpenClosedComplex& c) {
  std::vector<bool> edge_used(c.edges.size(), false), vertex_used(c.vertex_count, false);
  for (const auto& t : c.triangles)
    for (const auto& s : t) edge_used[s.edge] = true;
  for (std::size_t e = 0; e < c.edges.size(); ++e)
    if (edge_used[e]) vertex_used[c.edges[e].a] = vertex_used[c.edges[e].b] = true;
  std::vector<std::size_t> vmap(c.vertex_count), emap(c.edges.size());
  OpenClosedComplex out;
  for (std::size_t v = 0; v < c.vertex_count; ++v)
    if (vertex_used[v]) vmap[v] = out.vertex_count++;
  for (std::size_t e = 0; e < c.edges.size(); ++e)
    if (edge_used[e]) {
      emap[e] = out.edges.size();
      Edge ed = c.edges[e];
      ed.a = vmap[ed.a];
      ed.b = vmap[ed.b];
      out.edges.push_back(ed);
    }
  for (auto t : c.triangles) {
    for (auto& s : t) s.edge = emap[s.edge];
    out.triangles.push_back(t);
  }
  auto remap = [&](const std::vector<BoundaryComponent>& comps) {
    std::vector<BoundaryComponent> res;
    for (auto bc : comps) {
      for (auto& e : bc.edges) e = emap[e];
      res.push_back(std::move(bc));
    }
    return res;
  };
  out.black_in = remap(c.black_in);
  out.black_out = remap(c.black_out);
  return out;
}

OpenClosedComplex glue(const OpenClosedComplex& top, const OpenClosedComplex& bottom) {
  if (top.black_out.size() != bottom.black_in.size())
    throw input_error("GlueMismatch", "top has " + std::to_string(top.black_out.size()) + " outputs, bottom has " +
                                          std::to_string(bottom.black_in.size()) + " inputs");
  const auto rt = validate(top), rb = validate(bottom);
  if (!rt.valid || !rb.valid) throw input_error("InvalidComplex", "glue operands must be valid");
  const std::size_t Vt = top.vertex_count;
  UnionFind verts(Vt + bottom.vertex_count);
  std::vector<std::optional<std::size_t>> edge_to_top(bottom.edges.size());
  for (std::size_t j = 0; j < top.black_out.size(); ++j) {
    const auto& to = top.black_out[j];
    const auto& bi = bottom.black_in[j];
    if (to.kind != bi.kind || to.edges.size() != bi.edges.size())
      throw input_error("GlueMismatch", "component " + std::to_string(j) + " differs in kind or edge count");
    const std::size_t h = to.edges.size();
    for (std::size_t i = 0; i < h; ++i) {
      // Out-lists run against the boundary, in-lists along it.
      const auto [ts, te] = rt.boundary_direction[to.edges[i]];
      const auto [bs, be] = rb.boundary_direction[bi.edges[i]];
      verts.unite(te, Vt + bs);
      verts.unite(ts, Vt + be);
      edge_to_top[bi.edges[i]] = to.edges[i];
    }
  }
  std::map<std::size_t, std::size_t> cls;
  std::vector<std::size_t> vmap(Vt + bottom.vertex_count);
  for (std::size_t v = 0; v < vmap.size(); ++v) {
    auto [it, fresh] = cls.try_emplace(verts.find(v), cls.size());
    vmap[v] = it->second;
  }
  OpenClosedComplex out;
  out.vertex_count = cls.size();
  out.edges = top.edges;
  for (auto& ed : out.edges) {
    ed.a = vmap[ed.a];
    ed.b = vmap[ed.b];
  }
  std::vector<std::size_t> emap(bottom.edges.size());
  for (std::size_t e = 0; e < bottom.edges.size(); ++e) {
    if (edge_to_top[e]) {
      emap[e] = *edge_to_top[e];
      continue;
    }
    emap[e] = out.edges.size();
    Edge ed = bottom.edges[e];
    ed.a = vmap[Vt + ed.a];
    ed.b = vmap[Vt + ed.b];
    out.edges.push_back(ed);
  }
  out.triangles = top.triangles;
  for (auto t : bottom.triangles) {
    for (auto& s : t) {
      if (edge_to_top[s.edge]) {
        const std::size_t te = *edge_to_top[s.edge];
        s.forward = !top.triangles[rt.edge_sides[te][0] / 3][rt.edge_sides[te][0] % 3].forward;
      }
      s.edge = emap[s.edge];
    }
    out.triangles.push_back(t);
  }
  out.black_in = top.black_in;
  for (auto bc : bottom.black_out) {
    for (auto& e : bc.edges) e = emap[e];
    out.black_out.push_back(std::move(bc));
  }
  return out;
}

OpenClosedComplex disjoint_union(const OpenClosedComplex& x, const OpenClosedComplex& y) {
  OpenClosedComplex out = x;
  const std::size_t dv = x.vertex_count, de = x.edges.size();
  out.vertex_count += y.vertex_count;
  for (auto ed : y.edges) {
    ed.a += dv;
    ed.b += dv;
    out.edges.push_back(ed);
  }
  for (auto t : y.triangles) {
    for (auto& s : t) s.edge += de;
    out.triangles.push_back(t);
  }
  for (auto bc : y.black_in) {
    for (auto& e : bc.edges) e += de;
    out.black_in.push_back(bc);
  }
  for (auto bc : y.black_out) {
    for (auto& e : bc.edges) e += de;
    out.black_out.push_back(bc);
  }
  return out;
}

OpenClosedComplex rotate_circle(const OpenClosedComplex& c, bool in, std::size_t component, std::size_t shift) {
  OpenClosedComplex out = c;
  auto& list = in ? out.black_in : out.black_out;
  if (component >= list.size() || list[component].kind != ComponentKind::Circle)
    throw input_error("BadParams", "not a circle component");
  auto& edges = list[component].edges;
  std::rotate(edges.begin(), edges.begin() + static_cast<long>(shift % edges.size()), edges.end());
  return out;
}

}  // namespace octqft
