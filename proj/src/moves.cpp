#include <algorithm>
#include <random>

#include "octqft/complex.hpp"
#include "octqft/errors.hpp"

namespace octqft {

namespace {

Error not_applicable(const std::string& why) { return input_error("NotApplicable", why); }

/// Rotates t so that position `first` comes first.
Triangle rotated(const Triangle& t, std::size_t first) {
  return {t[first % 3], t[(first + 1) % 3], t[(first + 2) % 3]};
}

/// Validity and simpliciality gate shared by all moves.
OpenClosedComplex checked(bool was_simplicial, OpenClosedComplex out, const char* move) {
  const auto r = validate(out);
  if (!r.valid) throw not_applicable(std::string(move) + " would break the manifold or corner conditions: " + r.violations.front());
  if (was_simplicial && !r.simplicial) throw not_applicable(std::string(move) + " would make a simplicial complex degenerate");
  return out;
}

const Side& side_at(const OpenClosedComplex& c, std::size_t id) { return c.triangles[id / 3][id % 3]; }

/// The triangle side over `edge` whose orientation is opposite to its only current side.
Side opposite_side(const OpenClosedComplex& c, const ValidationReport& r, std::size_t edge) {
  return {edge, !side_at(c, r.edge_sides[edge][0]).forward};
}

}  // namespace

OpenClosedComplex pachner_22(const OpenClosedComplex& c, std::size_t e) {
  const auto r = validate(c);
  if (!r.valid) throw input_error("InvalidComplex", "move on invalid complex");
  if (e >= c.edges.size() || r.edge_sides[e].size() != 2) throw not_applicable("edge is not interior");
  const std::size_t id1 = r.edge_sides[e][0], id2 = r.edge_sides[e][1];
  const std::size_t t1 = id1 / 3, t2 = id2 / 3;
  if (t1 == t2) throw not_applicable("both sides of the edge lie in one triangle");
  const Triangle A = rotated(c.triangles[t1], id1 % 3);
  const Triangle B = rotated(c.triangles[t2], id2 % 3);
  const std::size_t a = c.side_start(A[0]), b = c.side_end(A[0]);
  const std::size_t x = c.side_end(A[1]), y = c.side_end(B[1]);
  if (r.simplicial) {
    if (x == y || x == a || x == b || y == a || y == b) throw not_applicable("quadrilateral vertices are not distinct");
    for (const auto& ed : c.edges)
      if ((ed.a == x && ed.b == y) || (ed.a == y && ed.b == x)) throw not_applicable("flipped diagonal already exists");
  }
  OpenClosedComplex out = c;
  out.edges[e].a = x;
  out.edges[e].b = y;
  out.triangles[t1] = {A[2], B[1], Side{e, false}};
  out.triangles[t2] = {B[2], A[1], Side{e, true}};
  return checked(r.simplicial, std::move(out), "2-2 move");
}

OpenClosedComplex pachner_13(const OpenClosedComplex& c, std::size_t t) {
  const auto r = validate(c);
  if (!r.valid) throw input_error("InvalidComplex", "move on invalid complex");
  if (t >= c.triangles.size()) throw not_applicable("no such triangle");
  const auto vs = c.triangle_vertices(t);
  const Triangle T = c.triangles[t];
  OpenClosedComplex out = c;
  const std::size_t v = out.vertex_count++;
  const std::size_t E = out.edges.size();
  for (std::size_t i = 0; i < 3; ++i) out.edges.push_back({vs[i], v, false, {}});
  // Spoke E+i runs from corner i to the new vertex.
  out.triangles[t] = {T[0], Side{E + 1, true}, Side{E, false}};
  out.triangles.push_back({T[1], Side{E + 2, true}, Side{E + 1, false}});
  out.triangles.push_back({T[2], Side{E, true}, Side{E + 2, false}});
  return checked(r.simplicial, std::move(out), "1-3 move");
}

OpenClosedComplex pachner_31(const OpenClosedComplex& c, std::size_t v) {
  const auto r = validate(c);
  if (!r.valid) throw input_error("InvalidComplex", "move on invalid complex");
  if (v >= c.vertex_count) throw not_applicable("no such vertex");
  if (r.vertex_kind[v] != VertexKind::Interior) throw not_applicable("vertex is not interior");
  std::vector<std::size_t> spokes;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (c.edges[e].a == v && c.edges[e].b == v) throw not_applicable("vertex carries a loop");
    if (c.edges[e].a == v || c.edges[e].b == v) spokes.push_back(e);
  }
  if (spokes.size() != 3) throw not_applicable("vertex degree is " + std::to_string(spokes.size()) + ", not 3");
  // Each incident triangle rotated as (outer, in-spoke, out-spoke).
  std::vector<std::pair<std::size_t, Triangle>> around;
  for (std::size_t t = 0; t < c.triangles.size(); ++t) {
    const auto vs = c.triangle_vertices(t);
    for (std::size_t i = 0; i < 3; ++i)
      if (vs[i] == v) around.emplace_back(t, rotated(c.triangles[t], i + 1));
  }
  if (around.size() != 3) throw not_applicable("vertex does not have three corners");
  if (around[0].first == around[1].first || around[1].first == around[2].first || around[0].first == around[2].first)
    throw not_applicable("corners at the vertex are not in distinct triangles");
  Triangle outer;
  std::size_t cur = 0;
  for (std::size_t step = 0; step < 3; ++step) {
    outer[step] = around[cur].second[0];
    const std::size_t in_spoke = around[cur].second[1].edge;
    std::size_t next = 3;
    for (std::size_t j = 0; j < 3; ++j)
      if (around[j].second[2].edge == in_spoke) next = j;
    if (next == 3) throw not_applicable("triangles around the vertex do not close up");
    cur = next;
  }
  if (cur != 0) throw not_applicable("triangles around the vertex do not form a single cycle");
  OpenClosedComplex out = c;
  out.triangles[around[0].first] = outer;
  std::vector<std::size_t> drop = {around[1].first, around[2].first};
  std::sort(drop.rbegin(), drop.rend());
  for (auto t : drop) out.triangles.erase(out.triangles.begin() + static_cast<long>(t));
  out = compacted(out);
  return checked(r.simplicial, std::move(out), "3-1 move");
}

OpenClosedComplex shelling_type2(const OpenClosedComplex& c, const ShellingSite& site) {
  const auto r = validate(c);
  if (!r.valid) throw input_error("InvalidComplex", "move on invalid complex");
  auto boundary = [&](std::size_t e) { return r.edge_sides[e].size() == 1; };
  OpenClosedComplex out = c;
  switch (site.kind) {
    case ShellingKind::RemoveEar: {
      if (site.index >= c.triangles.size()) throw not_applicable("no such triangle");
      const Triangle& T = c.triangles[site.index];
      std::size_t interior = 3, nb = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        if (boundary(T[i].edge)) {
          ++nb;
          if (!c.edges[T[i].edge].coloured) throw not_applicable("triangle touches a black edge");
        } else {
          interior = i;
        }
      }
      if (nb != 2 || interior == 3) throw not_applicable("triangle does not have exactly two boundary sides");
      const Triangle R = rotated(T, interior);
      if (R[1].edge == R[2].edge) throw not_applicable("boundary sides coincide");
      out.edges[R[0].edge].coloured = true;
      out.edges[R[0].edge].brane = c.edges[R[1].edge].brane;
      out.triangles.erase(out.triangles.begin() + static_cast<long>(site.index));
      out = compacted(out);
      break;
    }
    case ShellingKind::AddEar: {
      const std::size_t e = site.index;
      if (e >= c.edges.size() || !boundary(e)) throw not_applicable("edge is not on the boundary");
      if (!c.edges[e].coloured) throw not_applicable("edge is black");
      const auto [u, w] = r.boundary_direction[e];
      const std::size_t v = out.vertex_count++;
      const std::size_t f1 = out.edges.size(), f2 = f1 + 1;
      out.edges.push_back({u, v, true, c.edges[e].brane});
      out.edges.push_back({v, w, true, c.edges[e].brane});
      out.edges[e].coloured = false;
      out.edges[e].brane.clear();
      out.triangles.push_back({opposite_side(c, r, e), Side{f1, true}, Side{f2, true}});
      break;
    }
    case ShellingKind::RemoveCap: {
      if (site.index >= c.triangles.size()) throw not_applicable("no such triangle");
      const Triangle& T = c.triangles[site.index];
      std::size_t bside = 3, nb = 0;
      for (std::size_t i = 0; i < 3; ++i)
        if (boundary(T[i].edge)) {
          ++nb;
          bside = i;
        }
      if (nb != 1) throw not_applicable("triangle does not have exactly one boundary side");
      if (!c.edges[T[bside].edge].coloured) throw not_applicable("boundary side is black");
      const Triangle R = rotated(T, bside);
      const std::size_t apex = c.side_end(R[1]);
      if (r.vertex_kind[apex] != VertexKind::Interior) throw not_applicable("opposite vertex is not interior");
      if (R[1].edge == R[2].edge) throw not_applicable("inner sides coincide");
      for (std::size_t i : {1, 2}) {
        out.edges[R[i].edge].coloured = true;
        out.edges[R[i].edge].brane = c.edges[R[0].edge].brane;
      }
      out.triangles.erase(out.triangles.begin() + static_cast<long>(site.index));
      out = compacted(out);
      break;
    }
    case ShellingKind::AddCap: {
      const std::size_t v = site.index;
      if (v >= c.vertex_count || r.vertex_kind[v] != VertexKind::Boundary) throw not_applicable("vertex is not on the boundary");
      std::size_t e1 = c.edges.size(), e2 = c.edges.size();
      for (std::size_t e = 0; e < c.edges.size(); ++e)
        if (boundary(e)) {
          if (r.boundary_direction[e].second == v) e1 = e;
          if (r.boundary_direction[e].first == v) e2 = e;
        }
      if (!c.edges[e1].coloured || !c.edges[e2].coloured) throw not_applicable("vertex touches a black edge");
      if (e1 == e2) throw not_applicable("boundary loop");
      const std::size_t u = r.boundary_direction[e1].first, x = r.boundary_direction[e2].second;
      const std::size_t n = out.edges.size();
      out.edges.push_back({u, x, true, c.edges[e1].brane});
      for (auto e : {e1, e2}) {
        out.edges[e].coloured = false;
        out.edges[e].brane.clear();
      }
      out.triangles.push_back({opposite_side(c, r, e1), Side{n, true}, opposite_side(c, r, e2)});
      break;
    }
  }
  return checked(r.simplicial, std::move(out), "type-2 shelling");
}

OpenClosedComplex random_moves(const OpenClosedComplex& c, std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  OpenClosedComplex cur = c;
  std::size_t applied = 0, attempts = 0;
  const std::size_t max_attempts = 50 * n + 50;
  while (applied < n && attempts++ < max_attempts) {
    const auto r = validate(cur);
    auto boundary = [&](std::size_t e) { return r.edge_sides[e].size() == 1; };
    std::vector<std::size_t> tri13, v31, e22;
    std::vector<ShellingSite> shell;
    for (std::size_t t = 0; t < cur.triangles.size(); ++t) {
      tri13.push_back(t);
      std::size_t nb = 0, ncol = 0;
      for (const auto& s : cur.triangles[t])
        if (boundary(s.edge)) {
          ++nb;
          if (cur.edges[s.edge].coloured) ++ncol;
        }
      if (nb == 2 && ncol == 2) shell.push_back({ShellingKind::RemoveEar, t});
      if (nb == 1 && ncol == 1) shell.push_back({ShellingKind::RemoveCap, t});
    }
    std::vector<std::size_t> degree(cur.vertex_count, 0);
    for (std::size_t e = 0; e < cur.edges.size(); ++e) {
      ++degree[cur.edges[e].a];
      ++degree[cur.edges[e].b];
      if (!boundary(e)) e22.push_back(e);
      else if (cur.edges[e].coloured) shell.push_back({ShellingKind::AddEar, e});
    }
    for (std::size_t v = 0; v < cur.vertex_count; ++v) {
      if (r.vertex_kind[v] == VertexKind::Interior && degree[v] == 3) v31.push_back(v);
      if (r.vertex_kind[v] == VertexKind::Boundary && !r.corner[v]) shell.push_back({ShellingKind::AddCap, v});
    }
    std::vector<int> kinds;
    if (!tri13.empty()) kinds.push_back(0);
    if (!v31.empty()) kinds.push_back(1);
    if (!e22.empty()) kinds.push_back(2);
    if (!shell.empty()) kinds.push_back(3);
    const int kind = kinds[rng() % kinds.size()];
    try {
      switch (kind) {
        case 0: cur = pachner_13(cur, tri13[rng() % tri13.size()]); break;
        case 1: cur = pachner_31(cur, v31[rng() % v31.size()]); break;
        case 2: cur = pachner_22(cur, e22[rng() % e22.size()]); break;
        default: cur = shelling_type2(cur, shell[rng() % shell.size()]); break;
      }
      ++applied;
    } catch (const Error& err) {
      if (err.kind() != "NotApplicable") throw;
    }
  }
  return cur;
}

}  // namespace octqft
