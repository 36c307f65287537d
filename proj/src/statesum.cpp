#include "octqft/statesum.hpp"

#include <tuple>

#include "octqft/errors.hpp"

namespace octqft {

StateSumMode parse_mode(const std::string& s) {
  if (s == "raw") return StateSumMode::Raw;
  if (s == "reduced") return StateSumMode::Reduced;
  if (s == "full") return StateSumMode::Full;
  throw input_error("BadParams", "unknown mode '" + s + "' (raw, reduced, full)");
}

std::string to_string(StateSumMode m) {
  switch (m) {
    case StateSumMode::Raw: return "raw";
    case StateSumMode::Reduced: return "reduced";
    case StateSumMode::Full: return "full";
  }
  return "?";
}

std::vector<TrilinearEntry> weighted_trilinear_form(const FrobeniusStructure& F, const Element& w) {
  const Algebra& A = F.algebra();
  const std::size_t n = A.dim();
  std::vector<Scalar> ew(n, Scalar(F.field()));
  for (std::size_t m = 0; m < n; ++m) ew[m] = F.apply_counit(A.multiply(w, A.basis(m)));
  std::vector<TrilinearEntry> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v(F.field());
        for (const auto& [m, c] : A.product(i, j))
          for (const auto& [q, c2] : A.product(m, k))
            if (!ew[q].is_zero()) v += c * c2 * ew[q];
        if (!v.is_zero()) out.push_back({i, j, k, v});
      }
  return out;
}

BoundaryCaps boundary_caps(const FrobeniusStructure& F, ComponentKind kind, std::size_t h, StateSumMode mode) {
  const bool circle = kind == ComponentKind::Circle;
  const Matrix R1h = circle ? Q_map(F, 1, h).matrix : P_map(F, 1, h).matrix;
  const Matrix Rh1 = circle ? Q_map(F, h, 1).matrix : P_map(F, h, 1).matrix;
  if (mode == StateSumMode::Full) {
    if (!circle) return {Rh1, R1h, full_algebra(F.dim())};
    const Splitting s = split_idempotent(central_idempotent_p(F));
    return {Rh1 * s.im, s.coim * R1h, split_image(s.im.cols())};
  }
  // Image of R_hh spanned by R_h1 applied to the pivot columns of R_1h.
  const auto ech = rref(R1h);
  const std::size_t r = ech.pivots.size();
  Matrix V(F.field(), F.dim(), r);
  for (std::size_t j = 0; j < r; ++j) V.set_column(j, R1h.column(ech.pivots[j]));
  Matrix im = Rh1 * V;
  Matrix D(F.field(), r, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t row = 0;
    while (im(row, j).is_zero()) ++row;
    D(j, j) = im(row, j);
    const Scalar inv = im(row, j).inverse();
    for (std::size_t i = 0; i < im.rows(); ++i) im(i, j) = im(i, j) * inv;
  }
  Matrix coim = D * (left_inverse(V) * R1h);
  return {std::move(im), std::move(coim), reduced_image((circle ? "Q" : "P") + std::to_string(h), r)};
}

DualNetwork build_dual_network(const FrobeniusStructure& F, const OpenClosedComplex& c, StateSumMode mode,
                               const StateSumOptions& options) {
  const auto r = validate(c);
  if (!r.valid) {
    std::string msg;
    for (const auto& v : r.violations) msg += (msg.empty() ? "" : "; ") + v;
    throw input_error("InvalidComplex", msg);
  }
  const Element& ainv = F.window_inverse();
  const Algebra& A = F.algebra();
  const FieldSpec field = F.field();
  const std::size_t n = F.dim(), T = c.triangles.size();
  DualNetwork net;

  // Vertex weights per component.
  net.exponents.assign(r.components.size(), 0);
  for (std::size_t v = 0; v < c.vertex_count; ++v)
    if (r.vertex_kind[v] == VertexKind::Interior || r.out_noncorner[v]) ++net.exponents[r.vertex_component[v]];
  std::vector<std::size_t> weighted(r.components.size());
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const auto& tris = r.components[k].triangles;
    const std::size_t pos = k < options.weight_placement.size() ? options.weight_placement[k] % tris.size() : 0;
    weighted[k] = tris[pos];
  }

  const auto plain = weighted_trilinear_form(F, A.unit());
  std::map<long, std::vector<TrilinearEntry>> by_power;
  for (auto e : net.exponents)
    if (e != 0 && !by_power.count(e)) {
      Element w = A.unit();
      for (long i = 0; i < e; ++i) w = A.multiply(w, ainv);
      by_power[e] = weighted_trilinear_form(F, w);
    }
  for (std::size_t t = 0; t < T; ++t) {
    SparseTensor g3(field, {{3 * t, n}, {3 * t + 1, n}, {3 * t + 2, n}});
    const long e = net.exponents[r.triangle_component[t]];
    const auto& form = (weighted[r.triangle_component[t]] == t && e != 0) ? by_power[e] : plain;
    for (const auto& x : form) g3.add((x.i * n + x.j) * n + x.k, x.value);
    g3.normalize();
    net.tensors.push_back(std::move(g3));
  }

  const Matrix& ginv = options.copairing ? *options.copairing : F.pairing_inverse();
  auto connector = [&](std::size_t leg1, std::size_t leg2) {
    SparseTensor g(field, {{leg1, n}, {leg2, n}});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.add(i * n + j, ginv(i, j));
    g.normalize();
    net.tensors.push_back(std::move(g));
  };
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const auto& sides = r.edge_sides[e];
    if (sides.size() == 2) {
      connector(sides[0], sides[1]);
    } else if (c.edges[e].coloured) {
      Element x = A.unit();
      if (!c.edges[e].brane.empty()) {
        auto it = options.brane_elements.find(c.edges[e].brane);
        if (it == options.brane_elements.end()) throw input_error("MissingColour", "no element for brane '" + c.edges[e].brane + "'");
        x = it->second;
      }
      SparseTensor v(field, {{sides[0], n}});
      for (std::size_t i = 0; i < n; ++i) v.add(i, x[i]);
      v.normalize();
      net.tensors.push_back(std::move(v));
    }
  }

  std::size_t next_leg = 3 * T;
  std::vector<std::size_t> outs, ins;
  std::map<std::tuple<ComponentKind, std::size_t>, BoundaryCaps> caps;
  auto cap_for = [&](ComponentKind kind, std::size_t h) -> const BoundaryCaps& {
    auto key = std::tuple(kind, h);
    auto it = caps.find(key);
    if (it == caps.end()) it = caps.emplace(key, boundary_caps(F, kind, h, mode)).first;
    return it->second;
  };
  for (const auto& comp : c.black_out) {
    std::vector<Leg> legs;
    for (auto e : comp.edges) {
      legs.push_back({next_leg, n});
      connector(r.edge_sides[e][0], next_leg++);
    }
    if (mode == StateSumMode::Raw) {
      for (const auto& l : legs) {
        outs.push_back(l.id);
        net.codomain.push_back(full_algebra(n));
      }
      continue;
    }
    const auto& cap = cap_for(comp.kind, comp.edges.size());
    const Leg leg{next_leg++, cap.factor.dim};
    net.tensors.push_back(SparseTensor::from_matrix(cap.out, {leg}, legs));
    outs.push_back(leg.id);
    net.codomain.push_back(cap.factor);
  }
  for (const auto& comp : c.black_in) {
    std::vector<Leg> legs;
    for (auto e : comp.edges) legs.push_back({r.edge_sides[e][0], n});
    if (mode == StateSumMode::Raw) {
      for (const auto& l : legs) {
        ins.push_back(l.id);
        net.domain.push_back(full_algebra(n));
      }
      continue;
    }
    const auto& cap = cap_for(comp.kind, comp.edges.size());
    const Leg leg{next_leg++, cap.factor.dim};
    net.tensors.push_back(SparseTensor::from_matrix(cap.in, legs, {leg}));
    ins.push_back(leg.id);
    net.domain.push_back(cap.factor);
  }
  net.output_legs = outs.size();
  net.open_legs = outs;
  net.open_legs.insert(net.open_legs.end(), ins.begin(), ins.end());
  return net;
}

SparseTensor contract(const DualNetwork& net, const ContractOptions& options) {
  return contract_network(net.tensors, net.open_legs, options);
}

Morphism to_morphism(const DualNetwork& net, const SparseTensor& t) {
  return Morphism(net.domain, net.codomain, t.to_matrix(net.output_legs));
}

Morphism state_sum(const FrobeniusStructure& F, const OpenClosedComplex& c, StateSumMode mode,
                   const StateSumOptions& options) {
  const auto net = build_dual_network(F, c, mode, options);
  return to_morphism(net, contract(net, options.contract));
}

Morphism state_sum_raw(const FrobeniusStructure& F, const OpenClosedComplex& c, const StateSumOptions& options) {
  return state_sum(F, c, StateSumMode::Raw, options);
}

Morphism state_sum_reduced(const FrobeniusStructure& F, const OpenClosedComplex& c, const StateSumOptions& options) {
  return state_sum(F, c, StateSumMode::Reduced, options);
}

Morphism state_sum(const FrobeniusStructure& F, const OpenClosedComplex& c, const StateSumOptions& options) {
  return state_sum(F, c, StateSumMode::Full, options);
}

namespace {

/// Kronecker product of per-component matrices, with their signatures.
struct Stacked {
  Matrix m;
  Signature from, to;
};

Stacked stack(FieldSpec f, const std::vector<Stacked>& parts) {
  Stacked s{Matrix::identity(f, 1), {}, {}};
  for (const auto& p : parts) {
    s.m = kron(s.m, p.m);
    s.from.insert(s.from.end(), p.from.begin(), p.from.end());
    s.to.insert(s.to.end(), p.to.begin(), p.to.end());
  }
  return s;
}

Morphism reduced_dense_impl(const FrobeniusStructure& F, const OpenClosedComplex& c, const Morphism& raw) {
  const std::size_t n = F.dim();
  auto split_for = [&](const BoundaryComponent& comp) {
    const std::size_t h = comp.edges.size();
    const bool circle = comp.kind == ComponentKind::Circle;
    const Matrix R = circle ? Q_map(F, h, h).matrix : P_map(F, h, h).matrix;
    const Splitting s = split_idempotent(R);
    const Factor img = reduced_image((circle ? "Q" : "P") + std::to_string(h), s.im.cols());
    return std::pair(s, img);
  };
  std::vector<Stacked> in_parts, out_parts;
  for (const auto& comp : c.black_in) {
    auto [s, img] = split_for(comp);
    in_parts.push_back({s.im, {img}, Signature(comp.edges.size(), full_algebra(n))});
  }
  for (const auto& comp : c.black_out) {
    auto [s, img] = split_for(comp);
    out_parts.push_back({s.coim, Signature(comp.edges.size(), full_algebra(n)), {img}});
  }
  const Stacked in = stack(F.field(), in_parts), out = stack(F.field(), out_parts);
  return compose(Morphism(out.from, out.to, out.m), compose(raw, Morphism(in.from, in.to, in.m)));
}

}  // namespace

Morphism state_sum_reduced_dense(const FrobeniusStructure& F, const OpenClosedComplex& c) {
  return reduced_dense_impl(F, c, state_sum_raw(F, c));
}

Morphism state_sum_dense(const FrobeniusStructure& F, const OpenClosedComplex& c) {
  const Morphism red = state_sum_reduced_dense(F, c);
  auto iso = [&](const BoundaryComponent& comp) {
    return comp.kind == ComponentKind::Circle ? psi_iso(F, comp.edges.size()) : phi_iso(F, comp.edges.size());
  };
  std::vector<Stacked> in_parts, out_parts;
  for (const auto& comp : c.black_in) {
    const auto pair = iso(comp);
    in_parts.push_back({pair.forward.matrix, pair.forward.domain, pair.forward.codomain});
  }
  for (const auto& comp : c.black_out) {
    const auto pair = iso(comp);
    out_parts.push_back({pair.inverse.matrix, pair.inverse.domain, pair.inverse.codomain});
  }
  const Stacked in = stack(F.field(), in_parts), out = stack(F.field(), out_parts);
  return compose(Morphism(out.from, out.to, out.m), compose(red, Morphism(in.from, in.to, in.m)));
}

Scalar evaluate_closed(const FrobeniusStructure& F, const OpenClosedComplex& c) {
  if (!c.black_in.empty() || !c.black_out.empty())
    throw input_error("HasBlackBoundary", "evaluate_closed needs a complex without black boundary");
  return state_sum(F, c).scalar();
}

}  // namespace octqft
