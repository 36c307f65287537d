#include "octqft/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "octqft/errors.hpp"

namespace octqft {

GroupTable GroupTable::from_table(std::vector<std::vector<std::size_t>> mul, std::vector<std::string> names) {
  GroupTable G;
  G.order = mul.size();
  if (G.order == 0) throw input_error("NotAGroup", "empty table");
  for (const auto& row : mul) {
    if (row.size() != G.order) throw input_error("NotAGroup", "table is not square");
    for (auto x : row)
      if (x >= G.order) throw input_error("NotAGroup", "entry out of range");
  }
  G.mul = std::move(mul);
  const std::size_t n = G.order;
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = G.mul[e][g] == g && G.mul[g][e] == g;
    if (ok) {
      G.identity = e;
      found = true;
    }
  }
  if (!found) throw input_error("NotAGroup", "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]]) throw input_error("NotAGroup", "not associative");
  G.inverse.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (G.mul[g][h] == G.identity && G.mul[h][g] == G.identity) G.inverse[g] = h;
  for (auto inv : G.inverse)
    if (inv == n) throw input_error("NotAGroup", "missing inverse");
  if (names.empty())
    for (std::size_t g = 0; g < n; ++g) names.push_back("g" + std::to_string(g));
  G.names = std::move(names);
  return G;
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw input_error("BadParams", "cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "g" + (a == 1 ? std::string() : std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return from_table(std::move(mul), std::move(names));
}

GroupTable GroupTable::symmetric(std::size_t m) {
  if (m == 0 || m > 5) throw input_error("BadParams", "symmetric group degree must be in 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "[";
    for (auto x : perms[a]) s += std::to_string(x);
    names.push_back(s + "]");
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(mul), std::move(names));
}

void FiniteGroupoid::validate() const {
  const std::size_t n = size();
  auto fail = [](const std::string& why) { return input_error("NotAGroupoid", why); };
  if (target.size() != n || inverse.size() != n || compose.size() != n || identity.size() != objects)
    throw fail("inconsistent table sizes");
  for (std::size_t g = 0; g < n; ++g) {
    if (source[g] >= objects || target[g] >= objects) throw fail("object out of range");
    if (compose[g].size() != n) throw fail("composition table is not square");
  }
  for (std::size_t x = 0; x < objects; ++x)
    if (source[identity[x]] != x || target[identity[x]] != x) throw fail("identity has wrong source or target");
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const bool composable = target[g] == source[h];
      if (composable != compose[g][h].has_value()) throw fail("composition defined exactly when t(g) = s(h)");
      if (composable && (source[*compose[g][h]] != source[g] || target[*compose[g][h]] != target[h]))
        throw fail("composite has wrong source or target");
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!compose[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (compose[b][c] && *compose[*compose[a][b]][c] != *compose[a][*compose[b][c]]) throw fail("not associative");
    }
  for (std::size_t h = 0; h < n; ++h) {
    if (*compose[identity[source[h]]][h] != h || *compose[h][identity[target[h]]] != h) throw fail("identity law");
    const std::size_t k = inverse[h];
    if (source[k] != target[h] || target[k] != source[h]) throw fail("inverse has wrong source or target");
    if (*compose[k][h] != identity[target[h]] || *compose[h][k] != identity[source[h]]) throw fail("inverse law");
  }
}

std::size_t FiniteGroupoid::star_size(std::size_t x) const {
  return static_cast<std::size_t>(std::count(source.begin(), source.end(), x));
}

FiniteGroupoid FiniteGroupoid::transitive(std::size_t objects, const GroupTable& H) {
  FiniteGroupoid G;
  G.objects = objects;
  const std::size_t m = H.order;
  auto id = [&](std::size_t x, std::size_t y, std::size_t h) { return (x * objects + y) * m + h; };
  for (std::size_t x = 0; x < objects; ++x) G.object_names.push_back(std::string(1, static_cast<char>('x' + x % 3)) + (x >= 3 ? std::to_string(x) : ""));
  for (std::size_t x = 0; x < objects; ++x)
    for (std::size_t y = 0; y < objects; ++y)
      for (std::size_t h = 0; h < m; ++h) {
        G.source.push_back(x);
        G.target.push_back(y);
        G.inverse.push_back(id(y, x, H.inverse[h]));
        G.names.push_back(G.object_names[x] + G.object_names[y] + (m > 1 ? ":" + H.names[h] : ""));
      }
  const std::size_t n = G.source.size();
  G.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k)
      if (G.target[g] == G.source[k]) G.compose[g][k] = id(G.source[g], G.target[k], H.mul[g % m][k % m]);
  for (std::size_t x = 0; x < objects; ++x) G.identity.push_back(id(x, x, H.identity));
  G.validate();
  return G;
}

FiniteGroupoid FiniteGroupoid::pair(std::size_t objects) { return transitive(objects, GroupTable::cyclic(1)); }

std::size_t BlockModel::object_index(const std::string& label) const {
  auto it = std::find(objects.begin(), objects.end(), label);
  if (it == objects.end()) throw input_error("MissingColour", "unknown colour '" + label + "'");
  return static_cast<std::size_t>(it - objects.begin());
}

namespace {

bool char_divides(FieldSpec f, std::size_t m) { return !f.is_rational() && m % f.characteristic() == 0; }

}  // namespace

CatalogAlgebra matrix_direct_sum(FieldSpec field, const std::vector<std::size_t>& sizes,
                                 const std::vector<Scalar>& windows) {
  if (sizes.empty() || sizes.size() != windows.size())
    throw input_error("BadParams", "one window coefficient per block is required");
  std::vector<std::size_t> offset;
  std::size_t dim = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (sizes[j] == 0) throw input_error("BadParams", "block size must be positive");
    if (char_divides(field, sizes[j])) throw math_error("CharDividesBlock", "characteristic divides block size " + std::to_string(sizes[j]));
    if (windows[j].is_zero()) throw math_error("ZeroWindowCoefficient", "block " + std::to_string(j));
    offset.push_back(dim);
    dim += sizes[j] * sizes[j];
  }
  std::vector<StructureConstant> mul;
  std::vector<std::string> names;
  Element unit = zero_vector(field, dim);
  Vector eps = zero_vector(field, dim);
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    const std::size_t m = sizes[j];
    auto idx = [&](std::size_t p, std::size_t q) { return offset[j] + p * m + q; };
    for (std::size_t p = 0; p < m; ++p) {
      unit[idx(p, p)] = Scalar::one(field);
      eps[idx(p, p)] = Scalar(field, static_cast<long>(m)) / windows[j];
      for (std::size_t q = 0; q < m; ++q) {
        names.push_back("M" + std::to_string(j) + "_" + std::to_string(p) + std::to_string(q));
        for (std::size_t r = 0; r < m; ++r) mul.push_back({idx(p, q), idx(q, r), idx(p, r), Scalar::one(field)});
      }
    }
  }
  CatalogAlgebra out;
  std::ostringstream nm;
  nm << "matsum(";
  for (std::size_t j = 0; j < sizes.size(); ++j) nm << (j ? "," : "") << sizes[j];
  nm << ";";
  for (std::size_t j = 0; j < sizes.size(); ++j) nm << (j ? "," : "") << windows[j].to_string();
  nm << ")";
  out.name = nm.str();
  out.algebra = make_algebra(field, dim, mul, unit, names);
  out.frobenius = frobenius_from_counit(out.algebra, eps);
  Element expected = zero_vector(field, dim);
  for (std::size_t j = 0; j < sizes.size(); ++j)
    for (std::size_t p = 0; p < sizes[j]; ++p) expected[offset[j] + p * sizes[j] + p] = windows[j];
  if (out.frobenius.window() != expected) throw math_error("WindowMismatch", "window element differs from sum a_j z_j");
  out.block_sizes = sizes;
  out.block_windows = windows;
  return out;
}

CatalogAlgebra group_algebra(FieldSpec field, const GroupTable& G, const std::string& name) {
  if (char_divides(field, G.order)) throw math_error("CharDividesOrder", "characteristic divides |G| = " + std::to_string(G.order));
  std::vector<StructureConstant> mul;
  for (std::size_t a = 0; a < G.order; ++a)
    for (std::size_t b = 0; b < G.order; ++b) mul.push_back({a, b, G.mul[a][b], Scalar::one(field)});
  CatalogAlgebra out;
  out.name = name;
  out.algebra = make_algebra(field, G.order, mul, unit_vector(field, G.order, G.identity), G.names);
  out.frobenius = frobenius_from_counit(out.algebra, unit_vector(field, G.order, G.identity));
  return out;
}

CatalogAlgebra groupoid_algebra(FieldSpec field, const FiniteGroupoid& G, const std::string& name) {
  G.validate();
  const std::size_t n = G.size();
  for (std::size_t x = 0; x < G.objects; ++x)
    if (char_divides(field, G.star_size(x))) throw math_error("CharDividesStar", "characteristic divides N of object " + std::to_string(x));
  std::vector<StructureConstant> mul;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (G.compose[g][h]) mul.push_back({g, h, *G.compose[g][h], Scalar::one(field)});
  Element unit = zero_vector(field, n);
  Vector eps = zero_vector(field, n);
  for (std::size_t x = 0; x < G.objects; ++x) {
    unit[G.identity[x]] = Scalar::one(field);
    eps[G.identity[x]] = Scalar(field, static_cast<long>(G.star_size(x)));
  }
  CatalogAlgebra out;
  out.name = name;
  out.algebra = make_algebra(field, n, mul, unit, G.names);
  out.frobenius = frobenius_from_counit(out.algebra, eps);
  BlockModel model;
  model.objects = G.object_names;
  for (std::size_t g = 0; g < n; ++g) {
    const auto key = std::pair(G.source[g], G.target[g]);
    auto it = model.ranges.find(key);
    if (it == model.ranges.end())
      model.ranges[key] = {g, g + 1};
    else if (it->second.second == g)
      it->second.second = g + 1;
    else
      throw input_error("NotAGroupoid", "morphisms of each Hom set must be listed contiguously");
  }
  for (std::size_t x = 0; x < G.objects; ++x) model.idempotents.push_back(unit_vector(field, n, G.identity[x]));
  out.blocks = std::move(model);
  out.groupoid = G;
  return out;
}

Matrix groupoid_p_closed_form(FieldSpec field, const FiniteGroupoid& G) {
  const std::size_t n = G.size();
  Matrix p(field, n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (G.source[g] != G.target[g]) continue;
    const Scalar w = Scalar::one(field) / Scalar(field, static_cast<long>(G.star_size(G.target[g])));
    for (std::size_t h = 0; h < n; ++h)
      if (G.target[h] == G.target[g]) p(*G.compose[*G.compose[h][g]][G.inverse[h]], g) += w;
  }
  return p;
}

Scalar surface_invariant_closed_form(FieldSpec field, const std::vector<std::size_t>& sizes,
                                     const std::vector<Scalar>& windows, std::size_t genus, std::size_t punctures) {
  const long e = static_cast<long>(punctures) + 2 * (static_cast<long>(genus) - 1);
  const long me = -2 * (static_cast<long>(genus) - 1);
  Scalar total(field);
  for (std::size_t j = 0; j < sizes.size(); ++j)
    total += windows[j].pow(e) * Scalar(field, static_cast<long>(sizes[j])).pow(me);
  return total;
}

Scalar genus_window_scalar(const KnowledgeableFrobenius& K, std::size_t genus, std::size_t punctures) {
  Matrix v = K.eta_C;
  const Matrix handle = K.mu_C * K.delta_C, window = K.iota_star * K.iota;
  for (std::size_t i = 0; i < genus; ++i) v = handle * v;
  for (std::size_t i = 0; i < punctures; ++i) v = window * v;
  return (K.epsilon_C * v)(0, 0);
}

Matrix block_inclusion(const BlockModel& model, FieldSpec field, std::size_t n, std::size_t x, std::size_t y) {
  auto it = model.ranges.find({x, y});
  const std::size_t lo = it == model.ranges.end() ? 0 : it->second.first;
  const std::size_t hi = it == model.ranges.end() ? 0 : it->second.second;
  Matrix m(field, n, hi - lo);
  for (std::size_t i = lo; i < hi; ++i) m(i, i - lo) = Scalar::one(field);
  return m;
}

OpenClosedComplex with_arc_colour(const OpenClosedComplex& c, std::size_t arc, const std::string& label) {
  const auto r = validate(c);
  if (!r.valid) throw input_error("InvalidComplex", "cannot colour an invalid complex");
  if (arc >= r.arcs.size()) throw input_error("BadParams", "no coloured arc " + std::to_string(arc));
  OpenClosedComplex out = c;
  for (auto e : r.arcs[arc]) out.edges[e].brane = label;
  return out;
}

Morphism colored_evaluate(const BlockModel& model, const FrobeniusStructure& F, const OpenClosedComplex& c) {
  const auto r = validate(c);
  if (!r.valid) throw input_error("InvalidComplex", "cannot evaluate an invalid complex");
  const FieldSpec field = F.field();
  const std::size_t n = F.dim();
  StateSumOptions options;
  for (const auto& ed : c.edges) {
    if (!ed.coloured) continue;
    if (ed.brane.empty()) throw input_error("MissingColour", "a coloured arc carries no colour");
    options.brane_elements[ed.brane] = model.idempotents[model.object_index(ed.brane)];
  }
  const Morphism Z = state_sum(F, c, options);
  std::vector<std::size_t> into(c.vertex_count, c.edges.size()), out_of(c.vertex_count, c.edges.size());
  for (std::size_t e = 0; e < c.edges.size(); ++e)
    if (r.edge_sides[e].size() == 1) {
      out_of[r.boundary_direction[e].first] = e;
      into[r.boundary_direction[e].second] = e;
    }
  auto colour = [&](std::size_t e) { return model.object_index(c.edges[e].brane); };
  // Colours (x, y) at the first and last vertex of the list.
  auto ends = [&](const BoundaryComponent& comp, bool in) {
    if (in)
      return std::pair(colour(into[r.boundary_direction[comp.edges.front()].first]),
                       colour(out_of[r.boundary_direction[comp.edges.back()].second]));
    return std::pair(colour(out_of[r.boundary_direction[comp.edges.front()].second]),
                     colour(into[r.boundary_direction[comp.edges.back()].first]));
  };
  Matrix left = Matrix::identity(field, 1), right = Matrix::identity(field, 1);
  Signature dom, cod;
  for (std::size_t j = 0; j < c.black_out.size(); ++j) {
    const auto& comp = c.black_out[j];
    if (comp.kind == ComponentKind::Circle) {
      left = kron(left, Matrix::identity(field, Z.codomain[j].dim));
      cod.push_back(Z.codomain[j]);
      continue;
    }
    const auto [x, y] = ends(comp, false);
    const Matrix inc = block_inclusion(model, field, n, x, y);
    left = kron(left, inc.transpose());
    cod.push_back(block_factor(model.objects[x] + model.objects[y], inc.cols()));
  }
  for (std::size_t j = 0; j < c.black_in.size(); ++j) {
    const auto& comp = c.black_in[j];
    if (comp.kind == ComponentKind::Circle) {
      right = kron(right, Matrix::identity(field, Z.domain[j].dim));
      dom.push_back(Z.domain[j]);
      continue;
    }
    const auto [x, y] = ends(comp, true);
    const Matrix inc = block_inclusion(model, field, n, x, y);
    right = kron(right, inc);
    dom.push_back(block_factor(model.objects[x] + model.objects[y], inc.cols()));
  }
  return Morphism(dom, cod, left * (Z.matrix * right));
}

KnowledgeableFrobenius not_centre_example() {
  const FieldSpec f = FieldSpec::prime(11);
  const Scalar alpha(f, 4);
  std::vector<StructureConstant> mul;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) mul.push_back({2 * i + j, 2 * j + l, 2 * i + l, Scalar::one(f)});
  Element unitA = zero_vector(f, 4);
  unitA[0] = unitA[3] = Scalar::one(f);
  const Algebra A = make_algebra(f, 4, mul, unitA, {"e11", "e12", "e21", "e22"});
  Vector epsA = zero_vector(f, 4);
  epsA[0] = epsA[3] = alpha;
  KnowledgeableFrobenius K;
  K.A = frobenius_from_counit(A, epsA);
  const Scalar one = Scalar::one(f), zero(f);
  // C = k[X]/(X^2 - 1) with basis (1, X).
  K.mu_C = Matrix(f, 2, 4);
  K.mu_C(0, 0) = one;
  K.mu_C(1, 1) = one;
  K.mu_C(1, 2) = one;
  K.mu_C(0, 3) = one;
  K.eta_C = Matrix(f, 2, 1);
  K.eta_C(0, 0) = one;
  K.delta_C = Matrix(f, 4, 2);
  K.delta_C(1, 0) = one;
  K.delta_C(2, 0) = one;
  K.delta_C(0, 1) = one;
  K.delta_C(3, 1) = one;
  K.epsilon_C = Matrix(f, 1, 2);
  K.epsilon_C(0, 1) = one;
  K.iota = Matrix(f, 4, 2);
  K.iota_star = Matrix(f, 2, 4);
  for (std::size_t d : {0u, 3u}) {
    K.iota(d, 0) = one;
    K.iota(d, 1) = -one;
    K.iota_star(0, d) = -alpha;
    K.iota_star(1, d) = alpha;
  }
  (void)zero;
  attach_centre_structure(K);
  return K;
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw input_error("BadParams", "expected a positive integer, got '" + s + "'");
  }
}

/// Replaces the structure by the canonical one (window 1).
CatalogAlgebra canonical_variant(CatalogAlgebra a, const std::string& suffix) {
  a.frobenius = canonical_frobenius(a.algebra);
  a.name += suffix;
  return a;
}

}  // namespace

CatalogAlgebra catalog_algebra(const std::string& name, const std::vector<std::string>& params, FieldSpec field) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) throw input_error("BadParams", name + ": wrong number of parameters");
  };
  if (name == "matsum") {
    need(1, 2);
    std::vector<std::size_t> sizes;
    for (const auto& s : split_list(params[0])) sizes.push_back(parse_count(s));
    std::vector<Scalar> windows;
    if (params.size() == 2)
      for (const auto& s : split_list(params[1])) windows.push_back(Scalar::parse(field, s));
    else
      windows.assign(sizes.size(), Scalar::one(field));
    return matrix_direct_sum(field, sizes, windows);
  }
  if (name == "group_cyclic" || name == "group_symmetric") {
    need(1, 2);
    const std::size_t m = parse_count(params[0]);
    const GroupTable G = name == "group_cyclic" ? GroupTable::cyclic(m) : GroupTable::symmetric(m);
    auto a = group_algebra(field, G, (name == "group_cyclic" ? "Z/" : "S_") + params[0]);
    if (params.size() == 2) {
      if (params[1] == "canonical") return canonical_variant(std::move(a), " canonical");
      if (params[1] != "delta") throw input_error("BadParams", "structure must be 'delta' or 'canonical'");
    }
    return a;
  }
  if (name == "groupoid_pair") {
    need(1, 1);
    return groupoid_algebra(field, FiniteGroupoid::pair(parse_count(params[0])), "pair groupoid " + params[0]);
  }
  if (name == "groupoid_transitive") {
    need(2, 2);
    return groupoid_algebra(field, FiniteGroupoid::transitive(parse_count(params[0]), GroupTable::cyclic(parse_count(params[1]))),
                            "transitive groupoid " + params[0] + "x Z/" + params[1]);
  }
  throw input_error("UnknownCatalogEntry", name);
}

std::vector<CatalogAlgebra> standard_catalog() {
  const FieldSpec Q = FieldSpec::rational();
  auto q = [&](long v) { return Scalar(Q, v); };
  std::vector<CatalogAlgebra> out;
  out.push_back(matrix_direct_sum(Q, {2}, {q(1)}));
  out.push_back(matrix_direct_sum(Q, {2}, {q(2)}));
  out.push_back(matrix_direct_sum(Q, {1, 2}, {q(1), q(1)}));
  out.push_back(matrix_direct_sum(Q, {1, 2}, {q(3), Scalar(Q, 1, 2)}));
  const auto z2 = group_algebra(Q, GroupTable::cyclic(2), "Q[Z/2]");
  out.push_back(z2);
  out.push_back(canonical_variant(z2, " canonical"));
  const auto z3 = group_algebra(Q, GroupTable::cyclic(3), "Q[Z/3]");
  out.push_back(z3);
  {
    // Window 1 + g is central, invertible and not a multiple of the unit.
    CatalogAlgebra v = z3;
    Element z = z3.algebra.unit();
    z[1] = Scalar::one(Q);
    v.frobenius = frobenius_from_window(z3.algebra, z);
    v.name = "Q[Z/3] window 1+g";
    out.push_back(v);
  }
  const auto s3 = group_algebra(Q, GroupTable::symmetric(3), "Q[S_3]");
  out.push_back(s3);
  out.push_back(canonical_variant(s3, " canonical"));
  const FieldSpec F7 = FieldSpec::prime(7);
  out.push_back(matrix_direct_sum(F7, {2}, {Scalar(F7, 1)}));
  out.push_back(matrix_direct_sum(F7, {2}, {Scalar(F7, 3)}));
  const auto pg = groupoid_algebra(Q, FiniteGroupoid::pair(2), "pair groupoid 2");
  out.push_back(pg);
  {
    CatalogAlgebra v = pg;
    Element z = pg.algebra.unit();
    for (auto& x : z) x = x * Scalar(Q, 5);
    v.frobenius = frobenius_from_window(pg.algebra, z);
    v.name = "pair groupoid 2 window 5";
    out.push_back(v);
  }
  return out;
}

}  // namespace octqft
