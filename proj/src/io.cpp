#include "octqft/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "octqft/errors.hpp"

namespace octqft {

namespace {

template <class F>
auto guarded(const std::string& kind, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw input_error(kind, e.what());
  }
}

std::vector<std::string> scalar_strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Vector parse_vector(FieldSpec f, const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw input_error("BadAlgebraFile", what + " must list " + std::to_string(n) + " coefficients");
  Vector v;
  for (const auto& x : j) v.push_back(Scalar::parse(f, x.get<std::string>()));
  return v;
}

const char* kind_name(ComponentKind k) { return k == ComponentKind::Interval ? "interval" : "circle"; }

ComponentKind parse_kind(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "interval") return ComponentKind::Interval;
  if (s == "circle") return ComponentKind::Circle;
  throw input_error("BadComplexFile", "component kind must be interval or circle, got '" + s + "'");
}

Json brane_json(const OpenClosedComplex& c, const ValidationReport& r) {
  Json out = Json::object();
  for (std::size_t i = 0; i < r.arcs.size(); ++i) {
    const auto& label = c.edges[r.arcs[i].front()].brane;
    if (!label.empty()) out[std::to_string(i)] = label;
  }
  return out;
}

OpenClosedComplex apply_branes(OpenClosedComplex c, const Json& j) {
  if (!j.contains("brane_colours")) return c;
  for (const auto& [key, label] : j.at("brane_colours").items()) {
    std::size_t arc = 0;
    try {
      arc = std::stoul(key);
    } catch (const std::exception&) {
      throw input_error("BadComplexFile", "brane_colours keys are arc indices, got '" + key + "'");
    }
    c = with_arc_colour(c, arc, label.get<std::string>());
  }
  return c;
}

const char* factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::FullAlgebra: return "algebra";
    case FactorKind::SplitImage: return "image";
    case FactorKind::Block: return "block";
  }
  return "algebra";
}

bool is_leaf(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_leaf(x)) return false;
  return true;
}

void dump_into(std::string& out, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (is_leaf(j) || j.empty()) {
    out += j.dump();
    return;
  }
  if (is_flat_array(j)) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (const auto& [key, x] : j.items()) {
    out += pad;
    if (obj) out += Json(key).dump() + ": ";
    dump_into(out, x, indent + 2);
    out += ++i < j.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(out, j, 0);
  return out;
}

FrobeniusStructure AlgebraFile::structure() const {
  switch (frobenius.kind) {
    case FrobeniusChoice::Kind::Counit: return frobenius_from_counit(algebra, frobenius.values);
    case FrobeniusChoice::Kind::Window: return frobenius_from_window(algebra, frobenius.values);
    case FrobeniusChoice::Kind::Canonical: break;
  }
  return canonical_frobenius(algebra);
}

bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
  return a.algebra == b.algebra && a.frobenius == b.frobenius && a.block_sizes == b.block_sizes &&
         a.block_windows == b.block_windows;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("BadFile", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw input_error("BadJson", path + ": " + e.what());
  }
}

Json field_to_json(FieldSpec f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", f.characteristic()}};
}

FieldSpec field_from_json(const Json& j) {
  return guarded("BadAlgebraFile", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    throw input_error("BadAlgebraFile", "field kind must be rational or prime");
  });
}

Json algebra_file_to_json(const AlgebraFile& a) {
  const Algebra& A = a.algebra;
  Json j;
  j["field"] = field_to_json(A.field());
  j["dim"] = A.dim();
  j["basis"] = A.basis_names();
  Json mul = Json::array();
  for (const auto& sc : A.structure_constants()) mul.push_back(Json{sc.i, sc.j, sc.k, sc.coeff.to_string()});
  j["mul"] = mul;
  j["unit"] = scalar_strings(A.unit());
  switch (a.frobenius.kind) {
    case FrobeniusChoice::Kind::Counit: j["frobenius"] = Json{{"counit", scalar_strings(a.frobenius.values)}}; break;
    case FrobeniusChoice::Kind::Window: j["frobenius"] = Json{{"window", scalar_strings(a.frobenius.values)}}; break;
    case FrobeniusChoice::Kind::Canonical: j["frobenius"] = "canonical"; break;
  }
  if (!a.block_sizes.empty()) j["blocks"] = Json{{"sizes", a.block_sizes}, {"windows", scalar_strings(a.block_windows)}};
  return j;
}

AlgebraFile algebra_file_from_json(const Json& j) {
  return guarded("BadAlgebraFile", [&] {
    AlgebraFile out;
    const FieldSpec f = field_from_json(j.at("field"));
    const auto n = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
    if (!names.empty() && names.size() != n) throw input_error("BadAlgebraFile", "basis must have dim names");
    std::vector<StructureConstant> mul;
    for (const auto& q : j.at("mul")) {
      if (!q.is_array() || q.size() != 4) throw input_error("BadAlgebraFile", "mul entries are [i, j, k, coeff]");
      const auto i = q[0].get<std::size_t>(), jj = q[1].get<std::size_t>(), k = q[2].get<std::size_t>();
      if (i >= n || jj >= n || k >= n) throw input_error("BadAlgebraFile", "mul index out of range");
      mul.push_back({i, jj, k, Scalar::parse(f, q[3].get<std::string>())});
    }
    const Vector unit = parse_vector(f, j.at("unit"), n, "unit");
    out.algebra = make_algebra(f, n, mul, unit, names);
    const Json& fr = j.contains("frobenius") ? j.at("frobenius") : Json("canonical");
    if (fr.is_string()) {
      if (fr.get<std::string>() != "canonical") throw input_error("BadAlgebraFile", "frobenius must be canonical, counit or window");
    } else if (fr.contains("counit")) {
      out.frobenius = {FrobeniusChoice::Kind::Counit, parse_vector(f, fr.at("counit"), n, "counit")};
    } else if (fr.contains("window")) {
      out.frobenius = {FrobeniusChoice::Kind::Window, parse_vector(f, fr.at("window"), n, "window")};
    } else {
      throw input_error("BadAlgebraFile", "frobenius must be canonical, counit or window");
    }
    if (j.contains("blocks")) {
      out.block_sizes = j.at("blocks").at("sizes").get<std::vector<std::size_t>>();
      out.block_windows = parse_vector(f, j.at("blocks").at("windows"), out.block_sizes.size(), "block windows");
    }
    return out;
  });
}

AlgebraFile algebra_file_from_catalog(const CatalogAlgebra& c) {
  AlgebraFile out;
  out.algebra = c.algebra;
  out.frobenius = {FrobeniusChoice::Kind::Counit, c.frobenius.counit()};
  out.block_sizes = c.block_sizes;
  out.block_windows = c.block_windows;
  return out;
}

Json complex_to_json(const OpenClosedComplex& c) {
  const auto r = validate(c);
  Json j;
  j["vertices"] = c.vertex_count;
  auto components = [&](const std::vector<BoundaryComponent>& list, bool simplicial) {
    Json arr = Json::array();
    for (const auto& comp : list) {
      Json edges = Json::array();
      for (auto e : comp.edges) {
        if (simplicial)
          edges.push_back(Json{c.edges[e].a, c.edges[e].b});
        else
          edges.push_back(e);
      }
      arr.push_back(Json{{"kind", kind_name(comp.kind)}, {"edges", edges}});
    }
    return arr;
  };
  const bool simplicial = r.valid && r.simplicial;
  if (simplicial) {
    Json tris = Json::array();
    for (std::size_t t = 0; t < c.triangles.size(); ++t) {
      auto v = c.triangle_vertices(t);
      std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
      tris.push_back(Json{v[0], v[1], v[2]});
    }
    j["triangles"] = tris;
    Json col = Json::array();
    for (const auto& e : c.edges)
      if (e.coloured) col.push_back(Json{e.a, e.b});
    j["coloured_edges"] = col;
  } else {
    Json edges = Json::array();
    for (const auto& e : c.edges) edges.push_back(Json{e.a, e.b});
    j["edges"] = edges;
    Json tris = Json::array();
    for (const auto& tri : c.triangles) {
      Json sides = Json::array();
      for (const auto& s : tri) sides.push_back(s.forward ? static_cast<long>(s.edge) + 1 : -static_cast<long>(s.edge) - 1);
      tris.push_back(sides);
    }
    j["triangles"] = tris;
    Json col = Json::array();
    for (std::size_t e = 0; e < c.edges.size(); ++e)
      if (c.edges[e].coloured) col.push_back(e);
    j["coloured_edges"] = col;
  }
  j["black_in"] = components(c.black_in, simplicial);
  j["black_out"] = components(c.black_out, simplicial);
  if (r.valid) {
    Json branes = brane_json(c, r);
    if (!branes.empty()) j["brane_colours"] = branes;
  }
  return j;
}

OpenClosedComplex complex_from_json(const Json& j) {
  OpenClosedComplex c = guarded("BadComplexFile", [&] {
    const auto V = j.at("vertices").get<std::size_t>();
    if (j.contains("edges")) {
      OpenClosedComplex d;
      d.vertex_count = V;
      for (const auto& e : j.at("edges")) {
        const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
        if (a >= V || b >= V) throw input_error("BadComplexFile", "edge vertex out of range");
        d.edges.push_back({a, b, false, {}});
      }
      auto edge_id = [&](const Json& x) {
        const auto e = x.get<std::size_t>();
        if (e >= d.edges.size()) throw input_error("BadComplexFile", "edge id out of range");
        return e;
      };
      for (const auto& x : j.at("coloured_edges")) d.edges[edge_id(x)].coloured = true;
      for (const auto& t : j.at("triangles")) {
        if (t.size() != 3) throw input_error("BadComplexFile", "triangles have three sides");
        Triangle tri;
        for (std::size_t i = 0; i < 3; ++i) {
          const long s = t[i].get<long>();
          if (s == 0 || static_cast<std::size_t>(s < 0 ? -s : s) > d.edges.size())
            throw input_error("BadComplexFile", "side must be +-(edge id + 1)");
          tri[i] = {static_cast<std::size_t>((s < 0 ? -s : s) - 1), s > 0};
        }
        d.triangles.push_back(tri);
      }
      auto comps = [&](const Json& arr) {
        std::vector<BoundaryComponent> out;
        for (const auto& comp : arr) {
          BoundaryComponent b;
          b.kind = parse_kind(comp.at("kind"));
          for (const auto& x : comp.at("edges")) b.edges.push_back(edge_id(x));
          out.push_back(b);
        }
        return out;
      };
      d.black_in = comps(j.at("black_in"));
      d.black_out = comps(j.at("black_out"));
      return d;
    }
    std::vector<std::array<std::size_t, 3>> tris;
    for (const auto& t : j.at("triangles")) {
      if (t.size() != 3) throw input_error("BadComplexFile", "triangles are vertex triples");
      tris.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>()});
    }
    using Pair = std::pair<std::size_t, std::size_t>;
    auto pair = [](const Json& e) { return Pair{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()}; };
    std::vector<Pair> coloured;
    for (const auto& e : j.value("coloured_edges", Json::array())) coloured.push_back(pair(e));
    auto comps = [&](const Json& arr) {
      std::vector<std::pair<ComponentKind, std::vector<Pair>>> out;
      for (const auto& comp : arr) {
        std::vector<Pair> edges;
        for (const auto& e : comp.at("edges")) edges.push_back(pair(e));
        out.push_back({parse_kind(comp.at("kind")), edges});
      }
      return out;
    };
    return from_simplicial(V, tris, coloured, comps(j.value("black_in", Json::array())),
                           comps(j.value("black_out", Json::array())));
  });
  require_valid(c);
  return guarded("BadComplexFile", [&] { return apply_branes(c, j); });
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(scalar_strings(m.row(i)));
  return rows;
}

Matrix matrix_from_json(FieldSpec f, const Json& j) {
  return guarded("BadMorphism", [&] {
    const std::size_t r = j.size(), c = r ? j.at(0).size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (j.at(i).size() != c) throw input_error("BadMorphism", "ragged matrix");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = Scalar::parse(f, j.at(i).at(k).get<std::string>());
    }
    return m;
  });
}

Json signature_to_json(const Signature& s) {
  Json arr = Json::array();
  for (const auto& f : s) {
    Json x{{"kind", factor_kind_name(f.kind)}, {"dim", f.dim}};
    if (!f.label.empty()) x["label"] = f.label;
    arr.push_back(x);
  }
  return arr;
}

Json morphism_to_json(const Morphism& m) {
  Json j;
  j["domain"] = signature_to_json(m.domain);
  j["codomain"] = signature_to_json(m.codomain);
  j["rows"] = m.matrix.rows();
  j["cols"] = m.matrix.cols();
  j["matrix"] = matrix_to_json(m.matrix);
  return j;
}

Morphism morphism_from_json(FieldSpec f, const Json& j) {
  return guarded("BadMorphism", [&] {
    auto sig = [](const Json& arr) {
      Signature s;
      for (const auto& x : arr) {
        Factor fac;
        const auto k = x.at("kind").get<std::string>();
        fac.kind = k == "image" ? FactorKind::SplitImage : k == "block" ? FactorKind::Block : FactorKind::FullAlgebra;
        fac.dim = x.at("dim").get<std::size_t>();
        fac.label = x.value("label", std::string());
        s.push_back(fac);
      }
      return s;
    };
    Matrix m = matrix_from_json(f, j.at("matrix"));
    if (m.rows() == 0) m = Matrix(f, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    return Morphism(sig(j.at("domain")), sig(j.at("codomain")), m);
  });
}

}  // namespace octqft
