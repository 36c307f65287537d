#include <doctest.h>

#include "octqft/errors.hpp"
#include "octqft/io.hpp"
#include "support.hpp"

using namespace octqft;
using namespace octqft::testing;

namespace {

std::string error_kind(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("fields") {
    CHECK(field_from_json(field_to_json(Q())) == Q());
    CHECK(field_from_json(field_to_json(FieldSpec::prime(7))) == FieldSpec::prime(7));
    CHECK(error_kind([] { field_from_json(Json::parse(R"({"kind":"real"})")); }) == "BadAlgebraFile");
  }

  TEST_CASE("algebra files round trip") {
    for (const auto& c : standard_catalog()) {
      CAPTURE(c.name);
      const auto a = algebra_file_from_catalog(c);
      const Json j = algebra_file_to_json(a);
      const auto b = algebra_file_from_json(j);
      CHECK(b == a);
      CHECK(dump(algebra_file_to_json(b)) == dump(j));
      CHECK(b.structure().counit() == c.frobenius.counit());
    }
  }

  TEST_CASE("algebra file forms") {
    const Json j = Json::parse(R"({
      "field": {"kind": "rational"},
      "dim": 2,
      "mul": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
      "unit": ["1","0"],
      "frobenius": "canonical"
    })");
    const auto a = algebra_file_from_json(j);
    CHECK(a.structure().counit() == Vector{q(2), q(0)});
    Json w = j;
    w["frobenius"] = Json::parse(R"({"window": ["2","0"]})");
    CHECK(algebra_file_from_json(w).structure().window() == Vector{q(2), q(0)});
    Json bad = j;
    bad["mul"][0][2] = 7;
    CHECK(error_kind([&] { algebra_file_from_json(bad); }) == "BadAlgebraFile");
    Json missing = j;
    missing.erase("unit");
    CHECK(error_kind([&] { algebra_file_from_json(missing); }) == "BadAlgebraFile");
    Json degenerate = j;
    degenerate["frobenius"] = Json::parse(R"({"counit": ["0","0"]})");
    const auto d = algebra_file_from_json(degenerate);
    CHECK(error_kind([&] { d.structure(); }) == "DegeneratePairing");
  }

  TEST_CASE("complex files round trip") {
    for (const auto& name : generator_names()) {
      CAPTURE(name);
      const auto c = builtin(name, {});
      const Json j = complex_to_json(c);
      const auto back = complex_from_json(j);
      CHECK(dump(complex_to_json(back)) == dump(j));
      if (j.contains("edges")) CHECK(back == c);
    }
    const auto cat = standard_catalog();
    for (const auto& c : {annulus(1, 2), closed_surface(1, 1), random_moves(strip(2, 2), 3, 8)}) {
      const Json j = complex_to_json(c);
      CHECK(dump(complex_to_json(complex_from_json(j))) == dump(j));
      const auto& F = cat[2].frobenius;
      CHECK(equal(state_sum(F, complex_from_json(j)), state_sum(F, c)));
    }
  }

  TEST_CASE("brane colours survive a round trip") {
    const auto c = with_arc_colour(strip(1, 1), 1, "y");
    const auto back = complex_from_json(complex_to_json(c));
    const auto r = validate(back);
    CHECK(back.edges[r.arcs[1][0]].brane == "y");
    CHECK(back.edges[r.arcs[0][0]].brane.empty());
  }

  TEST_CASE("malformed complex files") {
    CHECK(error_kind([] { complex_from_json(Json::parse(R"({"vertices": 3})")); }) == "BadComplexFile");
    CHECK(error_kind([] { complex_from_json(Json::parse(R"({"vertices": 3, "triangles": [[0,1]]})")); }) ==
          "BadComplexFile");
    // A lone triangle with uncovered boundary edges.
    CHECK(error_kind([] { complex_from_json(Json::parse(R"({"vertices": 3, "triangles": [[0,1,2]]})")); }) ==
          "InvalidComplex");
    CHECK(error_kind([] { read_json_file("/nonexistent/file.json"); }) == "BadFile");
  }

  TEST_CASE("morphisms") {
    const auto cat = standard_catalog();
    const auto& F = cat[0].frobenius;
    const auto m = state_sum(F, zipper());
    const Json j = morphism_to_json(m);
    const auto back = morphism_from_json(F.field(), j);
    CHECK(equal(back, m));
    CHECK(matrix_from_json(Q(), matrix_to_json(Matrix::from_ints(Q(), {{1, 2}, {3, 4}}))) ==
          Matrix::from_ints(Q(), {{1, 2}, {3, 4}}));
    CHECK(error_kind([] { matrix_from_json(Q(), Json::parse(R"([["1","2"],["3"]])")); }) == "BadMorphism");
  }

  TEST_CASE("dump keeps scalar arrays flat") {
    const Json j = Json::parse(R"({"a": [1, 2, 3], "b": {"c": [[1, 2], [3, 4]]}})");
    CHECK(dump(j) == "{\n  \"a\": [1, 2, 3],\n  \"b\": {\n    \"c\": [\n      [1, 2],\n      [3, 4]\n    ]\n  }\n}");
  }
}
