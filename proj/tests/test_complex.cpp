#include <doctest.h>

#include "octqft/complex.hpp"
#include "octqft/errors.hpp"
#include "support.hpp"

using namespace octqft;

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

TEST_SUITE("complex") {
  TEST_CASE("builtins are valid with the expected topology") {
    for (const auto& name : generator_names()) {
      CAPTURE(name);
      const auto r = validate(builtin(name, {}));
      CHECK(r.valid);
      REQUIRE(r.components.size() == 1);
      CHECK(r.components[0].genus == 0);
    }
    const auto s = validate(strip(2, 3));
    CHECK(s.valid);
    CHECK(s.euler == 1);
    CHECK(s.components[0].boundary_cycles == 1);
    const auto a = validate(annulus(1, 1));
    CHECK(a.valid);
    CHECK_FALSE(a.simplicial);
    CHECK(a.euler == 0);
    CHECK(a.components[0].boundary_cycles == 2);
    CHECK(validate(annulus(3, 3)).simplicial);
    for (std::size_t g = 0; g <= 2; ++g)
      for (std::size_t w = 0; w <= 2; ++w) {
        CAPTURE(g);
        CAPTURE(w);
        const auto r = validate(closed_surface(g, w));
        CHECK(r.valid);
        CHECK(r.components[0].genus == static_cast<long>(g));
        CHECK(r.components[0].windows == w);
        CHECK(r.euler == 2 - 2 * static_cast<long>(g) - static_cast<long>(w));
      }
  }

  TEST_CASE("generator boundary shapes") {
    CHECK(open_mult().black_in.size() == 2);
    CHECK(open_mult().black_out.size() == 1);
    CHECK(closed_comult().black_out.size() == 2);
    CHECK(closed_comult().black_out[0].kind == ComponentKind::Circle);
    CHECK(zipper().black_in[0].kind == ComponentKind::Circle);
    CHECK(zipper().black_out[0].kind == ComponentKind::Interval);
    CHECK(closed_unit().black_in.empty());
    CHECK(open_counit().black_out.empty());
    CHECK(generator_names().size() == 11);
  }

  TEST_CASE("invalid complexes are reported") {
    auto c = strip(1, 1);
    c.black_out.clear();
    CHECK_FALSE(validate(c).valid);
    CHECK_THROWS_AS(require_valid(c), Error);

    auto d = strip(1, 1);
    d.triangles[0][0].forward = !d.triangles[0][0].forward;
    CHECK_FALSE(validate(d).valid);

    // Three triangles on one edge.
    const auto fan = from_simplicial(5, {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}}, {}, {}, {});
    CHECK_FALSE(validate(fan).valid);
    CHECK(error_kind([&] { require_valid(fan); }) == "InvalidComplex");
  }

  TEST_CASE("simplicial construction") {
    // Disk of two triangles with all boundary coloured.
    const auto c = from_simplicial(4, {{0, 1, 2}, {0, 2, 3}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}, {});
    const auto r = validate(c);
    CHECK(r.valid);
    CHECK(r.simplicial);
    CHECK(c.edges.size() == 5);
    CHECK(r.components[0].windows == 1);
    CHECK(find_edge(c, 2, 0) == find_edge(c, 0, 2));
    CHECK_THROWS_AS(find_edge(c, 1, 3), Error);
  }

  TEST_CASE("1-3 and 3-1 moves are inverse") {
    for (const auto& name : generator_names()) {
      CAPTURE(name);
      const auto c = builtin(name, {});
      const auto up = pachner_13(c, 0);
      CHECK(up.triangles.size() == c.triangles.size() + 2);
      CHECK(validate(up).valid);
      const auto back = pachner_31(up, up.vertex_count - 1);
      CHECK(canonical_form(compacted(back)) == canonical_form(compacted(c)));
    }
    CHECK(error_kind([] { pachner_31(strip(1, 1), 0); }) == "NotApplicable");
  }

  TEST_CASE("2-2 twice is the identity") {
    const auto c = closed_surface(0, 0);
    const auto r = validate(c);
    std::size_t flips = 0;
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      if (r.edge_sides[e].size() != 2) continue;
      try {
        const auto once = pachner_22(c, e);
        CHECK(validate(once).valid);
        const auto twice = pachner_22(once, e);
        CHECK(canonical_form(twice) == canonical_form(c));
        ++flips;
      } catch (const Error& err) {
        CHECK(err.kind() == "NotApplicable");
      }
    }
    CHECK(flips > 0);
  }

  TEST_CASE("type-2 shellings") {
    const auto s = strip(1, 1);
    std::size_t coloured = 0;
    for (const auto& e : s.edges) coloured += e.coloured;
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      if (!s.edges[e].coloured) continue;
      const auto ear = shelling_type2(s, {ShellingKind::AddEar, e});
      CHECK(validate(ear).valid);
      CHECK(ear.triangles.size() == s.triangles.size() + 1);
      const auto back = shelling_type2(ear, {ShellingKind::RemoveEar, ear.triangles.size() - 1});
      CHECK(canonical_form(compacted(back)) == canonical_form(compacted(s)));
      break;
    }
    CHECK(coloured > 0);
    CHECK(error_kind([&] { shelling_type2(s, {ShellingKind::AddEar, s.black_in[0].edges[0]}); }) == "NotApplicable");
  }

  TEST_CASE("random moves keep validity and topology") {
    for (const auto& c : {strip(2, 1), annulus(2, 2), open_mult(), closed_surface(1, 1), zipper()}) {
      const auto before = validate(c);
      bool changed = false;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto d = random_moves(c, seed, 15);
        const auto r = validate(d);
        CHECK(r.valid);
        CHECK(r.simplicial == before.simplicial);
        CHECK(r.euler == before.euler);
        CHECK(r.components[0].genus == before.components[0].genus);
        CHECK(r.components[0].windows == before.components[0].windows);
        CHECK(d.black_in.size() == c.black_in.size());
        CHECK(d.black_out.size() == c.black_out.size());
        changed = changed || d.triangles.size() != c.triangles.size();
        CHECK(random_moves(c, seed, 15) == d);
      }
      CHECK(changed);
    }
  }

  TEST_CASE("gluing and disjoint union") {
    const auto g = glue(open_comult(), open_mult());
    const auto r = validate(g);
    CHECK(r.valid);
    CHECK(r.components.size() == 1);
    CHECK(r.euler == 0);
    CHECK(g.black_in.size() == 1);
    CHECK(g.black_out.size() == 1);
    const auto cyl = validate(glue(closed_comult(), closed_mult()));
    CHECK(cyl.valid);
    CHECK(cyl.components[0].genus == 1);
    const auto u = disjoint_union(strip(1, 1), annulus(1, 1));
    const auto ur = validate(u);
    CHECK(ur.valid);
    CHECK(ur.components.size() == 2);
    CHECK(u.black_in.size() == 2);
    CHECK_THROWS_AS(glue(open_mult(), closed_mult()), Error);
  }

  TEST_CASE("boundary counts and rotation") {
    const auto c = with_boundary_counts(closed_mult(), {1, 2}, {3});
    CHECK(validate(c).valid);
    CHECK(c.black_in[0].edges.size() == 1);
    CHECK(c.black_in[1].edges.size() == 2);
    CHECK(c.black_out[0].edges.size() == 3);
    const auto rot = rotate_circle(c, false, 0, 1);
    CHECK(validate(rot).valid);
    CHECK(rot.black_out[0].edges[0] == c.black_out[0].edges[1]);
    CHECK_THROWS_AS(rotate_circle(open_mult(), true, 0, 1), Error);
  }

  TEST_CASE("builtin names") {
    CHECK(builtin("strip", {2, 3}) == strip(2, 3));
    CHECK(builtin("closed_surface", {1, 0}) == closed_surface(1, 0));
    CHECK(error_kind([] { builtin("klein_bottle", {}); }) != "");
    CHECK_THROWS_AS(builtin("strip", {0, 1}), Error);
  }
}
