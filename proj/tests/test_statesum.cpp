#include <doctest.h>

#include "octqft/errors.hpp"
#include "octqft/statesum.hpp"
#include "support.hpp"

using namespace octqft;
using namespace octqft::testing;

namespace {

std::vector<CatalogAlgebra> small_catalog() {
  std::vector<CatalogAlgebra> out;
  for (auto& c : standard_catalog())
    if (c.frobenius.dim() <= 5) out.push_back(c);
  return out;
}

Matrix identity(const FrobeniusStructure& F, std::size_t n) { return Matrix::identity(F.field(), n); }

}  // namespace

TEST_SUITE("statesum") {
  TEST_CASE("strips give P and annuli give Q") {
    for (const auto& c : standard_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t l = 1; l <= 3; ++l) {
          if (F.dim() > 5 && k + l > 4) continue;
          CAPTURE(k);
          CAPTURE(l);
          CHECK(state_sum_raw(F, strip(k, l)).matrix == P_map(F, k, l).matrix);
          CHECK(state_sum_raw(F, annulus(k, l)).matrix == Q_map(F, k, l).matrix);
        }
    }
  }

  TEST_CASE("cylinders are identities in full mode") {
    for (const auto& c : small_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      const std::size_t d = split_idempotent(central_idempotent_p(F)).im.cols();
      CHECK(state_sum_raw(F, strip(1, 1)).matrix == identity(F, F.dim()));
      const auto cyl = state_sum(F, annulus(1, 1));
      CHECK(cyl.domain == Signature{split_image(d)});
      CHECK(cyl.matrix == identity(F, d));
      for (std::size_t h = 1; h <= 3; ++h) {
        CHECK(state_sum(F, strip(h, h)).matrix == identity(F, F.dim()));
        CHECK(state_sum(F, annulus(h, h)).matrix == identity(F, d));
        const auto red = state_sum_reduced(F, annulus(h, h));
        CHECK(red.matrix == identity(F, red.matrix.rows()));
      }
    }
  }

  TEST_CASE("sparse reduced and full agree with the dense routes") {
    for (const auto& c : small_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      for (const auto& cx : {strip(2, 1), annulus(2, 1), annulus(1, 3), closed_mult(), zipper(), cozipper(),
                             with_boundary_counts(open_mult(), {2, 1}, {2})}) {
        CHECK(equal(state_sum_reduced(F, cx), state_sum_reduced_dense(F, cx)));
        CHECK(equal(state_sum(F, cx), state_sum_dense(F, cx)));
      }
    }
  }

  TEST_CASE("contraction order and weight placement do not matter") {
    const auto c = standard_catalog()[3];
    const auto& F = c.frobenius;
    const auto cx = random_moves(closed_surface(1, 1), 4, 10);
    const auto ref = state_sum(F, cx, StateSumMode::Reduced);
    const auto r = validate(cx);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      StateSumOptions o;
      o.contract.order = ContractionOrder::Random;
      o.contract.seed = seed;
      o.contract.parallel = seed % 2 == 1;
      o.weight_placement = {static_cast<std::size_t>(seed) % r.components[0].triangles.size()};
      CHECK(equal(state_sum(F, cx, StateSumMode::Reduced, o), ref));
    }
  }

  TEST_CASE("generators of the open sector") {
    for (const auto& c : small_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      CHECK(state_sum(F, open_mult()).matrix == F.multiplication_matrix());
      CHECK(state_sum(F, open_comult()).matrix == F.comultiplication_matrix());
      CHECK(state_sum(F, open_unit()).matrix == F.unit_matrix());
      CHECK(state_sum(F, open_counit()).matrix == F.counit_matrix());
    }
  }

  TEST_CASE("gluing is composition") {
    const auto cat = standard_catalog();
    const auto& F = cat[3].frobenius;
    const std::vector<std::pair<OpenClosedComplex, OpenClosedComplex>> pairs{
        {open_mult(), open_comult()},
        {open_comult(), open_mult()},
        {zipper(), cozipper()},
        {cozipper(), zipper()},
        {closed_comult(), closed_mult()},
        {strip(2, 1), with_boundary_counts(open_counit(), {2}, {})},
        {open_unit(), open_counit()},
    };
    for (const auto& [top, bottom] : pairs) {
      const auto g = glue(top, bottom);
      CHECK(equal(state_sum(F, g), compose(state_sum(F, bottom), state_sum(F, top))));
    }
  }

  TEST_CASE("disjoint union is the tensor product") {
    const auto cat = standard_catalog();
    const auto& F = cat[4].frobenius;
    const auto u = disjoint_union(open_mult(), zipper());
    CHECK(equal(state_sum(F, u), tensor(state_sum(F, open_mult()), state_sum(F, zipper()))));
    const auto v = disjoint_union(closed_surface(1, 0), strip(1, 1));
    CHECK(state_sum(F, v).matrix ==
          state_sum(F, strip(1, 1)).matrix.scaled(evaluate_closed(F, closed_surface(1, 0))));
  }

  TEST_CASE("full mode ignores boundary triangulation") {
    for (const auto& c : small_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      for (const auto& name : {"closed_mult", "zipper", "open_mult", "closed_comult"}) {
        CAPTURE(name);
        const auto base = builtin(name, {});
        const auto ref = state_sum(F, base);
        for (std::size_t h = 1; h <= 3; ++h) {
          std::vector<std::size_t> in(base.black_in.size(), h), out(base.black_out.size(), 4 - h);
          CHECK(equal(state_sum(F, with_boundary_counts(base, in, out)), ref));
        }
        for (std::size_t i = 0; i < base.black_in.size(); ++i)
          if (base.black_in[i].kind == ComponentKind::Circle) {
            std::vector<std::size_t> in(base.black_in.size(), 1), out(base.black_out.size(), 1);
            in[i] = 3;
            const auto wide = with_boundary_counts(base, in, out);
            CHECK(equal(state_sum(F, rotate_circle(wide, true, i, 1)), ref));
          }
      }
    }
  }

  TEST_CASE("closed values") {
    const auto m2 = matrix_direct_sum(Q(), {2}, {q(1)});
    CHECK(evaluate_closed(m2.frobenius, closed_surface(0, 0)) == q(4));
    const auto m23 = matrix_direct_sum(Q(), {2, 3}, {q(1), q(1)});
    CHECK(evaluate_closed(m23.frobenius, closed_surface(1, 0)) == q(2));
    CHECK(evaluate_closed(m23.frobenius, closed_surface(2, 0)) == q(13, 36));
    const auto z2 = group_algebra(Q(), GroupTable::cyclic(2));
    CHECK(evaluate_closed(z2.frobenius, closed_surface(2, 0)) == q(8));
    CHECK_THROWS_AS(evaluate_closed(m2.frobenius, strip(1, 1)), Error);
  }

  TEST_CASE("errors") {
    const auto cat = standard_catalog();
    const auto& F = cat[0].frobenius;
    auto c = strip(1, 1);
    c.edges[validate(c).arcs[0][0]].brane = "x";
    try {
      state_sum(F, c);
      FAIL("expected MissingColour");
    } catch (const Error& e) {
      CHECK(e.kind() == "MissingColour");
    }
    CHECK_THROWS_AS(parse_mode("dense"), Error);
    CHECK(parse_mode("reduced") == StateSumMode::Reduced);
    auto broken = strip(1, 1);
    broken.black_out.clear();
    CHECK_THROWS_AS(state_sum(F, broken), Error);
  }

  TEST_CASE("a corrupted copairing breaks invariance") {
    const auto cat = standard_catalog();
    const auto& F = cat[0].frobenius;
    StateSumOptions o;
    Matrix g = F.pairing_inverse();
    g(0, 0) += Scalar::one(F.field());
    o.copairing = g;
    const auto a = closed_surface(0, 0), b = random_moves(a, 2, 12);
    REQUIRE(b.triangles.size() != a.triangles.size());
    CHECK(state_sum(F, a).matrix == state_sum(F, b).matrix);
    CHECK(state_sum(F, a, StateSumMode::Full, o).matrix != state_sum(F, b, StateSumMode::Full, o).matrix);
  }
}
