#include <doctest.h>

#include "octqft/errors.hpp"
#include "octqft/statesum.hpp"
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

/// (a^-1 .) restricted to C in the basis of iota.
Matrix psi_on_C(const KnowledgeableFrobenius& K) {
  return left_inverse(K.iota) * K.A.window_power_matrix(-1) * K.iota;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("groups") {
    const auto s3 = GroupTable::symmetric(3);
    CHECK(s3.order == 6);
    for (std::size_t g = 0; g < 6; ++g) CHECK(s3.mul[g][s3.inverse[g]] == s3.identity);
    CHECK(GroupTable::cyclic(4).mul[3][2] == 1);
    CHECK(error_kind([] { GroupTable::from_table({{0, 1}, {1, 1}}); }) == "NotAGroup");
    CHECK(error_kind([] { GroupTable::from_table({{0, 1}, {1}}); }) == "NotAGroup");
    CHECK(error_kind([] { GroupTable::symmetric(6); }) == "BadParams");
  }

  TEST_CASE("groupoids") {
    const auto G = FiniteGroupoid::transitive(2, GroupTable::cyclic(2));
    CHECK(G.size() == 8);
    CHECK(G.star_size(0) == 4);
    CHECK_NOTHROW(G.validate());
    auto bad = FiniteGroupoid::pair(2);
    bad.inverse[1] = 1;
    CHECK(error_kind([&] { bad.validate(); }) == "NotAGroupoid");
    auto bad2 = FiniteGroupoid::pair(2);
    std::swap(bad2.identity[0], bad2.identity[1]);
    CHECK(error_kind([&] { bad2.validate(); }) == "NotAGroupoid");
  }

  TEST_CASE("characteristic conditions") {
    const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
    CHECK(error_kind([&] { group_algebra(f2, GroupTable::cyclic(2)); }) == "CharDividesOrder");
    CHECK(error_kind([&] { matrix_direct_sum(f2, {2}, {Scalar::one(f2)}); }) == "CharDividesBlock");
    CHECK(error_kind([&] { matrix_direct_sum(Q(), {2}, {q(0)}); }) == "ZeroWindowCoefficient");
    CHECK(error_kind([&] { groupoid_algebra(f3, FiniteGroupoid::pair(3)); }) == "CharDividesStar");
    CHECK_NOTHROW(group_algebra(f2, GroupTable::cyclic(3)));
    CHECK_NOTHROW(matrix_direct_sum(f3, {2, 1}, {Scalar(f3, 2), Scalar::one(f3)}));
  }

  TEST_CASE("matrix sums carry the requested window") {
    const auto c = matrix_direct_sum(Q(), {1, 2}, {q(3), q(1, 2)});
    CHECK(c.frobenius.counit()[0] == q(1, 3));
    CHECK(c.frobenius.counit()[1] == q(4));
    CHECK(c.frobenius.counit()[2] == q(0));
    const auto G = group_algebra(Q(), GroupTable::cyclic(3));
    CHECK(G.frobenius.counit() == Vector{q(1), q(0), q(0)});
  }

  TEST_CASE("one-object groupoid scales the group counit by N") {
    const auto H = GroupTable::cyclic(2);
    const auto gd = groupoid_algebra(Q(), FiniteGroupoid::transitive(1, H));
    const auto gr = group_algebra(Q(), H);
    CHECK(gd.frobenius.counit() == Vector{q(2), q(0)});
    CHECK(gd.frobenius.counit()[0] == gr.frobenius.counit()[0] * q(2));
    CHECK(central_idempotent_p(gd.frobenius) == central_idempotent_p(gr.frobenius));
  }

  TEST_CASE("groupoid p closed form") {
    for (const auto& G : {FiniteGroupoid::pair(2), FiniteGroupoid::pair(3), FiniteGroupoid::transitive(2, GroupTable::cyclic(2)),
                          FiniteGroupoid::transitive(2, GroupTable::symmetric(3)),
                          FiniteGroupoid::transitive(3, GroupTable::cyclic(2))}) {
      const auto c = groupoid_algebra(Q(), G);
      CHECK(central_idempotent_p(c.frobenius) == groupoid_p_closed_form(Q(), G));
    }
  }

  TEST_CASE("surface closed form grid") {
    const std::vector<std::vector<std::size_t>> sizes{{1}, {2}, {3}, {1, 2}, {2, 3}};
    const std::vector<std::vector<Scalar>> windows{{q(1)}, {q(2)}, {q(2)}, {q(1), q(2)}, {q(2), q(1)}};
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      const auto c = matrix_direct_sum(Q(), sizes[s], windows[s]);
      const auto K = knowledgeable_from_frobenius(c.frobenius);
      for (std::size_t g = 0; g <= 2; ++g)
        for (std::size_t w = 0; w <= 2; ++w) {
          CAPTURE(s);
          CAPTURE(g);
          CAPTURE(w);
          const Scalar closed = surface_invariant_closed_form(Q(), sizes[s], windows[s], g, w);
          CHECK(genus_window_scalar(K, g, w) == closed);
          if (c.frobenius.dim() <= 5 || g + w <= 2) CHECK(evaluate_closed(c.frobenius, closed_surface(g, w)) == closed);
        }
    }
  }

  TEST_CASE("spot values") {
    CHECK(surface_invariant_closed_form(Q(), {2}, {q(1)}, 0, 0) == q(4));
    CHECK(surface_invariant_closed_form(Q(), {2, 3}, {q(1), q(1)}, 1, 0) == q(2));
    CHECK(surface_invariant_closed_form(Q(), {2, 3}, {q(1), q(1)}, 2, 0) == q(13, 36));
    CHECK(surface_invariant_closed_form(Q(), {1}, {q(2)}, 0, 3) == q(2));
    CHECK(surface_invariant_closed_form(Q(), {1}, {q(2)}, 2, 0) == q(4));
  }

  TEST_CASE("catalog entries") {
    const auto all = standard_catalog();
    CHECK(all.size() == 14);
    for (const auto& c : all) {
      CAPTURE(c.name);
      CHECK(c.frobenius.has_invertible_window());
      CHECK(is_strongly_separable(c.algebra));
    }
    CHECK(catalog_algebra("matsum", {"1,2", "3,1/2"}, Q()).frobenius.counit() ==
          matrix_direct_sum(Q(), {1, 2}, {q(3), q(1, 2)}).frobenius.counit());
    CHECK(catalog_algebra("group_symmetric", {"3", "canonical"}, Q()).frobenius.window() ==
          catalog_algebra("group_symmetric", {"3", "canonical"}, Q()).algebra.unit());
    CHECK(catalog_algebra("groupoid_pair", {"2"}, Q()).algebra.dim() == 4);
    CHECK(error_kind([] { catalog_algebra("quaternions", {}, Q()); }) == "UnknownCatalogEntry");
    CHECK(error_kind([] { catalog_algebra("group_cyclic", {"x"}, Q()); }) == "BadParams");
  }

  TEST_CASE("coloured strips sum to the uncoloured strip") {
    const auto pg = groupoid_algebra(Q(), FiniteGroupoid::pair(2));
    REQUIRE(pg.blocks.has_value());
    const auto s = strip(1, 1);
    Matrix total(Q(), 4, 4);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        const auto c = with_arc_colour(with_arc_colour(s, 0, pg.blocks->objects[x]), 1, pg.blocks->objects[y]);
        const auto Z = colored_evaluate(*pg.blocks, pg.frobenius, c);
        const auto& label = Z.domain[0].label;
        REQUIRE(label.size() == 2);
        const auto i = pg.blocks->object_index(label.substr(0, 1)), j = pg.blocks->object_index(label.substr(1, 1));
        CHECK(Z.domain[0].kind == FactorKind::Block);
        CHECK(Z.matrix == Matrix::identity(Q(), 1));
        const Matrix inc = block_inclusion(*pg.blocks, Q(), 4, i, j);
        total = total + inc * Z.matrix * inc.transpose();
      }
    CHECK(total == state_sum(pg.frobenius, s).matrix);
    CHECK(error_kind([&] { colored_evaluate(*pg.blocks, pg.frobenius, s); }) == "MissingColour");
    CHECK(error_kind([&] { pg.blocks->object_index("w"); }) == "MissingColour");
  }

  TEST_CASE("generators are the knowledgeable tuple transported along a^-1") {
    for (const auto& c : standard_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      const auto K = knowledgeable_from_frobenius(F);
      const Matrix psi = psi_on_C(K), psi_inv = invert_matrix(psi);
      CHECK(state_sum(F, closed_unit()).matrix == psi * K.eta_C);
      CHECK(state_sum(F, closed_counit()).matrix == K.epsilon_C * psi_inv);
      CHECK(state_sum(F, closed_mult()).matrix == psi * K.mu_C * kron(psi_inv, psi_inv));
      CHECK(state_sum(F, closed_comult()).matrix == kron(psi, psi) * K.delta_C * psi_inv);
      CHECK(state_sum(F, zipper()).matrix == K.iota * psi_inv);
      CHECK(state_sum(F, cozipper()).matrix == psi * K.iota_star);
      const bool unit_on_C = psi == Matrix::identity(F.field(), K.dim_C());
      CHECK((state_sum(F, closed_unit()).matrix == K.eta_C) == unit_on_C);
      CHECK((state_sum(F, zipper()).matrix == K.iota) == unit_on_C);
    }
  }

  TEST_CASE("tuple assembled from generators is knowledgeable") {
    for (const auto& c : standard_catalog()) {
      CAPTURE(c.name);
      const auto& F = c.frobenius;
      KnowledgeableFrobenius Z;
      Z.A = F;
      Z.mu_C = state_sum(F, closed_mult()).matrix;
      Z.eta_C = state_sum(F, closed_unit()).matrix;
      Z.delta_C = state_sum(F, closed_comult()).matrix;
      Z.epsilon_C = state_sum(F, closed_counit()).matrix;
      Z.iota = state_sum(F, zipper()).matrix;
      Z.iota_star = state_sum(F, cozipper()).matrix;
      attach_centre_structure(Z);
      const auto r = check_knowledgeable(Z);
      for (const auto& it : r.items) {
        CAPTURE(it.name);
        CHECK(it.ok);
      }
    }
  }
}
