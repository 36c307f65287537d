#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "octqft/catalog.hpp"
#include "octqft/errors.hpp"
#include "octqft/statesum.hpp"

using namespace octqft;

namespace {

const FieldSpec QQ = FieldSpec::rational();

Scalar q(long a, long b = 1) { return Scalar(QQ, a, b); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << what;
  }
};

Algebra matrix_algebra(FieldSpec f, std::size_t n) {
  std::vector<StructureConstant> mul;
  Element unit = zero_vector(f, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    unit[p * n + p] = Scalar::one(f);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < n; ++r) mul.push_back({p * n + a, a * n + r, p * n + r, Scalar::one(f)});
  }
  return make_algebra(f, n * n, mul, unit);
}

Algebra group_ring(FieldSpec f, const GroupTable& G) {
  std::vector<StructureConstant> mul;
  for (std::size_t a = 0; a < G.order; ++a)
    for (std::size_t b = 0; b < G.order; ++b) mul.push_back({a, b, G.mul[a][b], Scalar::one(f)});
  return make_algebra(f, G.order, mul, unit_vector(f, G.order, G.identity));
}

Outcome criterion1() {
  Outcome o;
  struct Case {
    std::string name;
    Algebra algebra;
    bool expected;
  };
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
  const std::vector<Case> cases{
      {"Q[Z/2]", group_ring(QQ, GroupTable::cyclic(2)), true},
      {"Q[S_3]", group_ring(QQ, GroupTable::symmetric(3)), true},
      {"M_2(Q)", matrix_algebra(QQ, 2), true},
      {"M_3(F_2)", matrix_algebra(f2, 3), true},
      {"F_2[Z/2]", group_ring(f2, GroupTable::cyclic(2)), false},
      {"M_2(F_2)", matrix_algebra(f2, 2), false},
      {"M_3(F_3)", matrix_algebra(f3, 3), false},
  };
  for (const auto& c : cases)
    if (is_strongly_separable(c.algebra) != c.expected) o.fail(c.name + " gives the wrong answer");
  if (o.pass) o.detail << cases.size() << " algebras classified";
  return o;
}

Outcome criterion2(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  for (const auto& c : cat) {
    const auto r = check_idempotent_properties(c.frobenius, central_idempotent_p(c.frobenius));
    for (const auto& it : r.items)
      if (!it.ok) o.fail(c.name + ": " + it.name);
  }
  if (o.pass) o.detail << cat.size() << " structures x 8 properties";
  return o;
}

Outcome criterion3(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  for (const auto& c : cat)
    if (!bubble_holds(c.frobenius)) o.fail(c.name);
  if (o.pass) o.detail << cat.size() << " structures";
  return o;
}

Outcome criterion4(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& c : cat) {
    const auto& F = c.frobenius;
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t l = 1; l <= 3; ++l) {
        const std::string at = c.name + " (" + std::to_string(k) + "," + std::to_string(l) + ")";
        if (state_sum_raw(F, strip(k, l)).matrix != P_map(F, k, l).matrix) o.fail("strip " + at);
        if (state_sum_raw(F, annulus(k, l)).matrix != Q_map(F, k, l).matrix) o.fail("annulus " + at);
        checks += 2;
        for (std::size_t m = 1; m <= 3; ++m) {
          if (compose(P_map(F, k, l), P_map(F, l, m)).matrix != P_map(F, k, m).matrix) o.fail("P law " + at);
          if (compose(Q_map(F, k, l), Q_map(F, l, m)).matrix != Q_map(F, k, m).matrix) o.fail("Q law " + at);
          checks += 2;
        }
      }
  }
  if (o.pass) o.detail << checks << " identities";
  return o;
}

Outcome criterion5(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  std::vector<std::pair<std::string, OpenClosedComplex>> complexes;
  for (const auto& name : generator_names()) complexes.emplace_back(name, builtin(name, {}));
  complexes.emplace_back("closed_surface(1,0)", closed_surface(1, 0));
  complexes.emplace_back("closed_surface(2,1)", closed_surface(2, 1));
  std::vector<const CatalogAlgebra*> algebras;
  for (const auto& c : cat)
    if (c.frobenius.dim() <= 4 && algebras.size() < 4) algebras.push_back(&c);
  std::size_t trials = 0, moved = 0;
  for (const auto* c : algebras)
    for (const auto& [name, cx] : complexes) {
      const auto ref = state_sum_raw(c->frobenius, cx);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto moved_cx = random_moves(cx, seed, 30);
        if (!(moved_cx == cx)) ++moved;
        if (!equal(state_sum_raw(c->frobenius, moved_cx), ref)) o.fail(c->name + " " + name + " seed " + std::to_string(seed));
        ++trials;
      }
    }
  if (moved == 0) o.fail("no move was applied");
  if (o.pass) o.detail << algebras.size() << " algebras x " << complexes.size() << " complexes x 20 trials of 30 moves (" << trials << " trials)";
  return o;
}

Outcome criterion6(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  std::size_t checks = 0;
  std::vector<std::string> names = generator_names();
  for (const auto& c : cat) {
    if (c.frobenius.dim() > 6) continue;
    const auto& F = c.frobenius;
    for (const auto& name : names) {
      const auto base = builtin(name, {});
      const std::size_t comps = base.black_in.size() + base.black_out.size();
      if (comps == 0) continue;
      const auto ref = state_sum(F, base);
      std::size_t combos = 1;
      for (std::size_t i = 0; i < comps; ++i) combos *= 3;
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<std::size_t> in, out;
        std::size_t x = code;
        for (std::size_t i = 0; i < comps; ++i, x /= 3) (i < base.black_in.size() ? in : out).push_back(1 + x % 3);
        const auto cx = with_boundary_counts(base, in, out);
        if (!equal(state_sum(F, cx), ref)) o.fail(c.name + " " + name + " counts " + std::to_string(code));
        ++checks;
        if (code + 1 != combos) continue;
        for (bool is_in : {true, false}) {
          const auto& list = is_in ? cx.black_in : cx.black_out;
          for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].kind != ComponentKind::Circle) continue;
            for (std::size_t s = 1; s < list[i].edges.size(); ++s) {
              if (!equal(state_sum(F, rotate_circle(cx, is_in, i, s)), ref)) o.fail(c.name + " " + name + " rotation");
              ++checks;
            }
          }
        }
      }
    }
  }
  if (o.pass) o.detail << checks << " retriangulated boundaries";
  return o;
}

Outcome criterion7(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  std::size_t exact = 0;
  for (const auto& c : cat) {
    const auto& F = c.frobenius;
    const auto K = knowledgeable_from_frobenius(F);
    KnowledgeableFrobenius Z;
    Z.A = F;
    Z.mu_C = state_sum(F, closed_mult()).matrix;
    Z.eta_C = state_sum(F, closed_unit()).matrix;
    Z.delta_C = state_sum(F, closed_comult()).matrix;
    Z.epsilon_C = state_sum(F, closed_counit()).matrix;
    Z.iota = state_sum(F, zipper()).matrix;
    Z.iota_star = state_sum(F, cozipper()).matrix;
    std::vector<std::string> wrong;
    if (state_sum(F, open_mult()).matrix != F.multiplication_matrix()) wrong.push_back("open_mult");
    if (state_sum(F, open_comult()).matrix != F.comultiplication_matrix()) wrong.push_back("open_comult");
    if (state_sum(F, open_unit()).matrix != F.unit_matrix()) wrong.push_back("open_unit");
    if (state_sum(F, open_counit()).matrix != F.counit_matrix()) wrong.push_back("open_counit");
    if (Z.mu_C != K.mu_C) wrong.push_back("closed_mult");
    if (Z.delta_C != K.delta_C) wrong.push_back("closed_comult");
    if (Z.eta_C != K.eta_C) wrong.push_back("closed_unit");
    if (Z.epsilon_C != K.epsilon_C) wrong.push_back("closed_counit");
    if (Z.iota != K.iota) wrong.push_back("zipper");
    if (Z.iota_star != K.iota_star) wrong.push_back("cozipper");
    const auto cyl = state_sum(F, builtin("closed_cylinder", {}));
    if (cyl.matrix != Matrix::identity(F.field(), K.dim_C())) wrong.push_back("closed_cylinder");
    attach_centre_structure(Z);
    const auto r = check_knowledgeable(Z);
    for (const auto& it : r.items)
      if (!it.ok) wrong.push_back("check " + it.name);
    if (wrong.empty()) {
      ++exact;
      continue;
    }
    std::string list;
    for (const auto& w : wrong) list += (list.empty() ? "" : ",") + w;
    o.fail(c.name + " differs on " + list);
  }
  if (o.pass) o.detail << cat.size() << " structures";
  else o.detail << " (" << exact << " of " << cat.size() << " structures match entrywise)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t checks = 0;
  const std::vector<std::vector<std::size_t>> size_sets{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (const auto& sizes : size_sets) {
    const std::size_t blocks = sizes.size();
    std::size_t combos = 1u << blocks;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<Scalar> windows;
      for (std::size_t j = 0; j < blocks; ++j) windows.push_back(q((code >> j) & 1 ? 2 : 1));
      const auto c = matrix_direct_sum(QQ, sizes, windows);
      const auto K = knowledgeable_from_frobenius(c.frobenius);
      for (std::size_t g = 0; g <= 2; ++g)
        for (std::size_t w = 0; w <= 2; ++w) {
          const Scalar closed = surface_invariant_closed_form(QQ, sizes, windows, g, w);
          const Scalar z = evaluate_closed(c.frobenius, closed_surface(g, w));
          const Scalar s = genus_window_scalar(K, g, w);
          if (z != closed || s != closed)
            o.fail(c.name + " g=" + std::to_string(g) + " w=" + std::to_string(w) + ": " + z.to_string() + ", " +
                   closed.to_string() + ", " + s.to_string());
          ++checks;
        }
    }
  }
  const auto m2 = matrix_direct_sum(QQ, {2}, {q(1)});
  const auto m23 = matrix_direct_sum(QQ, {2, 3}, {q(1), q(1)});
  const auto z2 = group_algebra(QQ, GroupTable::cyclic(2));
  if (evaluate_closed(m2.frobenius, closed_surface(0, 0)) != q(4)) o.fail("M_2 sphere");
  if (evaluate_closed(m23.frobenius, closed_surface(1, 0)) != q(2)) o.fail("M_2+M_3 torus");
  if (evaluate_closed(z2.frobenius, closed_surface(2, 0)) != q(8)) o.fail("Q[Z/2] genus 2");
  if (evaluate_closed(m23.frobenius, closed_surface(2, 0)) != q(13, 36)) o.fail("M_2+M_3 genus 2");
  if (o.pass) o.detail << checks << " grid points and 4 spot values";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto K = not_centre_example();
  const auto r = check_knowledgeable(K);
  for (const auto& it : r.items)
    if (!it.ok) o.fail(it.name + " " + it.witness);
  const std::size_t p_rank = rank(central_idempotent_p(K.A));
  if (K.dim_C() != 2) o.fail("dim C is " + std::to_string(K.dim_C()));
  if (p_rank != 1) o.fail("dim p(A) is " + std::to_string(p_rank));
  if (o.pass) o.detail << "dim C = 2, dim p(A) = 1, all checks hold";
  return o;
}

Outcome criterion10(const std::vector<CatalogAlgebra>& cat) {
  Outcome o;
  const std::vector<std::pair<OpenClosedComplex, OpenClosedComplex>> pairs{
      {open_mult(), open_comult()}, {open_comult(), open_mult()}, {zipper(), cozipper()},
      {closed_comult(), closed_mult()}, {strip(3, 2), with_boundary_counts(open_comult(), {3}, {1, 1})},
      {annulus(2, 1), with_boundary_counts(closed_counit(), {2}, {})},
  };
  std::size_t checks = 0;
  for (const auto& c : cat) {
    if (c.frobenius.dim() > 4) continue;
    const auto& F = c.frobenius;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [top, bottom] = pairs[i];
      if (!equal(state_sum_raw(F, glue(top, bottom)), compose(state_sum_raw(F, bottom), state_sum_raw(F, top))))
        o.fail(c.name + " pair " + std::to_string(i));
      ++checks;
    }
    const auto u = disjoint_union(open_mult(), zipper());
    if (!equal(state_sum_raw(F, u), tensor(state_sum_raw(F, open_mult()), state_sum_raw(F, zipper()))))
      o.fail(c.name + " disjoint union");
    ++checks;
  }
  if (o.pass) o.detail << checks << " gluings and unions";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto pg = groupoid_algebra(QQ, FiniteGroupoid::pair(2));
  const auto s = strip(1, 1);
  const std::size_t n = pg.frobenius.dim();
  Matrix total(QQ, n, n);
  for (const auto& x : pg.blocks->objects)
    for (const auto& y : pg.blocks->objects) {
      const auto c = with_arc_colour(with_arc_colour(s, 0, x), 1, y);
      const auto Z = colored_evaluate(*pg.blocks, pg.frobenius, c);
      const auto& label = Z.domain[0].label;
      const auto i = pg.blocks->object_index(label.substr(0, 1)), j = pg.blocks->object_index(label.substr(1, 1));
      const Matrix inc = block_inclusion(*pg.blocks, QQ, n, i, j);
      total = total + inc * Z.matrix * inc.transpose();
    }
  if (total != state_sum(pg.frobenius, s).matrix) o.fail("coloured sum differs from the uncoloured strip");
  if (o.pass) o.detail << "4 colour pairs";
  return o;
}

}  // namespace

int main() {
  const auto cat = standard_catalog();
  const std::vector<std::function<Outcome()>> criteria{
      criterion1,
      [&] { return criterion2(cat); },
      [&] { return criterion3(cat); },
      [&] { return criterion4(cat); },
      [&] { return criterion5(cat); },
      [&] { return criterion6(cat); },
      [&] { return criterion7(cat); },
      criterion8,
      criterion9,
      [&] { return criterion10(cat); },
      criterion11,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %zu: %s (%.2fs) %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
