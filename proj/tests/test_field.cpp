#include <doctest.h>

#include <random>

#include "octqft/errors.hpp"
#include "octqft/linalg.hpp"
#include "support.hpp"

using namespace octqft;
using namespace octqft::testing;

TEST_SUITE("field") {
  TEST_CASE("rationals stay in lowest terms") {
    const Scalar a = q(2, 4), b = q(-3, -6);
    CHECK(a == b);
    CHECK(a.to_string() == "1/2");
    CHECK(q(3, -6).to_string() == "-1/2");
    CHECK((q(1, 3) + q(2, 3)).is_one());
    CHECK((q(1, 2) * q(2)).is_one());
    CHECK(q(2, 3).inverse() == q(3, 2));
    CHECK(q(2).pow(-2) == q(1, 4));
  }

  TEST_CASE("prime field residues") {
    const FieldSpec f = FieldSpec::prime(7);
    const Scalar x(f, 3);
    CHECK((x * x.inverse()).is_one());
    CHECK(Scalar(f, -1).to_string() == "6");
    CHECK(Scalar(f, 10) == x);
    CHECK(Scalar::parse(f, "15") == Scalar(f, 1));
    CHECK(Scalar::parse(f, "1/2") == Scalar(f, 4));
    CHECK(x.pow(6).is_one());
  }

  TEST_CASE("parsing and rejection") {
    CHECK(Scalar::parse(Q(), "-1/3") == q(-1, 3));
    CHECK_THROWS_AS(Scalar::parse(Q(), "-7/21"), Error);
    CHECK_THROWS_AS(FieldSpec::prime(9), Error);
    CHECK(FieldSpec::parse("F_5") == FieldSpec::prime(5));
    CHECK(FieldSpec::parse("rational").is_rational());
    CHECK_THROWS_AS(q(0).inverse(), Error);
    CHECK_THROWS_AS(Scalar(FieldSpec::prime(5), 1) + q(1), Error);
  }
}

TEST_SUITE("linalg") {
  Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, d(rng), 1 + (d(rng) + 3) % 3);
    return m;
  }

  TEST_CASE("rref, rank and kernel") {
    const Matrix m = Matrix::from_ints(Q(), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const auto e = rref(m);
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(is_zero_vector(m.apply(ker[0])));
  }

  TEST_CASE("inverse and solve") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
      const Matrix m = random_matrix(Q(), 4, 4, rng);
      if (rank(m) < 4) continue;
      const Matrix inv = invert_matrix(m);
      CHECK(inv * m == Matrix::identity(Q(), 4));
      CHECK(m * inv == Matrix::identity(Q(), 4));
    }
    CHECK_THROWS_AS(invert_matrix(Matrix::from_ints(Q(), {{1, 2}, {2, 4}})), Error);
    const Matrix m = Matrix::from_ints(Q(), {{1, 1}, {0, 0}});
    CHECK_FALSE(solve(m, {q(1), q(1)}).has_value());
    const auto x = solve(m, {q(2), q(0)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vector{q(2), q(0)});
  }

  TEST_CASE("left inverse") {
    const Matrix m = Matrix::from_ints(Q(), {{1, 0}, {2, 1}, {0, 3}});
    CHECK(left_inverse(m) * m == Matrix::identity(Q(), 2));
  }

  TEST_CASE("kron orders the left factor first") {
    const Matrix a = Matrix::from_ints(Q(), {{1, 2}}), b = Matrix::from_ints(Q(), {{1}, {3}});
    CHECK(kron(a, b) == Matrix::from_ints(Q(), {{1, 2}, {3, 6}}));
  }

  TEST_CASE("parallel product equals the serial product") {
    std::mt19937_64 rng(11);
    for (FieldSpec f : {Q(), FieldSpec::prime(101)}) {
      const Matrix a = random_matrix(f, 37, 23, rng), b = random_matrix(f, 23, 29, rng);
      CHECK(multiply_parallel(a, b) == a * b);
    }
  }
}
