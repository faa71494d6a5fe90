#include <random>
#include <set>

#include "doctest.h"
#include "rrbx/error.hpp"
#include "rrbx/exactlin.hpp"

using namespace rrbx;

namespace {
const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("F_5") == Field::prime(5));
  CHECK(Field::parse("GF(7)").characteristic() == 7);
  CHECK_THROWS_AS(Field::parse("F_4"), Error);
  CHECK(Field::prime(3).name() == "F_3");
}

TEST_CASE("scalar arithmetic") {
  const Scalar half = Scalar::parse(Q, "1/2");
  CHECK((half + half).is_one());
  CHECK((Scalar(Q, 2) / Scalar(Q, -6)).str() == "-1/3");
  const Field f5 = Field::prime(5);
  CHECK(Scalar(f5, -1).str() == "4");
  CHECK((Scalar(f5, 2) * Scalar(f5, 3)).is_one());
  CHECK(Scalar(f5, 3).inverse() == Scalar(f5, 2));
  CHECK_THROWS_AS((void)Scalar(Q, 0).inverse(), Error);
  CHECK_THROWS_AS((void)(Scalar(Q, 1) + Scalar(F2, 1)), Error);
}

TEST_CASE("rref") {
  const auto id = rref(Matrix::identity(Q, 2));
  CHECK(id.reduced.is_identity());
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  const auto q = rref(Matrix::from_ints(Q, {{2, 4}, {1, 2}}));
  CHECK(q.reduced == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  CHECK(q.rank == 1);

  const auto f = rref(Matrix::from_ints(F2, {{1, 1}, {1, 1}}));
  CHECK(f.reduced == Matrix::from_ints(F2, {{1, 1}, {0, 0}}));
  CHECK(f.rank == 1);
}

TEST_CASE("solve") {
  auto zero = solve(Matrix(Q, 2, 2), Vector(Q, 2));
  REQUIRE(zero);
  CHECK(zero->particular.is_zero());
  CHECK(zero->kernel.dim() == 2);

  auto id = solve(Matrix::identity(Q, 2), Vector::from_ints(Q, {3, 5}));
  REQUIRE(id);
  CHECK(id->particular == Vector::from_ints(Q, {3, 5}));
  CHECK(id->kernel.dim() == 0);

  auto f = solve(Matrix::from_ints(F2, {{1, 1}}), Vector::from_ints(F2, {1}));
  REQUIRE(f);
  CHECK(f->particular == Vector::from_ints(F2, {1, 0}));
  CHECK(f->kernel == Subspace::span(F2, 2, {Vector::from_ints(F2, {1, 1})}));

  CHECK_FALSE(solve(Matrix(Q, 1, 1), Vector::from_ints(Q, {1})));
}

TEST_CASE("coset membership and quotients") {
  const Subspace axis = Subspace::span(Q, 2, {Vector::from_ints(Q, {0, 1})});
  CHECK(coset_member(Vector(Q, 2), axis));
  CHECK_FALSE(coset_member(Vector::from_ints(Q, {1, 0}), axis));
  CHECK(coset_member(Vector::from_ints(Q, {1, 1}), Subspace::full(Q, 2)));

  CHECK(quotient_dim(Subspace::full(Q, 2), Subspace(Q, 2)) == 2);
  CHECK(quotient_dim(axis, axis) == 0);
  CHECK(quotient_dim(Subspace::full(F2, 2), Subspace::span(F2, 2, {Vector::from_ints(F2, {1, 1})})) == 1);
  CHECK_THROWS_AS((void)quotient_dim(axis, Subspace::full(Q, 2)), Error);
}

TEST_CASE("inverse and left inverse") {
  const Matrix m = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})));

  const Matrix inj = Matrix::from_ints(Q, {{1, 0}, {2, 1}, {0, 3}});
  CHECK((left_inverse(inj) * inj).is_identity());
}

TEST_CASE("kernel and image") {
  const Matrix m = Matrix::from_ints(Q, {{1, 1, 0}, {0, 0, 1}});
  const Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK((m * k.basis()[0]).is_zero());
  CHECK(image(m).dim() == 2);
}

TEST_CASE("linearize recovers an affine map") {
  const Matrix m = Matrix::from_ints(Q, {{1, 2}, {0, -1}, {3, 3}});
  const Vector b = Vector::from_ints(Q, {1, 0, -2});
  const AffineMap a = linearize(Q, 2, [&](const Vector& x) { return m * x + b; });
  CHECK(a.linear == m);
  CHECK(a.offset == b);
}

TEST_CASE("finite enumeration") {
  std::vector<std::string> seen;
  for_each_vector(F2, 2, [&](const Vector& v) {
    seen.push_back(v.str());
    return true;
  });
  CHECK(seen.size() == 4);
  CHECK(seen.front() == Vector(F2, 2).str());
  CHECK(seen[1] == Vector::from_ints(F2, {0, 1}).str());
  CHECK(count_vectors(Field::prime(3), 4, 1000) == 81);
  CHECK(count_vectors(Field::prime(3), 10, 1000) == 1001);

  std::size_t n = 0;
  for_each_element(Subspace::span(F2, 3, {Vector::from_ints(F2, {1, 1, 0}), Vector::from_ints(F2, {0, 0, 1})}),
                   [&](const Vector&) { return ++n, true; });
  CHECK(n == 4);
}

TEST_CASE("bilinear maps evaluate by bilinearity") {
  BilinearMap b(Q, 2, 2, 1);
  b.at(0, 1) = Vector::from_ints(Q, {1});
  b.at(1, 0) = Vector::from_ints(Q, {-1});
  CHECK(b(Vector::from_ints(Q, {2, 1}), Vector::from_ints(Q, {1, 3})) == Vector::from_ints(Q, {5}));
}

TEST_CASE("echelon properties on random matrices") {
  std::mt19937_64 rng(19);
  for (Field f : {Q, F2, Field::prime(7)}) {
    for (int k = 0; k < 60; ++k) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, static_cast<long long>(rng() % 5) - 2);
      const Matrix red = rref(m).reduced;
      CHECK(rref(red).reduced == red);
      CHECK(rank(m) + kernel(m).dim() == c);
      Vector b(f, r);
      for (std::size_t i = 0; i < r; ++i) b[i] = Scalar(f, static_cast<long long>(rng() % 3));
      if (auto s = solve(m, b)) {
        CHECK(m * s->particular == b);
        for (const auto& w : s->kernel.basis()) CHECK((m * w).is_zero());
      }
    }
  }
}

TEST_CASE("coset membership agrees with span enumeration over F_2") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + rng() % 6, g = rng() % 4;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < g; ++i) {
      Vector v(F2, n);
      for (std::size_t j = 0; j < n; ++j) v[j] = Scalar(F2, static_cast<long long>(rng() % 2));
      gens.push_back(v);
    }
    const Subspace s = Subspace::span(F2, n, gens);
    std::set<std::string> members;
    for_each_vector(F2, g, [&](const Vector& coeffs) {
      Vector sum(F2, n);
      for (std::size_t i = 0; i < g; ++i) sum += coeffs[i] * gens[i];
      members.insert(sum.str());
      return true;
    });
    for_each_vector(F2, n, [&](const Vector& v) {
      CHECK(coset_member(v, s) == (members.count(v.str()) > 0));
      return true;
    });
  }
}

}  // TEST_SUITE
