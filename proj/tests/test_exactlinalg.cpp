#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/error.hpp"
#include "qgrass/matrix.hpp"
#include "qgrass/subspace.hpp"

using namespace qgrass;

TEST_CASE("prime field validation") {
  CHECK_THROWS_AS(Field::prime(4), InvalidArgument);
  CHECK_THROWS_AS(Field::prime(1), InvalidArgument);
  CHECK(Field::parse("p=7") == Field::prime(7));
  CHECK(Field::parse("5") == Field::prime(5));
  CHECK(Field::parse("rational").is_rational());
  CHECK_THROWS_AS(Field::parse("p=x"), InvalidArgument);
}

TEST_CASE("scalar arithmetic in F_7 and Q") {
  Field f = Field::prime(7);
  Scalar three = Scalar::from_int(f, 3);
  CHECK((three * three.inverse()) == Scalar::one(f));
  CHECK(Scalar::from_int(f, -1) == Scalar::from_int(f, 6));
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), InvalidArgument);
  Field q = Field::rational();
  Scalar half = Scalar::from_rational(q, mpq_class(1, 2));
  CHECK((half + half) == Scalar::one(q));
  CHECK(half.to_string() == "1/2");
}

TEST_CASE("rref, rank and kernel agree over random matrices") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::prime(2), Field::prime(5), Field::rational()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Matrix a = random_matrix(f, r, c, rng);
      RrefResult res = rref(a);
      Matrix k = kernel_basis(a);
      CHECK(res.rank + k.rows() == c);
      if (k.rows() > 0) CHECK((a * k.transpose()).is_zero());
      CHECK(rank(a.transpose()) == res.rank);
      // Row space is preserved.
      CHECK(rank(vstack(res.reduced.block(0, 0, res.rank, c), a)) == res.rank);
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(3);
  for (Field f : {Field::prime(3), Field::rational()}) {
    Matrix g = random_invertible(f, 4, rng);
    CHECK(g * inverse(g) == Matrix::identity(f, 4));
    Matrix b = random_matrix(f, 4, 1, rng);
    auto x = solve(g, b);
    REQUIRE(x.has_value());
    CHECK(g * *x == b);
  }
  Field f = Field::prime(5);
  Matrix singular = Matrix::from_ints(f, {{1, 2}, {2, 4}});
  CHECK_FALSE(is_invertible(singular));
  CHECK_FALSE(solve(singular, Matrix::column(f, {1, 0})).has_value());
  CHECK_THROWS_AS(Matrix::identity(f, 2) * Matrix::identity(f, 3), DimensionMismatch);
}

TEST_CASE("kron follows the (row block, column block) convention") {
  Field f = Field::prime(7);
  Matrix a = Matrix::from_ints(f, {{1, 2}, {3, 4}});
  Matrix b = Matrix::from_ints(f, {{0, 1}, {1, 0}});
  Matrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.block(0, 2, 2, 2) == b.scaled(Scalar::from_int(f, 2)));
  CHECK(k.block(2, 0, 2, 2) == b.scaled(Scalar::from_int(f, 3)));
}

TEST_CASE("gaussian binomial matches the product formula and a tuple count") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  for (std::uint64_t q : {2, 3, 5}) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        CHECK(gaussian_binomial(n, k, q) == oracle::gaussian_product(n, k, q));
      }
    }
  }
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(enumerate_subspaces(n, k, Field::prime(p)).size() ==
              oracle::count_subspaces_by_tuples(Field::prime(p), n, k));
      }
    }
  }
}

TEST_CASE("subspace enumeration yields distinct canonical bases") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Field f = Field::prime(p);
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        auto subs = enumerate_subspaces(n, k, f);
        CHECK(subs.size() == oracle::gaussian_product(n, k, p));
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& s : subs) {
          CHECK(span_of(s) == s);
          CHECK(s.rows() == k);
          seen.insert(s.residues());
        }
        CHECK(seen.size() == subs.size());
      }
    }
  }
  CHECK_THROWS_AS(enumerate_subspaces(8, 4, Field::prime(5), 1000), BudgetExceeded);
}

TEST_CASE("sum, intersection, image and preimage") {
  Field f = Field::prime(3);
  Matrix a = span_of(Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 0}}));
  Matrix b = span_of(Matrix::from_ints(f, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(subspace_sum(a, b).rows() == 3);
  Matrix meet = subspace_intersection(a, b);
  CHECK(meet == Matrix::from_ints(f, {{0, 1, 0}}));
  Matrix proj = Matrix::from_ints(f, {{1, 0, 0}, {0, 0, 0}});
  CHECK(image_of(proj, a) == Matrix::from_ints(f, {{1, 0}}));
  Matrix pre = preimage_of(proj, zero_subspace(f, 2));
  CHECK(pre == Matrix::from_ints(f, {{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("quotient chart round trip") {
  Field f = Field::prime(5);
  Matrix l = span_of(Matrix::from_ints(f, {{1, 2, 0, 1}}));
  QuotientChart chart(l);
  CHECK(chart.dim() == 3);
  Matrix coords = Matrix::from_ints(f, {{1, 4, 2}});
  CHECK(chart.project_rows(chart.lift_rows(coords)) == coords);
  CHECK(chart.project_rows(l).is_zero());
}
