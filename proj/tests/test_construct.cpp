#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/construct.hpp"
#include "qgrass/error.hpp"

using namespace qgrass;

namespace {

QuiverPtr kron(std::size_t n) { return std::make_shared<const Quiver>(make_kronecker(n)); }

Representation case2_x(std::size_t n, const Field& f) { return case2_X(default_lambdas(n, f), f); }

}  // namespace

TEST_CASE("case 2 family: the n = 2 instance over F_5") {
  Field f = Field::prime(5);
  Representation x = case2_x(2, f);
  CHECK(x.matrix("a1") == Matrix::identity(f, 2));
  CHECK(x.matrix("a2") == Matrix::from_ints(f, {{1, 0}, {0, 2}}));
  CHECK(x.matrix("a3") == Matrix::from_ints(f, {{0, 1}, {1, 0}}));
  Representation y = case2_Y(f);
  CHECK(y.matrix("a3").is_zero());
  CHECK(is_brick(x));
  CHECK(are_orthogonal_bricks(x, y));
}

TEST_CASE("case 2 family: Ext^1(Y,X) has dimension n") {
  for (std::uint32_t p : {5u, 7u}) {
    Field f = Field::prime(p);
    for (std::size_t n = 2; n < std::min<std::size_t>(p, 5); ++n) {
      Representation x = case2_x(n, f);
      CHECK(is_brick(x));
      CHECK(ext1_dim(case2_Y(f), x) == n);
    }
  }
  Field q = Field::rational();
  CHECK(ext1_dim(case2_Y(q), case2_x(4, q)) == 4);
}

TEST_CASE("case 2 family: lambda validation") {
  Field f = Field::prime(5);
  auto s = [&](long long v) { return Scalar::from_int(f, v); };
  CHECK_THROWS_AS(case2_X({s(1), s(1)}, f), DistinctnessViolated);
  CHECK_THROWS_AS(case2_X({s(0), s(1)}, f), DistinctnessViolated);
  CHECK_THROWS_AS(case2_X({s(1)}, f), InvalidArgument);
  CHECK_THROWS_AS(default_lambdas(3, Field::prime(3)), DistinctnessViolated);
  CHECK_THROWS_AS(case2_X({s(1), s(2), s(3), s(4), s(6)}, f), DistinctnessViolated);
}

TEST_CASE("remark module X'") {
  Field f = Field::prime(3);
  Representation xp = remark_Xprime(Scalar::from_int(f, 1), Scalar::from_int(f, 2), f);
  Representation y = case2_Y(f);
  CHECK(ext1_dim(y, xp) == 2);
  CHECK(are_orthogonal_bricks(xp, y));
  auto pts = oracle::flat_grassmannian(xp, {1, 1});
  REQUIRE(pts.size() == 1);
  Matrix e2 = Matrix::from_ints(f, {{0, 1}});
  CHECK(pts[0].subspaces[0] == e2);
  CHECK(pts[0].subspaces[1] == e2);
  CHECK_THROWS_AS(remark_Xprime(Scalar::from_int(f, 1), Scalar::from_int(f, 1), f),
                  DistinctnessViolated);
}

TEST_CASE("kronecker preprojectives are exceptional") {
  Field f2 = Field::prime(2);
  for (std::size_t m : {0, 1, 2, 3}) {
    Representation x = kronecker_preprojective(m, Field::prime(5));
    CHECK(x.dims() == DimVector{m, m + 1});
    CHECK(is_exceptional(x));
  }
  Representation x1 = kronecker_preprojective(1, f2);
  CHECK(oracle::hom_dim_by_counting(x1, x1) == 1);
  CHECK(is_isomorphic(kronecker_preprojective(1, f2), projective(kron(2), f2, "1")));
}

TEST_CASE("case 1 pair") {
  Field f = Field::prime(3);
  Case1Pair pr = case1_default_pair(f);
  CHECK(pr.n == 2);
  CHECK(pr.exceptional);
  CHECK(pr.x.dims() == DimVector{1, 2, 0});
  CHECK(pr.y.dims() == DimVector{0, 0, 1});

  auto q_head1 = std::make_shared<const Quiver>(
      Quiver({"1", "2", "w"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"c", "w", "1"}}));
  CHECK(case1_pair(q_head1, "w", kronecker_preprojective(1, f)).n == 1);

  // w as a sink: the dual construction, with the roles of X and Y swapped.
  auto q_sink = std::make_shared<const Quiver>(
      Quiver({"1", "2", "w"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"c", "2", "w"}}));
  Case1Pair sink = case1_pair(q_sink, "w", kronecker_preprojective(1, f));
  CHECK(sink.n == 2);
  CHECK(sink.x.dims() == DimVector{0, 0, 1});
  CHECK(sink.y.dims() == DimVector{1, 2, 0});
  CHECK(ext1_dim(sink.y, sink.x) == 2);

  CHECK_THROWS_AS(case1_pair(case1_quiver(), "2", kronecker_preprojective(1, f)), InvalidArgument);
}

TEST_CASE("eta context errors") {
  Field f = Field::prime(3);
  auto q = kron(2);
  CHECK_THROWS_AS(make_eta_context(simple(q, f, "1"), simple(q, f, "1")), NotOrthogonalBricks);
  // S(2), S(1) on K(2): orthogonal bricks but Ext^1(S(1), S(2)) sits the other way.
  CHECK_THROWS_AS(make_eta_context(simple(q, f, "1"), simple(q, f, "2")), ZeroExt);
  CHECK(make_eta_context(simple(q, f, "2"), simple(q, f, "1")).n == 2);
}

TEST_CASE("eta on simples, bristles and sums") {
  Field f = Field::prime(5);
  EtaContext ctx = make_eta_context(case2_x(2, f), case2_Y(f));
  auto k = ctx.kronecker;
  EtaWitness sink = build_eta(ctx, simple(k, f, "2"));
  CHECK(is_isomorphic(*sink.m, *ctx.x));
  EtaWitness source = build_eta(ctx, simple(k, f, "1"));
  CHECK(is_isomorphic(*source.m, *ctx.y));

  Representation bristle(k, f, {1, 1}, {Matrix::from_ints(f, {{1}}), Matrix(f, 1, 1)});
  EtaWitness w = build_eta(ctx, bristle);
  CHECK(w.m->dims() == DimVector{3, 3});
  CHECK(witness_is_exact(w));
  CHECK(is_E_bristle(ctx, *w.m));
  CHECK_FALSE(is_E_bristle(ctx, direct_sum(*ctx.x, *ctx.y)));
  CHECK_FALSE(is_E_bristle(ctx, *sink.m));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 6; ++t) {
    Representation n1 = random_representation(k, f, {rng() % 2, 1 + rng() % 2}, rng);
    Representation n2 = random_representation(k, f, {1 + rng() % 2, rng() % 2}, rng);
    EtaWitness sum = build_eta(ctx, direct_sum(n1, n2));
    CHECK(witness_is_exact(sum));
    CHECK(is_isomorphic(*sum.m, direct_sum(*build_eta(ctx, n1).m, *build_eta(ctx, n2).m)));
  }
  CHECK_THROWS_AS(build_eta(ctx, simple(kron(3), f, "1")), DimensionMismatch);
}

TEST_CASE("reduced N gives M without a Y summand") {
  Field f = Field::prime(3);
  EtaContext ctx = make_eta_context(case2_x(2, f), case2_Y(f));
  std::mt19937_64 rng(19);
  int reduced_seen = 0;
  for (int t = 0; t < 30; ++t) {
    Representation n = random_representation(ctx.kronecker, f, {rng() % 3, rng() % 3}, rng);
    bool reduced = is_reduced_kronecker(n);
    reduced_seen += reduced;
    CHECK(reduced == !has_brick_summand(*build_eta(ctx, n).m, *ctx.y));
  }
  CHECK(reduced_seen > 0);
}

TEST_CASE("condition C refuses a non-reduced witness") {
  Field f = Field::prime(3);
  EtaContext ctx = make_eta_context(case2_x(2, f), case2_Y(f));
  EtaWitness w = build_eta(ctx, simple(ctx.kronecker, f, "1"));
  CHECK_THROWS_AS(check_condition_C(ctx, w), NotReduced);
  CHECK_THROWS_AS(check_bijection(ctx, simple(ctx.kronecker, f, "1")), NotReduced);
}

TEST_CASE("condition C on a case 2 module with bristles") {
  Field f = Field::prime(3);
  EtaContext ctx = make_eta_context(case2_x(2, f), case2_Y(f));
  Representation n(ctx.kronecker, f, {2, 2},
                   {Matrix::identity(f, 2), Matrix::from_ints(f, {{1, 0}, {0, 2}})});
  EtaWitness w = build_eta(ctx, n);
  ConditionCReport c = check_condition_C(ctx, w);
  CHECK(c.holds());
  CHECK(c.checked == 2);
  BijectionReport bij = check_bijection(ctx, n);
  CHECK(bij.lhs == 2);
  CHECK(bij.equal());
}

TEST_CASE("lemma checks on small instances") {
  Field f = Field::prime(3);
  Representation x = case2_x(2, f);
  Lemma1Report l1 = check_lemma1(x, 1);
  CHECK(l1.count == 1);
  CHECK(l1.holds());
  Lemma2Report l2 = check_lemma2(x, 1);
  CHECK(l2.holds());
  REQUIRE(l2.rows.size() == 3);
  CHECK(l2.rows[0].count == 1);
  CHECK(l2.rows[1].count == 0);
  CHECK(l2.rows[2].count == 1);
}

TEST_CASE("eta fullness on simples") {
  Field f = Field::prime(5);
  EtaContext ctx = make_eta_context(case2_x(2, f), case2_Y(f));
  Representation s1 = simple(ctx.kronecker, f, "1"), s2 = simple(ctx.kronecker, f, "2");
  FullnessReport same = check_eta_fullness(ctx, s2, s2);
  CHECK(same.hom_eta == 1);
  CHECK(same.equal());
  FullnessReport cross = check_eta_fullness(ctx, s1, s2);
  CHECK(cross.hom_eta == 0);
  CHECK(cross.equal());
}

TEST_CASE("remark instance over F_3") {
  Field f = Field::prime(3);
  RemarkReport r = remark_counterexample_demo(f, 1);
  CHECK_FALSE(r.x_plus_v_is_bristle);
  CHECK_FALSE(r.condition.holds());
  CHECK(r.x_plus_v_among_violations);
  CHECK(r.counts.lhs < r.counts.rhs);
  CHECK_THROWS_AS(remark_counterexample_demo(Field::prime(2)), InvalidArgument);
}
