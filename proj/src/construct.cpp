#include "qgrass/construct.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

QuiverPtr kronecker_ptr(std::size_t n) { return std::make_shared<const Quiver>(make_kronecker(n)); }

void require_prime(const Field& f, const char* what) {
  if (!f.is_prime()) throw InvalidArgument(std::string(what) + " needs a prime field");
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; returns the
// indices where fn was true, ascending.
std::vector<std::size_t> parallel_select(std::size_t count, std::size_t jobs,
                                         const std::function<bool(std::size_t)>& fn) {
  std::vector<char> hit(count, 0);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) hit[i] = fn(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          hit[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < std::min(jobs, count); ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

std::vector<SubmodulePoint> failing_points(const GrassmannianReport& report, std::size_t jobs,
                                           const std::function<bool(const SubmodulePoint&)>& ok) {
  std::vector<SubmodulePoint> out;
  for (std::size_t i : parallel_select(report.points.size(), jobs,
                                       [&](std::size_t k) { return !ok(report.points[k]); })) {
    out.push_back(report.points[i]);
  }
  return out;
}

}  // namespace

std::vector<Scalar> default_lambdas(std::size_t n, const Field& field) {
  if (field.is_prime() && field.characteristic() <= n) {
    throw DistinctnessViolated("F_" + std::to_string(field.characteristic()) + " has only " +
                               std::to_string(field.characteristic() - 1) +
                               " nonzero elements, fewer than n = " + std::to_string(n));
  }
  std::vector<Scalar> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Scalar::from_int(field, static_cast<long long>(i)));
  return out;
}

Representation case2_X(const std::vector<Scalar>& lambdas, const Field& field) {
  const std::size_t n = lambdas.size();
  if (n < 2) throw InvalidArgument("case2_X needs at least two lambdas");
  if (field.is_prime() && field.characteristic() <= n) {
    throw DistinctnessViolated("F_" + std::to_string(field.characteristic()) +
                               " cannot hold " + std::to_string(n) +
                               " distinct nonzero lambdas");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambdas[i].field() == field)) throw DimensionMismatch("lambda from another field");
    if (lambdas[i].is_zero()) throw DistinctnessViolated("lambda_" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (lambdas[i] == lambdas[j]) {
        throw DistinctnessViolated("lambda_" + std::to_string(j + 1) + " = lambda_" +
                                   std::to_string(i + 1));
      }
    }
  }
  Matrix beta(field, n, n), gamma(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    beta.set(i, i, lambdas[i]);
    gamma.set_int((i + 1) % n, i, 1);
  }
  return Representation(kronecker_ptr(3), field, {n, n},
                        {Matrix::identity(field, n), beta, gamma});
}

Representation case2_Y(const Field& field) {
  return Representation(kronecker_ptr(3), field, {1, 1},
                        {Matrix::identity(field, 1), Matrix(field, 1, 1), Matrix(field, 1, 1)});
}

Representation remark_Xprime(const Scalar& l1, const Scalar& l2, const Field& field) {
  if (l1.is_zero() || l2.is_zero()) throw DistinctnessViolated("remark lambdas must be nonzero");
  if (l1 == l2) throw DistinctnessViolated("remark lambdas must be distinct");
  Matrix beta(field, 2, 2);
  beta.set(0, 0, l1);
  beta.set(1, 1, l2);
  return Representation(kronecker_ptr(3), field, {2, 2},
                        {Matrix::identity(field, 2), beta, Matrix::from_ints(field, {{0, 0}, {1, 0}})});
}

Representation kronecker_preprojective(std::size_t m, const Field& field) {
  Matrix top(field, m + 1, m), bottom(field, m + 1, m);
  for (std::size_t i = 0; i < m; ++i) {
    top.set_int(i, i, 1);
    bottom.set_int(i + 1, i, 1);
  }
  return Representation(kronecker_ptr(2), field, {m, m + 1}, {top, bottom});
}

Case1Pair case1_pair(QuiverPtr q, const std::string& omega, const Representation& x_on_rest) {
  const std::size_t w = q->vertex_index(omega);
  if (q->is_sink(w) && !q->is_source(w)) {
    auto op = std::make_shared<const Quiver>(q->opposite());
    Case1Pair mirrored = case1_pair(op, omega, dual(x_on_rest));
    auto back = [&](const Representation& r) {
      Representation d = dual(r);
      return Representation(q, d.field(), d.dims(), d.matrices());
    };
    return Case1Pair{back(mirrored.y), back(mirrored.x), mirrored.n, mirrored.exceptional};
  }
  if (!q->is_source(w)) throw InvalidArgument("vertex '" + omega + "' is neither a source nor a sink");
  if (!(x_on_rest.quiver() == q->without_vertex(omega))) {
    throw InvalidArgument("the module does not live on the quiver with '" + omega + "' removed");
  }
  if (x_on_rest.is_zero() || !is_brick(x_on_rest)) throw InvalidArgument("the module is not a brick");
  const Field& f = x_on_rest.field();
  Case1Pair out{extend_by_zero(x_on_rest, q), simple(q, f, omega), 0, is_exceptional(x_on_rest)};
  std::size_t expected = 0;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    if (q->source(a) == w) expected += out.x.dim(q->target(a));
  }
  out.n = ext1_dim(out.y, out.x);
  if (out.n != expected) {
    throw InternalError("Ext^1(S(omega), X) has dimension " + std::to_string(out.n) +
                        ", expected " + std::to_string(expected));
  }
  if (!are_orthogonal_bricks(out.x, out.y)) throw NotOrthogonalBricks("case1_pair: X and S(omega)");
  return out;
}

QuiverPtr case1_quiver() {
  return std::make_shared<const Quiver>(
      Quiver({"1", "2", "w"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"c", "w", "2"}}));
}

Case1Pair case1_default_pair(const Field& field) {
  return case1_pair(case1_quiver(), "w", kronecker_preprojective(1, field));
}

EtaContext make_eta_context(const Representation& x, const Representation& y) {
  require_compatible(x, y, "make_eta_context");
  if (x.is_zero() || y.is_zero() || !are_orthogonal_bricks(x, y)) {
    throw NotOrthogonalBricks("X and Y must be bricks with Hom(X,Y) = Hom(Y,X) = 0");
  }
  Ext1Result e = ext1(y, x);
  if (e.dim == 0) throw ZeroExt("Ext^1(Y, X) = 0");
  EtaContext ctx;
  ctx.x = std::make_shared<const Representation>(x);
  ctx.y = std::make_shared<const Representation>(y);
  ctx.n = e.dim;
  ctx.cocycles = std::move(e.basis);
  ctx.xdim = x.dims();
  ctx.ydim = y.dims();
  ctx.kronecker = kronecker_ptr(e.dim);
  return ctx;
}

EtaWitness build_eta(const EtaContext& ctx, const Representation& n_rep) {
  const Field& f = ctx.x->field();
  if (!(n_rep.field() == f)) throw DimensionMismatch("build_eta: N is over another field");
  auto orient = kronecker_orientation(n_rep.quiver());
  if (!orient || n_rep.quiver().arrow_count() != ctx.n) {
    throw DimensionMismatch("build_eta: N must live on K(" + std::to_string(ctx.n) + ")");
  }
  const std::size_t b = n_rep.dim(orient->first);
  const std::size_t a = n_rep.dim(orient->second);
  const Representation& x = *ctx.x;
  const Representation& y = *ctx.y;
  const Quiver& q = x.quiver();

  DimVector dims = add_dims(scale_dims(x.dims(), a), scale_dims(y.dims(), b));
  std::vector<Matrix> mats;
  for (std::size_t al = 0; al < q.arrow_count(); ++al) {
    const std::size_t i = q.source(al), j = q.target(al);
    Matrix corner(f, a * x.dim(j), b * y.dim(i));
    for (std::size_t k = 0; k < ctx.n; ++k) {
      corner += kron(n_rep.matrix(k), ctx.cocycles[k].components[al]);
    }
    Matrix top = hstack(kron(Matrix::identity(f, a), x.matrix(al)), corner);
    Matrix bottom = hstack(Matrix(f, b * y.dim(j), a * x.dim(i)),
                           kron(Matrix::identity(f, b), y.matrix(al)));
    mats.push_back(vstack(top, bottom));
  }
  auto m = std::make_shared<const Representation>(x.quiver_ptr(), f, dims, std::move(mats));
  auto xa = std::make_shared<const Representation>(direct_power(x, a));
  auto yb = std::make_shared<const Representation>(direct_power(y, b));
  std::vector<Matrix> mu, pi;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::size_t top = a * x.dim(v), low = b * y.dim(v);
    mu.push_back(vstack(Matrix::identity(f, top), Matrix(f, low, top)));
    pi.push_back(hstack(Matrix(f, low, top), Matrix::identity(f, low)));
  }
  return EtaWitness{m, a, b, Morphism(xa, m, std::move(mu)), Morphism(m, yb, std::move(pi))};
}

bool witness_is_exact(const EtaWitness& w) {
  if (!compose(w.pi, w.mu).is_zero()) return false;
  if (!w.mu.is_injective() || !w.pi.is_surjective()) return false;
  for (std::size_t v = 0; v < w.m->dims().size(); ++v) {
    if (rank(w.mu.map(v)) + rank(w.pi.map(v)) != w.m->dim(v)) return false;
    if (!(w.pi.map(v) * w.mu.map(v)).is_zero()) return false;
  }
  return true;
}

bool is_E_bristle(const EtaContext& ctx, const Representation& u, const SearchOptions& opts) {
  require_compatible(*ctx.x, u, "is_E_bristle");
  if (u.dims() != add_dims(ctx.xdim, ctx.ydim)) return false;
  if (!is_indecomposable(u, opts)) return false;
  const Representation& x = *ctx.x;
  HomBasis hom = hom_basis(x, u);
  auto embeds_with_quotient_y = [&](const std::vector<Matrix>& maps) {
    SubmodulePoint image;
    for (std::size_t v = 0; v < maps.size(); ++v) {
      if (rank(maps[v]) != x.dim(v)) return false;
      image.subspaces.push_back(span_of(maps[v].transpose()));
    }
    return is_isomorphic(quotient_representation(u, image).quotient, *ctx.y, opts);
  };
  return search_hom(hom, embeds_with_quotient_y, opts, u.total_dim()).has_value();
}

ConditionCReport check_condition_C(const EtaContext& ctx, const EtaWitness& witness,
                                   const CheckOptions& opts) {
  const Representation& m = *witness.m;
  require_prime(m.field(), "check_condition_C");
  if (has_brick_summand(m, *ctx.y)) throw NotReduced("M has a direct summand isomorphic to Y");
  ConditionCReport report;
  report.dimvec = add_dims(ctx.xdim, ctx.ydim);
  GrassmannianReport points = enumerate_submodules(m, report.dimvec, opts.enumeration);
  report.checked = points.count;
  report.violations = failing_points(points, opts.enumeration.jobs, [&](const SubmodulePoint& pt) {
    return is_E_bristle(ctx, sub_representation(m, pt).sub, opts.search);
  });
  return report;
}

Lemma1Report check_lemma1(const Representation& x, std::size_t a, const CheckOptions& opts) {
  require_prime(x.field(), "check_lemma1");
  if (a == 0) throw InvalidArgument("check_lemma1 needs a >= 1");
  Representation xa = direct_power(x, a);
  Lemma1Report report;
  report.a = a;
  report.dimvec = x.dims();
  GrassmannianReport points = enumerate_submodules(xa, x.dims(), opts.enumeration);
  report.count = points.count;
  report.failures = failing_points(points, opts.enumeration.jobs, [&](const SubmodulePoint& pt) {
    return is_isomorphic(sub_representation(xa, pt).sub, x, opts.search);
  });
  return report;
}

bool Lemma2Report::holds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const Lemma2Row& r) { return r.failures.empty(); });
}

Lemma2Report check_lemma2(const Representation& x, std::size_t a, const CheckOptions& opts) {
  require_prime(x.field(), "check_lemma2");
  if (x.dims().size() != 2 || x.dim(0) != x.dim(1) || x.dim(0) == 0) {
    throw InvalidArgument("check_lemma2 needs a module of dimension vector (n,n), n >= 1");
  }
  const std::size_t n = x.dim(0);
  Representation xa = direct_power(x, a);
  Lemma2Report report;
  report.n = n;
  report.a = a;
  for (std::size_t w = 0; w <= a * n; ++w) {
    Lemma2Row row;
    row.w = w;
    GrassmannianReport points = enumerate_submodules(xa, {w, w}, opts.enumeration);
    row.count = points.count;
    if (w % n != 0) {
      row.failures = points.points;
    } else {
      row.s = w / n;
      Representation target = direct_power(x, w / n);
      if (w > 0) {
        row.failures = failing_points(points, opts.enumeration.jobs, [&](const SubmodulePoint& pt) {
          return is_isomorphic(sub_representation(xa, pt).sub, target, opts.search);
        });
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

FullnessReport check_eta_fullness(const EtaContext& ctx, const Representation& n1,
                                  const Representation& n2) {
  require_compatible(n1, n2, "check_eta_fullness");
  FullnessReport report;
  report.hom_eta = hom_dim(*build_eta(ctx, n1).m, *build_eta(ctx, n2).m);
  report.hom_kronecker = hom_dim(n1, n2);
  return report;
}

BijectionReport check_bijection(const EtaContext& ctx, const Representation& n_rep,
                                const CheckOptions& opts) {
  require_prime(n_rep.field(), "check_bijection");
  if (!is_reduced_kronecker(n_rep)) throw NotReduced("N has the simple injective as a summand");
  EtaWitness w = build_eta(ctx, n_rep);
  BijectionReport report;
  report.lhs = count_submodules(n_rep, kronecker_dims(n_rep.quiver(), 1, 1), opts.enumeration);
  report.rhs = count_submodules(*w.m, add_dims(ctx.xdim, ctx.ydim), opts.enumeration);
  return report;
}

Representation remark_kronecker_module(std::size_t b, const Field& field) {
  auto q = kronecker_ptr(2);
  switch (b) {
    case 1:
      return Representation(q, field, {1, 2},
                            {Matrix::from_ints(field, {{1}, {0}}), Matrix::from_ints(field, {{0}, {1}})});
    case 2:
      return Representation(q, field, {2, 2},
                            {Matrix::identity(field, 2), Matrix::from_ints(field, {{1, 1}, {0, 1}})});
    case 3:
      return Representation(q, field, {3, 2},
                            {Matrix::from_ints(field, {{1, 0, 0}, {0, 1, 0}}),
                             Matrix::from_ints(field, {{0, 1, 0}, {0, 0, 1}})});
    default:
      throw InvalidArgument("source dimension must be 1, 2 or 3");
  }
}

RemarkReport remark_counterexample_demo(const Field& field, std::size_t b, const CheckOptions& opts) {
  if (!field.is_prime() || field.characteristic() < 3) {
    throw InvalidArgument("the remark instance needs F_p with p >= 3");
  }
  EtaContext ctx = make_eta_context(
      remark_Xprime(Scalar::from_int(field, 1), Scalar::from_int(field, 2), field), case2_Y(field));
  Representation n_rep = remark_kronecker_module(b, field);
  EtaWitness w = build_eta(ctx, n_rep);
  if (w.a != 2) throw InternalError("remark module must have sink dimension 2");

  // First copy of X' in full, plus V = <e(2)> in the second copy.
  SubmodulePoint u;
  for (std::size_t v = 0; v < 2; ++v) {
    Matrix basis(field, 3, w.m->dim(v));
    basis.set_int(0, 0, 1);
    basis.set_int(1, 1, 1);
    basis.set_int(2, 3, 1);
    u.subspaces.push_back(basis);
  }
  if (!is_submodule(*w.m, u)) throw InternalError("X (+) V is not a submodule of M");

  RemarkReport report{b, w, u, true, {}, false, {}};
  report.x_plus_v_is_bristle = is_E_bristle(ctx, sub_representation(*w.m, u).sub, opts.search);
  report.condition = check_condition_C(ctx, w, opts);
  report.x_plus_v_among_violations =
      std::find(report.condition.violations.begin(), report.condition.violations.end(), u) !=
      report.condition.violations.end();
  report.counts = check_bijection(ctx, n_rep, opts);
  return report;
}

}  // namespace qgrass
