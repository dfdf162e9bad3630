#include "qgrass/grassmann.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

std::vector<std::size_t> leading_columns(const Matrix& basis) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && basis.entry_is_zero(i, c)) ++c;
    out.push_back(c);
  }
  return out;
}

// Rows of M_a applied to the rows of `basis`.
Matrix image_rows(const Matrix& map, const Matrix& basis) {
  return (map * basis.transpose()).transpose();
}

class Searcher {
 public:
  using Fixed = std::vector<Matrix>;
  using Done = std::function<void(const Fixed&)>;

  Searcher(const Representation& m, const DimVector& d, std::uint64_t budget,
           std::atomic<std::uint64_t>& nodes)
      : m_(m), d_(d), budget_(budget), nodes_(nodes) {
    const Quiver& q = m.quiver();
    order_ = q.topological_order();
    pos_.resize(q.vertex_count());
    for (std::size_t k = 0; k < order_.size(); ++k) pos_[order_[k]] = k;
    in_.resize(q.vertex_count());
    out_.resize(q.vertex_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      in_[q.target(a)].push_back(a);
      out_[q.source(a)].push_back(a);
    }
  }

  std::size_t vertex_count() const { return order_.size(); }

  // Fixes order[t], order[t+1], ... and calls done once order[stop] is reached.
  void run(std::size_t t, Fixed& fixed, std::size_t stop, const Done& done) const {
    if (t == stop) {
      done(fixed);
      return;
    }
    const std::size_t v = order_[t];
    const Field& f = m_.field();
    Matrix acc(f, 0, m_.dim(v));
    for (std::size_t a : in_[v]) {
      const Matrix& src = fixed[m_.quiver().source(a)];
      if (src.rows() > 0) acc = vstack(acc, image_rows(m_.matrix(a), src));
    }
    Matrix lower = span_of(acc);
    if (lower.rows() > d_[v]) return;
    QuotientChart chart(lower);
    Matrix rows(f, 0, chart.dim());
    extend_rows(t, fixed, lower, chart, rows, chart.dim(), d_[v] - lower.rows(), stop, done);
  }

 private:
  void tick() const {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw BudgetExceeded("submodule enumeration exceeded the budget of " +
                           std::to_string(budget_) + " search nodes");
    }
  }

  // `rows` holds the bottom echelon rows chosen so far (quotient
  // coordinates); the next row gets a pivot left of `top`.
  void extend_rows(std::size_t t, Fixed& fixed, const Matrix& lower, const QuotientChart& chart,
                   const Matrix& rows, std::size_t top, std::size_t need, std::size_t stop,
                   const Done& done) const {
    tick();
    const std::size_t v = order_[t];
    Matrix trial = rows.rows() == 0 ? lower : span_of(vstack(lower, chart.lift_rows(rows)));
    std::optional<Matrix> upper;
    if (!propagate(t, fixed, trial, upper)) return;
    if (rows.rows() == need) {
      fixed[v] = trial;
      run(t + 1, fixed, stop, done);
      return;
    }
    const Field& f = m_.field();
    Matrix room = upper ? span_of(chart.project_rows(*upper)) : Matrix::identity(f, chart.dim());
    if (room.rows() < need) return;
    if (rows.rows() > 0) {
      // Restrict to vectors vanishing at the pivots already used.
      Matrix at_pivots = room.select_cols(leading_columns(rows));
      Matrix coeffs = kernel_basis(at_pivots.transpose());
      room = coeffs.rows() == 0 ? Matrix(f, 0, chart.dim()) : span_of(coeffs * room);
    }
    const std::size_t remaining = need - rows.rows();
    const std::vector<std::size_t> pivots = leading_columns(room);
    for (std::size_t idx = remaining - 1; idx < room.rows(); ++idx) {
      if (pivots[idx] >= top) break;
      const std::size_t tail = room.rows() - idx - 1;
      for_each_coefficient_vector(f, tail, ~std::uint64_t{0}, [&](const std::vector<Scalar>& c) {
        Matrix candidate = room.row(idx);
        for (std::size_t j = 0; j < tail; ++j) {
          if (!c[j].is_zero()) candidate += room.row(idx + 1 + j).scaled(c[j]);
        }
        extend_rows(t, fixed, lower, chart, vstack(candidate, rows), pivots[idx], need, stop,
                    done);
        return true;
      });
    }
  }

  // Bounds for the vertices after order[t], given the fixed prefix and
  // `trial` as a lower bound at order[t]. Returns false when some vertex
  // cannot reach its dimension; otherwise sets `upper_v` to the upper
  // bound at order[t] (nullopt meaning the whole space).
  bool propagate(std::size_t t, const Fixed& fixed, const Matrix& trial,
                 std::optional<Matrix>& upper_v) const {
    const Quiver& q = m_.quiver();
    const Field& f = m_.field();
    const std::size_t v = order_[t];
    std::vector<Matrix> lower(q.vertex_count());
    for (std::size_t k = t + 1; k < order_.size(); ++k) {
      const std::size_t w = order_[k];
      Matrix acc(f, 0, m_.dim(w));
      for (std::size_t a : in_[w]) {
        const std::size_t i = q.source(a);
        const Matrix& src = pos_[i] < t ? fixed[i] : (i == v ? trial : lower[i]);
        if (src.rows() > 0) acc = vstack(acc, image_rows(m_.matrix(a), src));
      }
      lower[w] = span_of(acc);
      if (lower[w].rows() > d_[w]) return false;
    }
    std::vector<std::optional<Matrix>> upper(q.vertex_count());
    auto pull_back = [&](std::size_t w) {
      std::optional<Matrix> u;
      for (std::size_t a : out_[w]) {
        const std::size_t z = q.target(a);
        if (!upper[z]) continue;
        Matrix pre = preimage_of(m_.matrix(a), *upper[z]);
        u = u ? subspace_intersection(*u, pre) : pre;
      }
      return u;
    };
    for (std::size_t k = order_.size(); k-- > t + 1;) {
      const std::size_t w = order_[k];
      std::optional<Matrix> u = pull_back(w);
      if (lower[w].rows() == d_[w]) u = u ? subspace_intersection(*u, lower[w]) : lower[w];
      if (u && (u->rows() < d_[w] || !subspace_contains(*u, lower[w]))) return false;
      upper[w] = std::move(u);
    }
    upper_v = pull_back(v);
    if (upper_v && (upper_v->rows() < d_[v] || !subspace_contains(*upper_v, trial))) return false;
    return true;
  }

  const Representation& m_;
  const DimVector& d_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

void validate(const Representation& m, const DimVector& d) {
  if (!m.field().is_prime()) {
    throw InvalidArgument("quiver Grassmannian enumeration needs a prime field");
  }
  if (d.size() != m.quiver().vertex_count()) {
    throw DimensionMismatch("dimension vector does not match the quiver");
  }
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] > m.dim(v)) {
      throw InvalidArgument("dimension vector exceeds the representation at vertex '" +
                            m.quiver().vertex(v) + "'");
    }
  }
}

}  // namespace

void for_each_submodule(const Representation& m, const DimVector& d,
                        const EnumerationOptions& opts,
                        const std::function<void(const SubmodulePoint&)>& visit) {
  validate(m, d);
  std::atomic<std::uint64_t> nodes{0};
  Searcher searcher(m, d, opts.budget, nodes);
  const std::size_t n = searcher.vertex_count();
  Searcher::Fixed fixed(n, Matrix(m.field(), 0, 0));
  if (opts.jobs <= 1 || n <= 1) {
    searcher.run(0, fixed, n, [&](const Searcher::Fixed& done) { visit(SubmodulePoint{done}); });
    return;
  }
  // Split on the subspace at the first vertex; each task finishes the rest.
  std::vector<Searcher::Fixed> tasks;
  searcher.run(0, fixed, 1, [&](const Searcher::Fixed& partial) { tasks.push_back(partial); });
  std::vector<std::vector<SubmodulePoint>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      try {
        searcher.run(1, tasks[k], n, [&](const Searcher::Fixed& done) {
          results[k].push_back(SubmodulePoint{done});
        });
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 0; j < std::min(opts.jobs, tasks.size()); ++j) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& chunk : results) {
    for (const auto& pt : chunk) visit(pt);
  }
}

GrassmannianReport enumerate_submodules(const Representation& m, const DimVector& d,
                                        const EnumerationOptions& opts) {
  GrassmannianReport report;
  report.parent = std::make_shared<const Representation>(m);
  report.dimvec = d;
  report.field = m.field();
  for_each_submodule(m, d, opts, [&](const SubmodulePoint& pt) { report.points.push_back(pt); });
  const auto& order = m.quiver().topological_order();
  std::sort(report.points.begin(), report.points.end(),
            [&](const SubmodulePoint& a, const SubmodulePoint& b) {
              for (std::size_t v : order) {
                if (a.subspaces[v] < b.subspaces[v]) return true;
                if (b.subspaces[v] < a.subspaces[v]) return false;
              }
              return false;
            });
  report.count = report.points.size();
  return report;
}

std::uint64_t count_submodules(const Representation& m, const DimVector& d,
                               const EnumerationOptions& opts) {
  std::uint64_t count = 0;
  for_each_submodule(m, d, opts, [&](const SubmodulePoint&) { ++count; });
  return count;
}

DimVector kronecker_dims(const Quiver& q, std::size_t source_dim, std::size_t sink_dim) {
  auto orient = kronecker_orientation(q);
  if (!orient) throw InvalidArgument("quiver is not a Kronecker quiver");
  DimVector d(2);
  d[orient->first] = source_dim;
  d[orient->second] = sink_dim;
  return d;
}

GrassmannianReport bristle_points(const Representation& n, const EnumerationOptions& opts) {
  GrassmannianReport all = enumerate_submodules(n, kronecker_dims(n.quiver(), 1, 1), opts);
  GrassmannianReport out = all;
  out.points.clear();
  for (const auto& pt : all.points) {
    SubRepresentation sub = sub_representation(n, pt);
    bool nonzero = std::any_of(sub.sub.matrices().begin(), sub.sub.matrices().end(),
                               [](const Matrix& x) { return !x.is_zero(); });
    if (nonzero) out.points.push_back(pt);
  }
  out.count = out.points.size();
  return out;
}

}  // namespace qgrass
