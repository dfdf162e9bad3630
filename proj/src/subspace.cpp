#include "qgrass/subspace.hpp"

#include <limits>

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

Matrix span_of(const Matrix& rows) {
  RrefResult r = rref(rows);
  return r.reduced.block(0, 0, r.rank, rows.cols());
}

Matrix zero_subspace(const Field& field, std::size_t ambient) { return Matrix(field, 0, ambient); }

Matrix full_subspace(const Field& field, std::size_t ambient) {
  return Matrix::identity(field, ambient);
}

bool subspace_contains(const Matrix& basis, const Matrix& vectors) {
  if (vectors.rows() == 0) return true;
  return rank(vstack(basis, vectors)) == rank(basis);
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) { return span_of(vstack(a, b)); }

Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
  // v in A and B: v = x A = y B, i.e. (x, y) in ker [A; -B]^T.
  if (a.rows() == 0 || b.rows() == 0) return zero_subspace(a.field(), a.cols());
  Matrix stacked = vstack(a, b.scaled(-Scalar::one(b.field())));
  Matrix coeffs = kernel_basis(stacked.transpose());
  Matrix xs = coeffs.block(0, 0, coeffs.rows(), a.rows());
  return span_of(xs * a);
}

Matrix image_of(const Matrix& map, const Matrix& basis) {
  if (basis.cols() != map.cols()) throw DimensionMismatch("image_of: ambient mismatch");
  if (basis.rows() == 0) return zero_subspace(map.field(), map.rows());
  return span_of((map * basis.transpose()).transpose());
}

Matrix preimage_of(const Matrix& map, const Matrix& target_basis) {
  if (target_basis.cols() != map.rows()) throw DimensionMismatch("preimage_of: ambient mismatch");
  QuotientChart chart(target_basis);
  if (chart.dim() == 0) return full_subspace(map.field(), map.cols());
  return kernel_basis(chart.projection() * map);
}

QuotientChart::QuotientChart(const Matrix& basis)
    : ambient_(basis.cols()), projection_(basis.field(), 0, 0), lift_(basis.field(), 0, 0) {
  const Field& f = basis.field();
  std::vector<std::size_t> pivot_of_col(ambient_, ambient_);
  std::vector<bool> is_pivot(ambient_, false);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < ambient_ && basis.entry_is_zero(i, c)) ++c;
    if (c == ambient_) throw InvalidArgument("QuotientChart: basis has a zero row");
    is_pivot[c] = true;
    pivots.push_back(c);
  }
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) free_.push_back(c);
  }
  projection_ = Matrix(f, free_.size(), ambient_);
  lift_ = Matrix(f, ambient_, free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) {
    projection_.set_int(k, free_[k], 1);
    lift_.set_int(free_[k], k, 1);
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t k = 0; k < free_.size(); ++k) {
      if (!basis.entry_is_zero(i, free_[k])) projection_.set(k, pivots[i], -basis.at(i, free_[k]));
    }
  }
}

Matrix QuotientChart::project_rows(const Matrix& vectors) const {
  return (projection_ * vectors.transpose()).transpose();
}

Matrix QuotientChart::lift_rows(const Matrix& coords) const {
  return (lift_ * coords.transpose()).transpose();
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  mpz_class g = 1;
  mpz_class qq = static_cast<unsigned long>(q);
  for (std::uint64_t j = 0; j < k; ++j) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), qq.get_mpz_t(), n - j);
    mpz_pow_ui(den.get_mpz_t(), qq.get_mpz_t(), j + 1);
    g = g * (num - 1) / (den - 1);
  }
  if (!g.fits_ulong_p()) return kSaturated;
  return g.get_ui();
}

SubspaceEnumerator::SubspaceEnumerator(std::size_t ambient, std::size_t dim, const Field& field,
                                       std::uint64_t budget)
    : n_(ambient), k_(dim), field_(field), total_(0), current_(field, dim, ambient) {
  if (!field.is_prime()) throw InvalidArgument("subspace enumeration needs a prime field");
  if (dim > ambient) throw InvalidArgument("subspace dimension exceeds ambient dimension");
  total_ = gaussian_binomial(ambient, dim, field.characteristic());
  if (total_ > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(dim) + "-subspaces of F_" +
                         std::to_string(field.characteristic()) + "^" + std::to_string(ambient) +
                         " exceeds budget " + std::to_string(budget));
  }
  pivots_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
}

void SubspaceEnumerator::reset_free() {
  free_positions_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t c = pivots_[i] + 1; c < n_; ++c) {
      if (!is_pivot[c]) free_positions_.emplace_back(i, c);
    }
  }
  free_values_.assign(free_positions_.size(), 0);
}

bool SubspaceEnumerator::next_pivots() {
  // Next k-combination of {0..n-1} in lexicographic order.
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (pivots_[i] < n_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void SubspaceEnumerator::write_current() {
  auto& d = current_.residues();
  std::fill(d.begin(), d.end(), 0);
  for (std::size_t i = 0; i < k_; ++i) d[i * n_ + pivots_[i]] = 1;
  for (std::size_t t = 0; t < free_positions_.size(); ++t) {
    d[free_positions_[t].first * n_ + free_positions_[t].second] = free_values_[t];
  }
}

bool SubspaceEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    reset_free();
    write_current();
    return true;
  }
  const std::uint32_t p = field_.characteristic();
  std::size_t t = free_values_.size();
  while (t > 0) {
    --t;
    if (free_values_[t] + 1 < p) {
      ++free_values_[t];
      for (std::size_t u = t + 1; u < free_values_.size(); ++u) free_values_[u] = 0;
      write_current();
      return true;
    }
  }
  if (!next_pivots()) {
    done_ = true;
    return false;
  }
  reset_free();
  write_current();
  return true;
}

std::vector<Matrix> enumerate_subspaces(std::size_t ambient, std::size_t dim, const Field& field,
                                        std::uint64_t budget) {
  SubspaceEnumerator it(ambient, dim, field, budget);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(it.total()));
  while (it.next()) out.push_back(it.current());
  return out;
}

void for_each_coefficient_vector(const Field& field, std::size_t dim, std::uint64_t budget,
                                 const std::function<bool(const std::vector<Scalar>&)>& fn) {
  if (!field.is_prime()) throw InvalidArgument("exhaustive search needs a prime field");
  const std::uint32_t p = field.characteristic();
  if (saturating_power(p, dim) > budget) {
    throw BudgetExceeded("exhaustive search over F_" + std::to_string(p) + "^" +
                         std::to_string(dim) + " exceeds budget " + std::to_string(budget));
  }
  std::vector<std::uint32_t> digits(dim, 0);
  std::vector<Scalar> coeffs(dim, Scalar::zero(field));
  while (true) {
    if (!fn(coeffs)) return;
    std::size_t t = dim;
    while (t > 0) {
      --t;
      if (digits[t] + 1 < p) {
        ++digits[t];
        coeffs[t] = Scalar::from_residue(field, digits[t]);
        for (std::size_t u = t + 1; u < dim; ++u) {
          digits[u] = 0;
          coeffs[u] = Scalar::zero(field);
        }
        break;
      }
      if (t == 0) return;
    }
    if (dim == 0) return;
  }
}

}  // namespace qgrass
