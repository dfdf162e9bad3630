#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qgrass/matrix.hpp"

namespace qgrass {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Subspaces of F^n are carried as their canonical basis: a k x n matrix in
// reduced row echelon form with no zero rows. Two subspaces are equal iff
// their canonical bases are equal matrices.

// Canonical basis of the row space of `rows`.
Matrix span_of(const Matrix& rows);
Matrix zero_subspace(const Field& field, std::size_t ambient);
Matrix full_subspace(const Field& field, std::size_t ambient);

// Row space containment.
bool subspace_contains(const Matrix& basis, const Matrix& vectors);
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
// Image of the row space of `basis` (vectors in the source) under the
// column-convention linear map `map` (target x source).
Matrix image_of(const Matrix& map, const Matrix& basis);
// {v : map v lies in span(target_basis)}.
Matrix preimage_of(const Matrix& map, const Matrix& target_basis);

// Coordinates on F^n / L, where L is given by its canonical basis. The
// quotient basis is the image of the unit vectors at the non-pivot columns
// of L.
class QuotientChart {
 public:
  explicit QuotientChart(const Matrix& basis);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  const std::vector<std::size_t>& free_columns() const { return free_; }
  // dim() x ambient() matrix sending v to its quotient coordinates.
  const Matrix& projection() const { return projection_; }
  // ambient() x dim() section of the projection.
  const Matrix& lift() const { return lift_; }

  // Rows of `vectors` to rows of quotient coordinates.
  Matrix project_rows(const Matrix& vectors) const;
  Matrix lift_rows(const Matrix& coords) const;

 private:
  std::size_t ambient_;
  std::vector<std::size_t> free_;
  Matrix projection_;
  Matrix lift_;
};

// Number of k-dimensional subspaces of F_q^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// Visits the k-dimensional subspaces of F_p^n exactly once each, by
// canonical basis. Order: pivot-column sets lexicographically, then free
// entries lexicographically in row-major position order.
class SubspaceEnumerator {
 public:
  // Throws BudgetExceeded when the subspace count exceeds `budget`.
  SubspaceEnumerator(std::size_t ambient, std::size_t dim, const Field& field,
                     std::uint64_t budget = kDefaultBudget);

  // Advances to the next subspace; false once exhausted.
  bool next();
  const Matrix& current() const { return current_; }
  std::uint64_t total() const { return total_; }

 private:
  bool next_pivots();
  void reset_free();
  void write_current();

  std::size_t n_;
  std::size_t k_;
  Field field_;
  std::uint64_t total_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_positions_;
  std::vector<std::uint32_t> free_values_;
  Matrix current_;
};

// Collects every subspace, in enumeration order.
std::vector<Matrix> enumerate_subspaces(std::size_t ambient, std::size_t dim, const Field& field,
                                        std::uint64_t budget = kDefaultBudget);

// Calls fn on each of the p^dim coefficient vectors of F_p^dim, in
// lexicographic order. Stops early when fn returns false. Throws
// BudgetExceeded when p^dim exceeds budget.
void for_each_coefficient_vector(const Field& field, std::size_t dim, std::uint64_t budget,
                                 const std::function<bool(const std::vector<Scalar>&)>& fn);

// p^e saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp);

}  // namespace qgrass
