#include "qgrass/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

// Arithmetic for residues modulo a prime below 2^31.
struct ModOps {
  using T = std::uint32_t;
  using Store = Matrix::ModStore;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return static_cast<T>((std::uint64_t{a} + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((std::uint64_t{a} + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }
  T neg(T a) const { return a == 0 ? 0 : static_cast<T>(p - a); }
  T inv(T a) const {
    std::uint64_t base = a, result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
};

struct RatOps {
  using T = mpq_class;
  using Store = Matrix::RatStore;

  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
};

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.is_prime()) return fn(ModOps{f.characteristic()});
  return fn(RatOps{});
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) {
    throw DimensionMismatch(std::string(what) + ": field mismatch (" + a.field().to_string() +
                            " vs " + b.field().to_string() + ")");
  }
}

template <class Ops>
typename Ops::Store& store(Matrix& m) {
  if constexpr (std::is_same_v<Ops, ModOps>) {
    return m.residues();
  } else {
    return m.rationals();
  }
}

template <class Ops>
const typename Ops::Store& store(const Matrix& m) {
  if constexpr (std::is_same_v<Ops, ModOps>) {
    return m.residues();
  } else {
    return m.rationals();
  }
}

// In-place RREF over row-major storage; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref_inplace(const Ops& ops, typename Ops::Store& a, std::size_t rows,
                                      std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    }
    auto inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      auto factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!ops.is_zero(a[r * cols + j])) {
          a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(factor, a[r * cols + j]));
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime()) {
    data_ = ModStore(rows * cols, 0);
  } else {
    data_ = RatStore(rows * cols);
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(field, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set_int(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& row_major) {
  if (row_major.size() != rows * cols) throw InvalidArgument("entry count does not match shape");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, row_major[i * cols + j]);
  }
  return m;
}

Matrix Matrix::column(const Field& field, const std::vector<long long>& entries) {
  return from_ints(field, entries.size(), 1, entries);
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return Scalar::from_residue(field_, residues()[r * cols_ + c]);
  return Scalar::from_rational(field_, rationals()[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) throw DimensionMismatch("scalar field does not match matrix");
  if (field_.is_prime()) {
    residues()[r * cols_ + c] = v.residue();
  } else {
    rationals()[r * cols_ + c] = v.rational();
  }
}

void Matrix::set_int(std::size_t r, std::size_t c, long long v) {
  set(r, c, Scalar::from_int(field_, v));
}

bool Matrix::entry_is_zero(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return residues()[r * cols_ + c] == 0;
  return sgn(rationals()[r * cols_ + c]) == 0;
}

bool Matrix::is_zero() const {
  return dispatch(field_, [&](const auto& ops) {
    const auto& s = store<std::decay_t<decltype(ops)>>(*this);
    return std::all_of(s.begin(), s.end(), [&](const auto& x) { return ops.is_zero(x); });
  });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& s = store<Ops>(*this);
    auto& d = store<Ops>(t);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) d[j * rows_ + i] = s[i * cols_ + j];
    }
    return 0;
  });
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(field_, nr, nc);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& s = store<Ops>(*this);
    auto& d = store<Ops>(b);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) d[i * nc + j] = s[(r0 + i) * cols_ + c0 + j];
    }
    return 0;
  });
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_field(*this, m, "set_block");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("block out of range");
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& s = store<Ops>(m);
    auto& d = store<Ops>(*this);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = s[i * m.cols_ + j];
    }
    return 0;
  });
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) out.set_block(i, 0, row(idx[i]));
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  return transpose().select_rows(idx).transpose();
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw DimensionMismatch("scalar field does not match matrix");
  Matrix out(field_, rows_, cols_);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& a = store<Ops>(*this);
    auto& d = store<Ops>(out);
    typename Ops::T factor;
    if constexpr (std::is_same_v<Ops, ModOps>) {
      factor = s.residue();
    } else {
      factor = s.rational();
    }
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = ops.mul(a[i], factor);
    return 0;
  });
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out += o;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_field(*this, o, "matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& a = store<Ops>(*this);
    const auto& b = store<Ops>(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.add(a[i], b[i]);
    return 0;
  });
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  return *this + o.scaled(-Scalar::one(field_));
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o, "matrix product");
  if (cols_ != o.rows_) {
    throw DimensionMismatch("matrix product: " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " times " + std::to_string(o.rows_) + "x" +
                            std::to_string(o.cols_));
  }
  Matrix out(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    // Accumulate in 64 bits and reduce once per entry when it cannot overflow.
    const std::uint64_t p = field_.characteristic();
    const auto& a = residues();
    const auto& b = o.residues();
    auto& d = out.residues();
    const std::uint64_t limit = ~std::uint64_t{0} - (p - 1) * (p - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
          acc += std::uint64_t{a[i * cols_ + k]} * b[k * o.cols_ + j];
          if (acc >= limit) acc %= p;
        }
        d[i * o.cols_ + j] = static_cast<std::uint32_t>(acc % p);
      }
    }
    return out;
  }
  const auto& a = rationals();
  const auto& b = o.rationals();
  auto& d = out.rationals();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& x = a[i * cols_ + k];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) d[i * o.cols_ + j] += x * b[k * o.cols_ + j];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column mismatch");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left, right, "hstack");
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row mismatch");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

Matrix diag_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "diag_sum");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.entry_is_zero(i, j)) continue;
      out.set_block(i * b.rows(), j * b.cols(), b.scaled(a.at(i, j)));
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult result{m, 0, {}};
  result.pivots = dispatch(m.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    return rref_inplace(ops, store<Ops>(result.reduced), m.rows(), m.cols());
  });
  result.rank = result.pivots.size();
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  // One vector per free column f: x_f = 1, x_{pivot_i} = -R(i, f).
  Matrix basis(m.field(), free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.set_int(k, f, 1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (!r.reduced.entry_is_zero(i, f)) basis.set(k, r.pivots[i], -r.reduced.at(i, f));
    }
  }
  // Canonical form: the RREF of the spanning set.
  return rref(basis).reduced;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve");
  if (b.cols() != 1 || b.rows() != a.rows()) {
    throw DimensionMismatch("solve: right-hand side must be a column with " +
                            std::to_string(a.rows()) + " entries");
  }
  RrefResult r = rref(hstack(a, b));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), 1);
  for (std::size_t i = 0; i < r.rank; ++i) x.set(r.pivots[i], 0, r.reduced.at(i, a.cols()));
  return x;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) throw InvalidArgument("matrix is singular");
  return r.reduced.block(0, n, n, n);
}

}  // namespace qgrass
