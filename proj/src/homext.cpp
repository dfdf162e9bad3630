#include "qgrass/homext.hpp"

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

struct CochainLayout {
  std::vector<std::size_t> vertex_offset;  // into C^0
  std::vector<std::size_t> arrow_offset;   // into C^1
  std::size_t c0 = 0;
  std::size_t c1 = 0;
};

CochainLayout layout(const Representation& m, const Representation& n) {
  const Quiver& q = m.quiver();
  CochainLayout l;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    l.vertex_offset.push_back(l.c0);
    l.c0 += n.dim(v) * m.dim(v);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    l.arrow_offset.push_back(l.c1);
    l.c1 += n.dim(q.target(a)) * m.dim(q.source(a));
  }
  return l;
}

}  // namespace

Matrix hom_differential(const Representation& m, const Representation& n) {
  require_compatible(m, n, "hom_differential");
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  CochainLayout l = layout(m, n);
  Matrix d(f, l.c1, l.c0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t i = q.source(a), j = q.target(a);
    const std::size_t mi = m.dim(i), mj = m.dim(j), ni = n.dim(i), nj = n.dim(j);
    const Matrix& na = n.matrix(a);
    const Matrix& ma = m.matrix(a);
    for (std::size_t x = 0; x < nj; ++x) {
      for (std::size_t y = 0; y < mi; ++y) {
        const std::size_t row = l.arrow_offset[a] + x * mi + y;
        // (N_a f_i)[x][y] = sum_r N_a[x][r] f_i[r][y]
        for (std::size_t r = 0; r < ni; ++r) {
          if (!na.entry_is_zero(x, r)) d.set(row, l.vertex_offset[i] + r * mi + y, na.at(x, r));
        }
        // -(f_j M_a)[x][y] = -sum_c f_j[x][c] M_a[c][y]
        for (std::size_t c = 0; c < mj; ++c) {
          if (!ma.entry_is_zero(c, y)) d.set(row, l.vertex_offset[j] + x * mj + c, -ma.at(c, y));
        }
      }
    }
  }
  return d;
}

HomBasis hom_basis(const Representation& m, const Representation& n) {
  Matrix d = hom_differential(m, n);
  Matrix ker = kernel_basis(d);
  const Quiver& q = m.quiver();
  CochainLayout l = layout(m, n);
  HomBasis out{std::make_shared<const Representation>(m), std::make_shared<const Representation>(n),
               {}};
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Matrix fv(m.field(), n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r) {
        for (std::size_t c = 0; c < m.dim(v); ++c) {
          fv.set(r, c, ker.at(k, l.vertex_offset[v] + r * m.dim(v) + c));
        }
      }
      maps.push_back(std::move(fv));
    }
    out.basis.emplace_back(out.source, out.target, std::move(maps));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  Matrix d = hom_differential(m, n);
  return d.cols() - rank(d);
}

Ext1Result ext1(const Representation& m, const Representation& n) {
  Matrix d = hom_differential(m, n);
  const Quiver& q = m.quiver();
  CochainLayout l = layout(m, n);
  // Rows of the RREF of d^T span im d0 inside C^1.
  RrefResult image = rref(d.transpose());
  std::vector<bool> is_pivot(l.c1, false);
  for (std::size_t c : image.pivots) is_pivot[c] = true;
  Ext1Result out;
  out.dim = l.c1 - image.rank;
  for (std::size_t coord = 0; coord < l.c1; ++coord) {
    if (is_pivot[coord]) continue;
    ExtCocycle cocycle;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const std::size_t rows = n.dim(q.target(a)), cols = m.dim(q.source(a));
      Matrix comp(m.field(), rows, cols);
      if (coord >= l.arrow_offset[a] && coord < l.arrow_offset[a] + rows * cols) {
        std::size_t local = coord - l.arrow_offset[a];
        comp.set_int(local / cols, local % cols, 1);
      }
      cocycle.components.push_back(std::move(comp));
    }
    out.basis.push_back(std::move(cocycle));
  }
  return out;
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  Matrix d = hom_differential(m, n);
  return d.rows() - rank(d);
}

bool is_coboundary(const Representation& m, const Representation& n, const ExtCocycle& c) {
  Matrix d = hom_differential(m, n);
  const Quiver& q = m.quiver();
  CochainLayout l = layout(m, n);
  if (c.components.size() != q.arrow_count()) throw DimensionMismatch("cocycle arrow count");
  Matrix rhs(m.field(), l.c1, 1);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& comp = c.components[a];
    const std::size_t rows = n.dim(q.target(a)), cols = m.dim(q.source(a));
    if (comp.rows() != rows || comp.cols() != cols) throw DimensionMismatch("cocycle shape");
    for (std::size_t x = 0; x < rows; ++x) {
      for (std::size_t y = 0; y < cols; ++y) rhs.set(l.arrow_offset[a] + x * cols + y, 0, comp.at(x, y));
    }
  }
  return solve(d, rhs).has_value();
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count()) {
    throw DimensionMismatch("euler_form: dimension vectors do not match the quiver");
  }
  long long s = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    s += static_cast<long long>(d[v]) * static_cast<long long>(e[v]);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    s -= static_cast<long long>(d[q.source(a)]) * static_cast<long long>(e[q.target(a)]);
  }
  return s;
}

bool is_brick(const Representation& m) {
  if (m.is_zero()) throw InvalidArgument("is_brick: zero representation");
  return hom_dim(m, m) == 1;
}

bool are_orthogonal_bricks(const Representation& x, const Representation& y) {
  require_compatible(x, y, "are_orthogonal_bricks");
  if (x.is_zero() || y.is_zero()) return false;
  return is_brick(x) && is_brick(y) && hom_dim(x, y) == 0 && hom_dim(y, x) == 0;
}

bool is_exceptional(const Representation& m) { return is_brick(m) && ext1_dim(m, m) == 0; }

bool has_brick_summand(const Representation& m, const Representation& y) {
  require_compatible(m, y, "has_brick_summand");
  if (!is_brick(y)) throw InvalidArgument("has_brick_summand: second argument is not a brick");
  HomBasis into = hom_basis(y, m);
  if (into.dim() == 0) return false;
  HomBasis out = hom_basis(m, y);
  // The pairing (f, g) -> f g lands in End(y) = k; it is nonzero iff it is
  // nonzero on some pair of basis elements.
  for (const auto& g : into.basis) {
    for (const auto& f : out.basis) {
      for (std::size_t v = 0; v < y.dims().size(); ++v) {
        if (!(f.map(v) * g.map(v)).is_zero()) return true;
      }
    }
  }
  return false;
}

bool is_reduced_kronecker(const Representation& n) {
  auto orient = kronecker_orientation(n.quiver());
  if (!orient) throw InvalidArgument("is_reduced_kronecker: quiver is not a Kronecker quiver");
  const std::size_t source = orient->first;
  Matrix stacked(n.field(), 0, n.dim(source));
  for (const auto& m : n.matrices()) stacked = vstack(stacked, m);
  return rank(stacked) == n.dim(source);
}

}  // namespace qgrass
