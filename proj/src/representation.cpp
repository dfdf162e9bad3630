#include "qgrass/representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgrass/error.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

DimVector add_dims(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension vectors of different length");
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DimVector scale_dims(const DimVector& a, std::size_t k) {
  DimVector out(a);
  for (auto& x : out) x *= k;
  return out;
}

Representation::Representation(QuiverPtr quiver, Field field, DimVector dims,
                               std::vector<Matrix> matrices)
    : quiver_(std::move(quiver)),
      field_(field),
      dims_(std::move(dims)),
      matrices_(std::move(matrices)) {
  if (!quiver_) throw InvalidArgument("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) {
    throw DimensionMismatch("dimension vector does not match the quiver's vertices");
  }
  if (matrices_.size() != quiver_->arrow_count()) {
    throw DimensionMismatch("expected one matrix per arrow");
  }
  for (std::size_t a = 0; a < matrices_.size(); ++a) {
    const Matrix& m = matrices_[a];
    if (!(m.field() == field_)) throw DimensionMismatch("arrow matrix over the wrong field");
    std::size_t rows = dims_[quiver_->target(a)];
    std::size_t cols = dims_[quiver_->source(a)];
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionMismatch("matrix for arrow '" + quiver_->arrow(a).id + "' is " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
}

Representation Representation::zero(QuiverPtr quiver, const Field& field) {
  DimVector dims(quiver->vertex_count(), 0);
  std::vector<Matrix> mats(quiver->arrow_count(), Matrix(field, 0, 0));
  return Representation(std::move(quiver), field, dims, mats);
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

const Matrix& Representation::matrix(const std::string& arrow_id) const {
  return matrices_[quiver_->arrow_index(arrow_id)];
}

bool operator==(const Representation& a, const Representation& b) {
  return *a.quiver_ == *b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ &&
         a.matrices_ == b.matrices_;
}

void require_compatible(const Representation& a, const Representation& b, const char* what) {
  if (!(a.quiver() == b.quiver())) {
    throw DimensionMismatch(std::string(what) + ": representations live on different quivers");
  }
  if (!(a.field() == b.field())) {
    throw DimensionMismatch(std::string(what) + ": representations over different fields");
  }
}

bool intertwines(const Representation& source, const Representation& target,
                 const std::vector<Matrix>& maps) {
  const Quiver& q = source.quiver();
  if (maps.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < maps.size(); ++v) {
    if (maps[v].rows() != target.dim(v) || maps[v].cols() != source.dim(v)) return false;
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::size_t i = q.source(a), j = q.target(a);
    if (!(target.matrix(a) * maps[i] == maps[j] * source.matrix(a))) return false;
  }
  return true;
}

Morphism::Morphism(std::shared_ptr<const Representation> source,
                   std::shared_ptr<const Representation> target, std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  require_compatible(*source_, *target_, "morphism");
  if (!intertwines(*source_, *target_, maps_)) {
    throw InvalidArgument("vertex maps do not define a morphism");
  }
}

bool Morphism::is_zero() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool Morphism::is_injective() const {
  for (const auto& m : maps_) {
    if (rank(m) != m.cols()) return false;
  }
  return true;
}

bool Morphism::is_surjective() const {
  for (const auto& m : maps_) {
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

bool Morphism::is_isomorphism() const { return is_injective() && is_surjective(); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) throw DimensionMismatch("compose: target/source mismatch");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.map(v) * f.map(v));
  return Morphism(f.source_ptr(), g.target_ptr(), std::move(maps));
}

Morphism identity_morphism(std::shared_ptr<const Representation> m) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < m->dims().size(); ++v) {
    maps.push_back(Matrix::identity(m->field(), m->dim(v)));
  }
  return Morphism(m, m, std::move(maps));
}

DimVector SubmodulePoint::dims() const {
  DimVector d;
  for (const auto& s : subspaces) d.push_back(s.rows());
  return d;
}

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && basis.entry_is_zero(i, c)) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

std::vector<Matrix> canonical_subspaces(const Representation& parent, const SubmodulePoint& pt) {
  const Quiver& q = parent.quiver();
  if (pt.subspaces.size() != q.vertex_count()) {
    throw DimensionMismatch("submodule point needs one subspace per vertex");
  }
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const Matrix& s = pt.subspaces[v];
    if (s.cols() != parent.dim(v) || !(s.field() == parent.field())) {
      throw DimensionMismatch("subspace at vertex '" + q.vertex(v) + "' has the wrong ambient");
    }
    bases.push_back(span_of(s));
  }
  return bases;
}

// Arrow matrix of the induced subrepresentation, or nullopt when the image
// leaves the target subspace.
std::optional<Matrix> restricted_arrow(const Matrix& arrow, const Matrix& src_basis,
                                       const Matrix& tgt_basis) {
  Matrix image = arrow * src_basis.transpose();
  Matrix coords = image.select_rows(pivot_columns(tgt_basis));
  if (!(tgt_basis.transpose() * coords == image)) return std::nullopt;
  return coords;
}

}  // namespace

bool is_submodule(const Representation& parent, const SubmodulePoint& pt) {
  std::vector<Matrix> bases = canonical_subspaces(parent, pt);
  const Quiver& q = parent.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (!restricted_arrow(parent.matrix(a), bases[q.source(a)], bases[q.target(a)])) return false;
  }
  return true;
}

SubRepresentation sub_representation(const Representation& parent, const SubmodulePoint& pt) {
  std::vector<Matrix> bases = canonical_subspaces(parent, pt);
  const Quiver& q = parent.quiver();
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto m = restricted_arrow(parent.matrix(a), bases[q.source(a)], bases[q.target(a)]);
    if (!m) throw NotASubmodule("subspaces are not stable under arrow '" + q.arrow(a).id + "'");
    mats.push_back(*m);
  }
  DimVector dims;
  std::vector<Matrix> incl;
  for (const auto& b : bases) {
    dims.push_back(b.rows());
    incl.push_back(b.transpose());
  }
  auto sub = std::make_shared<const Representation>(parent.quiver_ptr(), parent.field(), dims,
                                                    std::move(mats));
  auto par = std::make_shared<const Representation>(parent);
  return SubRepresentation{*sub, Morphism(sub, par, std::move(incl))};
}

QuotientRepresentation quotient_representation(const Representation& parent,
                                               const SubmodulePoint& pt) {
  if (!is_submodule(parent, pt)) throw NotASubmodule("subspaces are not arrow-stable");
  std::vector<Matrix> bases = canonical_subspaces(parent, pt);
  const Quiver& q = parent.quiver();
  std::vector<QuotientChart> charts;
  for (const auto& b : bases) charts.emplace_back(b);
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    mats.push_back(charts[q.target(a)].projection() * parent.matrix(a) *
                   charts[q.source(a)].lift());
  }
  DimVector dims;
  std::vector<Matrix> proj;
  for (const auto& c : charts) {
    dims.push_back(c.dim());
    proj.push_back(c.projection());
  }
  auto quot = std::make_shared<const Representation>(parent.quiver_ptr(), parent.field(), dims,
                                                     std::move(mats));
  auto par = std::make_shared<const Representation>(parent);
  return QuotientRepresentation{*quot, Morphism(par, quot, std::move(proj))};
}

Representation simple(QuiverPtr quiver, const Field& field, const std::string& vertex) {
  std::size_t s = quiver->vertex_index(vertex);
  DimVector dims(quiver->vertex_count(), 0);
  dims[s] = 1;
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    mats.emplace_back(field, dims[quiver->target(a)], dims[quiver->source(a)]);
  }
  return Representation(std::move(quiver), field, dims, std::move(mats));
}

namespace {

using Path = std::vector<std::size_t>;  // arrow indices, first arrow first

}  // namespace

Representation projective(QuiverPtr quiver, const Field& field, const std::string& vertex) {
  const Quiver& q = *quiver;
  std::size_t start = q.vertex_index(vertex);
  // paths_at[w] lists paths start -> w, sorted by (length, arrow ids).
  std::vector<std::vector<Path>> paths_at(q.vertex_count());
  std::vector<std::pair<Path, std::size_t>> frontier{{Path{}, start}};
  while (!frontier.empty()) {
    std::vector<std::pair<Path, std::size_t>> next;
    for (auto& [path, end] : frontier) {
      paths_at[end].push_back(path);
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.source(a) != end) continue;
        Path ext = path;
        ext.push_back(a);
        next.emplace_back(ext, q.target(a));
      }
    }
    frontier = std::move(next);
  }
  auto key = [&](const Path& p) {
    std::vector<std::string> ids;
    for (std::size_t a : p) ids.push_back(q.arrow(a).id);
    return std::make_pair(p.size(), ids);
  };
  DimVector dims(q.vertex_count());
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    std::sort(paths_at[w].begin(), paths_at[w].end(),
              [&](const Path& x, const Path& y) { return key(x) < key(y); });
    dims[w] = paths_at[w].size();
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::size_t i = q.source(a), j = q.target(a);
    Matrix m(field, dims[j], dims[i]);
    for (std::size_t c = 0; c < paths_at[i].size(); ++c) {
      Path ext = paths_at[i][c];
      ext.push_back(a);
      auto it = std::find(paths_at[j].begin(), paths_at[j].end(), ext);
      m.set_int(static_cast<std::size_t>(it - paths_at[j].begin()), c, 1);
    }
    mats.push_back(m);
  }
  return Representation(std::move(quiver), field, dims, std::move(mats));
}

Representation injective(QuiverPtr quiver, const Field& field, const std::string& vertex) {
  auto op = std::make_shared<const Quiver>(quiver->opposite());
  Representation p = projective(op, field, vertex);
  std::vector<Matrix> mats;
  for (const auto& m : p.matrices()) mats.push_back(m.transpose());
  return Representation(std::move(quiver), field, p.dims(), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_compatible(a, b, "direct_sum");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < a.matrices().size(); ++i) {
    mats.push_back(diag_sum(a.matrix(i), b.matrix(i)));
  }
  return Representation(a.quiver_ptr(), a.field(), add_dims(a.dims(), b.dims()), std::move(mats));
}

Representation direct_power(const Representation& m, std::size_t copies) {
  Representation out = Representation::zero(m.quiver_ptr(), m.field());
  for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, m);
  return out;
}

namespace {

Representation restrict_to(const Representation& m, QuiverPtr sub) {
  DimVector dims;
  for (const auto& v : sub->vertices()) dims.push_back(m.dim(m.quiver().vertex_index(v)));
  std::vector<Matrix> mats;
  for (const auto& a : sub->arrows()) mats.push_back(m.matrix(a.id));
  return Representation(std::move(sub), m.field(), dims, std::move(mats));
}

}  // namespace

Representation restrict_vertices(const Representation& m, const std::vector<std::string>& keep) {
  return restrict_to(m, std::make_shared<const Quiver>(m.quiver().induced(keep)));
}

Representation restrict_arrows(const Representation& m, const std::vector<std::string>& keep) {
  return restrict_to(m, std::make_shared<const Quiver>(m.quiver().with_arrows(keep)));
}

Representation extend_by_zero(const Representation& m, QuiverPtr larger) {
  const Quiver& big = *larger;
  if (!(big.induced(m.quiver().vertices()) == m.quiver())) {
    throw DimensionMismatch("extend_by_zero: quiver is not the induced subquiver");
  }
  DimVector dims(big.vertex_count(), 0);
  for (std::size_t v = 0; v < big.vertex_count(); ++v) {
    if (m.quiver().has_vertex(big.vertex(v))) dims[v] = m.dim(m.quiver().vertex_index(big.vertex(v)));
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < big.arrow_count(); ++a) {
    const Arrow& arr = big.arrow(a);
    if (m.quiver().has_vertex(arr.source) && m.quiver().has_vertex(arr.target)) {
      mats.push_back(m.matrix(arr.id));
    } else {
      mats.emplace_back(m.field(), dims[big.target(a)], dims[big.source(a)]);
    }
  }
  return Representation(std::move(larger), m.field(), dims, std::move(mats));
}

Representation dual(const Representation& m) {
  auto op = std::make_shared<const Quiver>(m.quiver().opposite());
  std::vector<Matrix> mats;
  for (const auto& x : m.matrices()) mats.push_back(x.transpose());
  return Representation(op, m.field(), m.dims(), std::move(mats));
}

Representation change_basis(const Representation& m, const std::vector<Matrix>& g) {
  const Quiver& q = m.quiver();
  if (g.size() != q.vertex_count()) throw DimensionMismatch("change_basis: one matrix per vertex");
  std::vector<Matrix> inv;
  for (const auto& x : g) inv.push_back(inverse(x));
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    mats.push_back(g[q.target(a)] * m.matrix(a) * inv[q.source(a)]);
  }
  return Representation(m.quiver_ptr(), m.field(), m.dims(), std::move(mats));
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
    for (auto& x : m.residues()) x = dist(rng);
  } else {
    std::uniform_int_distribution<int> dist(-3, 3);
    for (auto& x : m.rationals()) x = dist(rng);
  }
  return m;
}

Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Representation random_representation(QuiverPtr quiver, const Field& field, const DimVector& dims,
                                     std::mt19937_64& rng) {
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    mats.push_back(random_matrix(field, dims[quiver->target(a)], dims[quiver->source(a)], rng));
  }
  return Representation(std::move(quiver), field, dims, std::move(mats));
}

}  // namespace qgrass
