#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qgrass/matrix.hpp"
#include "qgrass/quiver.hpp"

namespace qgrass {

// Dimension vector indexed by the quiver's vertex order.
using DimVector = std::vector<std::size_t>;

DimVector add_dims(const DimVector& a, const DimVector& b);
DimVector scale_dims(const DimVector& a, std::size_t k);

// A vector space per vertex and a matrix per arrow. The matrix of an arrow
// a: i -> j has shape dims[j] x dims[i] (columns index the source space).
class Representation {
 public:
  // Throws DimensionMismatch on any shape or field inconsistency.
  Representation(QuiverPtr quiver, Field field, DimVector dims, std::vector<Matrix> matrices);

  static Representation zero(QuiverPtr quiver, const Field& field);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Field& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& matrix(std::size_t arrow) const { return matrices_[arrow]; }
  const Matrix& matrix(const std::string& arrow_id) const;
  const std::vector<Matrix>& matrices() const { return matrices_; }

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Matrix> matrices_;
};

// Throws DimensionMismatch unless both live on equal quivers over one field.
void require_compatible(const Representation& a, const Representation& b, const char* what);

// Family of vertex maps f_v: M_v -> N_v satisfying N_a f_i = f_j M_a for
// every arrow a: i -> j.
class Morphism {
 public:
  // Throws InvalidArgument unless the maps have the right shapes and
  // intertwine the arrow matrices.
  Morphism(std::shared_ptr<const Representation> source,
           std::shared_ptr<const Representation> target, std::vector<Matrix> maps);

  const Representation& source() const { return *source_; }
  const Representation& target() const { return *target_; }
  const std::shared_ptr<const Representation>& source_ptr() const { return source_; }
  const std::shared_ptr<const Representation>& target_ptr() const { return target_; }
  const Matrix& map(std::size_t v) const { return maps_[v]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

 private:
  std::shared_ptr<const Representation> source_;
  std::shared_ptr<const Representation> target_;
  std::vector<Matrix> maps_;
};

bool intertwines(const Representation& source, const Representation& target,
                 const std::vector<Matrix>& maps);

// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity_morphism(std::shared_ptr<const Representation> m);

// A point of a quiver Grassmannian: one canonical basis per vertex. The
// parent representation is held by whoever enumerated the point.
struct SubmodulePoint {
  std::vector<Matrix> subspaces;

  DimVector dims() const;
  friend bool operator==(const SubmodulePoint& a, const SubmodulePoint& b) {
    return a.subspaces == b.subspaces;
  }
  friend bool operator<(const SubmodulePoint& a, const SubmodulePoint& b) {
    return a.subspaces < b.subspaces;
  }
};

// Arrow-stability of a tuple of subspaces.
bool is_submodule(const Representation& parent, const SubmodulePoint& pt);

struct SubRepresentation {
  Representation sub;
  Morphism inclusion;
};

struct QuotientRepresentation {
  Representation quotient;
  Morphism projection;
};

// Throws NotASubmodule when the point is not arrow-stable. Each subspace is
// canonicalized first; the sub basis is the canonical basis rows.
SubRepresentation sub_representation(const Representation& parent, const SubmodulePoint& pt);
QuotientRepresentation quotient_representation(const Representation& parent,
                                               const SubmodulePoint& pt);

// Simple representation at a vertex.
Representation simple(QuiverPtr quiver, const Field& field, const std::string& vertex);
// Indecomposable projective P(v): paths starting at v. Indecomposable
// injective I(v): paths ending at v. Basis order: paths sorted by length,
// then by arrow-id sequence.
Representation projective(QuiverPtr quiver, const Field& field, const std::string& vertex);
Representation injective(QuiverPtr quiver, const Field& field, const std::string& vertex);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_power(const Representation& m, std::size_t copies);

// Full subquiver on `keep`; arrows with an endpoint outside are dropped.
Representation restrict_vertices(const Representation& m, const std::vector<std::string>& keep);
// Same vertices, only the listed arrows.
Representation restrict_arrows(const Representation& m, const std::vector<std::string>& keep);
// Extension by zero to a larger quiver whose induced subquiver on m's
// vertices equals m's quiver.
Representation extend_by_zero(const Representation& m, QuiverPtr larger);
// Transposed matrices on the opposite quiver.
Representation dual(const Representation& m);

// Replaces M_a by g_j M_a g_i^{-1} for invertible g_v.
Representation change_basis(const Representation& m, const std::vector<Matrix>& g);

// Uniformly random entries in F_p (or small integers for Q).
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng);
Representation random_representation(QuiverPtr quiver, const Field& field, const DimVector& dims,
                                     std::mt19937_64& rng);

}  // namespace qgrass
