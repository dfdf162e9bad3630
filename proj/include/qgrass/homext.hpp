#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qgrass/representation.hpp"

namespace qgrass {

// Hom and Ext^1 for representations of an acyclic quiver. Both come from the
// differential
//
//   d0 : (+)_v Hom_k(M_v, N_v) -> (+)_{a:i->j} Hom_k(M_i, N_j),
//   d0(f)_a = N_a f_i - f_j M_a,
//
// with Hom(M,N) = ker d0 and, the path algebra being hereditary,
// Ext^1(M,N) = coker d0.
//
// Coordinates: f_v is flattened row-major, vertices in quiver order; the
// cochain for arrow a is flattened row-major, arrows in quiver order.
Matrix hom_differential(const Representation& m, const Representation& n);

struct HomBasis {
  std::shared_ptr<const Representation> source;
  std::shared_ptr<const Representation> target;
  std::vector<Morphism> basis;

  std::size_t dim() const { return basis.size(); }
};

HomBasis hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

// A 1-cochain: one matrix Hom_k(M_i, N_j) per arrow a: i -> j.
struct ExtCocycle {
  std::vector<Matrix> components;
};

struct Ext1Result {
  std::size_t dim = 0;
  // Canonical complement of im d0: unit cochains at the non-pivot
  // coordinates of the RREF of the image.
  std::vector<ExtCocycle> basis;
};

Ext1Result ext1(const Representation& m, const Representation& n);
std::size_t ext1_dim(const Representation& m, const Representation& n);

// True iff the cochain is d0 of some vertex family, i.e. the extension splits.
bool is_coboundary(const Representation& m, const Representation& n, const ExtCocycle& c);

// <d,e> = sum_v d_v e_v - sum_{a:i->j} d_i e_j
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// End(m) = k. Throws InvalidArgument on the zero representation.
bool is_brick(const Representation& m);
bool are_orthogonal_bricks(const Representation& x, const Representation& y);
// Brick without self-extensions.
bool is_exceptional(const Representation& m);

// Since End(y) = k, y is a summand of m iff f g != 0 for some
// g in Hom(y,m), f in Hom(m,y).
// Throws InvalidArgument when y is not a brick.
bool has_brick_summand(const Representation& m, const Representation& y);

// No summand isomorphic to the simple injective at the source vertex, i.e.
// the arrow matrices have zero joint kernel. Throws InvalidArgument unless
// the quiver is Kronecker-shaped.
bool is_reduced_kronecker(const Representation& n);

}  // namespace qgrass
