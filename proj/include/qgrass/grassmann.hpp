#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qgrass/representation.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

struct EnumerationOptions {
  // Maximum number of search nodes (partial subspace choices) per call.
  std::uint64_t budget = kDefaultBudget;
  // Worker threads; results do not depend on it.
  std::size_t jobs = 1;
};

// F_p-rational points of the quiver Grassmannian G_d(M).
struct GrassmannianReport {
  std::shared_ptr<const Representation> parent;
  DimVector dimvec;
  std::vector<SubmodulePoint> points;
  std::uint64_t count = 0;
  Field field = Field::prime(2);
};

// Calls visit once per submodule of dimension vector d (prime fields only).
// Vertices are fixed in topological order; at each vertex the subspace is
// built one echelon row at a time (largest pivot first) inside the current
// quotient by the forced image of the predecessors, and each partial choice
// is pruned by propagating lower bounds (generated images) forward and
// upper bounds (preimages of forced subspaces) backward. visit always runs
// on the calling thread, in the same order for every value of jobs. Throws
// InvalidArgument over Q and BudgetExceeded when the node budget runs out.
void for_each_submodule(const Representation& m, const DimVector& d,
                        const EnumerationOptions& opts,
                        const std::function<void(const SubmodulePoint&)>& visit);

// Points sorted lexicographically by their subspaces in topological vertex order.
GrassmannianReport enumerate_submodules(const Representation& m, const DimVector& d,
                                        const EnumerationOptions& opts = {});
std::uint64_t count_submodules(const Representation& m, const DimVector& d,
                               const EnumerationOptions& opts = {});

// Dimension-(1,1) submodules of a Kronecker representation with a nonzero
// arrow map, i.e. the bristles inside n.
GrassmannianReport bristle_points(const Representation& n, const EnumerationOptions& opts = {});

// Dimension vector (1,1) in (source, sink) coordinates of a Kronecker quiver.
DimVector kronecker_dims(const Quiver& q, std::size_t source_dim, std::size_t sink_dim);

}  // namespace qgrass
