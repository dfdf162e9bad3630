#pragma once

#include <optional>
#include <string>

#include "qgrass/matrix.hpp"
#include "qgrass/quiver.hpp"

namespace qgrass {

enum class RepType { Finite, Tame, Wild };

std::string to_string(RepType kind);

struct ClassificationResult {
  RepType kind;
  // "A4", "D5", "E6", ... for Dynkin graphs, "~A1", "~D4", "~E8", ... for
  // extended Dynkin graphs, empty when wild.
  std::string witness;
};

// Gabriel trichotomy by recognizing the underlying multigraph. Orientation
// plays no role. Throws InvalidArgument for a disconnected quiver.
ClassificationResult classify(const Quiver& q);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

std::string to_string(Definiteness d);

struct TitsResult {
  Definiteness kind;
  // Rows span the radical of the form when it is semidefinite and singular.
  std::optional<Matrix> radical;
};

// Definiteness of q(d) = <d,d> through exact symmetric elimination over Q.
// Throws InvalidArgument for a disconnected quiver.
TitsResult tits_definiteness(const Quiver& q);

struct ExtremalVertex {
  std::string vertex;
  Quiver remainder;
};

// A sink or source whose removal leaves a connected representation-infinite
// quiver; the smallest such vertex id. Throws NotApplicable unless q is
// connected, wild and has at least three vertices, and InternalError if no
// candidate exists.
ExtremalVertex find_removable_extremal_vertex(const Quiver& q);

}  // namespace qgrass
