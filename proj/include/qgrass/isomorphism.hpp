#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qgrass/homext.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

// Budgets for searches inside a Hom space.
//
// Over F_p the whole space is scanned when it has at most
// `exhaustive_limit` elements. Larger spaces get `random_trials` seeded
// uniform samples; if none succeeds and the representations have total
// dimension at most `fallback_total_dim`, the space is scanned anyway
// (bounded by `budget`), otherwise the search is Inconclusive. For a
// property held by a fraction r of the space the random phase misses with
// probability (1 - r)^random_trials. Over Q only the random phase runs,
// with coefficients in [-3, 3].
struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_limit = 1'000'000;
  std::size_t random_trials = 200;
  std::size_t fallback_total_dim = 6;
};

// Linear combination sum_k c_k basis_k, vertex by vertex.
std::vector<Matrix> combine(const HomBasis& hom, const std::vector<Scalar>& coeffs);

// First element of span(hom) satisfying pred, following SearchOptions.
// nullopt means the search was exhaustive and nothing qualifies. Throws
// Inconclusive when only the random phase could run and it failed.
std::optional<std::vector<Matrix>> search_hom(
    const HomBasis& hom, const std::function<bool(const std::vector<Matrix>&)>& pred,
    const SearchOptions& opts, std::size_t total_dim);

// An isomorphism m1 -> m2 if one exists.
std::optional<Morphism> find_isomorphism(const Representation& m1, const Representation& m2,
                                         const SearchOptions& opts = {});
bool is_isomorphic(const Representation& m1, const Representation& m2,
                   const SearchOptions& opts = {});

// A zero representation is not indecomposable. A brick always is; otherwise
// m decomposes iff End(m) has an element that is neither nilpotent nor
// invertible (Fitting), which is what the search looks for.
bool is_indecomposable(const Representation& m, const SearchOptions& opts = {});

}  // namespace qgrass
