#include "qgrass/isomorphism.hpp"

#include <random>

#include "qgrass/error.hpp"

namespace qgrass {

std::vector<Matrix> combine(const HomBasis& hom, const std::vector<Scalar>& coeffs) {
  const Representation& src = *hom.source;
  const Representation& tgt = *hom.target;
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < src.dims().size(); ++v) {
    Matrix acc(src.field(), tgt.dim(v), src.dim(v));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      acc += hom.basis[k].map(v).scaled(coeffs[k]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

std::optional<std::vector<Matrix>> exhaustive(
    const HomBasis& hom, const std::function<bool(const std::vector<Matrix>&)>& pred,
    std::uint64_t budget) {
  std::optional<std::vector<Matrix>> found;
  for_each_coefficient_vector(hom.source->field(), hom.dim(), budget,
                              [&](const std::vector<Scalar>& c) {
                                auto maps = combine(hom, c);
                                if (pred(maps)) {
                                  found = std::move(maps);
                                  return false;
                                }
                                return true;
                              });
  return found;
}

}  // namespace

std::optional<std::vector<Matrix>> search_hom(
    const HomBasis& hom, const std::function<bool(const std::vector<Matrix>&)>& pred,
    const SearchOptions& opts, std::size_t total_dim) {
  const Field& f = hom.source->field();
  if (f.is_prime() &&
      saturating_power(f.characteristic(), hom.dim()) <= opts.exhaustive_limit) {
    return exhaustive(hom, pred, opts.budget);
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_trials; ++t) {
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < hom.dim(); ++k) {
      if (f.is_prime()) {
        std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
        c.push_back(Scalar::from_residue(f, dist(rng)));
      } else {
        std::uniform_int_distribution<int> dist(-3, 3);
        c.push_back(Scalar::from_int(f, dist(rng)));
      }
    }
    auto maps = combine(hom, c);
    if (pred(maps)) return maps;
  }
  if (f.is_prime() && total_dim <= opts.fallback_total_dim) {
    return exhaustive(hom, pred, opts.budget);
  }
  throw Inconclusive("search over a Hom space of dimension " + std::to_string(hom.dim()) +
                     " failed after " + std::to_string(opts.random_trials) + " random trials");
}

std::optional<Morphism> find_isomorphism(const Representation& m1, const Representation& m2,
                                         const SearchOptions& opts) {
  require_compatible(m1, m2, "is_isomorphic");
  if (m1.dims() != m2.dims()) return std::nullopt;
  HomBasis hom = hom_basis(m1, m2);
  if (hom.dim() != hom_dim(m2, m1) || hom.dim() != hom_dim(m1, m1) ||
      hom.dim() != hom_dim(m2, m2)) {
    return std::nullopt;
  }
  auto pred = [](const std::vector<Matrix>& maps) {
    for (const auto& m : maps) {
      if (!is_invertible(m)) return false;
    }
    return true;
  };
  auto maps = search_hom(hom, pred, opts, m1.total_dim());
  if (!maps) return std::nullopt;
  return Morphism(hom.source, hom.target, std::move(*maps));
}

bool is_isomorphic(const Representation& m1, const Representation& m2,
                   const SearchOptions& opts) {
  return find_isomorphism(m1, m2, opts).has_value();
}

namespace {

enum class Fitting { Nilpotent, Invertible, Mixed };

Fitting fitting_type(const std::vector<Matrix>& maps) {
  bool all_invertible = true, all_nilpotent = true;
  for (const auto& f : maps) {
    const std::size_t d = f.rows();
    if (d == 0) continue;
    if (rank(f) != d) all_invertible = false;
    Matrix power = f;
    for (std::size_t k = 1; k < d; ++k) power = power * f;
    if (!power.is_zero()) all_nilpotent = false;
    if (!all_invertible && !all_nilpotent) return Fitting::Mixed;
  }
  if (all_nilpotent) return Fitting::Nilpotent;
  if (all_invertible) return Fitting::Invertible;
  return Fitting::Mixed;
}

}  // namespace

bool is_indecomposable(const Representation& m, const SearchOptions& opts) {
  if (m.is_zero()) return false;
  HomBasis end = hom_basis(m, m);
  if (end.dim() == 1) return true;
  auto splitting = search_hom(
      end, [](const std::vector<Matrix>& f) { return fitting_type(f) == Fitting::Mixed; }, opts,
      m.total_dim());
  return !splitting.has_value();
}

}  // namespace qgrass
