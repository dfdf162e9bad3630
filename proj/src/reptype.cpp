#include "qgrass/reptype.hpp"

#include <algorithm>
#include <array>

#include "qgrass/error.hpp"

namespace qgrass {

std::string to_string(RepType kind) {
  switch (kind) {
    case RepType::Finite:
      return "finite";
    case RepType::Tame:
      return "tame";
    case RepType::Wild:
      return "wild";
  }
  return "?";
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite:
      return "positive_definite";
    case Definiteness::PositiveSemidefinite:
      return "positive_semidefinite";
    case Definiteness::Indefinite:
      return "indefinite";
  }
  return "?";
}

namespace {

std::vector<std::vector<std::size_t>> multiplicities(const Quiver& q) {
  std::vector<std::vector<std::size_t>> mult(q.vertex_count(),
                                             std::vector<std::size_t>(q.vertex_count(), 0));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    ++mult[q.source(a)][q.target(a)];
    ++mult[q.target(a)][q.source(a)];
  }
  return mult;
}

// Number of vertices on the arm leaving `center` through `first`.
std::size_t arm_length(const std::vector<std::vector<std::size_t>>& adj, std::size_t center,
                       std::size_t first) {
  std::size_t len = 1, prev = center, cur = first;
  while (adj[cur].size() == 2) {
    std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    ++len;
  }
  return len;
}

ClassificationResult classify_tree(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> branch;
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    max_deg = std::max(max_deg, adj[v].size());
    if (adj[v].size() >= 3) branch.push_back(v);
  }
  if (max_deg <= 2) return {RepType::Finite, "A" + std::to_string(n)};
  if (max_deg >= 5) return {RepType::Wild, ""};
  if (max_deg == 4) {
    if (n == 5) return {RepType::Tame, "~D4"};
    return {RepType::Wild, ""};
  }
  if (branch.size() == 1) {
    std::size_t c = branch[0];
    std::array<std::size_t, 3> arms{};
    for (std::size_t k = 0; k < 3; ++k) arms[k] = arm_length(adj, c, adj[c][k]);
    std::sort(arms.begin(), arms.end());
    const auto [p, r, s] = arms;
    if (p == 1 && r == 1) return {RepType::Finite, "D" + std::to_string(n)};
    if (p == 1 && r == 2 && s <= 4) return {RepType::Finite, "E" + std::to_string(n)};
    if (p == 2 && r == 2 && s == 2) return {RepType::Tame, "~E6"};
    if (p == 1 && r == 3 && s == 3) return {RepType::Tame, "~E7"};
    if (p == 1 && r == 2 && s == 5) return {RepType::Tame, "~E8"};
    return {RepType::Wild, ""};
  }
  if (branch.size() == 2) {
    // ~D_{n-1}: both branch vertices carry two leaves.
    for (std::size_t c : branch) {
      std::size_t leaves = std::count_if(adj[c].begin(), adj[c].end(),
                                         [&](std::size_t w) { return adj[w].size() == 1; });
      if (leaves != 2) return {RepType::Wild, ""};
    }
    return {RepType::Tame, "~D" + std::to_string(n - 1)};
  }
  return {RepType::Wild, ""};
}

}  // namespace

ClassificationResult classify(const Quiver& q) {
  if (!q.is_connected()) throw InvalidArgument("classify: quiver is not connected");
  const std::size_t n = q.vertex_count();
  auto mult = multiplicities(q);
  std::size_t edges = 0, max_mult = 0;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mult[i][j] == 0) continue;
      adj[i].push_back(j);
      max_mult = std::max(max_mult, mult[i][j]);
      if (i < j) edges += mult[i][j];
    }
  }
  if (n == 1) return {RepType::Finite, "A1"};
  if (max_mult >= 3) return {RepType::Wild, ""};
  if (max_mult == 2) {
    if (n == 2) return {RepType::Tame, "~A1"};
    return {RepType::Wild, ""};
  }
  if (edges == n - 1) return classify_tree(adj);
  bool cycle = edges == n && std::all_of(adj.begin(), adj.end(),
                                         [](const auto& nb) { return nb.size() == 2; });
  if (cycle) return {RepType::Tame, "~A" + std::to_string(n - 1)};
  return {RepType::Wild, ""};
}

TitsResult tits_definiteness(const Quiver& q) {
  if (!q.is_connected()) throw InvalidArgument("tits_definiteness: quiver is not connected");
  const std::size_t n = q.vertex_count();
  auto mult = multiplicities(q);
  // Gram matrix of 2 q(d): 2 on the diagonal, minus the edge multiplicity off it.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = i == j ? mpq_class(2) : mpq_class(-static_cast<long>(mult[i][j]));
    }
  }
  Matrix gram(Field::rational(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram.set(i, j, Scalar::from_rational(Field::rational(), a[i][j]));
  }

  std::vector<bool> done(n, false);
  bool singular = false;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (sgn(a[i][i]) < 0) return {Definiteness::Indefinite, std::nullopt};
      if (pivot == n && sgn(a[i][i]) > 0) pivot = i;
    }
    if (pivot == n) {
      // Remaining diagonal is zero: semidefinite iff the remaining block is zero.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[i] && !done[j] && sgn(a[i][j]) != 0) {
            return {Definiteness::Indefinite, std::nullopt};
          }
        }
      }
      singular = true;
      break;
    }
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][pivot]) == 0) continue;
      mpq_class factor = a[i][pivot] / a[pivot][pivot];
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) a[i][j] -= factor * a[pivot][j];
      }
    }
  }
  if (!singular) return {Definiteness::PositiveDefinite, std::nullopt};
  return {Definiteness::PositiveSemidefinite, kernel_basis(gram)};
}

ExtremalVertex find_removable_extremal_vertex(const Quiver& q) {
  if (!q.is_connected()) throw NotApplicable("quiver is not connected");
  if (q.vertex_count() < 3) throw NotApplicable("quiver has fewer than three vertices");
  if (classify(q).kind != RepType::Wild) throw NotApplicable("quiver is not wild");
  std::vector<std::size_t> candidates(q.vertex_count());
  for (std::size_t v = 0; v < candidates.size(); ++v) candidates[v] = v;
  std::sort(candidates.begin(), candidates.end(),
            [&](std::size_t a, std::size_t b) { return q.vertex(a) < q.vertex(b); });
  for (std::size_t v : candidates) {
    if (!q.is_sink(v) && !q.is_source(v)) continue;
    Quiver rest = q.without_vertex(q.vertex(v));
    if (!rest.is_connected()) continue;
    if (classify(rest).kind == RepType::Finite) continue;
    return {q.vertex(v), rest};
  }
  throw InternalError("no removable sink or source found in a wild quiver");
}

}  // namespace qgrass
