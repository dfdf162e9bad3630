#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/error.hpp"
#include "qgrass/reptype.hpp"

using namespace qgrass;

namespace {

Quiver tree(std::vector<std::pair<int, int>> edges, int n) {
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  int k = 0;
  for (auto [a, b] : edges) arrows.push_back({"e" + std::to_string(k++), verts[a], verts[b]});
  return Quiver(verts, arrows);
}

}  // namespace

TEST_CASE("named diagrams") {
  CHECK(classify(make_linear(4)).witness == "A4");
  CHECK(classify(make_kronecker(1)).witness == "A2");
  CHECK(classify(make_kronecker(2)).witness == "~A1");
  CHECK(classify(make_kronecker(3)).kind == RepType::Wild);
  CHECK(classify(tree({{0, 1}, {1, 2}, {1, 3}}, 4)).witness == "D4");
  CHECK(classify(tree({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 5)).witness == "~D4");
  CHECK(classify(tree({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, 6)).witness == "E6");
  CHECK(classify(tree({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}, 7)).witness == "~E6");
  CHECK(classify(tree({{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}}, 6)).witness == "D6");
  CHECK(classify(tree({{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}, 6)).witness == "~D5");
  CHECK(classify(tree({{0, 1}, {1, 2}, {0, 2}}, 3)).witness == "~A2");
  CHECK(classify(tree({{0, 1}, {1, 2}, {0, 2}, {2, 3}}, 4)).kind == RepType::Wild);
  CHECK_THROWS_AS(classify(Quiver({"a", "b"}, {})), InvalidArgument);
}

TEST_CASE("tits form of the Kronecker quivers") {
  CHECK(tits_definiteness(make_kronecker(1)).kind == Definiteness::PositiveDefinite);
  TitsResult k2 = tits_definiteness(make_kronecker(2));
  CHECK(k2.kind == Definiteness::PositiveSemidefinite);
  REQUIRE(k2.radical.has_value());
  CHECK(*k2.radical == Matrix::from_ints(Field::rational(), {{1, 1}}));
  CHECK(tits_definiteness(make_kronecker(3)).kind == Definiteness::Indefinite);
}

TEST_CASE("classification agrees with the Tits form on small multigraphs") {
  auto graphs = oracle::connected_multigraphs(4, 3);
  CHECK(graphs.size() > 100);
  for (const auto& g : graphs) {
    Quiver q = oracle::quiver_from_multigraph(g);
    RepType kind = classify(q).kind;
    Definiteness def = tits_definiteness(q).kind;
    CHECK((kind == RepType::Finite) == (def == Definiteness::PositiveDefinite));
    CHECK((kind == RepType::Tame) == (def == Definiteness::PositiveSemidefinite));
  }
}

TEST_CASE("removable extremal vertex") {
  Quiver q({"1", "2", "w"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"c", "w", "2"}});
  ExtremalVertex ev = find_removable_extremal_vertex(q);
  CHECK(ev.vertex == "w");
  CHECK(ev.remainder == make_kronecker(2));
  CHECK_THROWS_AS(find_removable_extremal_vertex(make_kronecker(3)), NotApplicable);
  CHECK_THROWS_AS(find_removable_extremal_vertex(make_linear(4)), NotApplicable);
}

namespace {

Quiver oriented(const oracle::Multigraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> rank(g.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<std::string> verts;
  for (std::size_t v = 0; v < g.size(); ++v) verts.push_back("v" + std::to_string(v));
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      for (int k = 0; k < g[a][b]; ++k) {
        bool forward = rank[a] < rank[b];
        arrows.push_back({"e" + std::to_string(arrows.size()), forward ? verts[a] : verts[b],
                          forward ? verts[b] : verts[a]});
      }
    }
  }
  return Quiver(verts, arrows);
}

}  // namespace

TEST_CASE("removable vertex search: valid when found, InternalError otherwise") {
  // Only sink v1 and source v2; deleting either leaves a single edge.
  Quiver triangle({"v0", "v1", "v2"},
                  {{"a", "v0", "v1"}, {"b", "v2", "v0"}, {"c", "v2", "v1"}, {"d", "v2", "v1"}});
  REQUIRE(classify(triangle).kind == RepType::Wild);
  CHECK_THROWS_AS(find_removable_extremal_vertex(triangle), InternalError);

  std::mt19937_64 rng(77);
  std::size_t found = 0, missing = 0;
  for (const auto& g : oracle::connected_multigraphs(5, 2)) {
    if (g.size() < 3) continue;
    for (int t = 0; t < 3; ++t) {
      Quiver q = oriented(g, rng);
      if (classify(q).kind != RepType::Wild) continue;
      try {
        ExtremalVertex ev = find_removable_extremal_vertex(q);
        std::size_t w = q.vertex_index(ev.vertex);
        CHECK((q.is_sink(w) || q.is_source(w)));
        CHECK(ev.remainder.is_connected());
        CHECK(classify(ev.remainder).kind != RepType::Finite);
        ++found;
      } catch (const InternalError&) {
        ++missing;
      }
    }
  }
  CHECK(found > 1000);
  MESSAGE("wild orientations without a removable sink or source: " << missing << " of "
                                                                    << found + missing);
}

TEST_CASE("classification ignores orientation") {
  std::mt19937_64 rng(78);
  for (const auto& g : oracle::connected_multigraphs(4, 2)) {
    RepType base = classify(oracle::quiver_from_multigraph(g)).kind;
    for (int t = 0; t < 3; ++t) CHECK(classify(oriented(g, rng)).kind == base);
  }
}
