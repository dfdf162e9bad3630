#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace qgrass {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
};

// Finite acyclic quiver. Vertices keep their input order; every index-based
// accessor refers to that order. Parallel arrows are allowed, cycles are not.
class Quiver {
 public:
  // Throws InvalidArgument on duplicate ids, unknown endpoints or a directed
  // cycle (including loops).
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex(std::size_t v) const { return vertices_[v]; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t arrow_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const;

  std::size_t source(std::size_t a) const { return src_[a]; }
  std::size_t target(std::size_t a) const { return tgt_[a]; }

  // Vertices sorted by (longest path from a source, id).
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  bool is_sink(std::size_t v) const;
  bool is_source(std::size_t v) const;
  // Connectivity of the underlying undirected graph; the empty quiver is not connected.
  bool is_connected() const;

  Quiver opposite() const;
  // Full subquiver on the kept vertices (input order preserved).
  Quiver induced(const std::vector<std::string>& keep) const;
  Quiver without_vertex(const std::string& id) const;
  // Same vertices, only the listed arrows.
  Quiver with_arrows(const std::vector<std::string>& keep) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
  std::vector<std::size_t> topo_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// K(n): vertices "1","2" and arrows "a1".."an" from 1 to 2.
Quiver make_kronecker(std::size_t n);

// For a Kronecker-shaped quiver (two vertices, at least one arrow, all
// arrows pointing the same way) returns (source index, sink index).
std::optional<std::pair<std::size_t, std::size_t>> kronecker_orientation(const Quiver& q);

// Path 1 -> 2 -> ... -> n with arrows "a1".."a(n-1)".
Quiver make_linear(std::size_t n);

}  // namespace qgrass
