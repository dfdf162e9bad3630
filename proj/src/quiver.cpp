#include "qgrass/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qgrass/error.hpp"

namespace qgrass {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw InvalidArgument("duplicate vertex id '" + v + "'");
  }
  std::set<std::string> arrow_ids;
  for (const auto& a : arrows_) {
    if (!arrow_ids.insert(a.id).second) throw InvalidArgument("duplicate arrow id '" + a.id + "'");
    if (!seen.count(a.source) || !seen.count(a.target)) {
      throw InvalidArgument("arrow '" + a.id + "' has an unknown endpoint");
    }
    src_.push_back(vertex_index(a.source));
    tgt_.push_back(vertex_index(a.target));
  }

  // Longest-path depth via Kahn's algorithm; leftover vertices mean a cycle.
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indeg(n, 0), depth(n, 0);
  for (std::size_t a = 0; a < arrows_.size(); ++a) ++indeg[tgt_[a]];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t processed = 0;
  while (processed < queue.size()) {
    std::size_t v = queue[processed++];
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (src_[a] != v) continue;
      depth[tgt_[a]] = std::max(depth[tgt_[a]], depth[v] + 1);
      if (--indeg[tgt_[a]] == 0) queue.push_back(tgt_[a]);
    }
  }
  if (processed != n) throw InvalidArgument("quiver has a directed cycle");
  topo_.resize(n);
  for (std::size_t v = 0; v < n; ++v) topo_[v] = v;
  std::sort(topo_.begin(), topo_.end(), [&](std::size_t a, std::size_t b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return vertices_[a] < vertices_[b];
  });
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw InvalidArgument("unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].id == id) return a;
  }
  throw InvalidArgument("unknown arrow '" + id + "'");
}

bool Quiver::has_vertex(const std::string& id) const {
  return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

bool Quiver::is_sink(std::size_t v) const {
  return std::none_of(src_.begin(), src_.end(), [v](std::size_t s) { return s == v; });
}

bool Quiver::is_source(std::size_t v) const {
  return std::none_of(tgt_.begin(), tgt_.end(), [v](std::size_t t) { return t == v; });
}

bool Quiver::is_connected() const {
  const std::size_t n = vertices_.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      std::size_t w;
      if (src_[a] == v) {
        w = tgt_[a];
      } else if (tgt_[a] == v) {
        w = src_[a];
      } else {
        continue;
      }
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed;
  for (const auto& a : arrows_) reversed.push_back({a.id, a.target, a.source});
  return Quiver(vertices_, reversed);
}

Quiver Quiver::induced(const std::vector<std::string>& keep) const {
  std::set<std::string> kept(keep.begin(), keep.end());
  for (const auto& v : keep) vertex_index(v);
  std::vector<std::string> verts;
  for (const auto& v : vertices_) {
    if (kept.count(v)) verts.push_back(v);
  }
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_) {
    if (kept.count(a.source) && kept.count(a.target)) arrows.push_back(a);
  }
  return Quiver(verts, arrows);
}

Quiver Quiver::without_vertex(const std::string& id) const {
  vertex_index(id);
  std::vector<std::string> keep;
  for (const auto& v : vertices_) {
    if (v != id) keep.push_back(v);
  }
  return induced(keep);
}

Quiver Quiver::with_arrows(const std::vector<std::string>& keep) const {
  std::set<std::string> kept(keep.begin(), keep.end());
  for (const auto& a : keep) arrow_index(a);
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_) {
    if (kept.count(a.id)) arrows.push_back(a);
  }
  return Quiver(vertices_, arrows);
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Quiver make_kronecker(std::size_t n) {
  if (n == 0) throw InvalidArgument("Kronecker quiver needs at least one arrow");
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) arrows.push_back({"a" + std::to_string(i), "1", "2"});
  return Quiver({"1", "2"}, arrows);
}

std::optional<std::pair<std::size_t, std::size_t>> kronecker_orientation(const Quiver& q) {
  if (q.vertex_count() != 2 || q.arrow_count() == 0) return std::nullopt;
  std::size_t s = q.source(0), t = q.target(0);
  for (std::size_t a = 1; a < q.arrow_count(); ++a) {
    if (q.source(a) != s || q.target(a) != t) return std::nullopt;
  }
  return std::make_pair(s, t);
}

Quiver make_linear(std::size_t n) {
  if (n == 0) throw InvalidArgument("linear quiver needs at least one vertex");
  std::vector<std::string> verts;
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  }
  return Quiver(verts, arrows);
}

}  // namespace qgrass
