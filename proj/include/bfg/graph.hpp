#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bipolar.hpp"
#include "errors.hpp"

namespace bfg {

using vertex_id = std::string;

/// Unordered pair of distinct vertex ids, stored with a < b.
struct edge_key {
  vertex_id a, b;

  edge_key(vertex_id x, vertex_id y) {
    if (x == y) throw self_loop(x);
    if (y < x) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
  }

  friend bool operator==(const edge_key&, const edge_key&) = default;
  friend auto operator<=>(const edge_key&, const edge_key&) = default;
};

/// Simple undirected graph with bipolar memberships on vertices and edges.
/// Every edge value is dominated by its endpoints: edge.pos <= min of the
/// endpoint positives and edge.neg >= max of the endpoint negatives.
/// Immutable once built; transforms return new graphs.
class graph {
 public:
  graph() = default;

  const std::map<vertex_id, bipolar>& vertices() const { return vertices_; }
  const std::map<edge_key, bipolar>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const vertex_id& v) const { return vertices_.contains(v); }

  bipolar vertex_value(const vertex_id& v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw unknown_vertex(v);
    return it->second;
  }

  std::optional<bipolar> edge_value(const vertex_id& u,
                                    const vertex_id& v) const {
    if (u == v) return std::nullopt;
    auto it = edges_.find(edge_key(u, v));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
  }

  bool adjacent(const vertex_id& u, const vertex_id& v) const {
    return edge_value(u, v).has_value();
  }

  const std::set<vertex_id>& neighbors(const vertex_id& v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw unknown_vertex(v);
    return it->second;
  }

  friend bool operator==(const graph& x, const graph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  friend class graph_builder;

  std::map<vertex_id, bipolar> vertices_;
  std::map<edge_key, bipolar> edges_;
  std::map<vertex_id, std::set<vertex_id>> adjacency_;
};

/// Incremental, validating constructor for `graph`. `at_line` tags errors
/// with a source line when building from a file.
class graph_builder {
 public:
  graph_builder& at_line(int line) {
    line_ = line;
    return *this;
  }

  void add_vertex(vertex_id id, bipolar value) {
    if (g_.vertices_.contains(id)) throw duplicate_vertex(id, line_);
    g_.adjacency_.emplace(id, std::set<vertex_id>{});
    g_.vertices_.emplace(std::move(id), value);
  }

  void add_edge(const vertex_id& x, const vertex_id& y, bipolar value) {
    if (x == y) throw self_loop(x, line_);
    if (!g_.vertices_.contains(x)) throw unknown_endpoint(x, line_);
    if (!g_.vertices_.contains(y)) throw unknown_endpoint(y, line_);
    edge_key key(x, y);
    if (g_.edges_.contains(key)) throw duplicate_edge(key.a, key.b, line_);
    const bipolar& mx = g_.vertices_.at(x);
    const bipolar& my = g_.vertices_.at(y);
    if (value.pos() > std::min(mx.pos(), my.pos()))
      throw domination_violation(key.a, key.b, domination_side::positive,
                                 line_);
    if (value.neg() < std::max(mx.neg(), my.neg()))
      throw domination_violation(key.a, key.b, domination_side::negative,
                                 line_);
    g_.adjacency_[x].insert(y);
    g_.adjacency_[y].insert(x);
    g_.edges_.emplace(std::move(key), value);
  }

  graph build() && { return std::move(g_); }

 private:
  graph g_;
  int line_ = 0;
};

inline graph build_graph(
    const std::vector<std::pair<vertex_id, bipolar>>& vertices,
    const std::vector<std::tuple<vertex_id, vertex_id, bipolar>>& edges) {
  graph_builder b;
  for (const auto& [id, value] : vertices) b.add_vertex(id, value);
  for (const auto& [x, y, value] : edges) b.add_edge(x, y, value);
  return std::move(b).build();
}

/// Ordinary graph keeping the vertices and edges that have a nonzero
/// membership component.
struct crisp_graph {
  std::set<vertex_id> vertices;
  std::set<edge_key> edges;

  friend bool operator==(const crisp_graph&, const crisp_graph&) = default;
};

inline crisp_graph underlying_crisp_graph(const graph& g) {
  const scalar zero{};
  crisp_graph c;
  for (const auto& [id, m] : g.vertices())
    if (m.pos() > zero || m.neg() < zero) c.vertices.insert(id);
  for (const auto& [key, m] : g.edges())
    if (m.pos() > zero || m.neg() < zero) c.edges.insert(key);
  return c;
}

/// Empty and single-vertex graphs count as connected.
inline bool is_connected(const crisp_graph& c) {
  if (c.vertices.size() <= 1) return true;
  std::map<vertex_id, std::set<vertex_id>> adj;
  for (const auto& e : c.edges) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  std::set<vertex_id> seen;
  std::vector<vertex_id> stack{*c.vertices.begin()};
  seen.insert(stack.back());
  while (!stack.empty()) {
    vertex_id v = std::move(stack.back());
    stack.pop_back();
    for (const auto& u : adj[v])
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == c.vertices.size();
}

inline bool is_connected(const graph& g) {
  return is_connected(underlying_crisp_graph(g));
}

}  // namespace bfg
