#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "metrics.hpp"

namespace bfg {

/// Complement over all unordered pairs of distinct vertices, treating an
/// absent edge as (0,0) and applying the two components independently:
/// a nonzero component becomes 0, a zero component becomes the domination
/// bound of the endpoints. Pairs that end at (0,0) are left out of the edge
/// map. Vertex memberships are unchanged.
inline graph complement(const graph& g) {
  const scalar zero{};
  graph_builder b;
  for (const auto& [id, m] : g.vertices()) b.add_vertex(id, m);
  const auto& vs = g.vertices();
  for (auto i = vs.begin(); i != vs.end(); ++i)
    for (auto j = std::next(i); j != vs.end(); ++j) {
      bivalue old{};
      if (auto e = g.edge_value(i->first, j->first)) old = e->value();
      scalar pos = old.pos > zero
                       ? zero
                       : std::min(i->second.pos(), j->second.pos());
      scalar neg = old.neg < zero
                       ? zero
                       : std::max(i->second.neg(), j->second.neg());
      if (pos != zero || neg != zero)
        b.add_edge(i->first, j->first, bipolar(pos, neg));
    }
  return std::move(b).build();
}

/// Same incidence, every edge value raised to the domination bound of its
/// endpoints. Idempotent; a strong graph maps to itself.
inline graph strong_completion(const graph& g) {
  graph_builder b;
  for (const auto& [id, m] : g.vertices()) b.add_vertex(id, m);
  for (const auto& [key, m] : g.edges()) {
    bipolar ma = g.vertex_value(key.a);
    bipolar mb = g.vertex_value(key.b);
    b.add_edge(key.a, key.b,
               bipolar(std::min(ma.pos(), mb.pos()),
                       std::max(ma.neg(), mb.neg())));
  }
  return std::move(b).build();
}

/// Vertex order of the crisp graph's unique cycle, when the crisp graph is
/// exactly one cycle: connected, every vertex of degree two. The walk starts
/// at the lexicographically smallest vertex and moves toward its smaller
/// neighbour, so the order is deterministic.
inline std::optional<std::vector<vertex_id>> single_cycle_order(
    const crisp_graph& c) {
  if (c.vertices.size() < 3 || c.edges.size() != c.vertices.size())
    return std::nullopt;
  std::map<vertex_id, std::vector<vertex_id>> adj;
  for (const auto& e : c.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (const auto& v : c.vertices)
    if (adj[v].size() != 2) return std::nullopt;

  std::vector<vertex_id> walk;
  const vertex_id& start = *c.vertices.begin();
  vertex_id prev = start;
  vertex_id cur = std::min(adj[start][0], adj[start][1]);
  walk.push_back(start);
  while (cur != start) {
    walk.push_back(cur);
    const auto& n = adj[cur];
    vertex_id next = (n[0] == prev) ? n[1] : n[0];
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (walk.size() != c.vertices.size()) return std::nullopt;
  return walk;
}

enum class cycle_kind {
  constant_both,
  alternating_both,
  constant_pos_alternating_neg,
  alternating_pos_constant_neg,
  not_applicable,
};

/// Membership pattern around a regular even cycle. For an alternating
/// component the two values are (first edge, second edge) of the canonical
/// walk, which sum to the common degree of that component.
struct cycle_pattern {
  cycle_kind kind = cycle_kind::not_applicable;
  std::optional<std::pair<scalar, scalar>> pos_values;
  std::optional<std::pair<scalar, scalar>> neg_values;

  friend bool operator==(const cycle_pattern&, const cycle_pattern&) = default;
};

namespace detail {

// nullopt: not constant and not a two-value alternation.
// (v,v): constant; (c,d), c != d: alternation in walk order.
inline std::optional<std::pair<scalar, scalar>> component_pattern(
    const std::vector<scalar>& vals) {
  scalar c = vals[0];
  scalar d = vals[1 % vals.size()];
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] != (i % 2 == 0 ? c : d)) return std::nullopt;
  return std::make_pair(c, d);
}

}  // namespace detail

/// Not applicable unless the underlying crisp graph is one even cycle of
/// length >= 4 and the graph is regular; otherwise reports, per component,
/// whether the edge values are constant or alternate between two values
/// along the canonical walk.
inline cycle_pattern cycle_pattern_of(const graph& g) {
  auto walk = single_cycle_order(underlying_crisp_graph(g));
  if (!walk || walk->size() < 4 || walk->size() % 2 != 0) return {};

  bool first = true;
  bivalue common{};
  for (const auto& [id, m] : g.vertices()) {
    bivalue d = degree(g, id);
    if (first) {
      common = d;
      first = false;
    } else if (d != common) {
      return {};
    }
  }

  std::vector<scalar> pos, neg;
  for (std::size_t i = 0; i < walk->size(); ++i) {
    auto e = g.edge_value((*walk)[i], (*walk)[(i + 1) % walk->size()]);
    pos.push_back(e->pos());
    neg.push_back(e->neg());
  }
  auto p = detail::component_pattern(pos);
  auto n = detail::component_pattern(neg);
  if (!p || !n) return {};

  cycle_pattern result;
  bool p_const = p->first == p->second;
  bool n_const = n->first == n->second;
  if (p_const && n_const)
    result.kind = cycle_kind::constant_both;
  else if (!p_const && !n_const)
    result.kind = cycle_kind::alternating_both;
  else if (p_const)
    result.kind = cycle_kind::constant_pos_alternating_neg;
  else
    result.kind = cycle_kind::alternating_pos_constant_neg;
  if (!p_const) result.pos_values = *p;
  if (!n_const) result.neg_values = *n;
  return result;
}

}  // namespace bfg
