#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace bfg {

/// Componentwise sum of the edge memberships incident to v.
inline bivalue degree(const graph& g, const vertex_id& v) {
  bivalue d;
  for (const auto& u : g.neighbors(v)) d += g.edge_value(v, u)->value();
  return d;
}

inline bivalue total_degree(const graph& g, const vertex_id& v) {
  return degree(g, v) + g.vertex_value(v).value();
}

inline std::map<vertex_id, bivalue> degree_map(const graph& g) {
  std::map<vertex_id, bivalue> d;
  for (const auto& [id, m] : g.vertices()) d.emplace(id, degree(g, id));
  return d;
}

/// Componentwise sum of vertex memberships.
inline bivalue order(const graph& g) {
  bivalue o;
  for (const auto& [id, m] : g.vertices()) o += m.value();
  return o;
}

/// Componentwise sum of edge memberships, each unordered edge counted once.
inline bivalue size(const graph& g) {
  bivalue s;
  for (const auto& [key, m] : g.edges()) s += m.value();
  return s;
}

/// All vertices with their degrees, ordered strongest positive first
/// (pos numerically descending, then neg numerically descending, then id).
inline std::vector<std::pair<vertex_id, bivalue>> degree_sequence(
    const graph& g) {
  std::vector<std::pair<vertex_id, bivalue>> seq;
  seq.reserve(g.vertex_count());
  for (const auto& [id, m] : g.vertices()) seq.emplace_back(id, degree(g, id));
  std::sort(seq.begin(), seq.end(), [](const auto& x, const auto& y) {
    if (x.second.pos != y.second.pos) return x.second.pos > y.second.pos;
    if (x.second.neg != y.second.neg) return x.second.neg > y.second.neg;
    return x.first < y.first;
  });
  return seq;
}

struct degree_extremes_result {
  bivalue min;  // weakest per component: least pos, least negative neg
  bivalue max;  // strongest per component: greatest pos, most negative neg

  friend bool operator==(const degree_extremes_result&,
                         const degree_extremes_result&) = default;
};

inline degree_extremes_result degree_extremes(const graph& g) {
  if (g.vertices().empty()) throw empty_graph();
  degree_extremes_result r;
  bool first = true;
  for (const auto& [id, m] : g.vertices()) {
    bivalue d = degree(g, id);
    if (first) {
      r.min = r.max = d;
      first = false;
      continue;
    }
    r.min.pos = std::min(r.min.pos, d.pos);
    r.min.neg = std::max(r.min.neg, d.neg);
    r.max.pos = std::max(r.max.pos, d.pos);
    r.max.neg = std::min(r.max.neg, d.neg);
  }
  return r;
}

}  // namespace bfg
