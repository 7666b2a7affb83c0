#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "metrics.hpp"

namespace bfg {

/// True iff every unordered pair of distinct vertices carries an edge whose
/// value equals (min of positives, max of negatives) of its endpoints.
inline bool is_complete(const graph& g) {
  const auto& vs = g.vertices();
  for (auto i = vs.begin(); i != vs.end(); ++i)
    for (auto j = std::next(i); j != vs.end(); ++j) {
      auto e = g.edge_value(i->first, j->first);
      if (!e) return false;
      if (e->pos() != std::min(i->second.pos(), j->second.pos())) return false;
      if (e->neg() != std::max(i->second.neg(), j->second.neg())) return false;
    }
  return true;
}

/// True iff every existing edge attains the domination bounds. Pairs without
/// an edge are unconstrained; an edgeless graph is strong.
inline bool is_strong(const graph& g) {
  for (const auto& [key, m] : g.edges()) {
    bipolar ma = g.vertex_value(key.a);
    bipolar mb = g.vertex_value(key.b);
    if (m.pos() != std::min(ma.pos(), mb.pos())) return false;
    if (m.neg() != std::max(ma.neg(), mb.neg())) return false;
  }
  return true;
}

struct regularity_report {
  std::optional<bivalue> regular;          // common degree if all equal
  std::optional<bivalue> totally_regular;  // common total degree if all equal

  friend bool operator==(const regularity_report&,
                         const regularity_report&) = default;
};

inline regularity_report regularity(const graph& g) {
  if (g.vertices().empty()) throw empty_graph();
  regularity_report r;
  bool first = true;
  bivalue d0, t0;
  bool all_d = true, all_t = true;
  for (const auto& [id, m] : g.vertices()) {
    bivalue d = degree(g, id);
    bivalue t = d + m.value();
    if (first) {
      d0 = d;
      t0 = t;
      first = false;
      continue;
    }
    all_d = all_d && d == d0;
    all_t = all_t && t == t0;
  }
  if (all_d) r.regular = d0;
  if (all_t) r.totally_regular = t0;
  return r;
}

/// Some adjacent pair has distinct degrees.
inline bool is_irregular(const graph& g) {
  auto d = degree_map(g);
  for (const auto& [key, m] : g.edges())
    if (d.at(key.a) != d.at(key.b)) return true;
  return false;
}

/// Every adjacent pair has distinct degrees; vacuously true without edges.
/// Connectivity is reported separately, not required here.
inline bool is_neighbourly_irregular(const graph& g) {
  auto d = degree_map(g);
  for (const auto& [key, m] : g.edges())
    if (d.at(key.a) == d.at(key.b)) return false;
  return true;
}

inline bool is_totally_irregular(const graph& g) {
  for (const auto& [key, m] : g.edges())
    if (total_degree(g, key.a) != total_degree(g, key.b)) return true;
  return false;
}

inline bool is_neighbourly_totally_irregular(const graph& g) {
  for (const auto& [key, m] : g.edges())
    if (total_degree(g, key.a) == total_degree(g, key.b)) return false;
  return true;
}

/// Every vertex sees pairwise distinct degrees across its neighbours.
/// The weaker reading (just one differing neighbour pair somewhere) admits
/// more graphs; this library uses the pairwise one throughout. Vertices with
/// at most one neighbour satisfy the condition vacuously.
inline bool is_highly_irregular(const graph& g) {
  auto d = degree_map(g);
  for (const auto& [id, m] : g.vertices()) {
    std::vector<bivalue> around;
    for (const auto& u : g.neighbors(id)) around.push_back(d.at(u));
    std::sort(around.begin(), around.end());
    if (std::adjacent_find(around.begin(), around.end()) != around.end())
      return false;
  }
  return true;
}

struct classification_report {
  bool complete = false;
  bool strong = false;
  bool connected = false;
  regularity_report regularity;
  bool irregular = false;
  bool neighbourly_irregular = false;
  bool totally_irregular = false;
  bool neighbourly_totally_irregular = false;
  bool highly_irregular = false;

  friend bool operator==(const classification_report&,
                         const classification_report&) = default;
};

/// Evaluates every predicate. On the empty graph both regularity entries
/// stay absent.
inline classification_report classify(const graph& g) {
  classification_report r;
  r.complete = is_complete(g);
  r.strong = is_strong(g);
  r.connected = is_connected(g);
  if (!g.vertices().empty()) r.regularity = regularity(g);
  r.irregular = is_irregular(g);
  r.neighbourly_irregular = is_neighbourly_irregular(g);
  r.totally_irregular = is_totally_irregular(g);
  r.neighbourly_totally_irregular = is_neighbourly_totally_irregular(g);
  r.highly_irregular = is_highly_irregular(g);
  return r;
}

}  // namespace bfg
