#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bfg {

enum class gen_kind { random_graph, even_cycle, constant_vertex };
enum class gen_pattern { constant, alternating };

/// Deterministic generator input. All randomness comes from std::mt19937_64
/// seeded with `seed`, so equal specs give bit-identical graphs on every
/// platform.
///
/// random_graph: each vertex pair carries an edge with probability
///   `edge_probability`, valued uniformly from `value_grid`; each vertex gets
///   the componentwise strongest incident edge value, further strengthened by
///   one random grid draw, so domination holds by construction.
/// even_cycle: edges take value_grid[0] (constant) or alternate
///   value_grid[0]/value_grid[1]; every vertex gets the componentwise
///   strongest grid value. Regular by construction.
/// constant_vertex: generates `base`, then sets every vertex to one constant:
///   the componentwise strongest entry of this spec's own value_grid, or the
///   strongest edge value of the base graph when the grid is empty.
struct gen_spec {
  gen_kind kind = gen_kind::random_graph;
  int n = 1;
  scalar edge_probability = scalar::parse("0.5");
  std::vector<bipolar> value_grid;
  gen_pattern pattern = gen_pattern::constant;
  std::shared_ptr<const gen_spec> base;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t draw_mod(std::mt19937_64& rng, std::uint64_t m) {
  return rng() % m;
}

inline bipolar strongest(const std::vector<bipolar>& values) {
  scalar pos{}, neg{};
  for (const auto& v : values) {
    pos = std::max(pos, v.pos());
    neg = std::min(neg, v.neg());
  }
  return bipolar(pos, neg);
}

inline vertex_id gen_vertex_name(int i) { return "v" + std::to_string(i + 1); }

inline graph generate_random(const gen_spec& spec) {
  if (spec.n < 1) throw invalid_spec("random graph needs n >= 1");
  if (spec.value_grid.empty()) throw invalid_spec("value grid is empty");
  if (spec.edge_probability < scalar{} ||
      spec.edge_probability > scalar::from_raw(scalar::scale))
    throw invalid_spec("edge probability outside [0,1]");

  std::mt19937_64 rng(spec.seed);
  const auto& grid = spec.value_grid;

  std::map<std::pair<int, int>, bipolar> picked;
  for (int i = 0; i < spec.n; ++i)
    for (int j = i + 1; j < spec.n; ++j) {
      bool present =
          static_cast<std::int64_t>(draw_mod(rng, scalar::scale)) <
          spec.edge_probability.raw();
      if (present)
        picked.emplace(std::make_pair(i, j),
                       grid[draw_mod(rng, grid.size())]);
    }

  graph_builder b;
  std::vector<bipolar> vertex_values;
  for (int i = 0; i < spec.n; ++i) {
    scalar pos{}, neg{};
    for (const auto& [pair, value] : picked)
      if (pair.first == i || pair.second == i) {
        pos = std::max(pos, value.pos());
        neg = std::min(neg, value.neg());
      }
    bipolar bump = grid[draw_mod(rng, grid.size())];
    vertex_values.emplace_back(std::max(pos, bump.pos()),
                               std::min(neg, bump.neg()));
  }
  for (int i = 0; i < spec.n; ++i)
    b.add_vertex(gen_vertex_name(i), vertex_values[i]);
  for (const auto& [pair, value] : picked)
    b.add_edge(gen_vertex_name(pair.first), gen_vertex_name(pair.second),
               value);
  return std::move(b).build();
}

inline graph generate_even_cycle(const gen_spec& spec) {
  if (spec.n < 4 || spec.n % 2 != 0)
    throw invalid_spec("even cycle needs an even n >= 4");
  if (spec.value_grid.empty()) throw invalid_spec("value grid is empty");
  if (spec.pattern == gen_pattern::alternating && spec.value_grid.size() < 2)
    throw invalid_spec("alternating cycle needs at least two grid values");

  bipolar vertex_value = strongest(spec.value_grid);
  graph_builder b;
  for (int i = 0; i < spec.n; ++i)
    b.add_vertex(gen_vertex_name(i), vertex_value);
  for (int i = 0; i < spec.n; ++i) {
    bipolar value = spec.pattern == gen_pattern::constant
                        ? spec.value_grid[0]
                        : spec.value_grid[i % 2];
    b.add_edge(gen_vertex_name(i), gen_vertex_name((i + 1) % spec.n), value);
  }
  return std::move(b).build();
}

}  // namespace detail

inline graph generate(const gen_spec& spec) {
  switch (spec.kind) {
    case gen_kind::random_graph:
      return detail::generate_random(spec);
    case gen_kind::even_cycle:
      return detail::generate_even_cycle(spec);
    case gen_kind::constant_vertex: {
      if (!spec.base) throw invalid_spec("constant_vertex needs a base spec");
      graph base = generate(*spec.base);
      bipolar constant;
      if (!spec.value_grid.empty()) {
        constant = detail::strongest(spec.value_grid);
      } else {
        scalar pos{}, neg{};
        for (const auto& [key, m] : base.edges()) {
          pos = std::max(pos, m.pos());
          neg = std::min(neg, m.neg());
        }
        constant = bipolar(pos, neg);
      }
      for (const auto& [key, m] : base.edges())
        if (m.pos() > constant.pos() || m.neg() < constant.neg())
          throw infeasible_grid("constant vertex value " +
                                to_string(constant) +
                                " cannot dominate edge " + to_string(m));
      graph_builder b;
      for (const auto& [id, m] : base.vertices()) b.add_vertex(id, constant);
      for (const auto& [key, m] : base.edges()) b.add_edge(key.a, key.b, m);
      return std::move(b).build();
    }
  }
  throw invalid_spec("unknown generator kind");
}

/// The five hand-built reference graphs used across the tests and the CLI.
///
/// F1: triangle, pairwise distinct degrees.
/// F2: 4-vertex graph that is irregular but not neighbourly irregular.
/// F3: 5-path with constant vertex function; neighbourly and highly
///     irregular, yet two vertices share a degree.
/// F4: alternating 4-cycle; regular (0.6,-0.4) and totally regular.
/// F5: triangle plus pendant, distinct degrees at every edge.
inline std::map<std::string, graph> fixtures() {
  std::map<std::string, graph> out;
  const auto B = [](std::string_view p, std::string_view n) {
    return make_bipolar(p, n);
  };
  out.emplace("F1",
              build_graph({{"v1", B("0.5", "-0.4")},
                           {"v2", B("0.6", "-0.5")},
                           {"v3", B("0.8", "-0.5")}},
                          {{"v1", "v2", B("0.4", "-0.2")},
                           {"v1", "v3", B("0.5", "-0.3")},
                           {"v2", "v3", B("0.5", "-0.5")}}));
  out.emplace("F2",
              build_graph({{"v1", B("0.5", "-0.4")},
                           {"v2", B("0.6", "-0.5")},
                           {"v3", B("0.5", "-0.4")},
                           {"v4", B("0.4", "-0.4")}},
                          {{"v1", "v2", B("0.4", "-0.3")},
                           {"v2", "v3", B("0.2", "-0.4")},
                           {"v2", "v4", B("0.2", "-0.4")},
                           {"v3", "v4", B("0.4", "-0.3")}}));
  out.emplace("F3",
              build_graph({{"v1", B("1", "-1")},
                           {"v2", B("1", "-1")},
                           {"v3", B("1", "-1")},
                           {"v4", B("1", "-1")},
                           {"v5", B("1", "-1")}},
                          {{"v1", "v2", B("0.3", "-0.3")},
                           {"v2", "v3", B("0.3", "-0.3")},
                           {"v3", "v4", B("0.1", "-0.1")},
                           {"v4", "v5", B("0.2", "-0.2")}}));
  out.emplace("F4",
              build_graph({{"v1", B("0.6", "-0.6")},
                           {"v2", B("0.6", "-0.6")},
                           {"v3", B("0.6", "-0.6")},
                           {"v4", B("0.6", "-0.6")}},
                          {{"v1", "v2", B("0.2", "-0.1")},
                           {"v2", "v3", B("0.4", "-0.3")},
                           {"v3", "v4", B("0.2", "-0.1")},
                           {"v4", "v1", B("0.4", "-0.3")}}));
  out.emplace("F5",
              build_graph({{"v1", B("0.6", "-0.6")},
                           {"v2", B("0.6", "-0.6")},
                           {"v3", B("0.6", "-0.6")},
                           {"v4", B("0.6", "-0.6")}},
                          {{"v1", "v2", B("0.4", "-0.5")},
                           {"v1", "v3", B("0.4", "-0.5")},
                           {"v2", "v3", B("0.4", "-0.5")},
                           {"v3", "v4", B("0.4", "-0.4")}}));
  return out;
}

}  // namespace bfg
