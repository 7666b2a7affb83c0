#pragma once

#include <functional>
#include <random>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <bfg/bfg.hpp>

namespace test_support {

using namespace bfg;

inline bipolar bp(std::string_view pos, std::string_view neg) {
  return make_bipolar(pos, neg);
}

// Strictly signed values so generated graphs satisfy the strict-sign
// hypotheses and degree collisions stay rare.
inline const std::vector<bipolar>& rich_grid() {
  static const std::vector<bipolar> grid = {
      bp("0.1", "-0.2"),  bp("0.2", "-0.1"),   bp("0.3", "-0.4"),
      bp("0.15", "-0.35"), bp("0.4", "-0.3"),  bp("0.25", "-0.05"),
  };
  return grid;
}

inline gen_spec random_spec(std::uint64_t seed, int max_n = 10) {
  std::mt19937_64 rng(seed);
  gen_spec s;
  s.kind = gen_kind::random_graph;
  s.n = static_cast<int>(2 + rng() % static_cast<std::uint64_t>(max_n - 1));
  s.edge_probability =
      scalar::from_raw(static_cast<std::int64_t>(2000 + rng() % 7001));
  s.value_grid = rich_grid();
  s.seed = rng();
  return s;
}

inline graph random_graph(std::uint64_t seed, int max_n = 10) {
  return generate(random_spec(seed, max_n));
}

inline graph relabel(const graph& g,
                     const std::function<vertex_id(const vertex_id&)>& f) {
  std::vector<std::pair<vertex_id, bipolar>> vs;
  for (const auto& [id, m] : g.vertices()) vs.emplace_back(f(id), m);
  std::vector<std::tuple<vertex_id, vertex_id, bipolar>> es;
  for (const auto& [k, m] : g.edges()) es.emplace_back(f(k.a), f(k.b), m);
  return build_graph(vs, es);
}

inline graph without_edge(const graph& g, const edge_key& drop) {
  std::vector<std::pair<vertex_id, bipolar>> vs;
  for (const auto& [id, m] : g.vertices()) vs.emplace_back(id, m);
  std::vector<std::tuple<vertex_id, vertex_id, bipolar>> es;
  for (const auto& [k, m] : g.edges())
    if (!(k == drop)) es.emplace_back(k.a, k.b, m);
  return build_graph(vs, es);
}

}  // namespace test_support
