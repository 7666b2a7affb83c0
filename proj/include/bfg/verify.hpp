#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "generate.hpp"
#include "transform.hpp"

namespace bfg {

struct verify_witness {
  std::vector<vertex_id> vertices;
  std::vector<std::pair<std::string, std::string>> values;

  friend bool operator==(const verify_witness&,
                         const verify_witness&) = default;
};

/// Outcome of one per-graph check. `vacuous` marks "hypothesis not met",
/// which counts as holding. A failing verdict always carries a witness that
/// can be re-checked against the graph.
struct verdict {
  std::string theorem;
  bool holds = true;
  bool vacuous = false;
  std::string note;
  std::optional<verify_witness> witness;

  friend bool operator==(const verdict&, const verdict&) = default;
};

namespace detail {

inline bool all_degrees_distinct(const graph& g) {
  std::vector<bivalue> ds;
  for (const auto& [id, m] : g.vertices()) ds.push_back(degree(g, id));
  std::sort(ds.begin(), ds.end());
  return std::adjacent_find(ds.begin(), ds.end()) == ds.end();
}

inline bool constant_vertex_function(const graph& g) {
  const auto& vs = g.vertices();
  if (vs.empty()) return true;
  const bipolar& first = vs.begin()->second;
  for (const auto& [id, m] : vs)
    if (!(m == first)) return false;
  return true;
}

// First pair (in id order) with equal degrees; optionally only pairs
// without an edge between them.
inline std::optional<std::pair<vertex_id, vertex_id>> equal_degree_pair(
    const graph& g, bool non_adjacent_only) {
  auto d = degree_map(g);
  const auto& vs = g.vertices();
  for (auto i = vs.begin(); i != vs.end(); ++i)
    for (auto j = std::next(i); j != vs.end(); ++j) {
      if (non_adjacent_only && g.adjacent(i->first, j->first)) continue;
      if (d.at(i->first) == d.at(j->first))
        return std::make_pair(i->first, j->first);
    }
  return std::nullopt;
}

inline verify_witness degree_pair_witness(const graph& g, const vertex_id& u,
                                          const vertex_id& v) {
  verify_witness w;
  w.vertices = {u, v};
  w.values.emplace_back("d(" + u + ")", to_string(degree(g, u)));
  w.values.emplace_back("d(" + v + ")", to_string(degree(g, v)));
  return w;
}

inline verify_witness total_degree_pair_witness(const graph& g,
                                                const vertex_id& u,
                                                const vertex_id& v) {
  verify_witness w;
  w.vertices = {u, v};
  w.values.emplace_back("td(" + u + ")", to_string(total_degree(g, u)));
  w.values.emplace_back("td(" + v + ")", to_string(total_degree(g, v)));
  return w;
}

}  // namespace detail

/// Identity used by the size results: the componentwise sum of all vertex
/// degrees equals twice the size.
inline verdict check_handshake(const graph& g) {
  verdict v;
  v.theorem = "handshake";
  bivalue sum{};
  for (const auto& [id, m] : g.vertices()) sum += degree(g, id);
  bivalue twice = 2 * size(g);
  if (sum == twice) {
    v.note = "sum of degrees equals twice the size";
  } else {
    v.holds = false;
    v.note = "sum of degrees differs from twice the size";
    verify_witness w;
    w.values.emplace_back("sum_of_degrees", to_string(sum));
    w.values.emplace_back("twice_size", to_string(twice));
    v.witness = std::move(w);
  }
  return v;
}

/// On graphs whose crisp graph is one even cycle: regular iff each membership
/// component is constant or alternates between two values around the cycle.
inline verdict check_thm1(const graph& g) {
  verdict v;
  v.theorem = "thm1";
  auto walk = single_cycle_order(underlying_crisp_graph(g));
  if (!walk || walk->size() < 4 || walk->size() % 2 != 0) {
    v.vacuous = true;
    v.note = "underlying crisp graph is not an even cycle";
    return v;
  }
  bool regular = !g.vertices().empty() && regularity(g).regular.has_value();

  std::vector<scalar> pos, neg;
  for (std::size_t i = 0; i < walk->size(); ++i) {
    auto e = g.edge_value((*walk)[i], (*walk)[(i + 1) % walk->size()]);
    pos.push_back(e->pos());
    neg.push_back(e->neg());
  }
  bool patterned = detail::component_pattern(pos).has_value() &&
                   detail::component_pattern(neg).has_value();
  if (regular == patterned) {
    v.note = regular ? "regular with constant or alternating edge values"
                     : "neither regular nor constant/alternating";
  } else {
    v.holds = false;
    v.note = "regularity and the edge value pattern disagree";
    verify_witness w;
    w.values.emplace_back("regular", regular ? "true" : "false");
    w.values.emplace_back("constant_or_alternating",
                          patterned ? "true" : "false");
    v.witness = std::move(w);
  }
  return v;
}

/// Size of a (k1,k2)-regular graph is (p*k1/2, p*k2/2) with p the vertex
/// count; compared exactly as 2*size == p*(k1,k2).
inline verdict check_regular_size(const graph& g) {
  verdict v;
  v.theorem = "thm2";
  std::optional<bivalue> k;
  if (!g.vertices().empty()) k = regularity(g).regular;
  if (!k) {
    v.vacuous = true;
    v.note = g.vertices().empty() ? "empty graph" : "not regular";
    return v;
  }
  auto p = static_cast<std::int64_t>(g.vertex_count());
  bivalue lhs = 2 * size(g);
  bivalue rhs = p * *k;
  if (lhs == rhs) {
    v.note = "p=" + std::to_string(p) + " k=" + to_string(*k) +
             " size=" + to_string(size(g));
  } else {
    v.holds = false;
    v.note = "size does not equal (p*k1/2, p*k2/2)";
    verify_witness w;
    w.values.emplace_back("twice_size", to_string(lhs));
    w.values.emplace_back("p_times_k", to_string(rhs));
    v.witness = std::move(w);
  }
  return v;
}

/// For a (k,k')-totally regular graph, 2*size + order = p*(k,k').
inline verdict check_totally_regular_relation(const graph& g) {
  verdict v;
  v.theorem = "thm3";
  std::optional<bivalue> k;
  if (!g.vertices().empty()) k = regularity(g).totally_regular;
  if (!k) {
    v.vacuous = true;
    v.note = g.vertices().empty() ? "empty graph" : "not totally regular";
    return v;
  }
  auto p = static_cast<std::int64_t>(g.vertex_count());
  bivalue lhs = 2 * size(g) + order(g);
  bivalue rhs = p * *k;
  if (lhs == rhs) {
    v.note = "p=" + std::to_string(p) + " k=" + to_string(*k);
  } else {
    v.holds = false;
    v.note = "2*size + order does not equal p*(k,k')";
    verify_witness w;
    w.values.emplace_back("twice_size_plus_order", to_string(lhs));
    w.values.emplace_back("p_times_k", to_string(rhs));
    v.witness = std::move(w);
  }
  return v;
}

struct thm4_result {
  verdict forward;   // pairwise distinct degrees => neighbourly and highly
  verdict converse;  // neighbourly and highly => pairwise distinct degrees
};

/// Both directions of the claimed equivalence between "all degrees pairwise
/// distinct" and "neighbourly irregular and highly irregular". The forward
/// direction is sound; the converse is not: distinctness is only forced
/// inside single neighbourhoods, so non-adjacent vertices may still share a
/// degree (see fixture F3).
inline thm4_result check_thm4(const graph& g) {
  thm4_result r;
  r.forward.theorem = "thm4-forward";
  r.converse.theorem = "thm4-converse";

  bool distinct = detail::all_degrees_distinct(g);
  bool ni = is_neighbourly_irregular(g);
  bool hi = is_highly_irregular(g);

  if (!distinct) {
    r.forward.vacuous = true;
    r.forward.note = "degrees are not pairwise distinct";
  } else if (ni && hi) {
    r.forward.note = "neighbourly and highly irregular as implied";
  } else {
    r.forward.holds = false;
    r.forward.note = ni ? "not highly irregular despite distinct degrees"
                        : "not neighbourly irregular despite distinct degrees";
    if (auto pair = detail::equal_degree_pair(g, false))
      r.forward.witness =
          detail::degree_pair_witness(g, pair->first, pair->second);
  }

  if (!(ni && hi)) {
    r.converse.vacuous = true;
    r.converse.note = ni ? "not highly irregular" : "not neighbourly irregular";
  } else if (distinct) {
    r.converse.note = "all degrees pairwise distinct as implied";
  } else {
    auto pair = detail::equal_degree_pair(g, false);
    r.converse.holds = false;
    r.converse.note =
        "distinct degrees are only forced within single neighbourhoods; "
        "the non-adjacent vertices " +
        pair->first + "," + pair->second + " share a degree";
    r.converse.witness =
        detail::degree_pair_witness(g, pair->first, pair->second);
  }
  return r;
}

/// Neighbourly irregular with a constant vertex function is neighbourly
/// totally irregular.
inline verdict check_thm5(const graph& g) {
  verdict v;
  v.theorem = "thm5";
  if (!is_neighbourly_irregular(g)) {
    v.vacuous = true;
    v.note = "not neighbourly irregular";
    return v;
  }
  if (!detail::constant_vertex_function(g)) {
    v.vacuous = true;
    v.note = "vertex memberships are not constant";
    return v;
  }
  if (is_neighbourly_totally_irregular(g)) {
    v.note = "neighbourly totally irregular as implied";
    return v;
  }
  v.holds = false;
  v.note = "adjacent vertices with equal total degrees";
  for (const auto& [key, m] : g.edges())
    if (total_degree(g, key.a) == total_degree(g, key.b)) {
      v.witness = detail::total_degree_pair_witness(g, key.a, key.b);
      break;
    }
  return v;
}

/// Neighbourly totally irregular with a constant vertex function is
/// neighbourly irregular.
inline verdict check_thm6(const graph& g) {
  verdict v;
  v.theorem = "thm6";
  if (!is_neighbourly_totally_irregular(g)) {
    v.vacuous = true;
    v.note = "not neighbourly totally irregular";
    return v;
  }
  if (!detail::constant_vertex_function(g)) {
    v.vacuous = true;
    v.note = "vertex memberships are not constant";
    return v;
  }
  if (is_neighbourly_irregular(g)) {
    v.note = "neighbourly irregular as implied";
    return v;
  }
  v.holds = false;
  v.note = "adjacent vertices with equal degrees";
  for (const auto& [key, m] : g.edges())
    if (degree(g, key.a) == degree(g, key.b)) {
      v.witness = detail::degree_pair_witness(g, key.a, key.b);
      break;
    }
  return v;
}

/// For a neighbourly irregular graph with some non-adjacent equal-degree
/// pair, the complement is expected not to be neighbourly irregular.
inline verdict check_complement_remark(const graph& g) {
  verdict v;
  v.theorem = "complement-remark";
  if (!is_neighbourly_irregular(g)) {
    v.vacuous = true;
    v.note = "not neighbourly irregular";
    return v;
  }
  auto pair = detail::equal_degree_pair(g, true);
  if (!pair) {
    v.vacuous = true;
    v.note = "no non-adjacent pair with equal degrees";
    return v;
  }
  if (!is_neighbourly_irregular(complement(g))) {
    v.note = "complement is not neighbourly irregular (equal-degree pair " +
             pair->first + "," + pair->second + ")";
  } else {
    v.holds = false;
    v.note = "complement is still neighbourly irregular";
    v.witness = detail::degree_pair_witness(g, pair->first, pair->second);
  }
  return v;
}

/// Every check, in a fixed order. thm4 contributes its two directions.
inline std::vector<verdict> check_all(const graph& g) {
  std::vector<verdict> out;
  out.push_back(check_handshake(g));
  out.push_back(check_thm1(g));
  out.push_back(check_regular_size(g));
  out.push_back(check_totally_regular_relation(g));
  auto t4 = check_thm4(g);
  out.push_back(std::move(t4.forward));
  out.push_back(std::move(t4.converse));
  out.push_back(check_thm5(g));
  out.push_back(check_thm6(g));
  out.push_back(check_complement_remark(g));
  return out;
}

inline const std::set<std::string>& known_theorems() {
  static const std::set<std::string> ids = {
      "handshake", "thm1", "thm2",
      "thm3",      "thm4", "thm4-forward",
      "thm4-converse", "thm5", "thm6",
      "complement-remark"};
  return ids;
}

inline verdict run_check(const graph& g, const std::string& theorem) {
  if (theorem == "handshake") return check_handshake(g);
  if (theorem == "thm1") return check_thm1(g);
  if (theorem == "thm2") return check_regular_size(g);
  if (theorem == "thm3") return check_totally_regular_relation(g);
  if (theorem == "thm4-forward") return check_thm4(g).forward;
  if (theorem == "thm4-converse") return check_thm4(g).converse;
  if (theorem == "thm4") {
    auto r = check_thm4(g);
    if (!r.forward.holds) return r.forward;
    if (!r.converse.holds) return r.converse;
    verdict v;
    v.theorem = "thm4";
    v.vacuous = r.forward.vacuous && r.converse.vacuous;
    v.note = "both directions hold";
    return v;
  }
  if (theorem == "thm5") return check_thm5(g);
  if (theorem == "thm6") return check_thm6(g);
  if (theorem == "complement-remark") return check_complement_remark(g);
  throw unknown_theorem(theorem);
}

/// Deterministic falsification over generated graphs: an exhaustive sweep of
/// tiny graphs (n <= 3, at most half the budget) followed by a seeded random
/// stream of generator specs up to `max_vertices`. Grid scalars become
/// symmetric edge memberships (v,-v). Returns every failing instance in
/// generation order; result depends only on the arguments.
inline std::vector<std::pair<graph, verdict>> search_counterexamples(
    const std::string& theorem, int max_vertices,
    const std::vector<scalar>& value_grid, std::uint64_t seed,
    std::uint64_t budget) {
  if (!known_theorems().contains(theorem)) throw unknown_theorem(theorem);
  if (value_grid.empty()) throw invalid_grid("value grid is empty");
  for (scalar s : value_grid)
    if (s < scalar{} || s > scalar::from_raw(scalar::scale))
      throw invalid_grid("grid value " + s.str() + " outside [0,1]");
  if (max_vertices < 1 || max_vertices > 8)
    throw invalid_spec("max_vertices must be between 1 and 8");
  if (budget == 0) throw invalid_spec("budget must be positive");

  std::vector<bipolar> grid;
  grid.reserve(value_grid.size());
  for (scalar s : value_grid) grid.emplace_back(s, -s);
  bipolar strongest = detail::strongest(grid);

  std::vector<std::pair<graph, verdict>> found;
  std::uint64_t examined = 0;
  auto consider = [&](const graph& g) {
    verdict v = run_check(g, theorem);
    ++examined;
    if (!v.holds) found.emplace_back(g, std::move(v));
  };

  // Exhaustive sweep: all edge subsets of K_n over the grid, vertices pinned
  // to the strongest grid value.
  std::uint64_t exhaust_cap = budget / 2;
  for (int n = 1; n <= std::min(3, max_vertices) && examined < exhaust_cap;
       ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint64_t states = grid.size() + 1;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= states;
    for (std::uint64_t code = 0; code < total && examined < exhaust_cap;
         ++code) {
      graph_builder b;
      for (int i = 0; i < n; ++i)
        b.add_vertex(detail::gen_vertex_name(i), strongest);
      std::uint64_t rest = code;
      for (const auto& [i, j] : pairs) {
        std::uint64_t state = rest % states;
        rest /= states;
        if (state > 0)
          b.add_edge(detail::gen_vertex_name(i), detail::gen_vertex_name(j),
                     grid[state - 1]);
      }
      consider(std::move(b).build());
    }
  }

  // Seeded stream mixing random graphs, even cycles and constant-vertex
  // wrappers.
  std::mt19937_64 rng(seed);
  while (examined < budget) {
    std::uint64_t child_seed = rng();
    std::uint64_t choice = rng() % 4;
    if (choice == 2 && max_vertices < 4) choice = 0;
    gen_spec spec;
    spec.seed = child_seed;
    switch (choice) {
      case 2: {
        spec.kind = gen_kind::even_cycle;
        std::uint64_t evens = static_cast<std::uint64_t>(max_vertices - 2) / 2;
        spec.n = static_cast<int>(4 + 2 * (rng() % evens));
        spec.pattern = (grid.size() >= 2 && rng() % 2 == 0)
                           ? gen_pattern::alternating
                           : gen_pattern::constant;
        std::size_t shift = rng() % grid.size();
        spec.value_grid.assign(grid.begin() + shift, grid.end());
        spec.value_grid.insert(spec.value_grid.end(), grid.begin(),
                               grid.begin() + shift);
      } break;
      case 3: {
        auto base = std::make_shared<gen_spec>();
        base->kind = gen_kind::random_graph;
        base->n = static_cast<int>(1 + rng() % max_vertices);
        base->edge_probability =
            scalar::from_raw(static_cast<std::int64_t>(rng() % (scalar::scale + 1)));
        base->value_grid = grid;
        base->seed = child_seed;
        spec.kind = gen_kind::constant_vertex;
        spec.base = std::move(base);
      } break;
      default: {
        spec.kind = gen_kind::random_graph;
        spec.n = static_cast<int>(1 + rng() % max_vertices);
        spec.edge_probability =
            scalar::from_raw(static_cast<std::int64_t>(rng() % (scalar::scale + 1)));
        spec.value_grid = grid;
      } break;
    }
    consider(generate(spec));
  }
  return found;
}

}  // namespace bfg
