#include <catch2/catch_amalgamated.hpp>

#include <bfg/classify.hpp>
#include <bfg/generate.hpp>

#include "support.hpp"

using namespace bfg;
using test_support::bp;

namespace {

graph edgeless_pair() {
  return build_graph({{"a", bp("0.5", "-0.2")}, {"b", bp("0.4", "-0.3")}}, {});
}

}  // namespace

TEST_CASE("complete graphs attain the bound on every pair", "[classify]") {
  CHECK_FALSE(is_complete(fixtures().at("F1")));

  graph full = build_graph({{"v1", bp("0.5", "-0.4")},
                            {"v2", bp("0.6", "-0.5")},
                            {"v3", bp("0.8", "-0.5")}},
                           {{"v1", "v2", bp("0.5", "-0.4")},
                            {"v1", "v3", bp("0.5", "-0.4")},
                            {"v2", "v3", bp("0.6", "-0.5")}});
  CHECK(is_complete(full));
  CHECK(is_strong(full));

  CHECK(is_complete(build_graph({{"v", bp("0.3", "-0.2")}}, {})));
  CHECK_FALSE(is_complete(edgeless_pair()));
}

TEST_CASE("strong graphs attain the bound on existing edges", "[classify]") {
  CHECK_FALSE(is_strong(fixtures().at("F1")));
  CHECK(is_strong(edgeless_pair()));

  graph partial = build_graph({{"v1", bp("0.5", "-0.4")},
                               {"v2", bp("0.6", "-0.5")},
                               {"v3", bp("0.8", "-0.5")}},
                              {{"v1", "v2", bp("0.5", "-0.4")}});
  CHECK(is_strong(partial));
  CHECK_FALSE(is_complete(partial));
}

TEST_CASE("regularity report", "[classify]") {
  auto fx = fixtures();
  auto r4 = regularity(fx.at("F4"));
  CHECK(r4.regular == bivalue{0.6_s, -0.4_s});
  CHECK(r4.totally_regular == bivalue{1.2_s, -1_s});

  CHECK_FALSE(regularity(fx.at("F1")).regular.has_value());

  auto lone = regularity(build_graph({{"v", bp("0.3", "-0.2")}}, {}));
  CHECK(lone.regular == bivalue{});
  CHECK(lone.totally_regular == bivalue{0.3_s, -0.2_s});

  CHECK_THROWS_AS(regularity(graph{}), empty_graph);
}

TEST_CASE("irregular: some adjacent pair with distinct degrees",
          "[classify]") {
  auto fx = fixtures();
  CHECK(is_irregular(fx.at("F5")));
  CHECK_FALSE(is_irregular(fx.at("F4")));
  CHECK_FALSE(is_irregular(edgeless_pair()));
}

TEST_CASE("neighbourly irregular: every adjacent pair distinct",
          "[classify]") {
  auto fx = fixtures();
  CHECK_FALSE(is_neighbourly_irregular(fx.at("F2")));
  CHECK(is_neighbourly_irregular(fx.at("F1")));
  CHECK(is_neighbourly_irregular(fx.at("F3")));
  CHECK(is_neighbourly_irregular(edgeless_pair()));
}

TEST_CASE("totally irregular variants", "[classify]") {
  auto fx = fixtures();
  CHECK(is_totally_irregular(fx.at("F1")));
  CHECK_FALSE(is_totally_irregular(fx.at("F4")));
  CHECK_FALSE(is_totally_irregular(edgeless_pair()));

  CHECK(is_neighbourly_totally_irregular(fx.at("F1")));
  CHECK_FALSE(is_neighbourly_totally_irregular(fx.at("F4")));
  CHECK(is_neighbourly_totally_irregular(edgeless_pair()));
}

TEST_CASE("highly irregular needs pairwise distinct neighbour degrees",
          "[classify]") {
  auto fx = fixtures();
  CHECK(is_highly_irregular(fx.at("F3")));
  // v2's neighbours v3 and v4 share degree (0.6,-0.7)
  CHECK_FALSE(is_highly_irregular(fx.at("F2")));
  CHECK(is_highly_irregular(edgeless_pair()));
}

TEST_CASE("classification report of the fixtures", "[classify]") {
  auto fx = fixtures();

  auto r4 = classify(fx.at("F4"));
  CHECK(r4.regularity.regular == bivalue{0.6_s, -0.4_s});
  CHECK(r4.regularity.totally_regular == bivalue{1.2_s, -1_s});
  CHECK_FALSE(r4.irregular);
  CHECK_FALSE(r4.neighbourly_irregular);
  CHECK_FALSE(r4.highly_irregular);
  CHECK(r4.connected);

  auto r1 = classify(fx.at("F1"));
  CHECK(r1.connected);
  CHECK(r1.irregular);
  CHECK(r1.neighbourly_irregular);
  CHECK(r1.totally_irregular);
  CHECK_FALSE(r1.regularity.regular.has_value());

  auto r2 = classify(fx.at("F2"));
  CHECK(r2.irregular);
  CHECK_FALSE(r2.neighbourly_irregular);
  CHECK_FALSE(r2.highly_irregular);

  auto empty = classify(graph{});
  CHECK_FALSE(empty.regularity.regular.has_value());
  CHECK(empty.connected);
  CHECK_FALSE(empty.irregular);
  CHECK(empty.neighbourly_irregular);
  CHECK(empty.highly_irregular);
}

TEST_CASE("predicate implications on generated graphs", "[classify]") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    graph g = test_support::random_graph(seed);
    auto r = classify(g);

    if (!g.edges().empty()) {
      if (r.neighbourly_irregular) CHECK(r.irregular);
      if (r.neighbourly_totally_irregular) CHECK(r.totally_irregular);
    }
    if (r.regularity.regular.has_value()) CHECK_FALSE(r.irregular);

    std::vector<bivalue> ds;
    for (const auto& [id, m] : g.vertices()) ds.push_back(degree(g, id));
    std::sort(ds.begin(), ds.end());
    bool distinct =
        std::adjacent_find(ds.begin(), ds.end()) == ds.end();
    if (distinct) {
      CHECK(r.neighbourly_irregular);
      CHECK(r.highly_irregular);
    }
    bool one_value = !ds.empty() && ds.front() == ds.back();
    CHECK(r.regularity.regular.has_value() == (!r.irregular && one_value));
  }
}

TEST_CASE("predicates survive relabeling", "[classify]") {
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    graph g = test_support::random_graph(seed);
    graph h = test_support::relabel(
        g, [](const vertex_id& v) { return "m" + v + "x"; });
    CHECK(classify(g) == classify(h));
  }
}
