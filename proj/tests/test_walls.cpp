#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "wallkit/builders.hpp"
#include "wallkit/cayley_ball.hpp"
#include "wallkit/dehn.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/examples.hpp"
#include "wallkit/separation.hpp"
#include "wallkit/walls.hpp"

using namespace wallkit;
using testing::P;

namespace {

// A ring of `n` squares: top cycle t0..t(n-1), bottom cycle u0..u(n-1).
Complex annulus(int n) {
  testing::CycleBuilder b;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    auto t = [](int k) { return "t" + std::to_string(k); };
    auto u = [](int k) { return "u" + std::to_string(k); };
    b.cycle({t(i), t(j), u(j), u(i)});
  }
  return b.complex();
}

Complex tv_ball(unsigned R) {
  static DehnMachine m(gen_example(TvParams{{1, 2}, 7}).presentation);
  return build_cayley_ball(m, R);
}

Complex mixed_ball(unsigned R) {
  static DehnMachine m(P("gens: a b\nrel: (ab)^7\nrel: (ab^-1)^7"));
  return build_cayley_ball(m, R);
}

std::set<EdgeId> edge_set(const Wall& w) { return {w.edges.begin(), w.edges.end()}; }

// Strict convexity by enumerating every geodesic between carrier vertices.
bool convex_oracle(const WallSystem& ws, std::size_t w) {
  const Complex& c = ws.complex();
  std::set<EdgeId> carrier = edge_set(ws.wall(w));
  for (const auto& h : ws.wall(w).hyper) {
    for (const auto& i : c.cell(h.cell).boundary) carrier.insert(i.edge);
  }
  auto hv = hypercarrier_vertices(ws, w);
  for (std::size_t i = 0; i < hv.size(); ++i) {
    for (std::size_t j = i + 1; j < hv.size(); ++j) {
      for (const auto& g : oracle::all_geodesics(c, hv[i], hv[j])) {
        for (auto e : g) {
          if (!carrier.count(e)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("walls of a tree are single edges") {
  auto t = testing::path_graph(6);
  auto ws = build_walls(t);
  CHECK(ws.wall_count() == 6);
  CHECK(ws.rule() == SettledRule::All);
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    CHECK(ws.wall(w).edges.size() == 1);
    CHECK(ws.wall(w).settled);
    CHECK(wall_components(ws, w).two_sided());
    auto h = hypergraph_of(ws, w);
    CHECK(h.vertices.size() == 1);
    CHECK(h.is_tree);
    CHECK(hypercarrier_check(ws, w).pass);
  }
  for (VertexId p = 0; p < t.vertex_count(); ++p) {
    auto d = t.distances_from(p);
    for (VertexId q = 0; q < t.vertex_count(); ++q) {
      CHECK(wall_distance(ws, p, q, DistanceMode::Parity).settled == d[q]);
      CHECK(wall_distance(ws, p, q, DistanceMode::Components).settled == d[q]);
    }
  }
}

TEST_CASE("a single 14-gon has 7 walls of two edges") {
  auto c = testing::polygon(14);
  auto ws = build_walls(c);
  REQUIRE(ws.wall_count() == 7);
  for (std::size_t w = 0; w < 7; ++w) {
    CHECK(ws.wall(w).edges.size() == 2);
    auto h = hypergraph_of(ws, w);
    CHECK(h.vertices.size() == 2);
    CHECK(h.edges.size() == 1);
    CHECK(h.is_tree);
    CHECK(wall_components(ws, w).two_sided());
  }
  // ids are the least edge of each class, in increasing order
  for (std::size_t w = 0; w < 7; ++w) CHECK(ws.wall(w).id == w);
}

TEST_CASE("odd cells are rejected") {
  testing::CycleBuilder b;
  b.cycle({"x", "y", "z"});
  CHECK_THROWS_AS(build_walls(b.complex()), OddCell);
}

TEST_CASE("example 1: the b-c walls") {
  auto c = build_example1({1});
  auto ws = build_walls(c);
  auto b = *c.find_vertex("b1");
  auto cc = *c.find_vertex("c1");
  auto path = geodesic(c, b, cc);
  REQUIRE(path.edges.size() == 3);
  for (auto e : path.edges) {
    const auto& w = ws.wall(ws.wall_of(e));
    // each pairs the b-c edge with an edge of the a-f segment of r_1
    CHECK(w.edges.size() == 2);
    REQUIRE(w.hyper.size() == 1);
    CHECK(w.hyper[0].cell == 0);
    CHECK(wall_components(ws, ws.wall_of(e)).two_sided());
  }
  auto two = build_example1({2});
  auto ws2 = build_walls(two);
  auto b2 = *two.find_vertex("b2");
  auto c2 = *two.find_vertex("c2");
  for (auto e : geodesic(two, b2, c2).edges) {
    CHECK(hypercarrier_check(ws2, ws2.wall_of(e), true).pass);
    CHECK(convex_oracle(ws2, ws2.wall_of(e)));
  }
}

TEST_CASE("wall partition matches the naive closure") {
  std::vector<Complex> cs{build_example1({1, 2, 3}), build_example2(2, 14), annulus(6), testing::two_cells(12, 5),
                          mixed_ball(7), tv_ball(8)};
  for (const auto& c : cs) {
    auto ws = build_walls(c);
    auto labels = oracle::naive_wall_labels(c);
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      CHECK(ws.wall(ws.wall_of(e)).id == labels[e]);
    }
    for (std::size_t w = 0; w < ws.wall_count(); ++w) {
      if (w > 0) CHECK(ws.wall(w - 1).id < ws.wall(w).id);
      CHECK(*ws.find_wall(ws.wall(w).id) == w);
    }
  }
}

TEST_CASE("a wall around an annulus is not two-sided") {
  auto c = annulus(6);
  CHECK_FALSE(simply_connected_certificate(c));
  auto ws = build_walls(c);
  bool saw_cycle = false, saw_one_sided = false;
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    auto h = hypergraph_of(ws, w);
    auto sides = wall_components(ws, w);
    CHECK(sides.components == oracle::components_without(c, edge_set(ws.wall(w))));
    if (!h.is_tree) saw_cycle = true;
    if (!sides.two_sided()) saw_one_sided = true;
  }
  CHECK(saw_cycle);
  CHECK(saw_one_sided);
}

TEST_CASE("settled walls of C'(1/6) balls: trees, two sides, convex") {
  for (const auto& c : {tv_ball(8), mixed_ball(8)}) {
    auto ws = build_walls(c);
    CHECK(ws.simply_connected_certified());
    CHECK(ws.b6());
    CHECK(ws.rule() == SettledRule::Intrinsic);
    std::size_t checked = 0;
    for (std::size_t w = 0; w < ws.wall_count(); ++w) {
      if (!ws.wall(w).settled) continue;
      CHECK(hypergraph_of(ws, w).is_tree);
      if (ws.wall(w).edges.size() > 1 || checked < 200) {
        auto sides = wall_components(ws, w);
        CHECK(sides.two_sided());
        CHECK(hypercarrier_check(ws, w, true).pass);
        ++checked;
      }
    }
  }
}

TEST_CASE("convexity agrees with geodesic enumeration") {
  std::vector<Complex> cs{build_example1({1, 2}), build_example2(2, 8), build_example2(4, 6),
                          testing::two_cells(12, 5), testing::two_cells(10, 4), mixed_ball(7)};
  for (const auto& c : cs) {
    auto ws = build_walls(c);
    for (std::size_t w = 0; w < ws.wall_count(); ++w) {
      CHECK(hypercarrier_check(ws, w, true).pass == convex_oracle(ws, w));
    }
  }
}

TEST_CASE("settled rules") {
  auto c = tv_ball(8);
  WallOptions margin{SettledRule::Margin};
  auto ws = build_walls(c, margin);
  CHECK(ws.rule() == SettledRule::Margin);
  CHECK(ws.settled_count() == ws.margin_settled_count());
  // L = 28 > R: nothing fits the margin
  CHECK(ws.settled_count() == 0);

  // Z_8: the ball of radius 12 keeps the whole cell within R - L = 4
  DehnMachine m(P("gens: a\nrel: a^8"));
  auto z8 = build_cayley_ball(m, 12);
  CHECK(z8.vertex_count() == 8);
  auto wm = build_walls(z8, margin);
  CHECK(wm.settled_count() == 4);
  auto z8s = build_cayley_ball(m, 11);
  CHECK(build_walls(z8s, margin).settled_count() == 0);
  auto auto_rule = build_walls(z8s);
  CHECK(auto_rule.rule() == SettledRule::Intrinsic);
  CHECK(auto_rule.settled_count() == 4);
  CHECK(parse_settled_rule("intrinsic") == SettledRule::Intrinsic);
  CHECK(to_string(SettledRule::Margin) == "margin");
  CHECK_THROWS_AS(parse_settled_rule("sometimes"), BadParams);
}

TEST_CASE("wall pseudo-metric properties") {
  std::vector<Complex> cs{tv_ball(7), mixed_ball(8), build_example1({1, 2, 3}), build_example2(2, 14)};
  std::mt19937_64 rng(51);
  for (const auto& c : cs) {
    auto ws = build_walls(c);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int t = 0; t < 150; ++t) pairs.push_back({VertexId(rng() % c.vertex_count()), VertexId(rng() % c.vertex_count())});
    // reversed pairs, and both ends of some edges
    std::size_t base = pairs.size();
    for (std::size_t i = 0; i < base; ++i) pairs.push_back({pairs[i].second, pairs[i].first});
    std::size_t edges_from = pairs.size();
    for (EdgeId e = 0; e < c.edge_count(); e += 7) pairs.push_back({c.edge(e).u, c.edge(e).v});
    auto sweep = wall_distances_by_components(ws, pairs);
    CHECK(sweep.not_two_sided_walls.empty());
    std::map<std::uint32_t, WallSides> sides_cache;
    auto sides_of = [&](std::uint32_t w) -> const WallSides& {
      auto it = sides_cache.find(w);
      if (it == sides_cache.end()) it = sides_cache.emplace(w, wall_components(ws, w)).first;
      return it->second;
    };
    for (std::size_t i = 0; i < base; ++i) {
      auto [p, q] = pairs[i];
      auto par = wall_distance(ws, p, q, DistanceMode::Parity);
      auto com = sweep.distances[i];
      CHECK(par.settled == com.settled);
      CHECK(sweep.distances[base + i].settled == com.settled);
      auto d = c.distances_from(p)[q];
      CHECK(com.settled <= d);
      CHECK(wall_distance(ws, p, p, DistanceMode::Parity).settled == 0);
      // separating walls meet the geodesic: those met account for all of d_W
      auto g = geodesic(c, p, q);
      std::set<std::uint32_t> met;
      for (auto e : g.edges) met.insert(ws.wall_of(e));
      std::uint32_t separating_met = 0;
      for (auto w : met) {
        const auto& sides = sides_of(w);
        if (ws.wall(w).settled && sides.side[p] != sides.side[q]) ++separating_met;
      }
      CHECK(separating_met == com.settled);
    }
    for (std::size_t i = edges_from; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      EdgeId e = static_cast<EdgeId>((i - edges_from) * 7);
      const auto& sides = sides_of(ws.wall_of(e));
      CHECK(sweep.distances[i].settled == (sides.side[u] != sides.side[v] ? 1u : 0u));
    }
    for (int t = 0; t < 60; ++t) {
      VertexId x = rng() % c.vertex_count(), y = rng() % c.vertex_count(), z = rng() % c.vertex_count();
      auto dxy = wall_distance(ws, x, y, DistanceMode::Parity).settled;
      auto dyz = wall_distance(ws, y, z, DistanceMode::Parity).settled;
      auto dxz = wall_distance(ws, x, z, DistanceMode::Parity).settled;
      CHECK(dxz <= dxy + dyz);
    }
  }
  // single-pair components mode on a small complex
  auto e1 = build_example1({1, 2});
  auto w1 = build_walls(e1);
  for (VertexId p = 0; p < e1.vertex_count(); p += 3) {
    for (VertexId q = 0; q < e1.vertex_count(); q += 5) {
      CHECK(wall_distance(w1, p, q, DistanceMode::Components).settled ==
            wall_distance(w1, p, q, DistanceMode::Parity).settled);
    }
  }
}

TEST_CASE("dump and dot output") {
  auto c = build_example2(2, 8);
  auto ws = build_walls(c);
  auto dump = dump_walls(ws);
  CHECK(dump.find("wall 0 settled") != std::string::npos);
  CHECK(dump.find("hyper") != std::string::npos);
  auto dot = walls_dot(ws);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
  auto h = hypergraph_dot(ws, 0);
  CHECK(h.find("graph") != std::string::npos);
}
