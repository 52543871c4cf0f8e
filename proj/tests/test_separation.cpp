#include <algorithm>
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
#include "wallkit/report.hpp"
#include "wallkit/separation.hpp"

using namespace wallkit;
using testing::P;

namespace {

Complex tv_ball(unsigned R) {
  static DehnMachine m(gen_example(TvParams{{1, 2}, 7}).presentation);
  return build_cayley_ball(m, R);
}

std::vector<VertexId> all_vertices(const Complex& c) {
  std::vector<VertexId> out(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) out[v] = v;
  return out;
}

bool pairwise_disjoint(std::vector<Interval> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].first <= v[i - 1].last) return false;
  }
  return true;
}

std::set<std::int64_t> points(const std::vector<Interval>& v) {
  std::set<std::int64_t> out;
  for (const auto& u : v) {
    for (auto x = u.first; x <= u.last; ++x) out.insert(x);
  }
  return out;
}

void check_split(const std::vector<Interval>& input, const CoverSplit& s) {
  CHECK(points(s.cover) == points(input));
  for (const auto& u : s.cover) CHECK(std::find(input.begin(), input.end(), u) != input.end());
  // minimal: dropping any member shrinks the union
  for (std::size_t i = 0; i < s.cover.size(); ++i) {
    auto rest = s.cover;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    CHECK(points(rest).size() < points(s.cover).size());
  }
  CHECK(pairwise_disjoint(s.u1));
  CHECK(pairwise_disjoint(s.u2));
  auto both = s.u1;
  both.insert(both.end(), s.u2.begin(), s.u2.end());
  std::sort(both.begin(), both.end());
  auto cover = s.cover;
  std::sort(cover.begin(), cover.end());
  CHECK(both == cover);
}

// Random intervals on a path with A planted so each interval has density >= C.
struct Instance {
  std::vector<Interval> intervals;
  std::vector<std::int64_t> a;
};

Instance planted(std::mt19937_64& rng, const Rational& C, bool heavy_overlap) {
  Instance in;
  std::int64_t n = 20 + rng() % 180;
  std::size_t count = 1 + rng() % (heavy_overlap ? 40 : 12);
  std::set<std::int64_t> a;
  for (std::size_t k = 0; k < count; ++k) {
    std::int64_t len = 1 + rng() % (heavy_overlap ? n / 2 : 30);
    std::int64_t first = rng() % std::max<std::int64_t>(1, n - len);
    Interval u{first, first + len - 1};
    in.intervals.push_back(u);
  }
  for (const auto& u : in.intervals) {
    auto need = (C * Rational(u.length()));
    std::int64_t want = need.numerator() / need.denominator() + (need.numerator() % need.denominator() != 0);
    std::int64_t have = std::count_if(a.begin(), a.end(), [&](auto x) { return x >= u.first && x <= u.last; });
    while (have < want) {
      auto x = u.first + static_cast<std::int64_t>(rng() % u.length());
      if (a.insert(x).second) ++have;
    }
  }
  // some noise outside every interval
  for (int k = 0; k < 5; ++k) a.insert(n + 5 + k);
  in.a.assign(a.begin(), a.end());
  return in;
}

}  // namespace

TEST_CASE("separation constants") {
  CHECK(separation_constant(Rational(1, 6)) == Rational(1, 12));
  CHECK(local_density_bound(Rational(1, 6)) == Rational(1, 6));
  CHECK(local_density_bound(Rational(1, 8)) == Rational(5, 12));
}

TEST_CASE("geodesics") {
  auto t = testing::path_graph(5);
  auto g = geodesic(t, 0, 1);
  CHECK(g.edges == std::vector<EdgeId>{0});
  CHECK(geodesic(t, 0, 5).edges.size() == 5);
  CHECK(geodesic(t, 3, 3).edges.empty());

  auto e1 = build_example1({1});
  auto a1 = *e1.find_vertex("a1"), ee = *e1.find_vertex("e1");
  CHECK(geodesic(e1, a1, ee).edges.size() == 8);

  std::vector<Complex> cs{build_example1({1, 2}), build_example2(2, 8), tv_ball(4), testing::two_cells(12, 5)};
  std::mt19937_64 rng(61);
  for (const auto& c : cs) {
    for (int k = 0; k < 60; ++k) {
      VertexId p = rng() % c.vertex_count(), q = rng() % c.vertex_count();
      auto all = oracle::all_geodesics(c, p, q);
      auto best = *std::min_element(all.begin(), all.end());
      auto got = geodesic(c, p, q);
      CHECK(got.edges == best);
      CHECK(got.vertices.size() == got.edges.size() + 1);
      CHECK(got.vertices.front() == p);
      CHECK(got.vertices.back() == q);
    }
  }
}

TEST_CASE("contexts reject non-geodesic paths") {
  auto c = testing::polygon(6);
  auto ws = build_walls(c);
  Path longway;
  longway.vertices = {0, 5, 4, 3, 2};
  // edges of the cycle v0..v5: edge i joins v_i and v_{i+1}
  longway.edges = {5, 4, 3, 2};
  CHECK_THROWS_AS(make_context(ws, longway), BadParams);
  auto ctx = make_context(ws, 0, 2);
  CHECK(ctx.gamma.edges.size() == 2);
}

TEST_CASE("A(gamma)") {
  auto t = testing::path_graph(7);
  auto wt = build_walls(t);
  auto ctx = make_context(wt, 1, 6);
  CHECK(compute_A(ctx).size() == 5);

  auto e1 = build_example1({1, 2, 3, 4});
  auto ws1 = build_walls(e1);
  for (unsigned n = 1; n <= 4; ++n) {
    auto a = *e1.find_vertex("a" + std::to_string(n)), e = *e1.find_vertex("e" + std::to_string(n));
    auto c = make_context(ws1, a, e);
    CHECK(c.gamma.edges.size() == 2 * n + 6);
    auto A = compute_A(c);
    CHECK(A.size() == 6);
    auto dw = wall_distance(ws1, a, e, DistanceMode::Components).settled;
    CHECK(dw == 6);
    // the A edges are exactly the b-c and c-d segments
    auto b = *e1.find_vertex("b" + std::to_string(n)), d = *e1.find_vertex("d" + std::to_string(n));
    std::set<EdgeId> bcd;
    for (auto x : geodesic(e1, b, d).edges) bcd.insert(x);
    for (auto i : A) CHECK(bcd.count(c.gamma.edges[i]) == 1);
  }

  auto e2 = build_example2(2, 14);
  auto ws2 = build_walls(e2);
  auto pp = *e2.find_vertex("p'"), p2 = *e2.find_vertex("p''"), ap = *e2.find_vertex("a'");
  auto ctx2 = make_context(ws2, pp, p2);
  std::set<EdgeId> seg;
  for (auto x : geodesic(e2, pp, ap).edges) seg.insert(x);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < ctx2.gamma.edges.size(); ++i) {
    if (!seg.count(ctx2.gamma.edges[i])) continue;
    ++seen;
    CHECK_FALSE(ctx2.in_A[i]);
    CHECK(ctx2.crossings[i] % 2 == 0);
  }
  CHECK(seen == 1);
}

TEST_CASE("relator neighborhoods") {
  auto t = testing::path_graph(4);
  auto wt = build_walls(t);
  auto ctx = make_context(wt, 0, 4);
  auto ne = relator_neighborhood(ctx, 2, wt);
  CHECK(ne.singleton);
  CHECK(ne.length() == 1);
  auto pr = local_density_check(ne, ctx, Rational(1, 6));
  CHECK(pr.first == Rational(1));
  CHECK(pr.second);

  for (unsigned x : {2u, 4u}) {
    auto c = build_example2(x, 3 * x + 2);
    auto ws = build_walls(c);
    auto pp = *c.find_vertex("p'"), p2 = *c.find_vertex("p''");
    auto g = make_context(ws, pp, p2);
    std::size_t probed = 0;
    for (std::size_t i = 0; i < g.gamma.edges.size(); ++i) {
      if (g.in_A[i]) continue;
      auto n = relator_neighborhood(g, i, ws);
      REQUIRE(n.r.has_value());
      CHECK_FALSE(n.singleton);
      CHECK(n.first <= i);
      CHECK(i <= n.last);
      REQUIRE(n.partner.has_value());
      CHECK(g.wall[*n.partner] == g.wall[i]);
      // N_e lies in r and is maximal there
      std::set<EdgeId> in_r;
      for (const auto& inc : c.cell(*n.r).boundary) in_r.insert(inc.edge);
      for (auto k = n.first; k <= n.last; ++k) CHECK(in_r.count(g.gamma.edges[k]) == 1);
      if (n.first > 0) CHECK(in_r.count(g.gamma.edges[n.first - 1]) == 0);
      if (n.last + 1 < g.gamma.edges.size()) CHECK(in_r.count(g.gamma.edges[n.last + 1]) == 0);
      auto probe = probe_neighborhood(n, g, Rational(1, 6));
      CHECK(probe.near_inequality);
      CHECK(probe.far_inequality);
      CHECK(probe.density_pass);
      CHECK(probe.bound == Rational(1, 6));
      ++probed;
    }
    CHECK(probed > 0);
  }
}

TEST_CASE("relator neighborhoods need settled walls") {
  auto c = tv_ball(8);
  WallOptions margin{SettledRule::Margin};
  auto ws = build_walls(c, margin);
  auto g = make_context(ws, 0, 5);
  REQUIRE(!g.gamma.edges.empty());
  CHECK_THROWS_AS(relator_neighborhood(g, 0, ws), UnsettledWall);
}

TEST_CASE("cover_split examples") {
  auto s = cover_split({{0, 1}, {3, 4}, {6, 9}});
  CHECK(s.cover.size() == 3);
  CHECK(s.u1.size() == 3);
  CHECK(s.u2.empty());

  std::vector<Interval> chain{{0, 2}, {1, 3}, {2, 4}};
  check_split(chain, cover_split(chain));

  auto nested = cover_split({{0, 5}, {1, 2}});
  CHECK(nested.cover == std::vector<Interval>{{0, 5}});
  CHECK(nested.u1 == std::vector<Interval>{{0, 5}});
  CHECK(nested.u2.empty());
}

TEST_CASE("cover_split postconditions on random families") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 500; ++t) {
    std::vector<Interval> v;
    std::size_t count = 1 + rng() % 25;
    for (std::size_t k = 0; k < count; ++k) {
      std::int64_t a = rng() % 60, len = 1 + rng() % 15;
      v.push_back({a, a + len - 1});
    }
    check_split(v, cover_split(v));
    CHECK(union_size(v) == static_cast<std::int64_t>(points(v).size()));
  }
}

TEST_CASE("local-to-global density") {
  auto single = local_to_global_bound({0, 1, 2, 3}, {{0, 3}}, Rational(1));
  CHECK(single.pass);
  CHECK(single.split_pass);
  CHECK(single.a_size == 4);

  CHECK_THROWS_AS(local_to_global_bound({0}, {{0, 3}}, Rational(1, 2)), HypothesisViolated);

  std::mt19937_64 rng(63);
  for (int t = 0; t < 600; ++t) {
    Rational C = std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2)}[t % 3];
    auto in = planted(rng, C, t % 5 == 0);
    auto r = local_to_global_bound(in.a, in.intervals, C);
    CHECK(r.pass);
    CHECK(r.split_pass);
    CHECK(r.slack >= 0);
    CHECK(r.union_edges == union_size(in.intervals));
  }
}

TEST_CASE("linear separation sweeps") {
  // free group: a tree, every ratio is 1
  DehnMachine free(P("gens: a b"));
  auto tree = build_cayley_ball(free, 3);
  auto wt = build_walls(tree);
  SeparationOptions o;
  auto r = verify_linear_separation(wt, o);
  CHECK(r.pass);
  CHECK(r.constant == Rational(1, 12));
  CHECK(r.min_ratio == Rational(1));
  CHECK(r.mean_ratio == "1/1");
  CHECK(r.region_size > 1);

  auto ball = tv_ball(6);
  auto ws = build_walls(ball);
  SeparationOptions all;
  all.region = all_vertices(ball);
  all.jobs = 1;
  auto one = verify_linear_separation(ws, all);
  all.jobs = 4;
  auto four = verify_linear_separation(ws, all);
  CHECK(one.pass);
  CHECK(one.violations == 0);
  CHECK(one.a_exceeds_dw == 0);
  CHECK(one.dw_exceeds_d == 0);
  CHECK(one.pair_count == ball.vertex_count() * (ball.vertex_count() - 1) / 2);
  CHECK(separation_csv(one, ball) == separation_csv(four, ball));
  CHECK(separation_json(one, ball).dump() == separation_json(four, ball).dump());

  // pair records agree with the single-pair computations
  all.region = {0, 3, 10, 40, 100, 200};
  auto few = verify_linear_separation(ws, all);
  for (const auto& pr : few.pairs) {
    auto ctx = make_context(ws, pr.p, pr.q);
    CHECK(pr.d == ctx.gamma.edges.size());
    CHECK(pr.dw == wall_distance(ws, pr.p, pr.q, DistanceMode::Components).settled);
    CHECK(pr.in_A_count == compute_A(ctx).size());
    CHECK(pr.in_A_count <= pr.dw);
  }
}

TEST_CASE("example 1 in observe mode") {
  auto c = build_example1({1, 2, 3, 4, 5});
  auto ws = build_walls(c);
  SeparationOptions o;
  o.mode = SeparationMode::Observe;
  for (unsigned n = 1; n <= 5; ++n) {
    o.anchors.push_back({*c.find_vertex("a" + std::to_string(n)), *c.find_vertex("e" + std::to_string(n))});
  }
  auto r = verify_linear_separation(ws, o);
  CHECK_FALSE(r.pass);
  REQUIRE(r.anchors.size() == 5);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto& a = r.anchors[n - 1];
    CHECK(a.d == 2 * n + 6);
    CHECK(a.dw == 6);
    CHECK(Rational(a.dw, a.d) == Rational(6, 2 * n + 6));
  }
  auto json = separation_json(r, c);
  CHECK(json["pass"].is_null());
  auto csv = separation_csv(r, c);
  CHECK(csv.rfind("p,q,d,dw,ratio_num,ratio_den,settled,in_A_count\n", 0) == 0);
  CHECK(csv.find("a3,e3,12,6,1,2,") != std::string::npos);
}
