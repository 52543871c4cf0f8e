// Acceptance suite: one line per criterion. Run without arguments for all of
// them, or with a criterion number (1-8) or "extra" for one.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wallkit/builders.hpp"
#include "wallkit/cayley_ball.hpp"
#include "wallkit/cell_pieces.hpp"
#include "wallkit/dehn.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/examples.hpp"
#include "wallkit/pieces.hpp"
#include "wallkit/separation.hpp"
#include "wallkit/walls.hpp"

using namespace wallkit;

namespace {

// Pinned thresholds. Every comparison below is exact; the only tolerances
// are the runtime limits.
const Rational kLambda(1, 6);
const Rational kMaxPieceRatio(1, 7);        // criterion 1
const Rational kSeparationConstant(1, 12);  // criteria 3 and 4
const Rational kDensityBound(1, 6);         // criterion 8
constexpr unsigned kRadius = 8;
constexpr std::size_t kDensityTrials = 500;
constexpr std::size_t kWordLength = 8;
constexpr std::size_t kMinProbes = 100;
constexpr unsigned kCrossoverN = 34;
constexpr double kLimit[] = {0, 5, 120, 300, 30, 5, 10, 120, 120};

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string str(const Rational& r) { return to_string(r); }

// The criterion-2/3/8 ball, built once.
struct BallFixture {
  DehnMachine m;
  Complex ball;
  WallSystem ws;
  BallFixture()
      : m(gen_example(TvParams{{1, 2}, 7}).presentation), ball(build_cayley_ball(m, kRadius)), ws(build_walls(ball)) {}
  static BallFixture& get() {
    static BallFixture f;
    return f;
  }
};

// Full sweep of the ball (all pairs), shared by criteria 3 and 8.
const SeparationReport& full_sweep() {
  static SeparationReport r = [] {
    auto& f = BallFixture::get();
    SeparationOptions o;
    o.lambda = kLambda;
    o.keep_pairs = false;
    for (VertexId v = 0; v < f.ball.vertex_count(); ++v) o.region.push_back(v);
    return verify_linear_separation(f.ws, o);
  }();
  return r;
}

Outcome criterion1() {
  std::ostringstream out;
  bool ok = true;
  for (unsigned k : {7u, 6u}) {
    auto p = gen_example(TvParams{{1, 2, 3}, k}).presentation;
    auto m = check_small_cancellation(p, kLambda);
    auto brute = oracle::max_piece_per_relator(p);
    bool agree = true;
    Rational brute_max(0);
    for (std::size_t i = 0; i < brute.size(); ++i) {
      agree = agree && brute[i] == m.relators[i].max_piece;
      brute_max = std::max(brute_max, Rational(static_cast<std::int64_t>(brute[i]),
                                               static_cast<std::int64_t>(p.relators()[i].size())));
    }
    bool expect = k == 7 ? (m.pass && m.max_ratio <= kMaxPieceRatio) : !m.pass;
    ok = ok && agree && expect && brute_max == m.max_ratio;
    out << "k=" << k << ": " << (m.pass ? "pass" : "fail") << " max ratio " << str(m.max_ratio)
        << (agree ? " (oracle agrees)" : " (ORACLE DISAGREES)") << "; ";
  }
  return {ok, out.str()};
}

Outcome criterion2() {
  auto& f = BallFixture::get();
  const auto& ws = f.ws;
  std::size_t settled = 0, trees = 0, two_sided = 0, convex = 0, pairs = 0;
  std::ostringstream bad;
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    if (!ws.wall(w).settled) continue;
    ++settled;
    bool t = hypergraph_of(ws, w).is_tree;
    bool s = wall_components(ws, w).two_sided();
    auto cv = hypercarrier_check(ws, w, true);
    pairs += cv.pairs_checked;
    trees += t;
    two_sided += s;
    convex += cv.pass;
    if ((!t || !s || !cv.pass) && bad.tellp() < 200) bad << " wall " << ws.wall(w).id;
  }
  std::ostringstream out;
  out << "R=" << kRadius << " ball: " << f.ball.vertex_count() << " vertices, " << f.ball.cell_count()
      << " cells, " << ws.wall_count() << " walls, rule " << to_string(ws.rule()) << " ("
      << ws.margin_settled_count() << " settled by the margin rule); settled " << settled << ": trees " << trees
      << ", two-sided " << two_sided << ", strictly convex " << convex << " (" << pairs << " carrier pairs)"
      << bad.str();
  bool ok = settled > 0 && trees == settled && two_sided == settled && convex == settled;
  return {ok, out.str()};
}

Outcome criterion3() {
  auto& f = BallFixture::get();
  auto cp = check_B6(f.ball, kLambda);
  SeparationOptions o;
  o.lambda = kLambda;
  o.keep_pairs = false;
  auto interior = verify_linear_separation(f.ws, o);
  const auto& all = full_sweep();
  auto line = [](const char* name, const SeparationReport& r) {
    std::ostringstream s;
    s << name << ": " << r.region_size << " vertices, " << r.settled_pairs << "/" << r.pair_count
      << " settled pairs, min " << (r.min_ratio ? str(*r.min_ratio) : "-") << ", mean " << r.mean_ratio
      << ", violations " << r.violations << ", d_W>d " << r.dw_exceeds_d << ", inconclusive " << r.inconclusive;
    return s.str();
  };
  bool ok = cp.c_prime && interior.constant == kSeparationConstant && interior.pass && all.pass &&
            interior.dw_exceeds_d == 0 && all.dw_exceeds_d == 0 && *interior.min_ratio >= kSeparationConstant;
  std::ostringstream out;
  out << "constant " << str(interior.constant) << "; complex C'(1/6) " << (cp.c_prime ? "yes" : "no") << "; "
      << line("interior", interior) << "; " << line("whole ball", all);
  return {ok, out.str()};
}

Outcome criterion4() {
  std::vector<std::uint32_t> ns{1, 2, 3, 4, 5, 6, 7, 8};
  auto c = build_example1(ns);
  auto b6 = check_B6(c);
  auto ws = build_walls(c);
  bool ok = b6.b6;
  std::ostringstream out;
  out << "B(6) " << (b6.b6 ? "passes" : "FAILS") << " (C'(1/6) " << (b6.c_prime ? "yes" : "no") << "); ";
  auto measure = [&](const Complex& cx, const WallSystem& w, unsigned n, bool& good) {
    auto a = *cx.find_vertex("a" + std::to_string(n)), e = *cx.find_vertex("e" + std::to_string(n));
    auto d = cx.distances_from(a)[e];
    auto dw = wall_distance(w, a, e, DistanceMode::Components);
    auto dp = wall_distance(w, a, e, DistanceMode::Parity);
    Rational ratio(dw.settled, d);
    bool below = ratio < kSeparationConstant;
    good = good && d == 2 * n + 6 && dw.settled == 6 && dp.settled == 6 && below == (n >= kCrossoverN);
    return std::to_string(n) + ":" + std::to_string(dw.settled) + "/" + std::to_string(d);
  };
  out << "d_W/d by n";
  for (auto n : ns) out << " " << measure(c, ws, n, ok);
  // the crossover itself, on freshly built thetas
  auto far = build_example1({kCrossoverN - 1, kCrossoverN});
  auto wf = build_walls(far);
  out << " " << measure(far, wf, kCrossoverN - 1, ok) << " " << measure(far, wf, kCrossoverN, ok);
  // and by formula: 6/(2n+6) < 1/12 exactly when n >= 34
  bool formula = true;
  for (std::int64_t n = 1; n <= 1000; ++n) {
    formula = formula && ((Rational(6, 2 * n + 6) < kSeparationConstant) == (n >= kCrossoverN));
  }
  ok = ok && formula;
  out << "; first n below 1/12 by formula: " << (formula ? std::to_string(kCrossoverN) : "MISMATCH");
  return {ok, out.str()};
}

Outcome criterion5() {
  auto c = build_example2(2, 14);
  auto ws = build_walls(c);
  auto pp = *c.find_vertex("p'"), p2 = *c.find_vertex("p''"), ap = *c.find_vertex("a'");
  auto ctx = make_context(ws, pp, p2);
  std::set<std::uint32_t> walls;
  for (auto e : geodesic(c, pp, ap).edges) walls.insert(ws.wall_of(e));
  bool ok = !walls.empty();
  std::ostringstream out;
  out << "gamma(p',p'') length " << ctx.gamma.edges.size() << "; walls through p'a':";
  for (auto w : walls) {
    std::uint32_t crossings = 0;
    for (auto x : ctx.wall) crossings += x == w;
    auto sides = wall_components(ws, w);
    bool separates = sides.side[pp] != sides.side[p2];
    ok = ok && crossings % 2 == 0 && !separates && sides.two_sided();
    out << " wall " << ws.wall(w).id << " crosses " << crossings << "x, " << (separates ? "separates" : "no separation");
  }
  return {ok, out.str()};
}

Outcome criterion6() {
  std::mt19937_64 rng(2024);
  const Rational Cs[] = {Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  std::size_t pass = 0, split_ok = 0;
  Rational min_slack(1000000);
  auto disjoint = [](std::vector<Interval> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i].first <= v[i - 1].last) return false;
    }
    return true;
  };
  for (std::size_t t = 0; t < kDensityTrials; ++t) {
    const Rational C = Cs[t % 3];
    std::int64_t n = 20 + static_cast<std::int64_t>(rng() % 300);
    std::size_t count = 1 + rng() % 30;
    std::vector<Interval> us;
    for (std::size_t k = 0; k < count; ++k) {
      std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 40);
      std::int64_t first = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::max<std::int64_t>(1, n - len)));
      us.push_back({first, first + len - 1});
    }
    std::set<std::int64_t> a;
    for (const auto& u : us) {
      Rational need = C * Rational(u.length());
      std::int64_t want = need.numerator() / need.denominator() + (need.numerator() % need.denominator() != 0);
      std::int64_t have = 0;
      for (auto x : a) have += x >= u.first && x <= u.last;
      while (have < want) {
        if (a.insert(u.first + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(u.length()))).second) ++have;
      }
    }
    auto r = local_to_global_bound({a.begin(), a.end()}, us, C);
    pass += r.pass && r.split_pass;
    min_slack = std::min(min_slack, r.slack);

    auto s = cover_split(us);
    std::set<std::int64_t> all, cov;
    for (const auto& u : us) for (auto x = u.first; x <= u.last; ++x) all.insert(x);
    for (const auto& u : s.cover) for (auto x = u.first; x <= u.last; ++x) cov.insert(x);
    bool minimal = true;
    for (std::size_t i = 0; i < s.cover.size() && minimal; ++i) {
      std::set<std::int64_t> rest;
      for (std::size_t j = 0; j < s.cover.size(); ++j) {
        if (j != i) for (auto x = s.cover[j].first; x <= s.cover[j].last; ++x) rest.insert(x);
      }
      minimal = rest.size() < cov.size();
    }
    auto both = s.u1;
    both.insert(both.end(), s.u2.begin(), s.u2.end());
    std::sort(both.begin(), both.end());
    auto cover = s.cover;
    std::sort(cover.begin(), cover.end());
    split_ok += all == cov && minimal && disjoint(s.u1) && disjoint(s.u2) && both == cover;
  }
  std::ostringstream out;
  out << kDensityTrials << " instances: bound holds on " << pass << ", cover_split postconditions on " << split_ok
      << ", least slack " << str(min_slack);
  return {pass == kDensityTrials && split_ok == kDensityTrials, out.str()};
}

Outcome criterion7() {
  auto p = gen_example(TvParams{{1}, 7}).presentation;
  DehnMachine m(p);
  std::size_t words = 0, agree = 0, trivial = 0;
  for (std::size_t n = 0; n <= kWordLength; ++n) {
    for (const auto& w : oracle::all_words(2, n)) {
      ++words;
      bool a = is_trivial(w, m), b = oracle::zz7_trivial(w);
      agree += a == b;
      trivial += b;
    }
  }
  std::ostringstream out;
  out << words << " words of length <= " << kWordLength << ", " << trivial << " trivial, agreement " << agree << "/"
      << words;
  return {agree == words, out.str()};
}

// Probes every non-A edge on the lex-least geodesics of the given pairs.
struct ProbeTally {
  std::size_t non_a = 0, probes = 0, ok_near = 0, ok_far = 0, okd = 0, errors = 0;
  bool all_pass() const { return probes > 0 && ok_near == probes && ok_far == probes && okd == probes && errors == 0; }
};

void probe_pair(const WallSystem& ws, VertexId p, VertexId q, ProbeTally& t) {
  auto ctx = make_context(ws, p, q);
  for (std::size_t i = 0; i < ctx.gamma.edges.size(); ++i) {
    if (ctx.in_A[i]) continue;
    ++t.non_a;
    try {
      auto ne = relator_neighborhood(ctx, i, ws);
      auto pr = probe_neighborhood(ne, ctx, kLambda);
      ++t.probes;
      t.ok_near += pr.near_inequality;
      t.ok_far += pr.far_inequality;
      t.okd += pr.density_pass && pr.bound == kDensityBound;
    } catch (const Error&) {
      ++t.errors;
    }
  }
}

Outcome criterion8() {
  auto& f = BallFixture::get();
  // Interior pairs first: a geodesic has a non-A edge exactly when |A| < d.
  SeparationOptions o;
  o.lambda = kLambda;
  auto interior = verify_linear_separation(f.ws, o);
  ProbeTally t;
  for (const auto& pr : interior.pairs) {
    if (pr.in_A_count < pr.d) probe_pair(f.ws, pr.p, pr.q, t);
  }
  // Then the whole ball. A wall met twice by a geodesic is met twice by the
  // sub-geodesic between two vertices of its cells, so cell vertices suffice.
  std::set<VertexId> on_cells;
  for (CellId k = 0; k < f.ball.cell_count(); ++k) {
    for (auto v : f.ball.cell_vertices(k)) on_cells.insert(v);
  }
  std::vector<VertexId> cv(on_cells.begin(), on_cells.end());
  std::size_t scanned = 0, with_non_a = 0;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    for (std::size_t j = i + 1; j < cv.size(); ++j) {
      ++scanned;
      auto ctx = make_context(f.ws, cv[i], cv[j]);
      if (compute_A(ctx).size() < ctx.gamma.edges.size()) {
        ++with_non_a;
        if (t.probes < kMinProbes) probe_pair(f.ws, cv[i], cv[j], t);
      }
    }
  }
  std::size_t multi_edge_walls = 0;
  for (const auto& w : f.ws.walls()) multi_edge_walls += w.edges.size() > 1;
  std::ostringstream out;
  out << "non-A edges on " << interior.pair_count << " interior geodesics: " << t.non_a << "; cell-vertex pairs with one: "
      << with_non_a << "/" << scanned << "; walls with more than one edge: " << multi_edge_walls
      << "; probes " << t.probes << " (need " << kMinProbes << "), near ok " << t.ok_near << ", far ok " << t.ok_far
      << ", density ok " << t.okd;
  if (t.probes < kMinProbes) out << "; not enough non-A edges exist in this ball";
  return {t.probes >= kMinProbes && t.all_pass(), out.str()};
}

// Not a criterion: the same probes on conforming two-cell complexes where
// walls do double-cross geodesics.
Outcome supplementary() {
  ProbeTally t;
  std::size_t complexes = 0;
  for (unsigned x : {2u, 4u, 6u}) {
    for (unsigned h = 3 * x + 1; h <= 24; ++h) {
      auto c = build_example2(x, h);
      if (!check_B6(c, kLambda).c_prime) continue;
      ++complexes;
      auto ws = build_walls(c);
      for (VertexId p = 0; p < c.vertex_count(); ++p) {
        for (VertexId q = p + 1; q < c.vertex_count(); ++q) probe_pair(ws, p, q, t);
      }
    }
  }
  std::ostringstream out;
  out << complexes << " C'(1/6) two-cell complexes, " << t.probes << " probes: near ok " << t.ok_near << ", far ok "
      << t.ok_far << ", density ok " << t.okd << ", errors " << t.errors;
  return {t.all_pass(), out.str()};
}

struct Criterion {
  std::string key;
  std::string name;
  std::function<Outcome()> run;
  double limit;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {"1", "C'(1/6) verification", criterion1, kLimit[1]},
      {"2", "wall structure", criterion2, kLimit[2]},
      {"3", "linear separation, positive", criterion3, kLimit[3]},
      {"4", "linear separation, negative control", criterion4, kLimit[4]},
      {"5", "double-crossing control", criterion5, kLimit[5]},
      {"6", "local-to-global density suite", criterion6, kLimit[6]},
      {"7", "word problem oracle equivalence", criterion7, kLimit[7]},
      {"8", "relator neighborhood probes", criterion8, kLimit[8]},
      {"extra", "supplementary: neighborhood probes on two-cell complexes", supplementary, 60},
  };
  std::string only = argc > 1 ? argv[1] : "";
  bool ok = true;
  for (const auto& c : all) {
    if (!only.empty() && c.key != only) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_time = secs < c.limit;
    bool pass = o.pass && in_time;
    std::printf("[%s] %s %s: %s (%.1fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL",
                c.key == "extra" ? "--" : c.key.c_str(), c.name.c_str(), o.detail.c_str(), secs, c.limit,
                in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
    // the supplementary line only decides the exit code when run on its own
    if (c.key != "extra" || !only.empty()) ok = ok && pass;
  }
  return ok ? 0 : 1;
}
