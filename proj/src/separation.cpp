#include "wallkit/separation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "wallkit/errors.hpp"

namespace wallkit {

Path geodesic(const Complex& c, VertexId p, VertexId q) {
  std::vector<std::uint32_t> dq = c.distances_from(q);
  if (dq.at(p) == kNone) throw BadParams("geodesic: vertices are not connected");
  Path path;
  path.vertices.push_back(p);
  VertexId v = p;
  while (v != q) {
    // Neighbours are in edge-id order, so the first step down is the least.
    for (const auto& n : c.neighbors(v)) {
      if (dq[n.vertex] + 1 == dq[v]) {
        path.edges.push_back(n.edge);
        path.vertices.push_back(n.vertex);
        v = n.vertex;
        break;
      }
    }
  }
  return path;
}

GeodesicContext make_context(const WallSystem& ws, const Path& gamma) {
  const Complex& c = ws.complex();
  GeodesicContext ctx;
  ctx.p = gamma.vertices.front();
  ctx.q = gamma.vertices.back();
  if (c.distances_from(ctx.p).at(ctx.q) != gamma.edges.size()) {
    throw BadParams("path is not a geodesic");
  }
  ctx.gamma = gamma;
  std::map<std::uint32_t, std::uint32_t> count;
  for (EdgeId e : gamma.edges) {
    ctx.wall.push_back(ws.wall_of(e));
    ++count[ws.wall_of(e)];
  }
  for (std::uint32_t w : ctx.wall) {
    ctx.crossings.push_back(count[w]);
    ctx.in_A.push_back(count[w] == 1);
  }
  return ctx;
}

GeodesicContext make_context(const WallSystem& ws, VertexId p, VertexId q) {
  return make_context(ws, geodesic(ws.complex(), p, q));
}

std::vector<std::size_t> compute_A(const GeodesicContext& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.in_A.size(); ++i) {
    if (ctx.in_A[i]) out.push_back(i);
  }
  return out;
}

RelatorNeighborhood relator_neighborhood(const GeodesicContext& ctx, std::size_t index, const WallSystem& ws) {
  const Complex& c = ws.complex();
  RelatorNeighborhood ne;
  ne.index = index;
  const std::uint32_t w = ctx.wall.at(index);
  if (!ws.wall(w).settled) throw UnsettledWall("wall " + std::to_string(ws.wall(w).id) + " is not settled");
  if (ctx.in_A[index]) {
    ne.singleton = true;
    ne.first = ne.last = index;
    return ne;
  }
  // Nearest other edge of the wall on gamma; ties by least edge id.
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < ctx.wall.size(); ++j) {
    if (j == index || ctx.wall[j] != w) continue;
    auto gap = [&](std::size_t k) { return k > index ? k - index : index - k; };
    if (!best || gap(j) < gap(*best) ||
        (gap(j) == gap(*best) && ctx.gamma.edges[j] < ctx.gamma.edges[*best])) {
      best = j;
    }
  }
  ne.partner = best;
  const EdgeId e = ctx.gamma.edges[index];
  const EdgeId e1 = ctx.gamma.edges[*best];
  auto path = hypergraph_path(ws, w, e, e1);
  if (!path || path->empty()) throw HypothesisViolated("no hypergraph path between wall edges on the geodesic");
  const Wall& wall = ws.wall(w);
  const HyperEdge& h0 = wall.hyper[path->front()];
  ne.r = h0.cell;
  ne.e_second = h0.a == e ? h0.b : h0.a;
  ne.r_length = static_cast<std::uint32_t>(c.cell(h0.cell).boundary.size());
  if (path->size() >= 2) ne.r_prime = wall.hyper[(*path)[1]].cell;

  std::set<EdgeId> in_r;
  for (const Incidence& i : c.cell(h0.cell).boundary) in_r.insert(i.edge);
  ne.first = ne.last = index;
  while (ne.first > 0 && in_r.count(ctx.gamma.edges[ne.first - 1])) --ne.first;
  while (ne.last + 1 < ctx.gamma.edges.size() && in_r.count(ctx.gamma.edges[ne.last + 1])) ++ne.last;
  if (*best >= ne.first && *best <= ne.last) {
    throw HypothesisViolated("the nearest wall-mate lies in the same cell");
  }
  ne.partner_towards_q = *best > ne.last;
  return ne;
}

NeighborhoodProbe probe_neighborhood(const RelatorNeighborhood& ne, const GeodesicContext& ctx,
                                     const Rational& lambda) {
  NeighborhoodProbe pr;
  pr.d_pq = static_cast<std::uint32_t>(ne.length());
  for (std::size_t i = ne.first; i <= ne.last; ++i) pr.a_count += ctx.in_A[i] ? 1 : 0;
  pr.density = Rational(pr.a_count, pr.d_pq);
  pr.bound = local_density_bound(lambda);
  pr.density_pass = pr.density >= pr.bound;
  if (ne.singleton) return pr;
  // Edges of gamma strictly between e and the endpoint on e' side, and on the other side.
  if (ne.partner_towards_q) {
    pr.d_e_near = static_cast<std::uint32_t>(ne.last - ne.index);
    pr.d_e_far = static_cast<std::uint32_t>(ne.index - ne.first);
  } else {
    pr.d_e_near = static_cast<std::uint32_t>(ne.index - ne.first);
    pr.d_e_far = static_cast<std::uint32_t>(ne.last - ne.index);
  }
  const Rational r_len(ne.r_length);
  pr.near_inequality = pr.d_pq > pr.d_e_near && Rational(pr.d_e_near) > (Rational(1, 2) - lambda) * r_len;
  pr.far_inequality = Rational(pr.d_e_far) < Rational(2) * lambda * Rational(pr.d_pq) - Rational(1);
  return pr;
}

std::pair<Rational, bool> local_density_check(const RelatorNeighborhood& ne, const GeodesicContext& ctx,
                                              const Rational& lambda) {
  NeighborhoodProbe pr = probe_neighborhood(ne, ctx, lambda);
  return {pr.density, pr.density_pass};
}

CoverSplit cover_split(const std::vector<Interval>& intervals) {
  for (const Interval& u : intervals) {
    if (u.last < u.first) throw BadParams("cover_split: empty interval");
  }
  std::vector<Interval> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
    return a.first != b.first ? a.first < b.first : a.last > b.last;
  });
  CoverSplit out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    // A connected run of the union; greedily take the interval reaching
    // farthest past the covered prefix. Intervals inside the covered part
    // are dropped, and every second pick of the run is disjoint from the
    // one before it, so alternating picks gives the two families.
    std::int64_t frontier = sorted[i].first;
    std::size_t picks = 0;
    for (;;) {
      std::optional<Interval> pick;
      while (i < sorted.size() && sorted[i].first <= frontier) {
        if (!pick || sorted[i].last > pick->last) pick = sorted[i];
        ++i;
      }
      if (!pick || pick->last < frontier) break;
      out.cover.push_back(*pick);
      (picks++ % 2 == 0 ? out.u1 : out.u2).push_back(*pick);
      frontier = pick->last + 1;
    }
  }
  return out;
}

std::int64_t union_size(const std::vector<Interval>& intervals) {
  std::vector<Interval> sorted = intervals;
  std::sort(sorted.begin(), sorted.end());
  std::int64_t total = 0;
  std::optional<std::int64_t> end;  // last covered position
  for (const Interval& u : sorted) {
    const std::int64_t from = end ? std::max(u.first, *end + 1) : u.first;
    if (u.last >= from) total += u.last - from + 1;
    end = end ? std::max(*end, u.last) : u.last;
  }
  return total;
}

DensityResult local_to_global_bound(const std::vector<std::int64_t>& a, const std::vector<Interval>& intervals,
                                    const Rational& C) {
  std::set<std::int64_t> aset(a.begin(), a.end());
  auto count_in = [&](const Interval& u) {
    return static_cast<std::int64_t>(std::distance(aset.lower_bound(u.first), aset.upper_bound(u.last)));
  };
  for (const Interval& u : intervals) {
    if (Rational(count_in(u), u.length()) < C) {
      throw HypothesisViolated("interval [" + std::to_string(u.first) + "," + std::to_string(u.last) +
                               "] has density below C");
    }
  }
  DensityResult r;
  r.union_edges = union_size(intervals);
  // A restricted to the union.
  std::set<std::int64_t> covered;
  for (std::int64_t x : aset) {
    for (const Interval& u : intervals) {
      if (x >= u.first && x <= u.last) {
        covered.insert(x);
        break;
      }
    }
  }
  r.a_size = static_cast<std::int64_t>(covered.size());
  r.required = C / Rational(2) * Rational(r.union_edges);
  r.pass = Rational(r.a_size) >= r.required;
  r.slack = Rational(r.a_size) - r.required;

  // Through the split: the heavier family is disjoint and carries half the union.
  CoverSplit split = cover_split(intervals);
  const std::int64_t s1 = union_size(split.u1), s2 = union_size(split.u2);
  const auto& heavy = s1 >= s2 ? split.u1 : split.u2;
  const std::int64_t heavy_size = std::max(s1, s2);
  std::int64_t a_heavy = 0;
  for (const Interval& u : heavy) a_heavy += count_in(u);
  r.split_pass = union_size(split.cover) == r.union_edges && 2 * heavy_size >= r.union_edges &&
                 Rational(a_heavy) >= C * Rational(heavy_size) && r.a_size >= a_heavy;
  return r;
}

std::vector<VertexId> default_region(const WallSystem& ws) {
  const Complex& c = ws.complex();
  std::vector<std::uint32_t> dist;
  const bool ball = c.meta().origin == Origin::CayleyBall && c.meta().radius;
  if (ball) {
    if (c.has_recorded_distances()) {
      for (VertexId v = 0; v < c.vertex_count(); ++v) dist.push_back(c.recorded_distance(v).value_or(kNone));
    } else {
      dist = c.distances_from(c.meta().base);
    }
  }
  std::int64_t limit = -1;
  if (ball) {
    const std::int64_t R = *c.meta().radius;
    const std::int64_t L = c.meta().max_relator_length;
    limit = ws.rule() == SettledRule::Intrinsic ? R / 2 : R - L;
  }
  std::vector<VertexId> region;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (ball && (dist[v] == kNone || static_cast<std::int64_t>(dist[v]) > limit)) continue;
    bool ok = true;
    for (const auto& n : c.neighbors(v)) ok = ok && ws.wall(ws.wall_of(n.edge)).settled;
    if (ok) region.push_back(v);
  }
  return region;
}

namespace {

struct SourceResult {
  std::vector<PairRecord> pairs;  // kept pairs
  std::vector<PairRecord> violating;
  std::size_t pair_count = 0, settled_pairs = 0, violations = 0, inconclusive = 0;
  std::size_t dw_exceeds_d = 0, a_exceeds_dw = 0;
  std::optional<Rational> min_ratio;
  std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> by_d;  // d -> (sum dw, count)
};

constexpr std::size_t kViolationCap = 1000;

class Sweeper {
 public:
  Sweeper(const WallSystem& ws, const std::vector<bool>& in_region, const Rational& constant, bool keep)
      : ws_(ws), c_(ws.complex()), in_region_(in_region), constant_(constant), keep_(keep) {
    count_.assign(ws.wall_count(), 0);
    dist_.assign(c_.vertex_count(), kNone);
    parent_edge_.assign(c_.vertex_count(), kNone);
  }

  void run(VertexId p, SourceResult& out) {
    // BFS with neighbours in edge-id order: tree paths are the least geodesics.
    order_.clear();
    order_.push_back(p);
    dist_[p] = 0;
    for (std::size_t h = 0; h < order_.size(); ++h) {
      VertexId v = order_[h];
      for (const auto& n : c_.neighbors(v)) {
        if (dist_[n.vertex] != kNone) continue;
        dist_[n.vertex] = dist_[v] + 1;
        parent_edge_[n.vertex] = n.edge;
        order_.push_back(n.vertex);
      }
    }
    // Children lists in BFS order.
    child_start_.assign(c_.vertex_count() + 1, 0);
    for (std::size_t h = 1; h < order_.size(); ++h) {
      VertexId v = order_[h];
      ++child_start_[c_.other_end(parent_edge_[v], v) + 1];
    }
    for (std::size_t i = 1; i < child_start_.size(); ++i) child_start_[i] += child_start_[i - 1];
    children_.assign(order_.size(), 0);
    std::vector<std::uint32_t> fill(child_start_.begin(), child_start_.end() - 1);
    for (std::size_t h = 1; h < order_.size(); ++h) {
      VertexId v = order_[h];
      children_[fill[c_.other_end(parent_edge_[v], v)]++] = v;
    }
    // Depth-first over the tree with running crossing counts.
    odd_settled_ = 0;
    ones_ = 0;
    touched_unsettled_ = 0;
    struct Frame {
      VertexId v;
      std::uint32_t next;
    };
    std::vector<Frame> stack{{p, child_start_[p]}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < child_start_[f.v + 1]) {
        VertexId ch = children_[f.next++];
        enter(parent_edge_[ch]);
        record(p, ch, out);
        stack.push_back({ch, child_start_[ch]});
      } else {
        if (f.v != p) leave(parent_edge_[f.v]);
        stack.pop_back();
      }
    }
    for (VertexId v : order_) {
      dist_[v] = kNone;
      parent_edge_[v] = kNone;
    }
  }

 private:
  void enter(EdgeId e) {
    const std::uint32_t w = ws_.wall_of(e);
    const bool settled = ws_.wall(w).settled;
    std::uint32_t& k = count_[w];
    if (k == 1) --ones_;
    ++k;
    if (k == 1) {
      ++ones_;
      if (!settled) ++touched_unsettled_;
    }
    if (settled) odd_settled_ += (k % 2 == 1) ? 1 : -1;
  }

  void leave(EdgeId e) {
    const std::uint32_t w = ws_.wall_of(e);
    const bool settled = ws_.wall(w).settled;
    std::uint32_t& k = count_[w];
    if (k == 1) {
      --ones_;
      if (!settled) --touched_unsettled_;
    }
    --k;
    if (k == 1) ++ones_;
    if (settled) odd_settled_ += (k % 2 == 1) ? 1 : -1;
  }

  void record(VertexId p, VertexId q, SourceResult& out) {
    if (q <= p || !in_region_[q]) return;
    PairRecord rec;
    rec.p = p;
    rec.q = q;
    rec.d = dist_[q];
    rec.dw = static_cast<std::uint32_t>(odd_settled_);
    rec.in_A_count = static_cast<std::uint32_t>(ones_);
    rec.unsettled_walls = static_cast<std::uint32_t>(touched_unsettled_);
    rec.settled = touched_unsettled_ == 0;
    ++out.pair_count;
    const Rational ratio(rec.dw, rec.d);
    const bool bad = rec.dw > rec.d || ratio < constant_;
    if (rec.settled) {
      ++out.settled_pairs;
      auto& slot = out.by_d[rec.d];
      slot.first += rec.dw;
      slot.second += 1;
      if (!out.min_ratio || ratio < *out.min_ratio) out.min_ratio = ratio;
      if (rec.dw > rec.d) ++out.dw_exceeds_d;
      if (rec.in_A_count > rec.dw) ++out.a_exceeds_dw;
      if (bad) {
        ++out.violations;
        if (out.violating.size() < kViolationCap) out.violating.push_back(rec);
      }
    } else if (bad) {
      ++out.inconclusive;
    }
    if (keep_) out.pairs.push_back(rec);
  }

  const WallSystem& ws_;
  const Complex& c_;
  const std::vector<bool>& in_region_;
  Rational constant_;
  bool keep_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> dist_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> child_start_;
  std::vector<VertexId> children_;
  std::int64_t odd_settled_ = 0;
  std::int64_t ones_ = 0;
  std::int64_t touched_unsettled_ = 0;
};

PairRecord single_pair(const WallSystem& ws, VertexId p, VertexId q) {
  PairRecord rec;
  rec.p = p;
  rec.q = q;
  if (p == q) return rec;
  GeodesicContext ctx = make_context(ws, p, q);
  rec.d = static_cast<std::uint32_t>(ctx.gamma.edges.size());
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < ctx.wall.size(); ++i) {
    const std::uint32_t w = ctx.wall[i];
    if (ctx.in_A[i]) ++rec.in_A_count;
    if (!seen.insert(w).second) continue;
    if (!ws.wall(w).settled) {
      ++rec.unsettled_walls;
    } else if (ctx.crossings[i] % 2 == 1) {
      ++rec.dw;
    }
  }
  rec.settled = rec.unsettled_walls == 0;
  return rec;
}

}  // namespace

SeparationReport verify_linear_separation(const WallSystem& ws, const SeparationOptions& options) {
  const Complex& c = ws.complex();
  SeparationReport report;
  report.lambda = options.lambda;
  report.constant = separation_constant(options.lambda);
  report.mode = options.mode;
  report.rule = ws.rule();
  report.walls = ws.wall_count();
  report.settled_walls = ws.settled_count();
  report.margin_settled_walls = ws.margin_settled_count();

  std::vector<VertexId> region = options.region.empty() ? default_region(ws) : options.region;
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  report.region_size = region.size();
  std::vector<bool> in_region(c.vertex_count(), false);
  for (VertexId v : region) in_region.at(v) = true;

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::max<unsigned>(1, std::min<std::size_t>(jobs, std::max<std::size_t>(region.size(), 1)));
  std::vector<SourceResult> partial(region.size());
  auto work = [&](unsigned worker) {
    Sweeper sweeper(ws, in_region, report.constant, options.keep_pairs);
    for (std::size_t i = worker; i < region.size(); i += jobs) sweeper.run(region[i], partial[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  using boost::multiprecision::cpp_rational;
  std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> by_d;
  for (SourceResult& s : partial) {
    report.pair_count += s.pair_count;
    report.settled_pairs += s.settled_pairs;
    report.violations += s.violations;
    report.inconclusive += s.inconclusive;
    report.dw_exceeds_d += s.dw_exceeds_d;
    report.a_exceeds_dw += s.a_exceeds_dw;
    if (s.min_ratio && (!report.min_ratio || *s.min_ratio < *report.min_ratio)) report.min_ratio = s.min_ratio;
    for (auto& [d, v] : s.by_d) {
      by_d[d].first += v.first;
      by_d[d].second += v.second;
    }
    for (auto& r : s.pairs) report.pairs.push_back(r);
    for (auto& r : s.violating) {
      if (report.violating.size() < kViolationCap) report.violating.push_back(r);
    }
    s = SourceResult{};
  }
  if (report.settled_pairs > 0) {
    cpp_rational sum = 0;
    for (auto& [d, v] : by_d) sum += cpp_rational(static_cast<long long>(v.first), static_cast<long long>(d));
    sum /= cpp_rational(static_cast<unsigned long long>(report.settled_pairs));
    report.mean_ratio = boost::multiprecision::numerator(sum).str() + "/" +
                        boost::multiprecision::denominator(sum).str();
  }
  for (auto [p, q] : options.anchors) report.anchors.push_back(single_pair(ws, p, q));
  report.pass = options.mode == SeparationMode::Verify && report.violations == 0 && report.settled_pairs > 0;
  return report;
}

}  // namespace wallkit
