#include "wallkit/walls.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "wallkit/cell_pieces.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/separation.hpp"

namespace wallkit {

std::string to_string(SettledRule r) {
  switch (r) {
    case SettledRule::Automatic: return "automatic";
    case SettledRule::Margin: return "margin";
    case SettledRule::Intrinsic: return "intrinsic";
    case SettledRule::All: return "all";
  }
  return "automatic";
}

SettledRule parse_settled_rule(const std::string& s) {
  if (s == "automatic" || s == "auto") return SettledRule::Automatic;
  if (s == "margin") return SettledRule::Margin;
  if (s == "intrinsic") return SettledRule::Intrinsic;
  if (s == "all") return SettledRule::All;
  throw BadParams("unknown settled rule '" + s + "'");
}

WallSystem::WallSystem(const Complex& c, std::vector<Wall> walls, std::vector<std::uint32_t> wall_of,
                       SettledRule rule, bool simply_connected, bool b6)
    : complex_(&c),
      walls_(std::move(walls)),
      wall_of_(std::move(wall_of)),
      rule_(rule),
      simply_connected_(simply_connected),
      b6_(b6) {}

std::optional<std::size_t> WallSystem::find_wall(EdgeId id) const {
  auto it = std::lower_bound(walls_.begin(), walls_.end(), id,
                             [](const Wall& w, EdgeId x) { return w.id < x; });
  if (it == walls_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - walls_.begin());
}

std::size_t WallSystem::settled_count() const {
  return static_cast<std::size_t>(std::count_if(walls_.begin(), walls_.end(), [](const Wall& w) { return w.settled; }));
}

std::size_t WallSystem::margin_settled_count() const {
  return static_cast<std::size_t>(
      std::count_if(walls_.begin(), walls_.end(), [](const Wall& w) { return w.margin_settled; }));
}

bool simply_connected_certificate(const Complex& c) {
  if (c.vertex_count() == 0) return true;
  if (!c.is_connected()) return false;
  std::vector<bool> resolved(c.edge_count(), false);
  std::vector<bool> seen(c.vertex_count(), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& n : c.neighbors(v)) {
      if (!seen[n.vertex]) {
        seen[n.vertex] = true;
        resolved[n.edge] = true;  // tree edge
        queue.push_back(n.vertex);
      }
    }
  }
  std::vector<std::uint32_t> open(c.cell_count(), 0);
  for (CellId k = 0; k < c.cell_count(); ++k) {
    for (const Incidence& i : c.cell(k).boundary) open[k] += resolved[i.edge] ? 0 : 1;
  }
  std::vector<CellId> ready;
  for (CellId k = 0; k < c.cell_count(); ++k) {
    if (open[k] == 1) ready.push_back(k);
  }
  while (!ready.empty()) {
    CellId k = ready.back();
    ready.pop_back();
    if (open[k] != 1) continue;
    EdgeId e = kNone;
    for (const Incidence& i : c.cell(k).boundary) {
      if (!resolved[i.edge]) e = i.edge;
    }
    resolved[e] = true;
    for (auto [cell, pos] : c.cells_on_edge(e)) {
      (void)pos;
      if (--open[cell] == 1) ready.push_back(cell);
    }
  }
  return std::all_of(resolved.begin(), resolved.end(), [](bool b) { return b; });
}

WallSystem build_walls(const Complex& c, WallOptions options) {
  for (CellId k = 0; k < c.cell_count(); ++k) {
    if (c.cell(k).boundary.size() % 2 != 0) {
      throw OddCell("cell " + std::to_string(k) + " has odd length; subdivide first");
    }
  }
  std::vector<std::uint32_t> parent(c.edge_count());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<HyperEdge> hyper;
  for (CellId k = 0; k < c.cell_count(); ++k) {
    const auto& b = c.cell(k).boundary;
    const std::size_t half = b.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
      EdgeId a = b[i].edge, d = b[i + half].edge;
      hyper.push_back({k, a, d});
      std::uint32_t ra = find(a), rd = find(d);
      if (ra != rd) parent[std::max(ra, rd)] = std::min(ra, rd);
    }
  }
  // Roots are least edge ids, so walls come out in id order.
  std::vector<std::uint32_t> wall_of(c.edge_count());
  std::vector<Wall> walls;
  std::vector<std::uint32_t> index_of_root(c.edge_count(), kNone);
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    std::uint32_t r = find(e);
    if (index_of_root[r] == kNone) {
      index_of_root[r] = static_cast<std::uint32_t>(walls.size());
      walls.push_back(Wall{r, {}, {}, false, false});
    }
    wall_of[e] = index_of_root[r];
    walls[wall_of[e]].edges.push_back(e);
  }
  for (const HyperEdge& h : hyper) walls[wall_of[h.a]].hyper.push_back(h);

  // Margin rule.
  const bool ball = c.meta().origin == Origin::CayleyBall;
  if (ball && c.meta().radius) {
    const std::int64_t radius = *c.meta().radius;
    const std::int64_t L = c.meta().max_relator_length > 0 ? c.meta().max_relator_length : c.max_cell_length();
    std::vector<std::uint32_t> dist;
    if (c.has_recorded_distances()) {
      for (VertexId v = 0; v < c.vertex_count(); ++v) dist.push_back(c.recorded_distance(v).value_or(kNone));
    } else {
      dist = c.distances_from(c.meta().base);
    }
    auto inside = [&](VertexId v) {
      return dist[v] != kNone && static_cast<std::int64_t>(dist[v]) <= radius - L;
    };
    for (Wall& w : walls) {
      bool ok = radius >= L;
      for (EdgeId e : w.edges) ok = ok && inside(c.edge(e).u) && inside(c.edge(e).v);
      for (const HyperEdge& h : w.hyper) {
        for (VertexId v : c.cell_vertices(h.cell)) ok = ok && inside(v);
      }
      w.margin_settled = ok;
    }
  }

  SettledRule rule = options.rule;
  bool simply_connected = false, b6 = false;
  if (rule == SettledRule::Automatic || rule == SettledRule::Intrinsic) {
    simply_connected = simply_connected_certificate(c);
    b6 = simply_connected && check_B6(c).b6;
  }
  if (rule == SettledRule::Automatic) {
    if (!ball) rule = SettledRule::All;
    else rule = simply_connected && b6 ? SettledRule::Intrinsic : SettledRule::Margin;
  }
  for (Wall& w : walls) {
    switch (rule) {
      case SettledRule::All: w.settled = true; break;
      case SettledRule::Margin: w.settled = w.margin_settled; break;
      case SettledRule::Intrinsic: w.settled = simply_connected && b6; break;
      case SettledRule::Automatic: break;
    }
  }
  return WallSystem(c, std::move(walls), std::move(wall_of), rule, simply_connected, b6);
}

Hypergraph hypergraph_of(const WallSystem& ws, std::size_t w) {
  const Wall& wall = ws.wall(w);
  Hypergraph g;
  g.vertices = wall.edges;
  auto local = [&](EdgeId e) {
    return static_cast<std::uint32_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), e) - g.vertices.begin());
  };
  std::vector<std::uint32_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool acyclic = true;
  std::size_t components = g.vertices.size();
  for (const HyperEdge& h : wall.hyper) {
    std::uint32_t a = local(h.a), b = local(h.b);
    g.edges.emplace_back(a, b);
    g.cells.push_back(h.cell);
    std::uint32_t ra = find(a), rb = find(b);
    if (ra == rb) {
      acyclic = false;
    } else {
      parent[ra] = rb;
      --components;
    }
  }
  g.connected = components <= 1;
  g.is_tree = g.connected && acyclic;
  return g;
}

std::optional<std::vector<std::uint32_t>> hypergraph_path(const WallSystem& ws, std::size_t w, EdgeId from,
                                                          EdgeId to) {
  const Wall& wall = ws.wall(w);
  std::map<EdgeId, std::vector<std::uint32_t>> incident;
  for (std::uint32_t h = 0; h < wall.hyper.size(); ++h) {
    incident[wall.hyper[h].a].push_back(h);
    incident[wall.hyper[h].b].push_back(h);
  }
  std::map<EdgeId, std::pair<EdgeId, std::uint32_t>> came_from;
  std::deque<EdgeId> queue{from};
  came_from[from] = {from, kNone};
  while (!queue.empty()) {
    EdgeId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (std::uint32_t h : incident[x]) {
      EdgeId y = wall.hyper[h].a == x ? wall.hyper[h].b : wall.hyper[h].a;
      if (came_from.count(y)) continue;
      came_from[y] = {x, h};
      queue.push_back(y);
    }
  }
  if (!came_from.count(to)) return std::nullopt;
  std::vector<std::uint32_t> path;
  for (EdgeId x = to; x != from; x = came_from[x].first) path.push_back(came_from[x].second);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

WallSides components_without(const Complex& c, const std::vector<bool>& blocked) {
  WallSides s;
  s.side.assign(c.vertex_count(), kNone);
  for (VertexId start = 0; start < c.vertex_count(); ++start) {
    if (s.side[start] != kNone) continue;
    const auto label = static_cast<std::uint32_t>(s.components++);
    std::vector<VertexId> stack{start};
    s.side[start] = label;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& n : c.neighbors(v)) {
        if (blocked[n.edge] || s.side[n.vertex] != kNone) continue;
        s.side[n.vertex] = label;
        stack.push_back(n.vertex);
      }
    }
  }
  return s;
}

}  // namespace

WallSides wall_components(const WallSystem& ws, std::size_t w) {
  const Complex& c = ws.complex();
  std::vector<bool> blocked(c.edge_count(), false);
  for (EdgeId e : ws.wall(w).edges) blocked[e] = true;
  return components_without(c, blocked);
}

std::vector<VertexId> hypercarrier_vertices(const WallSystem& ws, std::size_t w) {
  const Complex& c = ws.complex();
  const Wall& wall = ws.wall(w);
  std::vector<VertexId> out;
  for (EdgeId e : wall.edges) {
    out.push_back(c.edge(e).u);
    out.push_back(c.edge(e).v);
  }
  for (const HyperEdge& h : wall.hyper) {
    for (VertexId v : c.cell_vertices(h.cell)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConvexityResult hypercarrier_check(const WallSystem& ws, std::size_t w, bool strict,
                                   const std::vector<bool>* interior) {
  const Complex& c = ws.complex();
  const Wall& wall = ws.wall(w);
  ConvexityResult result;
  std::vector<VertexId> hv = hypercarrier_vertices(ws, w);
  if (interior) {
    hv.erase(std::remove_if(hv.begin(), hv.end(), [&](VertexId v) { return !(*interior)[v]; }), hv.end());
  }
  std::vector<EdgeId> he(wall.edges.begin(), wall.edges.end());
  for (const HyperEdge& h : wall.hyper) {
    for (const Incidence& i : c.cell(h.cell).boundary) he.push_back(i.edge);
  }
  std::sort(he.begin(), he.end());
  he.erase(std::unique(he.begin(), he.end()), he.end());
  auto in_carrier = [&](EdgeId e) { return std::binary_search(he.begin(), he.end(), e); };
  std::vector<VertexId> all_hv = hypercarrier_vertices(ws, w);
  auto carrier_vertex = [&](VertexId v) { return std::binary_search(all_hv.begin(), all_hv.end(), v); };

  std::vector<std::uint32_t> dist(c.vertex_count(), kNone);
  std::vector<std::uint32_t> inner(c.vertex_count(), kNone);
  std::vector<VertexId> touched, inner_touched;
  std::vector<bool> mark(c.vertex_count(), false);
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const VertexId x = hv[i];
    // BFS from x until every target is reached.
    std::size_t remaining = hv.size() - i - 1;
    std::deque<VertexId> queue{x};
    dist[x] = 0;
    touched.push_back(x);
    std::uint32_t stop_at = kNone;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      if (dist[v] > stop_at) break;
      for (const auto& n : c.neighbors(v)) {
        if (dist[n.vertex] != kNone) continue;
        dist[n.vertex] = dist[v] + 1;
        touched.push_back(n.vertex);
        queue.push_back(n.vertex);
        if (std::binary_search(hv.begin() + static_cast<std::ptrdiff_t>(i) + 1, hv.end(), n.vertex)) {
          if (--remaining == 0) stop_at = dist[n.vertex];
        }
      }
      if (remaining == 0 && stop_at == kNone) stop_at = 0;
    }
    if (!strict) {
      // Distances inside the carrier.
      std::deque<VertexId> q2{x};
      inner[x] = 0;
      inner_touched.push_back(x);
      while (!q2.empty()) {
        VertexId v = q2.front();
        q2.pop_front();
        for (const auto& n : c.neighbors(v)) {
          if (!in_carrier(n.edge) || inner[n.vertex] != kNone) continue;
          inner[n.vertex] = inner[v] + 1;
          inner_touched.push_back(n.vertex);
          q2.push_back(n.vertex);
        }
      }
    }
    for (std::size_t j = i + 1; j < hv.size() && result.pass; ++j) {
      const VertexId y = hv[j];
      ++result.pairs_checked;
      if (!strict) {
        if (inner[y] != dist[y]) {
          result.pass = false;
          result.pair = {x, y};
        }
        continue;
      }
      // Walk the geodesic interval back from y.
      std::vector<VertexId> stack{y}, marked{y};
      mark[y] = true;
      while (!stack.empty() && result.pass) {
        VertexId z = stack.back();
        stack.pop_back();
        for (const auto& n : c.neighbors(z)) {
          if (dist[n.vertex] == kNone || dist[n.vertex] + 1 != dist[z]) continue;
          if (!in_carrier(n.edge)) {
            result.pass = false;
            result.pair = {x, y};
            result.outside_edge = n.edge;
            if (!carrier_vertex(n.vertex)) result.outside_vertex = n.vertex;
            break;
          }
          if (!mark[n.vertex]) {
            mark[n.vertex] = true;
            marked.push_back(n.vertex);
            stack.push_back(n.vertex);
          }
        }
      }
      for (VertexId v : marked) mark[v] = false;
    }
    for (VertexId v : touched) dist[v] = kNone;
    touched.clear();
    for (VertexId v : inner_touched) inner[v] = kNone;
    inner_touched.clear();
    if (!result.pass) break;
  }
  return result;
}

WallDistance wall_distance(const WallSystem& ws, VertexId p, VertexId q, DistanceMode mode) {
  WallDistance d;
  if (p == q) return d;
  if (mode == DistanceMode::Parity) {
    Path path = geodesic(ws.complex(), p, q);
    std::map<std::uint32_t, std::uint32_t> count;
    for (EdgeId e : path.edges) ++count[ws.wall_of(e)];
    for (auto [w, k] : count) {
      if (k % 2 == 0) continue;
      if (ws.wall(w).settled) ++d.settled;
      else ++d.unsettled;
    }
    return d;
  }
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    WallSides s = wall_components(ws, w);
    if (s.side[p] == s.side[q]) continue;
    if (!ws.wall(w).settled) ++d.unsettled;
    else if (s.two_sided()) ++d.settled;
    else ++d.not_two_sided;
  }
  return d;
}

namespace {

// Bridges with DFS intervals: for a bridge e, the child-side vertices are
// those with tin in [tin[child], tout[child]).
struct BridgeData {
  std::vector<bool> is_bridge;
  std::vector<VertexId> child;  // per bridge edge
  std::vector<std::uint32_t> tin, tout;
};

BridgeData find_bridges(const Complex& c) {
  BridgeData b;
  const std::size_t n = c.vertex_count();
  b.is_bridge.assign(c.edge_count(), false);
  b.child.assign(c.edge_count(), kNone);
  b.tin.assign(n, kNone);
  b.tout.assign(n, 0);
  std::vector<std::uint32_t> low(n, 0);
  std::uint32_t timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (b.tin[root] != kNone) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    b.tin[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = c.neighbors(f.v);
      if (f.next < nb.size()) {
        const auto nx = nb[f.next++];
        if (nx.edge == f.via) continue;
        if (b.tin[nx.vertex] == kNone) {
          b.tin[nx.vertex] = low[nx.vertex] = timer++;
          stack.push_back({nx.vertex, nx.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], b.tin[nx.vertex]);
        }
      } else {
        const Frame done = f;
        b.tout[done.v] = timer;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > b.tin[parent.v]) {
            b.is_bridge[done.via] = true;
            b.child[done.via] = done.v;
          }
        }
      }
    }
  }
  return b;
}

}  // namespace

ComponentsSweep wall_distances_by_components(const WallSystem& ws,
                                             const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  const Complex& c = ws.complex();
  ComponentsSweep out;
  out.distances.assign(pairs.size(), WallDistance{});
  const bool connected = c.is_connected();
  BridgeData bridges;
  if (connected) bridges = find_bridges(c);
  std::vector<bool> blocked(c.edge_count(), false);
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    const Wall& wall = ws.wall(w);
    // Fast path: a single edge in no cell splits the graph iff it is a bridge.
    if (connected && wall.edges.size() == 1 && wall.hyper.empty()) {
      const EdgeId e = wall.edges.front();
      if (!bridges.is_bridge[e]) {
        if (wall.settled) out.not_two_sided_walls.push_back(w);
        continue;
      }
      const VertexId ch = bridges.child[e];
      auto below = [&](VertexId v) { return bridges.tin[v] >= bridges.tin[ch] && bridges.tin[v] < bridges.tout[ch]; };
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (below(pairs[i].first) == below(pairs[i].second)) continue;
        if (wall.settled) ++out.distances[i].settled;
        else ++out.distances[i].unsettled;
      }
      continue;
    }
    for (EdgeId e : wall.edges) blocked[e] = true;
    WallSides s = components_without(c, blocked);
    for (EdgeId e : wall.edges) blocked[e] = false;
    if (wall.settled && !s.two_sided()) out.not_two_sided_walls.push_back(w);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (s.side[pairs[i].first] == s.side[pairs[i].second]) continue;
      if (!wall.settled) ++out.distances[i].unsettled;
      else if (s.two_sided()) ++out.distances[i].settled;
      else ++out.distances[i].not_two_sided;
    }
  }
  return out;
}

std::string dump_walls(const WallSystem& ws) {
  std::ostringstream out;
  out << "# walls " << ws.wall_count() << " settled " << ws.settled_count() << " rule " << to_string(ws.rule())
      << '\n';
  for (const Wall& w : ws.walls()) {
    out << "wall " << w.id << ' ' << (w.settled ? "settled" : "unsettled") << '\n';
    out << "edges";
    for (EdgeId e : w.edges) out << ' ' << e;
    out << '\n';
    out << "hyper";
    for (const HyperEdge& h : w.hyper) out << ' ' << h.cell << ':' << h.a << '-' << h.b;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string walls_dot(const WallSystem& ws, bool settled_only) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"};
  const Complex& c = ws.complex();
  std::ostringstream out;
  out << "graph walls {\n  node [shape=point];\n";
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    out << "  v" << v << " [xlabel=\"" << dot_escape(c.label(v)) << "\"];\n";
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const std::uint32_t w = ws.wall_of(e);
    const Wall& wall = ws.wall(w);
    out << "  v" << c.edge(e).u << " -- v" << c.edge(e).v;
    if (wall.edges.size() > 1 && (wall.settled || !settled_only)) {
      out << " [color=" << palette[w % 8] << ", label=\"w" << wall.id << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string hypergraph_dot(const WallSystem& ws, std::size_t w) {
  Hypergraph g = hypergraph_of(ws, w);
  std::ostringstream out;
  out << "graph hypergraph_" << ws.wall(w).id << " {\n";
  for (EdgeId e : g.vertices) out << "  e" << e << ";\n";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    out << "  e" << g.vertices[g.edges[i].first] << " -- e" << g.vertices[g.edges[i].second] << " [label=\"c"
        << g.cells[i] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wallkit
