#include "wallkit/complex.hpp"

#include <algorithm>
#include <deque>

#include "wallkit/errors.hpp"

namespace wallkit {

std::string to_string(Origin o) {
  switch (o) {
    case Origin::CayleyBall: return "cayley-ball";
    case Origin::Example1: return "example1";
    case Origin::Example2: return "example2";
    case Origin::File: return "file";
    case Origin::Other: return "other";
  }
  return "other";
}

Origin parse_origin(const std::string& s) {
  if (s == "cayley-ball") return Origin::CayleyBall;
  if (s == "example1") return Origin::Example1;
  if (s == "example2") return Origin::Example2;
  if (s == "file") return Origin::File;
  if (s == "other") return Origin::Other;
  throw ParseError("unknown origin '" + s + "'");
}

VertexId Complex::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return static_cast<VertexId>(labels_.size() - 1);
}

EdgeId Complex::add_edge(VertexId u, VertexId v, std::optional<std::uint32_t> generator) {
  if (u >= vertex_count() || v >= vertex_count()) throw BadParams("edge endpoint out of range");
  if (u == v) throw BadParams("loops are not supported");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, generator});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  edge_cells_.emplace_back();
  return id;
}

VertexId Complex::tail(const Incidence& i) const {
  const Edge& e = edges_.at(i.edge);
  return i.reversed ? e.v : e.u;
}

VertexId Complex::head(const Incidence& i) const {
  const Edge& e = edges_.at(i.edge);
  return i.reversed ? e.u : e.v;
}

CellId Complex::add_cell(std::vector<Incidence> boundary, std::optional<std::uint32_t> relator) {
  if (boundary.empty()) throw BadParams("empty cell boundary");
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i].edge >= edges_.size()) throw BadParams("cell uses an unknown edge");
    if (head(boundary[i]) != tail(boundary[(i + 1) % boundary.size()])) {
      throw BadParams("cell boundary is not a closed edge path");
    }
  }
  std::vector<EdgeId> key;
  for (const Incidence& i : boundary) key.push_back(i.edge);
  std::sort(key.begin(), key.end());
  if (auto it = cell_keys_.find(key); it != cell_keys_.end()) return it->second;
  const auto id = static_cast<CellId>(cells_.size());
  for (std::uint32_t k = 0; k < boundary.size(); ++k) edge_cells_[boundary[k].edge].push_back({id, k});
  cells_.push_back(Cell{std::move(boundary), relator});
  cell_keys_.emplace(std::move(key), id);
  return id;
}

std::optional<VertexId> Complex::find_vertex(const std::string& label) const {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::vector<VertexId> Complex::cell_vertices(CellId c) const {
  std::vector<VertexId> out;
  for (const Incidence& i : cells_.at(c).boundary) out.push_back(tail(i));
  return out;
}

VertexId Complex::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

std::vector<std::pair<CellId, std::uint32_t>> Complex::cells_on_edge(EdgeId e) const {
  return edge_cells_.at(e);
}

std::optional<std::uint32_t> Complex::recorded_distance(VertexId v) const {
  if (v >= distances_.size() || distances_[v] == kNone) return std::nullopt;
  return distances_[v];
}

void Complex::set_recorded_distance(VertexId v, std::uint32_t d) {
  if (distances_.size() < vertex_count()) distances_.resize(vertex_count(), kNone);
  distances_.at(v) = d;
}

bool Complex::has_odd_cell() const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return c.boundary.size() % 2 == 1; });
}

std::uint32_t Complex::max_cell_length() const {
  std::uint32_t m = 0;
  for (const Cell& c : cells_) m = std::max<std::uint32_t>(m, static_cast<std::uint32_t>(c.boundary.size()));
  return m;
}

std::vector<std::uint32_t> Complex::distances_from(VertexId source) const {
  std::vector<std::uint32_t> dist(vertex_count(), kNone);
  std::deque<VertexId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Neighbor& n : adjacency_[v]) {
      if (dist[n.vertex] == kNone) {
        dist[n.vertex] = dist[v] + 1;
        queue.push_back(n.vertex);
      }
    }
  }
  return dist;
}

bool Complex::is_connected() const {
  if (vertex_count() == 0) return true;
  auto d = distances_from(0);
  return std::none_of(d.begin(), d.end(), [](std::uint32_t x) { return x == kNone; });
}

Complex subdivide(const Complex& c) {
  Complex out;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    out.add_vertex(c.label(v));
    if (auto d = c.recorded_distance(v)) out.set_recorded_distance(v, 2 * *d);
  }
  // Edge e becomes 2e (u -> mid) and 2e+1 (mid -> v).
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const Edge& ed = c.edge(e);
    VertexId mid = out.add_vertex(c.label(ed.u) + "|" + c.label(ed.v));
    out.add_edge(ed.u, mid);
    out.add_edge(mid, ed.v);
    if (c.has_recorded_distances()) {
      auto du = c.recorded_distance(ed.u), dv = c.recorded_distance(ed.v);
      if (du && dv) out.set_recorded_distance(mid, 2 * std::min(*du, *dv) + 1);
    }
  }
  for (CellId k = 0; k < c.cell_count(); ++k) {
    std::vector<Incidence> b;
    for (const Incidence& i : c.cell(k).boundary) {
      if (!i.reversed) {
        b.push_back({2 * i.edge, false});
        b.push_back({2 * i.edge + 1, false});
      } else {
        b.push_back({2 * i.edge + 1, true});
        b.push_back({2 * i.edge, true});
      }
    }
    out.add_cell(std::move(b), c.cell(k).relator);
  }
  out.meta() = c.meta();
  out.meta().generators.clear();
  if (out.meta().radius) out.meta().radius = 2 * *out.meta().radius;
  out.meta().max_relator_length *= 2;
  return out;
}

Complex make_even(const Complex& c, bool force) {
  if (force || c.has_odd_cell()) return subdivide(c);
  return c;
}

Word boundary_word(const Complex& c, CellId cell) {
  Word w;
  for (const Incidence& i : c.cell(cell).boundary) {
    const auto& g = c.edge(i.edge).generator;
    if (!g) throw BadParams("cell boundary has an unlabeled edge");
    w.push_back(Letter(*g, i.reversed));
  }
  return w;
}

}  // namespace wallkit
