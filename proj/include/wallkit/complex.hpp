#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/words.hpp"

namespace wallkit {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using CellId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

enum class Origin { CayleyBall, Example1, Example2, File, Other };

std::string to_string(Origin o);
Origin parse_origin(const std::string& s);

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  /// Generator carried from u to v on Cayley balls.
  std::optional<std::uint32_t> generator;
};

/// One step of a boundary cycle: the edge traversed from u to v, or from v to
/// u when `reversed`.
struct Incidence {
  EdgeId edge = 0;
  bool reversed = false;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Cell {
  std::vector<Incidence> boundary;
  /// Index of the relator whose reading labels the boundary (Cayley balls).
  std::optional<std::uint32_t> relator;
};

struct ComplexMeta {
  Origin origin = Origin::Other;
  std::optional<std::uint32_t> radius;
  VertexId base = 0;
  /// Longest relator used to attach cells (Cayley balls).
  std::uint32_t max_relator_length = 0;
  /// Generator names, for edge labels.
  std::vector<std::string> generators;
};

/// Finite combinatorial 2-complex: vertices, undirected edges and 2-cells
/// given by closed boundary edge paths.
class Complex {
 public:
  VertexId add_vertex(std::string label = {});
  EdgeId add_edge(VertexId u, VertexId v, std::optional<std::uint32_t> generator = std::nullopt);
  /// Adds a cell unless a cell with the same boundary edge set exists; returns
  /// the id of the (new or existing) cell. Throws BadParams if the boundary is
  /// not a closed edge path.
  CellId add_cell(std::vector<Incidence> boundary, std::optional<std::uint32_t> relator = std::nullopt);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  void set_label(VertexId v, std::string label) { labels_.at(v) = std::move(label); }
  /// First vertex with the given label.
  std::optional<VertexId> find_vertex(const std::string& label) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Cell& cell(CellId c) const { return cells_.at(c); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// Start vertex of an incidence.
  VertexId tail(const Incidence& i) const;
  VertexId head(const Incidence& i) const;
  /// Boundary vertices in cycle order (vertex i is the tail of incidence i).
  std::vector<VertexId> cell_vertices(CellId c) const;
  VertexId other_end(EdgeId e, VertexId v) const;

  struct Neighbor {
    VertexId vertex;
    EdgeId edge;
  };
  /// Incident edges ordered by edge id.
  const std::vector<Neighbor>& neighbors(VertexId v) const { return adjacency_.at(v); }
  /// Cells whose boundary uses e, each listed once per use.
  std::vector<std::pair<CellId, std::uint32_t>> cells_on_edge(EdgeId e) const;

  /// Distance from the base recorded at build time (Cayley balls).
  std::optional<std::uint32_t> recorded_distance(VertexId v) const;
  void set_recorded_distance(VertexId v, std::uint32_t d);
  bool has_recorded_distances() const noexcept { return !distances_.empty(); }

  ComplexMeta& meta() noexcept { return meta_; }
  const ComplexMeta& meta() const noexcept { return meta_; }

  bool has_odd_cell() const;
  bool is_connected() const;
  std::uint32_t max_cell_length() const;

  /// Breadth-first distances from a source; kNone for unreachable vertices.
  std::vector<std::uint32_t> distances_from(VertexId source) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<Cell> cells_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::vector<std::pair<CellId, std::uint32_t>>> edge_cells_;
  std::map<std::vector<EdgeId>, CellId> cell_keys_;  // sorted edge ids, for dedupe
  std::vector<std::uint32_t> distances_;
  ComplexMeta meta_;
};

/// Every edge split in two through a fresh midpoint; cell lengths and path
/// distances double. Midpoints get the label "<u>|<v>" of their edge's ends.
Complex subdivide(const Complex& c);

/// Subdivides iff some cell has odd length (or `force`).
Complex make_even(const Complex& c, bool force = false);

/// Word read along a cell boundary from its generator labels. Throws BadParams
/// on unlabeled edges.
Word boundary_word(const Complex& c, CellId cell);

}  // namespace wallkit
