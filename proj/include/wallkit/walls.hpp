#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/complex.hpp"

namespace wallkit {

/// How walls of a finite complex are declared settled, i.e. trusted to be
/// walls of the complex the finite one approximates.
///  - margin: on a Cayley ball of radius R with longest relator L, every
///    hypercarrier vertex lies within radius R - L of the base.
///  - intrinsic: the complex itself is certified simply connected and B(6),
///    so it is a valid input in its own right and every wall is settled.
///  - all: every wall (complete finite complexes such as the builders).
///  - automatic: all for non-ball complexes; for balls, intrinsic when the
///    certificate holds and margin otherwise.
enum class SettledRule { Automatic, Margin, Intrinsic, All };

std::string to_string(SettledRule r);
SettledRule parse_settled_rule(const std::string& s);

struct WallOptions {
  SettledRule rule = SettledRule::Automatic;
};

/// A cell realizing an opposite pair of wall edges: one edge of the hypergraph.
struct HyperEdge {
  CellId cell = 0;
  EdgeId a = 0;
  EdgeId b = 0;
};

struct Wall {
  EdgeId id = 0;  ///< least edge id in the class
  std::vector<EdgeId> edges;
  std::vector<HyperEdge> hyper;
  bool settled = false;
  bool margin_settled = false;
};

class WallSystem {
 public:
  WallSystem(const Complex& c, std::vector<Wall> walls, std::vector<std::uint32_t> wall_of,
             SettledRule rule, bool simply_connected, bool b6);

  const Complex& complex() const noexcept { return *complex_; }
  std::size_t wall_count() const noexcept { return walls_.size(); }
  /// Walls are indexed in increasing id order.
  const Wall& wall(std::size_t w) const { return walls_.at(w); }
  const std::vector<Wall>& walls() const noexcept { return walls_; }
  std::uint32_t wall_of(EdgeId e) const { return wall_of_.at(e); }
  std::optional<std::size_t> find_wall(EdgeId id) const;

  /// The rule actually applied (never Automatic).
  SettledRule rule() const noexcept { return rule_; }
  bool simply_connected_certified() const noexcept { return simply_connected_; }
  bool b6() const noexcept { return b6_; }
  std::size_t settled_count() const;
  std::size_t margin_settled_count() const;

 private:
  const Complex* complex_;
  std::vector<Wall> walls_;
  std::vector<std::uint32_t> wall_of_;
  SettledRule rule_;
  bool simply_connected_;
  bool b6_;
};

/// Union-find over edges seeded by the opposite pairs (i, i + |r|/2) of every
/// cell. The complex must outlive the result. Throws OddCell.
WallSystem build_walls(const Complex& c, WallOptions options = {});

/// Sufficient test for a trivial fundamental group: starting from a spanning
/// tree, repeatedly use a cell whose boundary has exactly one unresolved
/// non-tree edge to resolve that edge. True when every edge gets resolved.
bool simply_connected_certificate(const Complex& c);

struct Hypergraph {
  std::vector<EdgeId> vertices;                               ///< wall edges
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  ///< local vertex indices
  std::vector<CellId> cells;                                  ///< cell per edge
  bool connected = true;
  bool is_tree = true;
};

Hypergraph hypergraph_of(const WallSystem& ws, std::size_t w);

/// Hyperedges (indices into wall.hyper) along the path from wall edge
/// `from` to wall edge `to` in the hypergraph, found by BFS with the least
/// hyperedge index first. Empty when from == to; nullopt when disconnected.
std::optional<std::vector<std::uint32_t>> hypergraph_path(const WallSystem& ws, std::size_t w,
                                                          EdgeId from, EdgeId to);

struct WallSides {
  std::size_t components = 0;
  /// Component index of every vertex after removing the wall's open edges.
  std::vector<std::uint32_t> side;
  bool two_sided() const { return components == 2; }
};

WallSides wall_components(const WallSystem& ws, std::size_t w);

/// Vertices of the hypercarrier: all vertices of cells through wall edges,
/// or the two ends of a singleton wall.
std::vector<VertexId> hypercarrier_vertices(const WallSystem& ws, std::size_t w);

struct ConvexityResult {
  bool pass = true;
  std::size_t pairs_checked = 0;
  /// On failure: the pair and a vertex (or edge) of a geodesic outside.
  std::optional<std::pair<VertexId, VertexId>> pair;
  std::optional<VertexId> outside_vertex;
  std::optional<EdgeId> outside_edge;
};

/// Strict: every geodesic between hypercarrier vertices stays inside.
/// Otherwise: some geodesic does. `interior` (optional, per vertex) restricts
/// the pairs checked.
ConvexityResult hypercarrier_check(const WallSystem& ws, std::size_t w, bool strict = true,
                                   const std::vector<bool>* interior = nullptr);

enum class DistanceMode { Components, Parity };

struct WallDistance {
  std::uint32_t settled = 0;          ///< separating settled walls
  std::uint32_t unsettled = 0;        ///< unsettled walls separating (components) or crossed oddly (parity)
  std::uint32_t not_two_sided = 0;    ///< settled walls that are not two-sided (components mode)
};

/// Components mode checks the sides of every wall; parity mode counts walls
/// crossed an odd number of times along the least geodesic from p to q.
WallDistance wall_distance(const WallSystem& ws, VertexId p, VertexId q, DistanceMode mode);

/// Components-mode distances for many pairs at once (each wall's sides are
/// computed a single time). Also reports walls that are not two-sided.
struct ComponentsSweep {
  std::vector<WallDistance> distances;
  std::vector<std::size_t> not_two_sided_walls;
};
ComponentsSweep wall_distances_by_components(const WallSystem& ws,
                                             const std::vector<std::pair<VertexId, VertexId>>& pairs);

/// Text dump: "wall <id> settled|unsettled", "edges ...", "hyper cell:a-b ...".
std::string dump_walls(const WallSystem& ws);

/// DOT graph of the 1-skeleton with edges coloured by wall (settled walls
/// only when `settled_only`), or of one wall's hypergraph.
std::string walls_dot(const WallSystem& ws, bool settled_only = false);
std::string hypergraph_dot(const WallSystem& ws, std::size_t w);

}  // namespace wallkit
