#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/complex.hpp"
#include "wallkit/rational.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

struct Path {
  std::vector<VertexId> vertices;  ///< |edges| + 1 vertices from p to q
  std::vector<EdgeId> edges;
};

/// Shortest p-q path whose edge-id sequence is lexicographically least.
Path geodesic(const Complex& c, VertexId p, VertexId q);

/// A geodesic with the wall data along it.
struct GeodesicContext {
  VertexId p = 0;
  VertexId q = 0;
  Path gamma;
  std::vector<std::uint32_t> wall;      ///< wall index per edge of gamma
  std::vector<std::uint32_t> crossings; ///< |w cap gamma| per edge of gamma
  std::vector<bool> in_A;               ///< wall meets gamma in exactly this edge
};

/// Throws BadParams when `gamma` is not a geodesic.
GeodesicContext make_context(const WallSystem& ws, const Path& gamma);
GeodesicContext make_context(const WallSystem& ws, VertexId p, VertexId q);

/// Positions (indices into gamma.edges) of the edges in A(gamma).
std::vector<std::size_t> compute_A(const GeodesicContext& ctx);

/// Relator neighborhood of the edge at position `index` of gamma.
struct RelatorNeighborhood {
  std::size_t index = 0;       ///< position of e in gamma
  bool singleton = false;      ///< e in A(gamma): N_e = {e}
  std::size_t first = 0;       ///< N_e = gamma edges [first, last]
  std::size_t last = 0;
  std::optional<std::size_t> partner;  ///< position of e' in gamma
  std::optional<CellId> r;
  std::optional<CellId> r_prime;
  std::optional<EdgeId> e_second;      ///< e'' (opposite of e in r)
  std::uint32_t r_length = 0;
  /// True when e' lies beyond q' (towards q); otherwise beyond p'.
  bool partner_towards_q = true;

  std::size_t length() const { return last - first + 1; }
};

/// Throws UnsettledWall when e's wall is not settled, and HypothesisViolated
/// when the construction breaks down (e' in r, or no cell path).
RelatorNeighborhood relator_neighborhood(const GeodesicContext& ctx, std::size_t index,
                                         const WallSystem& ws);

/// Inequalities probed on one relator neighborhood. Distances
/// are along gamma. With e' beyond q' the probes are
///   d(p',q') > d(e,q') > (1/2 - lambda)|r|   and   d(e,p') < 2 lambda d(p',q') - 1,
/// mirrored (p' and q' swapped) when e' lies beyond p'.
struct NeighborhoodProbe {
  std::uint32_t d_pq = 0;     ///< d(p',q') = |N_e|
  std::uint32_t d_e_near = 0; ///< d(e, q') (or d(e, p') when mirrored)
  std::uint32_t d_e_far = 0;  ///< d(e, p') (or d(e, q') when mirrored)
  bool near_inequality = true;
  bool far_inequality = true;
  std::uint32_t a_count = 0;  ///< |E(N_e) cap A(gamma)|
  Rational density{0};
  Rational bound{0};
  bool density_pass = true;
};

NeighborhoodProbe probe_neighborhood(const RelatorNeighborhood& ne, const GeodesicContext& ctx,
                                     const Rational& lambda);

/// (ratio, pass) of the local density inequality.
std::pair<Rational, bool> local_density_check(const RelatorNeighborhood& ne, const GeodesicContext& ctx,
                                              const Rational& lambda);

/// Closed interval of edge positions [first, last] on a common path.
struct Interval {
  std::int64_t first = 0;
  std::int64_t last = 0;
  std::int64_t length() const { return last - first + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct CoverSplit {
  std::vector<Interval> cover;  ///< minimal subcover
  std::vector<Interval> u1;
  std::vector<Interval> u2;
};

/// Minimal subcover of the union, split into two families of pairwise
/// disjoint intervals.
CoverSplit cover_split(const std::vector<Interval>& intervals);

/// Edge count of a union of intervals.
std::int64_t union_size(const std::vector<Interval>& intervals);

struct DensityResult {
  std::int64_t a_size = 0;
  std::int64_t union_edges = 0;
  Rational required{0};     ///< (C/2) |union|
  bool pass = true;         ///< |A| >= (C/2) |union|
  bool split_pass = true;   ///< the same bound re-derived through cover_split
  Rational slack{0};        ///< |A| - (C/2)|union|
};

/// `a` lists edge positions (the set A). Throws HypothesisViolated when some
/// interval has |A cap u| < C |u|.
DensityResult local_to_global_bound(const std::vector<std::int64_t>& a, const std::vector<Interval>& intervals,
                                    const Rational& C);

/// Pair record of a separation sweep.
struct PairRecord {
  VertexId p = 0;
  VertexId q = 0;
  std::uint32_t d = 0;
  std::uint32_t dw = 0;
  bool settled = true;
  std::uint32_t in_A_count = 0;
  std::uint32_t unsettled_walls = 0;
};

enum class SeparationMode { Verify, Observe };

struct SeparationOptions {
  Rational lambda{1, 6};
  SeparationMode mode = SeparationMode::Verify;
  /// Pairs are taken among these vertices; empty means the default region.
  std::vector<VertexId> region;
  /// Keep individual pair records (for CSV).
  bool keep_pairs = true;
  /// Extra anchor pairs recorded even outside the region.
  std::vector<std::pair<VertexId, VertexId>> anchors;
  unsigned jobs = 0;  ///< 0: hardware concurrency
};

struct SeparationReport {
  Rational lambda{1, 6};
  Rational constant{0};
  SeparationMode mode = SeparationMode::Verify;
  std::size_t region_size = 0;
  std::size_t pair_count = 0;
  std::size_t settled_pairs = 0;
  std::optional<Rational> min_ratio;   ///< over settled pairs
  std::string mean_ratio = "0/1";       ///< exact, over settled pairs
  std::size_t violations = 0;          ///< settled pairs with ratio < constant or dw > d
  std::size_t inconclusive = 0;        ///< violations among unsettled pairs
  std::size_t dw_exceeds_d = 0;
  std::size_t a_exceeds_dw = 0;        ///< settled pairs with |A| > dw
  bool pass = false;
  std::vector<PairRecord> pairs;
  std::vector<PairRecord> violating;
  std::vector<PairRecord> anchors;
  SettledRule rule = SettledRule::All;
  std::size_t walls = 0;
  std::size_t settled_walls = 0;
  std::size_t margin_settled_walls = 0;
};

/// Default region: vertices all of whose incident walls are settled and, on
/// Cayley balls under the margin rule, at distance <= R - L from the base;
/// under the intrinsic rule, within radius floor(R/2).
std::vector<VertexId> default_region(const WallSystem& ws);

/// Sweeps every pair of the region: d, d_W (parity along the least geodesic,
/// settled walls only), |A(gamma)|. Pass iff every settled pair has
/// dw <= d and dw/d >= constant. Observe mode never passes or fails.
SeparationReport verify_linear_separation(const WallSystem& ws, const SeparationOptions& options);

}  // namespace wallkit
