#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wallkit/complex.hpp"
#include "wallkit/rational.hpp"

namespace wallkit {

/// A run of consecutive boundary positions of a cell, read forwards along
/// the cell's boundary when `forward`, backwards otherwise.
struct CellOccurrence {
  CellId cell = 0;
  std::uint32_t start = 0;
  bool forward = true;
  friend auto operator<=>(const CellOccurrence&, const CellOccurrence&) = default;
};

/// A maximal common boundary path of two cells (or of one cell at two
/// positions not related by a symmetry of its boundary).
struct CellPiece {
  std::vector<Incidence> path;  ///< as traversed by `first`
  CellOccurrence first;
  CellOccurrence second;
  std::uint32_t length() const { return static_cast<std::uint32_t>(path.size()); }
};

/// Boundary position of step k of an occurrence.
std::uint32_t occurrence_position(const Complex& c, const CellOccurrence& o, std::uint32_t k);

std::vector<CellPiece> compute_cell_pieces(const Complex& c);

struct B6Witness {
  CellId cell = 0;
  std::uint32_t start = 0;   ///< boundary position where the path begins
  std::uint32_t length = 0;  ///< total length of the <= 3 pieces
  std::vector<std::uint32_t> cuts;  ///< lengths of the consecutive pieces
};

struct B6Report {
  bool b6 = true;
  std::optional<B6Witness> b6_witness;
  /// Complex-level C'(lambda): every piece through r is shorter than lambda|r|.
  Rational lambda{1, 6};
  bool c_prime = true;
  Rational max_ratio{0};
  std::optional<CellPiece> c_prime_witness;
  /// C'(1/6) implies B(6); false only if both checks disagree with that.
  bool implication_holds = true;
  std::size_t piece_count = 0;
};

B6Report check_B6(const Complex& c, const std::vector<CellPiece>& pieces, Rational lambda = Rational(1, 6));
B6Report check_B6(const Complex& c, Rational lambda = Rational(1, 6));

/// Complex-level C'(lambda) only.
bool complex_small_cancellation(const Complex& c, const std::vector<CellPiece>& pieces,
                                const Rational& lambda);

}  // namespace wallkit
