#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wallkit/presentation.hpp"
#include "wallkit/rational.hpp"
#include "wallkit/words.hpp"

namespace wallkit {

/// A placement of a word inside a relator's boundary cycle: letters are read
/// along the relator (or along its inverse when `inverted`), starting at
/// `offset` of that reading.
struct Occurrence {
  std::uint32_t relator = 0;
  bool inverted = false;
  std::uint32_t offset = 0;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// A maximal piece with one witnessing pair of inequivalent occurrences.
struct Piece {
  Occurrence first;
  Occurrence second;
  std::uint32_t length = 0;
};

struct RelatorPieces {
  std::uint32_t max_length = 0;
  std::optional<Piece> witness;  ///< a piece of length max_length through this relator
};

class PieceIndex {
 public:
  PieceIndex(Presentation presentation, std::vector<Piece> pieces,
             std::vector<RelatorPieces> per_relator);

  const Presentation& presentation() const noexcept { return presentation_; }
  /// Distinct maximal piece words (one orientation each), sorted shortlex.
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  const std::vector<RelatorPieces>& per_relator() const noexcept { return per_relator_; }

  Word word(const Piece& p) const;
  /// max piece length / |r|.
  Rational ratio(std::size_t relator) const;

 private:
  Presentation presentation_;
  std::vector<Piece> pieces_;
  std::vector<RelatorPieces> per_relator_;
};

/// Reads `length` letters of an occurrence.
Word read_occurrence(const Presentation& p, const Occurrence& o, std::size_t length);

/// Maximal pieces over all pairs of relator placements, computed on cyclic
/// words with a generalized suffix array. Placements related by a symmetry of
/// the relator cycle (rotation by a period, or a label-preserving reflection)
/// are identified and never produce a piece.
PieceIndex compute_pieces(const Presentation& p);

struct RelatorCheck {
  std::size_t relator = 0;
  std::size_t length = 0;
  std::uint32_t max_piece = 0;
  Rational ratio{0};
  bool pass = true;
  std::optional<Piece> witness;
};

struct MetricReport {
  Rational lambda{1, 6};
  std::vector<RelatorCheck> relators;
  Rational max_ratio{0};
  bool pass = true;
};

/// C'(lambda): every piece through r has |p| < lambda |r| (strict).
MetricReport check_small_cancellation(const PieceIndex& index, const Rational& lambda);
MetricReport check_small_cancellation(const Presentation& p, const Rational& lambda);

}  // namespace wallkit
