#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wallkit/presentation.hpp"

namespace wallkit {

/// Relators a*u_n, b*v_n with u_n = (a^n b^n)^10, v_n = (a^n b^2n)^10, n = 1..n_max.
struct PrideParams {
  unsigned n_max = 1;
};

/// Relators (a^n b^n)^k for n in I.
struct TvParams {
  std::vector<unsigned> I;
  unsigned k = 7;
};

/// Generators a1..am, x, y. The j-th word S_j of the sequence
/// a_i x a_i^-1, a_i^-1 x a_i (i = 1..m), a_i y a_i^-1, a_i^-1 y a_i (i = 1..m),
/// then the quotient relators, is tied to
/// B_j = prod_{t=1..scale} (xy)^{scale*j + t} x y^2 by the relator B_j S_j^-1.
struct RipsParams {
  unsigned quotient_generators = 1;
  std::vector<Word> quotient_relators;  ///< words over generators 0..m-1
  unsigned j_max = 1;
  unsigned scale = 80;
};

using ExampleParams = std::variant<PrideParams, TvParams, RipsParams>;

struct GeneratedExample {
  Presentation presentation;
  std::vector<std::string> warnings;
};

/// Throws BadParams on unusable parameters. Parameters the construction
/// tolerates but that void the small cancellation claim (k < 7) are returned
/// as warnings.
GeneratedExample gen_example(const ExampleParams& params);

/// The j-th block word B_j over generators x, y (indices given).
Word rips_block(unsigned j, unsigned scale, std::uint32_t x, std::uint32_t y);

}  // namespace wallkit
