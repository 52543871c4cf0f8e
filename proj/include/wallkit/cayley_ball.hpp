#pragma once

#include <cstddef>
#include <cstdint>

#include "wallkit/complex.hpp"
#include "wallkit/dehn.hpp"

namespace wallkit {

struct BallOptions {
  std::size_t vertex_budget = 2'000'000;
  /// Confirm every identification of two words with Dehn's algorithm.
  bool verify_merges = true;
};

/// Ball of radius R about the identity in the Cayley complex. Vertices are
/// shortlex normal forms (labelled with the formatted word), edges carry
/// their generator, and a cell is attached for every relator cycle whose
/// vertices all lie in the ball.
///
/// Built layer by layer: two products W s and W' s' of the new layer are
/// identified when a relator cycle through both edges closes up inside the
/// current ball. For C'(1/6) presentations this finds every identification,
/// since the last cell of a geodesic bigon meets the ball in everything but
/// its far vertex.
///
/// Throws NotSmallCancellation and BudgetExceeded.
Complex build_cayley_ball(const DehnMachine& m, std::uint32_t radius, BallOptions options = {});

}  // namespace wallkit
