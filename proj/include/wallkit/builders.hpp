#pragma once

#include <cstdint>
#include <vector>

#include "wallkit/complex.hpp"

namespace wallkit {

/// Chain of theta graphs. For each n: anchors a_n..f_n (labels "a<n>".."f<n>")
/// joined by unit-edge segments with d(a,b) = d(d,e) = n, d(b,c) = d(c,d) = 3,
/// d(c,f) = 2n, d(a,f) = d(f,e) = n + 3, and two cells of length 4n + 6
/// through a,b,c,f and c,d,e,f. Consecutive thetas are joined by an edge e_n a_{n+1}.
/// Interior segment vertices are labelled "<X>-<Y>:<k>", e.g. "a2-b2:1".
/// Throws BadParams on an empty list or an entry < 1.
Complex build_example1(const std::vector<std::uint32_t>& n_list);

/// Two cells of length 2*half_r sharing the segment a q' of length x.
/// Cell r runs a, q', a', p', a and cell r' runs a, q', a'', p'', a with
/// d(q',a') = d(q',a'') = half_r - x and d(a',p') = d(a'',p'') = x/2.
/// Anchors are labelled a, q', a', a'', p', p''.
/// Throws BadParams unless x is even, x >= 2 and half_r > x.
Complex build_example2(std::uint32_t x, std::uint32_t half_r);

}  // namespace wallkit
