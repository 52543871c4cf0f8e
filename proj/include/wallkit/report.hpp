#pragma once

#include <string>

#include "json.hpp"

#include "wallkit/cell_pieces.hpp"
#include "wallkit/complex.hpp"
#include "wallkit/pieces.hpp"
#include "wallkit/separation.hpp"

namespace wallkit {

/// Header `p,q,d,dw,ratio_num,ratio_den,settled,in_A_count`; p and q are
/// vertex labels (ids when unlabelled).
std::string separation_csv(const SeparationReport& r, const Complex& c);

nlohmann::json separation_json(const SeparationReport& r, const Complex& c);

nlohmann::json metric_json(const MetricReport& m, const PieceIndex& index);
std::string metric_text(const MetricReport& m, const PieceIndex& index);

nlohmann::json b6_json(const B6Report& r);

}  // namespace wallkit
