#pragma once

#include <string>
#include <string_view>

#include "wallkit/complex.hpp"

namespace wallkit {

/// Complex file format, one record per line:
///   complex <vertices> <edges> <cells>
///   meta origin|radius|base|max_relator_length|gens <value...>
///   v <id> ["label"]
///   e <id> <u> <v> [generator]
///   c <id> <+edge|-edge>...
///   t <cell> <relator index>
///   d <vertex> <recorded distance>
/// Records appear in id order. '#' starts a comment.
std::string write_complex(const Complex& c);

/// Throws ParseError (with line number) on malformed input.
Complex read_complex(std::string_view text);

void save_complex(const Complex& c, const std::string& path);
Complex load_complex(const std::string& path);

}  // namespace wallkit
