#pragma once
#include <string>
#include <vector>

#include "wallkit/presentation.hpp"
#include "wallkit/words.hpp"

namespace testing {

inline const std::vector<std::string>& ab() {
  static const std::vector<std::string> names{"a", "b"};
  return names;
}

inline wallkit::Word W(const std::string& text, const std::vector<std::string>& names = ab()) {
  return wallkit::parse_word(text, names);
}

inline wallkit::Presentation P(const std::string& text) { return wallkit::parse_presentation(text); }

}  // namespace testing
