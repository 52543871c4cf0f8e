#include "wallkit/presentation.hpp"

#include <algorithm>
#include <set>

#include "wallkit/errors.hpp"

namespace wallkit {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           Rational lambda)
    : generators_(std::move(generators)), lambda_(lambda) {
  if (lambda_ <= 0 || lambda_ >= 1) {
    throw BadParams("lambda must lie in (0,1), got " + to_string(lambda_));
  }
  std::set<Word> seen;
  for (const Word& r : relators) {
    for (Letter l : r) {
      if (l.generator() >= generators_.size()) {
        throw BadParams("relator letter refers to generator " + std::to_string(l.generator()) +
                        " of " + std::to_string(generators_.size()));
      }
    }
    Word core = cyclic_reduce(r).core;
    if (core.empty()) throw EmptyRelator("relator '" + format(r) + "' reduces to the empty word");
    if (seen.insert(cyclic_key(core)).second) relators_.push_back(std::move(core));
  }
}

std::size_t Presentation::max_relator_length() const noexcept {
  std::size_t m = 0;
  for (const auto& r : relators_) m = std::max(m, r.size());
  return m;
}

std::size_t Presentation::total_relator_length() const noexcept {
  std::size_t m = 0;
  for (const auto& r : relators_) m += r.size();
  return m;
}

bool Presentation::has_odd_relator() const noexcept {
  return std::any_of(relators_.begin(), relators_.end(),
                     [](const Word& r) { return r.size() % 2 == 1; });
}

std::optional<std::uint32_t> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::string Presentation::to_text() const {
  std::string out = "gens:";
  for (const auto& g : generators_) out += " " + g;
  out += "\nlambda: " + to_string(lambda_) + "\n";
  for (const auto& r : relators_) out += "rel: " + format(r) + "\n";
  return out;
}

}  // namespace wallkit
