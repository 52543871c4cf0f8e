#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wallkit/rational.hpp"
#include "wallkit/words.hpp"

namespace wallkit {

/// Finitely many generators and cyclically reduced relators. Relators are
/// reduced and deduplicated (up to cyclic shift and inversion) on construction.
class Presentation {
 public:
  Presentation() = default;

  /// Throws EmptyRelator if a relator cyclically reduces to nothing and
  /// BadParams for letters outside the generator range.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               Rational lambda = Rational(1, 6));

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const Rational& lambda() const noexcept { return lambda_; }

  std::size_t generator_count() const noexcept { return generators_.size(); }
  /// Number of letters (generators and inverses).
  std::size_t letter_count() const noexcept { return 2 * generators_.size(); }
  std::size_t max_relator_length() const noexcept;
  std::size_t total_relator_length() const noexcept;
  bool has_odd_relator() const noexcept;

  std::optional<std::uint32_t> find_generator(std::string_view name) const;

  std::string format(std::span<const Letter> w) const { return format_word(w, generators_); }

  /// Serializes in the presentation file format.
  std::string to_text() const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  Rational lambda_{1, 6};
};

/// Presentation file format:
///   gens: a b
///   rel: (a b)^7
///   lambda: 1/6
/// '#' starts a comment. Throws ParseError, UnknownGenerator, EmptyRelator.
Presentation parse_presentation(std::string_view text);

/// Word syntax: juxtaposed generator names (longest match), optional
/// "^-1" / "⁻¹" / "^n" suffixes, parenthesized groups with powers, "1" for
/// the identity.
Word parse_word(std::string_view text, std::span<const std::string> generators);

}  // namespace wallkit
