#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wallkit {

/// A generator or its formal inverse, packed as 2*generator + (inverse ? 1 : 0).
/// The packed order is the shortlex letter order: x < x^-1 < y < y^-1 < ...
class Letter {
 public:
  constexpr Letter() noexcept = default;
  constexpr Letter(std::uint32_t generator, bool inverse) noexcept
      : code_(generator * 2 + (inverse ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) noexcept {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t generator() const noexcept { return code_ >> 1; }
  constexpr bool is_inverse() const noexcept { return (code_ & 1u) != 0; }
  constexpr int sign() const noexcept { return is_inverse() ? -1 : 1; }
  constexpr Letter inverse() const noexcept { return from_code(code_ ^ 1u); }
  constexpr std::uint32_t code() const noexcept { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

 private:
  std::uint32_t code_ = 0;
};

using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word power(std::span<const Letter> w, long exponent);
/// Cyclic shift: result[i] = w[(i + shift) mod |w|].
Word rotate(std::span<const Letter> w, std::size_t shift);

bool is_freely_reduced(std::span<const Letter> w);
bool is_cyclically_reduced(std::span<const Letter> w);

/// Unique freely reduced representative of w in the free group.
Word free_reduce(std::span<const Letter> w);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// w = conjugator * core * conjugator^-1 in the free group, core cyclically reduced.
CyclicReduction cyclic_reduce(std::span<const Letter> w);

/// All distinct cyclic shifts of the relators and their inverses, sorted.
/// Throws EmptyRelator on an empty relator.
std::vector<Word> symmetrize(std::span<const Word> relators);

/// Length first, then lexicographic on letter codes.
bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b);

/// Least rotation of w or w^-1 in lexicographic order. Two cyclically reduced
/// words give the same key iff one is a cyclic shift of the other or its inverse.
Word cyclic_key(std::span<const Letter> w);

/// Smallest p > 0 with w[i] = w[(i + p) mod |w|]; |w| for aperiodic words.
std::size_t cyclic_period(std::span<const Letter> w);

/// Juxtaposed generator names with "^-1" on inverse letters; "1" for the
/// empty word. Names are space separated when any name is longer than one
/// character.
std::string format_word(std::span<const Letter> w, std::span<const std::string> names);

}  // namespace wallkit
