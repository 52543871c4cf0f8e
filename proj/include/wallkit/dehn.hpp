#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wallkit/pieces.hpp"
#include "wallkit/presentation.hpp"
#include "wallkit/words.hpp"

namespace wallkit {

struct DehnOptions {
  /// Skip the C'(1/6) check and accept the presentation as is. The machine
  /// then still runs, but its answers are only trustworthy under the hypothesis.
  bool trust = false;
  /// Word budget for shortlex enumeration.
  std::size_t node_budget = 1'000'000;
};

/// A cyclic reading of a relator matched against a query word.
struct RelatorMatch {
  Occurrence rotation;
  std::uint32_t relator_length = 0;
  std::uint32_t length = 0;
};

/// Word problem machinery for a C'(1/6) presentation. Immutable after
/// construction.
class DehnMachine {
 public:
  explicit DehnMachine(Presentation p, DehnOptions options = {});

  const Presentation& presentation() const noexcept { return presentation_; }
  /// True when the presentation passed C'(1/6) (or was trusted).
  bool small_cancellation() const noexcept { return small_cancellation_; }
  const DehnOptions& options() const noexcept { return options_; }
  std::size_t max_relator_length() const noexcept { return max_length_; }

  /// Number of distinct words in the symmetrized relator set.
  std::size_t symmetrized_size() const noexcept { return rotations_.size(); }

  /// Longest common prefix of w[pos..] with any symmetrized relator, with the
  /// least such relator (sorted order). Empty when no letter matches.
  std::optional<RelatorMatch> longest_prefix_match(std::span<const Letter> w, std::size_t pos) const;

  /// Longest u = w[pos..pos+len) that is a prefix of a symmetrized relator r
  /// with |u| > |r|/2.
  std::optional<RelatorMatch> applicable_at(std::span<const Letter> w, std::size_t pos) const;

  /// The complement v^-1 where the matched relator reads u v.
  Word replacement(const RelatorMatch& m) const;

 private:
  Letter letter(std::size_t rotation, std::size_t index) const;

  Presentation presentation_;
  DehnOptions options_;
  bool small_cancellation_ = false;
  std::size_t max_length_ = 0;
  std::vector<Occurrence> rotations_;     // sorted lexicographically by reading
  std::vector<std::uint32_t> lengths_;    // |r| per rotation
  std::vector<std::vector<std::uint32_t>> min_length_;  // sparse table over lengths_
};

/// Leftmost-longest Dehn reduction. Throws NotSmallCancellation unless the
/// machine passed (or trusted) C'(1/6).
Word dehn_reduce(std::span<const Letter> w, const DehnMachine& m);

bool is_trivial(std::span<const Letter> w, const DehnMachine& m);

bool equal_in_group(std::span<const Letter> a, std::span<const Letter> b, const DehnMachine& m);

/// Shortlex-least word equal to w (letters ordered x < x^-1 < y < ...),
/// by enumeration of candidate words no longer than dehn_reduce(w).
/// Throws BudgetExceeded when more than node_budget candidates are tried.
Word shortlex_normal_form(std::span<const Letter> w, const DehnMachine& m);

}  // namespace wallkit
