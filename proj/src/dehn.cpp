#include "wallkit/dehn.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "wallkit/errors.hpp"

namespace wallkit {

DehnMachine::DehnMachine(Presentation p, DehnOptions options)
    : presentation_(std::move(p)), options_(options) {
  small_cancellation_ =
      options_.trust || check_small_cancellation(presentation_, Rational(1, 6)).pass;
  max_length_ = presentation_.max_relator_length();

  for (std::uint32_t r = 0; r < presentation_.relators().size(); ++r) {
    const auto n = static_cast<std::uint32_t>(presentation_.relators()[r].size());
    const auto period = static_cast<std::uint32_t>(cyclic_period(presentation_.relators()[r]));
    for (bool inv : {false, true}) {
      for (std::uint32_t off = 0; off < period; ++off) {
        rotations_.push_back(Occurrence{r, inv, off});
        lengths_.push_back(n);
      }
    }
  }
  // Sort rotations by their reading; equal readings collapse.
  std::vector<std::size_t> order(rotations_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto cmp = [&](std::size_t a, std::size_t b) {
    const std::size_t la = lengths_[a], lb = lengths_[b];
    for (std::size_t k = 0; k < std::min(la, lb); ++k) {
      Letter x = letter(a, k), y = letter(b, k);
      if (x != y) return x < y;
    }
    return la < lb;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cmp(a, b) || (!cmp(b, a) && rotations_[a] < rotations_[b]);
  });
  std::vector<Occurrence> rot;
  std::vector<std::uint32_t> len;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && !cmp(order[k - 1], order[k])) continue;  // same reading
    rot.push_back(rotations_[order[k]]);
    len.push_back(lengths_[order[k]]);
  }
  rotations_ = std::move(rot);
  lengths_ = std::move(len);

  min_length_.push_back(lengths_);
  for (std::size_t span = 2; span <= lengths_.size(); span <<= 1) {
    const auto& prev = min_length_.back();
    std::vector<std::uint32_t> next(lengths_.size() - span + 1);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::min(prev[i], prev[i + span / 2]);
    min_length_.push_back(std::move(next));
  }
}

Letter DehnMachine::letter(std::size_t rotation, std::size_t index) const {
  const Occurrence& o = rotations_[rotation];
  const Word& r = presentation_.relators()[o.relator];
  const std::size_t n = r.size();
  if (!o.inverted) return r[(o.offset + index) % n];
  return r[n - 1 - (o.offset + index) % n].inverse();
}

namespace {

// Narrows [lo, hi) to rotations whose letter at `depth` equals c. Rotations
// shorter than depth+1 sort first within the range.
template <class LetterAt>
void narrow(std::size_t& lo, std::size_t& hi, std::size_t depth, Letter c,
            const std::vector<std::uint32_t>& lengths, LetterAt letter_at) {
  auto key = [&](std::size_t i) -> std::int64_t {
    return lengths[i] <= depth ? -1 : static_cast<std::int64_t>(letter_at(i, depth).code());
  };
  std::size_t a = lo, b = hi;
  while (a < b) {
    std::size_t mid = (a + b) / 2;
    if (key(mid) < static_cast<std::int64_t>(c.code())) a = mid + 1;
    else b = mid;
  }
  std::size_t first = a;
  b = hi;
  while (a < b) {
    std::size_t mid = (a + b) / 2;
    if (key(mid) <= static_cast<std::int64_t>(c.code())) a = mid + 1;
    else b = mid;
  }
  lo = first;
  hi = a;
}

}  // namespace

std::optional<RelatorMatch> DehnMachine::longest_prefix_match(std::span<const Letter> w,
                                                              std::size_t pos) const {
  std::size_t lo = 0, hi = rotations_.size();
  std::optional<RelatorMatch> best;
  auto at = [&](std::size_t i, std::size_t d) { return letter(i, d); };
  for (std::size_t depth = 0; pos + depth < w.size(); ++depth) {
    narrow(lo, hi, depth, w[pos + depth], lengths_, at);
    if (lo >= hi) break;
    best = RelatorMatch{rotations_[lo], lengths_[lo], static_cast<std::uint32_t>(depth + 1)};
  }
  return best;
}

std::optional<RelatorMatch> DehnMachine::applicable_at(std::span<const Letter> w,
                                                       std::size_t pos) const {
  std::size_t lo = 0, hi = rotations_.size();
  std::optional<std::pair<std::size_t, std::size_t>> best;  // (range lo, range hi) at best depth
  std::size_t best_len = 0;
  auto at = [&](std::size_t i, std::size_t d) { return letter(i, d); };
  auto range_min = [&](std::size_t a, std::size_t b) {
    const std::size_t k = std::bit_width(b - a) - 1;
    return std::min(min_length_[k][a], min_length_[k][b - (std::size_t{1} << k)]);
  };
  for (std::size_t depth = 0; pos + depth < w.size() && depth < max_length_; ++depth) {
    narrow(lo, hi, depth, w[pos + depth], lengths_, at);
    if (lo >= hi) break;
    const std::size_t len = depth + 1;
    if (range_min(lo, hi) < 2 * len) {
      best = std::make_pair(lo, hi);
      best_len = len;
    }
  }
  if (!best) return std::nullopt;
  for (std::size_t i = best->first; i < best->second; ++i) {
    if (lengths_[i] < 2 * best_len) {
      return RelatorMatch{rotations_[i], lengths_[i], static_cast<std::uint32_t>(best_len)};
    }
  }
  return std::nullopt;
}

Word DehnMachine::replacement(const RelatorMatch& m) const {
  Word reading = read_occurrence(presentation_, m.rotation, m.relator_length);
  Word v(reading.begin() + m.length, reading.end());
  return inverse(v);
}

Word dehn_reduce(std::span<const Letter> input, const DehnMachine& m) {
  if (!m.small_cancellation()) {
    throw NotSmallCancellation("Dehn's algorithm needs a C'(1/6) presentation");
  }
  Word w = free_reduce(input);
  std::size_t start = 0;
  const std::size_t reach = m.max_relator_length();
  for (;;) {
    std::optional<RelatorMatch> hit;
    std::size_t pos = start;
    for (; pos < w.size(); ++pos) {
      hit = m.applicable_at(w, pos);
      if (hit) break;
    }
    if (!hit) return w;
    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word rep = m.replacement(*hit);
    next.insert(next.end(), rep.begin(), rep.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + hit->length), w.end());
    next = free_reduce(next);
    std::size_t common = 0;
    while (common < next.size() && common < w.size() && next[common] == w[common]) ++common;
    start = common > reach ? common - reach : 0;
    w = std::move(next);
  }
}

bool is_trivial(std::span<const Letter> w, const DehnMachine& m) { return dehn_reduce(w, m).empty(); }

bool equal_in_group(std::span<const Letter> a, std::span<const Letter> b, const DehnMachine& m) {
  return is_trivial(concat(a, inverse(b)), m);
}

Word shortlex_normal_form(std::span<const Letter> w, const DehnMachine& m) {
  const Word target = dehn_reduce(w, m);
  const Word target_inv = inverse(target);
  const auto letters = static_cast<std::uint32_t>(m.presentation().letter_count());
  std::size_t tried = 0;

  // Depth-first in lexicographic order over freely reduced words of a fixed
  // length; prefixes that still contain more than half a relator are not
  // geodesic and are pruned.
  Word cand;
  std::function<bool(std::size_t)> search = [&](std::size_t len) -> bool {
    if (cand.size() == len) {
      if (++tried > m.options().node_budget) {
        throw BudgetExceeded("shortlex_normal_form: candidate budget exhausted");
      }
      return is_trivial(concat(cand, target_inv), m);
    }
    for (std::uint32_t code = 0; code < letters; ++code) {
      Letter l = Letter::from_code(code);
      if (!cand.empty() && cand.back() == l.inverse()) continue;
      cand.push_back(l);
      bool reducible = false;
      for (std::size_t s = 0; s < cand.size() && !reducible; ++s) {
        reducible = m.applicable_at(cand, s).has_value();
      }
      if (!reducible && search(len)) return true;
      cand.pop_back();
    }
    return false;
  };
  for (std::size_t len = 0; len <= target.size(); ++len) {
    cand.clear();
    if (search(len)) return cand;
  }
  return target;  // unreachable for C'(1/6) presentations
}

}  // namespace wallkit
