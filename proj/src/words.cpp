#include "wallkit/words.hpp"

#include <algorithm>

#include "wallkit/errors.hpp"

namespace wallkit {

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(std::span<const Letter> w, long exponent) {
  Word base = exponent < 0 ? inverse(w) : Word(w.begin(), w.end());
  long n = exponent < 0 ? -exponent : exponent;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word rotate(std::span<const Letter> w, std::size_t shift) {
  Word out;
  if (w.empty()) return out;
  out.reserve(w.size());
  shift %= w.size();
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(shift), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift));
  return out;
}

bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

CyclicReduction cyclic_reduce(std::span<const Letter> w) {
  Word reduced = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction result;
  result.conjugator.assign(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(lo));
  result.core.assign(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
                     reduced.begin() + static_cast<std::ptrdiff_t>(hi));
  return result;
}

std::vector<Word> symmetrize(std::span<const Word> relators) {
  std::vector<Word> out;
  for (const Word& r : relators) {
    if (r.empty()) throw EmptyRelator("empty relator in symmetrization");
    Word inv = inverse(r);
    for (std::size_t s = 0; s < r.size(); ++s) {
      out.push_back(rotate(r, s));
      out.push_back(rotate(inv, s));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word cyclic_key(std::span<const Letter> w) {
  Word best(w.begin(), w.end());
  Word inv = inverse(w);
  for (std::size_t s = 0; s < w.size(); ++s) {
    Word a = rotate(w, s);
    if (a < best) best = std::move(a);
    Word b = rotate(inv, s);
    if (b < best) best = std::move(b);
  }
  return best;
}

std::size_t cyclic_period(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = w[i] == w[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

std::string format_word(std::span<const Letter> w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  bool spaced = std::any_of(names.begin(), names.end(),
                            [](const std::string& s) { return s.size() != 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    const auto g = w[i].generator();
    out += g < names.size() ? names[g] : "g" + std::to_string(g);
    if (w[i].is_inverse()) out += "^-1";
  }
  return out;
}

}  // namespace wallkit
