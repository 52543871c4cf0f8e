#include "wallkit/examples.hpp"

#include <algorithm>
#include <set>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

constexpr Letter gen(std::uint32_t g) { return Letter(g, false); }
constexpr Letter inv(std::uint32_t g) { return Letter(g, true); }

Word an_bm(unsigned n, unsigned m) {
  Word w(n, gen(0));
  w.insert(w.end(), m, gen(1));
  return w;
}

GeneratedExample pride(const PrideParams& p) {
  if (p.n_max == 0) throw BadParams("pride: n_max must be at least 1");
  std::vector<Word> rels;
  for (unsigned n = 1; n <= p.n_max; ++n) {
    Word au{gen(0)};
    Word u = power(an_bm(n, n), 10);
    au.insert(au.end(), u.begin(), u.end());
    Word bv{gen(1)};
    Word v = power(an_bm(n, 2 * n), 10);
    bv.insert(bv.end(), v.begin(), v.end());
    rels.push_back(std::move(au));
    rels.push_back(std::move(bv));
  }
  return {Presentation({"a", "b"}, std::move(rels)), {}};
}

GeneratedExample tv(const TvParams& p) {
  if (p.I.empty()) throw BadParams("tv: I must be nonempty");
  if (p.k == 0) throw BadParams("tv: k must be positive");
  std::set<unsigned> seen;
  std::vector<Word> rels;
  for (unsigned n : p.I) {
    if (n == 0) throw BadParams("tv: entries of I must be positive");
    if (!seen.insert(n).second) throw BadParams("tv: repeated entry in I");
    rels.push_back(power(an_bm(n, n), p.k));
  }
  GeneratedExample out{Presentation({"a", "b"}, std::move(rels)), {}};
  if (p.k < 7) out.warnings.push_back("k < 7: the C'(1/6) claim requires k >= 7");
  return out;
}

GeneratedExample rips(const RipsParams& p) {
  if (p.quotient_generators == 0) throw BadParams("rips: need at least one quotient generator");
  if (p.scale == 0) throw BadParams("rips: scale must be positive");
  if (p.j_max == 0) throw BadParams("rips: j_max must be at least 1");
  const std::uint32_t m = p.quotient_generators;
  const std::uint32_t x = m;
  const std::uint32_t y = m + 1;
  std::vector<Word> sequence;
  for (std::uint32_t t : {x, y}) {
    for (std::uint32_t i = 0; i < m; ++i) {
      sequence.push_back({gen(i), gen(t), inv(i)});
      sequence.push_back({inv(i), gen(t), gen(i)});
    }
  }
  for (const Word& r : p.quotient_relators) {
    for (Letter l : r) {
      if (l.generator() >= m) throw BadParams("rips: quotient relator uses an unknown generator");
    }
    sequence.push_back(r);
  }
  if (p.j_max > sequence.size()) throw BadParams("rips: j_max exceeds the length of the word sequence");

  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < m; ++i) names.push_back(m == 1 ? "a" : "a" + std::to_string(i + 1));
  names.push_back("x");
  names.push_back("y");

  std::vector<Word> rels;
  for (unsigned j = 1; j <= p.j_max; ++j) {
    Word block = rips_block(j, p.scale, x, y);
    Word tail = inverse(sequence[j - 1]);
    block.insert(block.end(), tail.begin(), tail.end());
    rels.push_back(std::move(block));
  }
  return {Presentation(std::move(names), std::move(rels)), {}};
}

}  // namespace

Word rips_block(unsigned j, unsigned scale, std::uint32_t x, std::uint32_t y) {
  Word w;
  for (unsigned t = 1; t <= scale; ++t) {
    const unsigned reps = scale * j + t;
    for (unsigned k = 0; k < reps; ++k) {
      w.push_back(gen(x));
      w.push_back(gen(y));
    }
    w.push_back(gen(x));
    w.push_back(gen(y));
    w.push_back(gen(y));
  }
  return w;
}

GeneratedExample gen_example(const ExampleParams& params) {
  return std::visit(
      [](const auto& p) -> GeneratedExample {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PrideParams>) return pride(p);
        else if constexpr (std::is_same_v<T, TvParams>) return tv(p);
        else return rips(p);
      },
      params);
}

}  // namespace wallkit
