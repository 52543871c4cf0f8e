#include "wallkit/pieces.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

// Generalized suffix array over the doubled cyclic readings of every relator
// in both orientations. Each reading r is laid out as r r # with a unique
// separator #, so a suffix starting in the first copy can be read for a full
// turn.
struct ReadingText {
  std::vector<std::int64_t> text;
  std::vector<std::int32_t> start_of;       // text position -> occurrence index, or -1
  std::vector<Occurrence> occurrences;      // start suffixes
  std::vector<std::uint32_t> length_of;     // occurrence -> |r|
  std::vector<std::uint32_t> left_letter;   // occurrence -> code of preceding letter
  std::vector<std::size_t> position_of;     // occurrence -> text position
};

ReadingText build_text(const Presentation& p) {
  ReadingText t;
  const std::int64_t letters = static_cast<std::int64_t>(p.letter_count());
  std::int64_t separator = letters;
  for (std::uint32_t r = 0; r < p.relators().size(); ++r) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      const Word reading = orientation == 0 ? p.relators()[r] : inverse(p.relators()[r]);
      const auto n = static_cast<std::uint32_t>(reading.size());
      for (int copy = 0; copy < 2; ++copy) {
        for (std::uint32_t i = 0; i < n; ++i) {
          if (copy == 0) {
            t.start_of.push_back(static_cast<std::int32_t>(t.occurrences.size()));
            t.position_of.push_back(t.text.size());
            t.occurrences.push_back(Occurrence{r, orientation == 1, i});
            t.length_of.push_back(n);
            t.left_letter.push_back(reading[(i + n - 1) % n].code());
          } else {
            t.start_of.push_back(-1);
          }
          t.text.push_back(reading[i].code());
        }
      }
      t.start_of.push_back(-1);
      t.text.push_back(separator++);
    }
  }
  return t;
}

std::vector<std::size_t> suffix_array(const std::vector<std::int64_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> sa(n);
  std::vector<std::int64_t> rank(s.begin(), s.end());
  std::vector<std::int64_t> next(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<std::int64_t, std::int64_t>(rank[i], i + k < n ? rank[i + k] : -1);
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    next[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      next[sa[i]] = next[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    }
    rank.swap(next);
    if (rank[sa[n - 1]] == static_cast<std::int64_t>(n - 1) || k >= n) break;
  }
  return sa;
}

// Kasai: lcp[i] = LCP(sa[i-1], sa[i]), lcp[0] = 0.
std::vector<std::uint32_t> lcp_array(const std::vector<std::int64_t>& s,
                                     const std::vector<std::size_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::vector<std::uint32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] > 0) {
      std::size_t j = sa[rank[i] - 1];
      while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
      lcp[rank[i]] = static_cast<std::uint32_t>(h);
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return lcp;
}

struct StartOrder {
  std::vector<std::int32_t> occ;   // occurrence index in suffix order
  std::vector<std::uint32_t> lcp;  // raw LCP with previous start suffix
};

StartOrder start_order(const ReadingText& t) {
  auto sa = suffix_array(t.text);
  auto lcp = lcp_array(t.text, sa);
  StartOrder order;
  std::uint32_t running = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (i > 0) running = std::min(running, lcp[i]);
    std::int32_t o = t.start_of[sa[i]];
    if (o < 0) continue;
    order.occ.push_back(o);
    order.lcp.push_back(order.occ.size() == 1 ? 0 : running);
    running = std::numeric_limits<std::uint32_t>::max();
  }
  return order;
}

bool equivalent(const ReadingText& t, std::int32_t a, std::int32_t b, std::uint32_t raw_lcp) {
  return t.occurrences[a].relator == t.occurrences[b].relator && raw_lcp >= t.length_of[a];
}

}  // namespace

PieceIndex::PieceIndex(Presentation presentation, std::vector<Piece> pieces,
                       std::vector<RelatorPieces> per_relator)
    : presentation_(std::move(presentation)),
      pieces_(std::move(pieces)),
      per_relator_(std::move(per_relator)) {}

Word read_occurrence(const Presentation& p, const Occurrence& o, std::size_t length) {
  const Word& r = p.relators().at(o.relator);
  const std::size_t n = r.size();
  Word out;
  out.reserve(length);
  for (std::size_t j = 0; j < length; ++j) {
    if (!o.inverted) {
      out.push_back(r[(o.offset + j) % n]);
    } else {
      // inverse(r)[i] = r[n-1-i]^-1
      out.push_back(r[n - 1 - (o.offset + j) % n].inverse());
    }
  }
  return out;
}

Word PieceIndex::word(const Piece& p) const { return read_occurrence(presentation_, p.first, p.length); }

Rational PieceIndex::ratio(std::size_t relator) const {
  return Rational(per_relator_.at(relator).max_length,
                  static_cast<std::int64_t>(presentation_.relators().at(relator).size()));
}

PieceIndex compute_pieces(const Presentation& p) {
  std::vector<RelatorPieces> per_relator(p.relators().size());
  if (p.relators().empty()) return PieceIndex(p, {}, std::move(per_relator));

  const ReadingText t = build_text(p);
  const StartOrder order = start_order(t);
  const std::size_t count = order.occ.size();

  // Longest piece starting at each occurrence: scan outwards in suffix order
  // to the nearest inequivalent neighbours; the running minimum of LCPs only
  // shrinks, so the scan stops once it cannot beat the best so far.
  std::vector<Piece> degenerate;
  for (std::size_t k = 0; k < count; ++k) {
    const std::int32_t s = order.occ[k];
    const std::uint32_t ns = t.length_of[s];
    std::uint32_t best = 0;
    std::int32_t partner = -1;
    for (int dir = -1; dir <= 1; dir += 2) {
      std::uint32_t run = std::numeric_limits<std::uint32_t>::max();
      for (std::size_t j = k;;) {
        if (dir < 0) {
          if (j == 0) break;
          run = std::min(run, order.lcp[j]);
          --j;
        } else {
          if (j + 1 >= count) break;
          ++j;
          run = std::min(run, order.lcp[j]);
        }
        if (run <= best) break;
        const std::int32_t o = order.occ[j];
        if (equivalent(t, s, o, run)) continue;
        const std::uint32_t cand = std::min({run, ns, t.length_of[o]});
        if (cand > best || (cand == best && partner >= 0 && o < partner)) {
          best = cand;
          partner = o;
        }
      }
    }
    if (partner < 0 || best == 0) continue;
    auto& rp = per_relator[t.occurrences[s].relator];
    Piece piece{t.occurrences[s], t.occurrences[partner], best};
    if (best > rp.max_length ||
        (best == rp.max_length && rp.witness && piece.first < rp.witness->first)) {
      rp.max_length = best;
      rp.witness = piece;
    }
    // The partner's relator also carries this piece.
    auto& rq = per_relator[t.occurrences[partner].relator];
    if (best > rq.max_length) {
      rq.max_length = best;
      rq.witness = Piece{t.occurrences[partner], t.occurrences[s], best};
    }
    if (best == ns || best == t.length_of[partner]) degenerate.push_back(piece);
  }

  // Distinct maximal pieces: right-branching nodes of the suffix tree over
  // start suffixes that contain two inequivalent occurrences in different
  // children with different preceding letters.
  struct Frame {
    std::uint32_t lcp;
    std::size_t lb;
  };
  std::vector<Piece> found;
  auto report = [&](std::uint32_t ell, std::size_t lb, std::size_t rb) {
    if (ell == 0) return;
    // Child index of every member: children split where lcp == ell.
    std::int32_t first = -1;
    std::size_t first_child = 0;
    std::int32_t alt = -1;  // same child as `first`, different left letter
    std::size_t child = 0;
    for (std::size_t k = lb; k <= rb; ++k) {
      if (k > lb && order.lcp[k] == ell) ++child;
      const std::int32_t o = order.occ[k];
      if (t.length_of[o] <= ell) continue;
      if (first < 0) {
        first = o;
        first_child = child;
        continue;
      }
      if (child != first_child) {
        if (t.left_letter[o] != t.left_letter[first]) {
          found.push_back(Piece{t.occurrences[first], t.occurrences[o], ell});
          return;
        }
        if (alt >= 0) {
          found.push_back(Piece{t.occurrences[alt], t.occurrences[o], ell});
          return;
        }
      } else if (alt < 0 && t.left_letter[o] != t.left_letter[first]) {
        alt = o;
      }
    }
    // A member of another child seen before `alt` was found: rescan once.
    if (first >= 0 && alt >= 0) {
      child = 0;
      for (std::size_t k = lb; k <= rb; ++k) {
        if (k > lb && order.lcp[k] == ell) ++child;
        const std::int32_t o = order.occ[k];
        if (t.length_of[o] <= ell || child == first_child) continue;
        found.push_back(Piece{t.occurrences[alt], t.occurrences[o], ell});
        return;
      }
    }
  };
  std::vector<Frame> stack{{0, 0}};
  for (std::size_t k = 1; k <= count; ++k) {
    const std::uint32_t cur = k < count ? order.lcp[k] : 0;
    std::size_t lb = k - 1;
    while (cur < stack.back().lcp) {
      Frame top = stack.back();
      stack.pop_back();
      report(top.lcp, top.lb, k - 1);
      lb = top.lb;
    }
    if (cur > stack.back().lcp) stack.push_back({cur, lb});
  }

  for (const Piece& d : degenerate) found.push_back(d);

  // One orientation per word, deduplicated.
  std::set<Word> seen;
  std::vector<std::pair<Word, Piece>> keyed;
  for (const Piece& piece : found) {
    Word w = read_occurrence(p, piece.first, piece.length);
    Word inv = inverse(w);
    Piece oriented = piece;
    if (shortlex_less(inv, w)) {
      auto flip = [&](const Occurrence& o) {
        const auto n = static_cast<std::uint32_t>(p.relators()[o.relator].size());
        // Reading the same letters backwards from the other orientation.
        const std::uint32_t end = (o.offset + piece.length) % n;
        return Occurrence{o.relator, !o.inverted, (n - end) % n};
      };
      oriented = Piece{flip(piece.first), flip(piece.second), piece.length};
      w = std::move(inv);
    }
    if (seen.insert(w).second) keyed.emplace_back(std::move(w), oriented);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
  std::vector<Piece> pieces;
  pieces.reserve(keyed.size());
  for (auto& [w, piece] : keyed) pieces.push_back(piece);
  return PieceIndex(p, std::move(pieces), std::move(per_relator));
}

MetricReport check_small_cancellation(const PieceIndex& index, const Rational& lambda) {
  MetricReport report;
  report.lambda = lambda;
  const auto& p = index.presentation();
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    RelatorCheck c;
    c.relator = r;
    c.length = p.relators()[r].size();
    c.max_piece = index.per_relator()[r].max_length;
    c.ratio = index.ratio(r);
    c.witness = index.per_relator()[r].witness;
    c.pass = c.ratio < lambda;  // |p| < lambda |r|
    report.max_ratio = std::max(report.max_ratio, c.ratio);
    report.pass = report.pass && c.pass;
    report.relators.push_back(c);
  }
  return report;
}

MetricReport check_small_cancellation(const Presentation& p, const Rational& lambda) {
  return check_small_cancellation(compute_pieces(p), lambda);
}

}  // namespace wallkit
