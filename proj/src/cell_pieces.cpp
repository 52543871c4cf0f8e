#include "wallkit/cell_pieces.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace wallkit {

std::uint32_t occurrence_position(const Complex& c, const CellOccurrence& o, std::uint32_t k) {
  const auto n = static_cast<std::uint32_t>(c.cell(o.cell).boundary.size());
  return o.forward ? (o.start + k) % n : (o.start + n - k % n) % n;
}

namespace {

// Step k of an occurrence, as an edge traversal in reading direction.
Incidence step(const Complex& c, const CellOccurrence& o, std::uint32_t k) {
  Incidence i = c.cell(o.cell).boundary[occurrence_position(c, o, k)];
  if (!o.forward) i.reversed = !i.reversed;
  return i;
}

// Forward arc covered by an occurrence of length len: (cell, first position).
std::pair<CellId, std::uint32_t> arc(const Complex& c, const CellOccurrence& o, std::uint32_t len) {
  if (o.forward) return {o.cell, o.start};
  return {o.cell, occurrence_position(c, o, len - 1)};
}

}  // namespace

std::vector<CellPiece> compute_cell_pieces(const Complex& c) {
  using Key = std::tuple<CellId, std::uint32_t, CellId, std::uint32_t, bool, std::uint32_t>;
  std::set<Key> seen;
  std::vector<CellPiece> out;
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const auto uses = c.cells_on_edge(e);
    for (std::size_t i = 0; i < uses.size(); ++i) {
      for (std::size_t j = i + 1; j < uses.size(); ++j) {
        const auto [c1, k1] = uses[i];
        const auto [c2, k2] = uses[j];
        const auto n1 = static_cast<std::uint32_t>(c.cell(c1).boundary.size());
        const auto n2 = static_cast<std::uint32_t>(c.cell(c2).boundary.size());
        const std::uint32_t cap = std::min(n1, n2);
        const bool same_dir = c.cell(c1).boundary[k1].reversed == c.cell(c2).boundary[k2].reversed;
        // Read both occurrences in the direction of cell c1 at this edge.
        CellOccurrence o1{c1, k1, true};
        CellOccurrence o2{c2, k2, same_dir};
        std::uint32_t fwd = 1;
        while (fwd < cap && step(c, o1, fwd) == step(c, o2, fwd)) ++fwd;
        if (c1 == c2 && fwd >= cap) continue;  // a symmetry of the boundary cycle
        std::uint32_t back = 0;
        CellOccurrence r1{c1, k1, false}, r2{c2, k2, !same_dir};
        while (fwd + back < cap && step(c, r1, back + 1) == step(c, r2, back + 1)) ++back;
        const std::uint32_t len = fwd + back;
        if (c1 == c2 && len >= cap) continue;
        CellOccurrence s1{c1, occurrence_position(c, o1, n1 - back % n1), true};
        CellOccurrence s2{c2, same_dir ? occurrence_position(c, CellOccurrence{c2, k2, true}, n2 - back % n2)
                                       : occurrence_position(c, CellOccurrence{c2, k2, true}, back),
                          same_dir};
        auto a1 = arc(c, s1, len);
        auto a2 = arc(c, s2, len);
        if (a2 < a1) std::swap(a1, a2);
        if (!seen.insert(Key{a1.first, a1.second, a2.first, a2.second, same_dir, len}).second) continue;
        CellPiece piece;
        for (std::uint32_t k = 0; k < len; ++k) piece.path.push_back(step(c, s1, k));
        piece.first = s1;
        piece.second = s2;
        out.push_back(std::move(piece));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CellPiece& a, const CellPiece& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  return out;
}

bool complex_small_cancellation(const Complex& c, const std::vector<CellPiece>& pieces,
                                const Rational& lambda) {
  for (const CellPiece& p : pieces) {
    for (CellId cell : {p.first.cell, p.second.cell}) {
      const auto n = static_cast<std::int64_t>(c.cell(cell).boundary.size());
      if (!(Rational(p.length(), n) < lambda)) return false;
    }
  }
  return true;
}

B6Report check_B6(const Complex& c, const std::vector<CellPiece>& pieces, Rational lambda) {
  B6Report report;
  report.lambda = lambda;
  report.piece_count = pieces.size();

  // reach[cell][s]: farthest unwrapped position reachable from s inside one piece.
  std::vector<std::vector<std::uint32_t>> reach(c.cell_count());
  for (CellId k = 0; k < c.cell_count(); ++k) {
    const auto n = static_cast<std::uint32_t>(c.cell(k).boundary.size());
    reach[k].resize(n);
    for (std::uint32_t s = 0; s < n; ++s) reach[k][s] = s;
  }
  for (const CellPiece& p : pieces) {
    for (const CellOccurrence& o : {p.first, p.second}) {
      const auto n = static_cast<std::uint32_t>(c.cell(o.cell).boundary.size());
      const std::uint32_t len = p.length();
      const std::uint32_t a = o.forward ? o.start : occurrence_position(c, o, len - 1);
      for (std::uint32_t t = 0; t < len; ++t) {
        const std::uint32_t s = (a + t) % n;
        reach[o.cell][s] = std::max(reach[o.cell][s], s + (len - t));
      }
      const Rational ratio(len, n);
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
      }
      if (!(ratio < lambda) && report.c_prime) {
        report.c_prime = false;
        report.c_prime_witness = p;
      }
    }
  }
  for (CellId k = 0; k < c.cell_count() && report.b6; ++k) {
    const auto n = static_cast<std::uint32_t>(c.cell(k).boundary.size());
    auto f = [&](std::uint32_t t) { return t - t % n + reach[k][t % n]; };
    for (std::uint32_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> cuts;
      std::uint32_t t = s;
      for (int j = 0; j < 3; ++j) {
        std::uint32_t next = f(t);
        if (next == t) break;
        cuts.push_back(next - t);
        t = next;
      }
      const std::uint32_t total = std::min(t - s, n);
      if (2 * total > n) {
        report.b6 = false;
        report.b6_witness = B6Witness{k, s, total, cuts};
        break;
      }
    }
  }
  report.implication_holds = !(lambda <= Rational(1, 6) && report.c_prime && !report.b6);
  return report;
}

B6Report check_B6(const Complex& c, Rational lambda) { return check_B6(c, compute_cell_pieces(c), lambda); }

}  // namespace wallkit
