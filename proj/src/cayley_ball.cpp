#include "wallkit/cayley_ball.hpp"

#include <numeric>
#include <unordered_map>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so a class is named by its first member.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

class BallBuilder {
 public:
  BallBuilder(const DehnMachine& m, BallOptions options)
      : m_(m), p_(m.presentation()), options_(options), letters_(p_.letter_count()) {
    by_first_.resize(letters_);
    if (!p_.relators().empty()) {
      for (Word& w : symmetrize(p_.relators())) by_first_[w.front().code()].push_back(std::move(w));
    }
  }

  Complex build(std::uint32_t radius) {
    add_vertex(Word{}, 0);
    layers_.push_back({0});
    const bool odd = p_.has_odd_relator();
    for (std::uint32_t n = 0; n <= radius; ++n) {
      if (odd && n > 0) link_siblings(n);
      if (n == radius) break;
      grow(n);
      if (layers_.back().empty()) break;  // finite group exhausted
    }
    return assemble(radius);
  }

 private:
  VertexId add_vertex(Word w, std::uint32_t d) {
    if (words_.size() >= options_.vertex_budget) {
      throw BudgetExceeded("build_cayley_ball: vertex budget exhausted");
    }
    words_.push_back(std::move(w));
    dist_.push_back(d);
    nbr_.resize(nbr_.size() + letters_, kNone);
    return static_cast<VertexId>(words_.size() - 1);
  }

  VertexId& nbr(VertexId v, Letter s) { return nbr_[static_cast<std::size_t>(v) * letters_ + s.code()]; }

  VertexId trace(VertexId from, std::span<const Letter> path) {
    VertexId v = from;
    for (Letter s : path) {
      v = nbr(v, s);
      if (v == kNone) return kNone;
    }
    return v;
  }

  void connect(VertexId w, Letter s, VertexId x) {
    VertexId& fwd = nbr(w, s);
    VertexId& back = nbr(x, s.inverse());
    if ((fwd != kNone && fwd != x) || (back != kNone && back != w)) {
      throw Error("build_cayley_ball: inconsistent identification");
    }
    fwd = x;
    back = w;
  }

  void verify(VertexId w, Letter s, const Word& target) {
    if (!options_.verify_merges) return;
    Word lhs = words_[w];
    lhs.push_back(s);
    if (!equal_in_group(lhs, target, m_)) throw Error("build_cayley_ball: unconfirmed identification");
  }

  // Edges between vertices of the same layer (only possible with odd relators).
  void link_siblings(std::uint32_t n) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId w : layers_[n]) {
        for (std::uint32_t code = 0; code < letters_; ++code) {
          const Letter s = Letter::from_code(code);
          if (nbr(w, s) != kNone) continue;
          for (const Word& c : by_first_[code]) {
            // c = s z, so w s = w z^-1.
            Word z_inv = inverse(std::span<const Letter>(c).subspan(1));
            VertexId v = trace(w, z_inv);
            if (v == kNone || v == w) continue;
            if (dist_[v] != n) throw Error("build_cayley_ball: missed an edge to an inner layer");
            verify(w, s, words_[v]);
            connect(w, s, v);
            changed = true;
            break;
          }
        }
      }
    }
  }

  void grow(std::uint32_t n) {
    std::vector<std::pair<VertexId, Letter>> cands;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    auto key = [&](VertexId w, Letter s) { return static_cast<std::uint64_t>(w) * letters_ + s.code(); };
    for (VertexId w : layers_[n]) {
      for (std::uint32_t code = 0; code < letters_; ++code) {
        const Letter s = Letter::from_code(code);
        if (nbr(w, s) != kNone) continue;
        index.emplace(key(w, s), static_cast<std::uint32_t>(cands.size()));
        cands.emplace_back(w, s);
      }
    }
    UnionFind uf(cands.size());
    for (std::uint32_t i = 0; i < cands.size(); ++i) {
      const auto [w, s] = cands[i];
      for (const Word& c : by_first_[s.code()]) {
        if (c.size() < 2) continue;
        // c = s t z, so w s = w z^-1 t^-1.
        const Letter t_inv = c[1].inverse();
        Word z_inv = inverse(std::span<const Letter>(c).subspan(2));
        VertexId w2 = trace(w, z_inv);
        if (w2 == kNone || dist_[w2] != n) continue;
        auto it = index.find(key(w2, t_inv));
        if (it == index.end()) continue;
        uf.unite(i, it->second);
      }
    }
    std::vector<VertexId> vertex_of(cands.size(), kNone);
    std::vector<VertexId> layer;
    for (std::uint32_t i = 0; i < cands.size(); ++i) {
      const std::uint32_t root = uf.find(i);
      const auto [w, s] = cands[i];
      if (root == i) {
        Word word = words_[w];
        word.push_back(s);
        vertex_of[i] = add_vertex(std::move(word), n + 1);
        layer.push_back(vertex_of[i]);
      } else {
        vertex_of[i] = vertex_of[root];
        verify(w, s, words_[vertex_of[i]]);
      }
      connect(w, s, vertex_of[i]);
    }
    layers_.push_back(std::move(layer));
  }

  Complex assemble(std::uint32_t radius) {
    Complex c;
    for (VertexId v = 0; v < words_.size(); ++v) {
      c.add_vertex(p_.format(words_[v]));
      c.set_recorded_distance(v, dist_[v]);
    }
    // Edge for each (vertex, positive generator) in vertex order.
    std::vector<EdgeId> edge_of(nbr_.size(), kNone);
    for (VertexId v = 0; v < words_.size(); ++v) {
      for (std::uint32_t g = 0; g < p_.generator_count(); ++g) {
        const Letter s(g, false);
        VertexId x = nbr(v, s);
        if (x == kNone) continue;
        EdgeId e = c.add_edge(v, x, g);
        edge_of[static_cast<std::size_t>(v) * letters_ + s.code()] = e;
        edge_of[static_cast<std::size_t>(x) * letters_ + s.inverse().code()] = e;
      }
    }
    for (VertexId v = 0; v < words_.size(); ++v) {
      for (std::uint32_t r = 0; r < p_.relators().size(); ++r) {
        std::vector<Incidence> boundary;
        VertexId cur = v;
        bool inside = true;
        for (Letter s : p_.relators()[r]) {
          const std::size_t slot = static_cast<std::size_t>(cur) * letters_ + s.code();
          if (nbr_[slot] == kNone) {
            inside = false;
            break;
          }
          boundary.push_back({edge_of[slot], s.is_inverse()});
          cur = nbr_[slot];
        }
        if (!inside) continue;
        if (cur != v) throw Error("build_cayley_ball: relator does not close");
        c.add_cell(std::move(boundary), r);
      }
    }
    c.meta().origin = Origin::CayleyBall;
    c.meta().radius = radius;
    c.meta().base = 0;
    c.meta().max_relator_length = static_cast<std::uint32_t>(p_.max_relator_length());
    c.meta().generators = p_.generators();
    return c;
  }

  const DehnMachine& m_;
  const Presentation& p_;
  BallOptions options_;
  std::size_t letters_;
  std::vector<std::vector<Word>> by_first_;
  std::vector<Word> words_;
  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> nbr_;
  std::vector<std::vector<VertexId>> layers_;
};

}  // namespace

Complex build_cayley_ball(const DehnMachine& m, std::uint32_t radius, BallOptions options) {
  if (!m.small_cancellation()) {
    throw NotSmallCancellation("build_cayley_ball needs a C'(1/6) presentation");
  }
  if (radius < 1) throw BadParams("radius must be at least 1");
  return BallBuilder(m, options).build(radius);
}

}  // namespace wallkit
