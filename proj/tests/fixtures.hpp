#pragma once
#include <map>
#include <string>
#include <vector>

#include "wallkit/complex.hpp"

namespace testing {

// Builds complexes from vertex cycles; edges between consecutive vertices are
// created on first use.
class CycleBuilder {
 public:
  wallkit::VertexId vertex(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    auto v = c_.add_vertex(name);
    ids_[name] = v;
    return v;
  }
  wallkit::Incidence step(const std::string& from, const std::string& to) {
    auto u = vertex(from), v = vertex(to);
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = edges_.find(key);
    wallkit::EdgeId e;
    if (it == edges_.end()) {
      e = c_.add_edge(u, v);
      edges_[key] = e;
    } else {
      e = it->second;
    }
    return {e, c_.edge(e).u != u};
  }
  void path(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i + 1 < names.size(); ++i) step(names[i], names[i + 1]);
  }
  wallkit::CellId cycle(const std::vector<std::string>& names) {
    std::vector<wallkit::Incidence> b;
    for (std::size_t i = 0; i < names.size(); ++i) b.push_back(step(names[i], names[(i + 1) % names.size()]));
    return c_.add_cell(std::move(b));
  }
  wallkit::Complex& complex() { return c_; }

 private:
  wallkit::Complex c_;
  std::map<std::string, wallkit::VertexId> ids_;
  std::map<std::pair<wallkit::VertexId, wallkit::VertexId>, wallkit::EdgeId> edges_;
};

inline std::vector<std::string> names(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Two cells of length `len` sharing a path of length `shared`.
inline wallkit::Complex two_cells(int len, int shared) {
  CycleBuilder b;
  auto s = names("s", 0, shared);
  auto x = names("x", 1, len - shared - 1);
  auto y = names("y", 1, len - shared - 1);
  b.cycle(join(s, std::vector<std::string>(x.rbegin(), x.rend())));
  b.cycle(join(s, std::vector<std::string>(y.rbegin(), y.rend())));
  return b.complex();
}

inline wallkit::Complex polygon(int len) {
  CycleBuilder b;
  b.cycle(names("v", 0, len - 1));
  return b.complex();
}

// A path graph with `n` edges.
inline wallkit::Complex path_graph(int n) {
  CycleBuilder b;
  b.path(names("v", 0, n));
  return b.complex();
}

}  // namespace testing
