#include "wallkit/builders.hpp"

#include <string>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

// Unit-edge path from `from` to `to`; returns its edges oriented from -> to.
std::vector<Incidence> segment(Complex& c, VertexId from, VertexId to, std::uint32_t length) {
  const std::string stem = c.label(from) + "-" + c.label(to) + ":";
  std::vector<Incidence> path;
  VertexId prev = from;
  for (std::uint32_t k = 1; k <= length; ++k) {
    VertexId next = k == length ? to : c.add_vertex(stem + std::to_string(k));
    path.push_back({c.add_edge(prev, next), false});
    prev = next;
  }
  return path;
}

std::vector<Incidence> reversed(std::vector<Incidence> path) {
  std::vector<Incidence> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back({it->edge, !it->reversed});
  return out;
}

void append(std::vector<Incidence>& dst, const std::vector<Incidence>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

Complex build_example1(const std::vector<std::uint32_t>& n_list) {
  if (n_list.empty()) throw BadParams("example1: n_list must be nonempty");
  for (auto n : n_list) {
    if (n < 1) throw BadParams("example1: entries must be at least 1");
  }
  Complex c;
  VertexId prev_e = kNone;
  for (std::uint32_t n : n_list) {
    const std::string s = std::to_string(n);
    VertexId a = c.add_vertex("a" + s), b = c.add_vertex("b" + s), cc = c.add_vertex("c" + s),
             d = c.add_vertex("d" + s), e = c.add_vertex("e" + s), f = c.add_vertex("f" + s);
    if (prev_e != kNone) c.add_edge(prev_e, a);
    auto ab = segment(c, a, b, n);
    auto bc = segment(c, b, cc, 3);
    auto cd = segment(c, cc, d, 3);
    auto de = segment(c, d, e, n);
    auto af = segment(c, a, f, n + 3);
    auto fe = segment(c, f, e, n + 3);
    auto cf = segment(c, cc, f, 2 * n);
    std::vector<Incidence> r;
    append(r, ab);
    append(r, bc);
    append(r, cf);
    append(r, reversed(af));
    std::vector<Incidence> r2;
    append(r2, cd);
    append(r2, de);
    append(r2, reversed(fe));
    append(r2, reversed(cf));
    c.add_cell(std::move(r));
    c.add_cell(std::move(r2));
    prev_e = e;
  }
  c.meta().origin = Origin::Example1;
  c.meta().base = 0;
  c.meta().max_relator_length = c.max_cell_length();
  return c;
}

Complex build_example2(std::uint32_t x, std::uint32_t half_r) {
  if (x < 2 || x % 2 != 0) throw BadParams("example2: x must be even and at least 2");
  if (half_r <= x) throw BadParams("example2: need half_r > x so that |r|/2 - x > 0");
  Complex c;
  VertexId a = c.add_vertex("a"), q = c.add_vertex("q'"), a1 = c.add_vertex("a'"),
           a2 = c.add_vertex("a''"), p1 = c.add_vertex("p'"), p2 = c.add_vertex("p''");
  // Segment order fixes edge ids: the tie between the routes p' -> p''
  // through a' q' a'' and through a resolves towards the former.
  auto qa1 = segment(c, q, a1, half_r - x);
  auto a1p1 = segment(c, a1, p1, x / 2);
  auto qa2 = segment(c, q, a2, half_r - x);
  auto a2p2 = segment(c, a2, p2, x / 2);
  auto aq = segment(c, a, q, x);
  auto p1a = segment(c, p1, a, half_r - x / 2);
  auto p2a = segment(c, p2, a, half_r - x / 2);
  std::vector<Incidence> r;
  append(r, aq);
  append(r, qa1);
  append(r, a1p1);
  append(r, p1a);
  std::vector<Incidence> r2;
  append(r2, aq);
  append(r2, qa2);
  append(r2, a2p2);
  append(r2, p2a);
  c.add_cell(std::move(r));
  c.add_cell(std::move(r2));
  c.meta().origin = Origin::Example2;
  c.meta().base = a;
  c.meta().max_relator_length = 2 * half_r;
  return c;
}

}  // namespace wallkit
