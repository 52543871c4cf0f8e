#include "wallkit/complex_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "wallkit/errors.hpp"

namespace wallkit {

std::string write_complex(const Complex& c) {
  std::ostringstream out;
  out << "complex " << c.vertex_count() << ' ' << c.edge_count() << ' ' << c.cell_count() << '\n';
  const ComplexMeta& m = c.meta();
  out << "meta origin " << to_string(m.origin) << '\n';
  if (m.radius) out << "meta radius " << *m.radius << '\n';
  out << "meta base " << m.base << '\n';
  out << "meta max_relator_length " << m.max_relator_length << '\n';
  if (!m.generators.empty()) {
    out << "meta gens";
    for (const auto& g : m.generators) out << ' ' << g;
    out << '\n';
  }
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    out << "v " << v;
    if (!c.label(v).empty()) out << ' ' << std::quoted(c.label(v));
    out << '\n';
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const Edge& ed = c.edge(e);
    out << "e " << e << ' ' << ed.u << ' ' << ed.v;
    if (ed.generator) out << ' ' << *ed.generator;
    out << '\n';
  }
  for (CellId k = 0; k < c.cell_count(); ++k) {
    out << "c " << k;
    for (const Incidence& i : c.cell(k).boundary) out << ' ' << (i.reversed ? '-' : '+') << i.edge;
    out << '\n';
    if (c.cell(k).relator) out << "t " << k << ' ' << *c.cell(k).relator << '\n';
  }
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (auto d = c.recorded_distance(v)) out << "d " << v << ' ' << *d << '\n';
  }
  return out.str();
}

namespace {

std::uint32_t parse_id(std::istringstream& in, std::size_t line, const char* what) {
  long long x = -1;
  if (!(in >> x) || x < 0 || x > 0xfffffffell) throw ParseError(std::string("expected ") + what, line);
  return static_cast<std::uint32_t>(x);
}

void expect_end(std::istringstream& in, std::size_t line) {
  std::string rest;
  if (in >> rest) throw ParseError("unexpected token '" + rest + "'", line);
}

}  // namespace

Complex read_complex(std::string_view text) {
  Complex c;
  std::istringstream all{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  std::uint32_t nv = 0, ne = 0, nc = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relators;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> distances;
  while (std::getline(all, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      // '#' inside a quoted label is data, not a comment.
      if (raw.find('"') == std::string::npos || raw.find('"') > hash) raw.erase(hash);
    }
    std::istringstream in(raw);
    std::string kind;
    if (!(in >> kind)) continue;
    if (!header) {
      if (kind != "complex") throw ParseError("expected 'complex' header", line);
      nv = parse_id(in, line, "vertex count");
      ne = parse_id(in, line, "edge count");
      nc = parse_id(in, line, "cell count");
      expect_end(in, line);
      header = true;
      continue;
    }
    if (kind == "meta") {
      std::string key;
      in >> key;
      ComplexMeta& m = c.meta();
      if (key == "origin") {
        std::string v;
        in >> v;
        try {
          m.origin = parse_origin(v);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
      } else if (key == "radius") {
        m.radius = parse_id(in, line, "radius");
      } else if (key == "base") {
        m.base = parse_id(in, line, "base vertex");
      } else if (key == "max_relator_length") {
        m.max_relator_length = parse_id(in, line, "length");
      } else if (key == "gens") {
        std::string g;
        while (in >> g) m.generators.push_back(g);
      } else {
        throw ParseError("unknown meta key '" + key + "'", line);
      }
      expect_end(in, line);
    } else if (kind == "v") {
      const std::uint32_t id = parse_id(in, line, "vertex id");
      if (id != c.vertex_count()) throw ParseError("vertex ids must be consecutive", line);
      std::string label;
      in >> std::ws;
      if (in.peek() == '"') {
        in >> std::quoted(label);
      } else {
        in >> label;
      }
      expect_end(in, line);
      c.add_vertex(label);
    } else if (kind == "e") {
      const std::uint32_t id = parse_id(in, line, "edge id");
      if (id != c.edge_count()) throw ParseError("edge ids must be consecutive", line);
      const std::uint32_t u = parse_id(in, line, "endpoint");
      const std::uint32_t v = parse_id(in, line, "endpoint");
      std::optional<std::uint32_t> g;
      in >> std::ws;
      if (!in.eof()) g = parse_id(in, line, "generator");
      expect_end(in, line);
      try {
        c.add_edge(u, v, g);
      } catch (const BadParams& e) {
        throw ParseError(e.what(), line);
      }
    } else if (kind == "c") {
      const std::uint32_t id = parse_id(in, line, "cell id");
      if (id != c.cell_count()) throw ParseError("cell ids must be consecutive", line);
      std::vector<Incidence> boundary;
      std::string tok;
      while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) throw ParseError("bad edge reference '" + tok + "'", line);
        std::istringstream num(tok.substr(1));
        boundary.push_back({parse_id(num, line, "edge id"), tok[0] == '-'});
      }
      try {
        if (c.add_cell(std::move(boundary)) != id) throw ParseError("duplicate cell boundary", line);
      } catch (const BadParams& e) {
        throw ParseError(e.what(), line);
      }
    } else if (kind == "t") {
      const std::uint32_t k = parse_id(in, line, "cell id");
      relators.emplace_back(k, parse_id(in, line, "relator index"));
      expect_end(in, line);
    } else if (kind == "d") {
      const std::uint32_t v = parse_id(in, line, "vertex id");
      distances.emplace_back(v, parse_id(in, line, "distance"));
      expect_end(in, line);
    } else {
      throw ParseError("unknown record '" + kind + "'", line);
    }
  }
  if (!header) throw ParseError("missing 'complex' header", line);
  if (c.vertex_count() != nv || c.edge_count() != ne || c.cell_count() != nc) {
    throw ParseError("record counts do not match the header", line);
  }
  // Cell relator tags go through a rebuild since cells are immutable once added.
  if (!relators.empty()) {
    Complex tagged;
    for (VertexId v = 0; v < c.vertex_count(); ++v) tagged.add_vertex(c.label(v));
    for (const Edge& e : c.edges()) tagged.add_edge(e.u, e.v, e.generator);
    std::vector<std::optional<std::uint32_t>> tag(c.cell_count());
    for (auto [k, r] : relators) {
      if (k >= c.cell_count()) throw ParseError("relator tag for unknown cell", line);
      tag[k] = r;
    }
    for (CellId k = 0; k < c.cell_count(); ++k) tagged.add_cell(c.cell(k).boundary, tag[k]);
    tagged.meta() = c.meta();
    c = std::move(tagged);
  }
  for (auto [v, d] : distances) {
    if (v >= c.vertex_count()) throw ParseError("distance for unknown vertex", line);
    c.set_recorded_distance(v, d);
  }
  if (c.meta().base >= std::max<std::size_t>(c.vertex_count(), 1)) throw ParseError("base vertex out of range", line);
  return c;
}

void save_complex(const Complex& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << write_complex(c);
}

Complex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_complex(ss.str());
}

}  // namespace wallkit
