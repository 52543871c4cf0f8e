#include "wallkit/report.hpp"

#include <sstream>

namespace wallkit {

namespace {

std::string vertex_name(const Complex& c, VertexId v) {
  const std::string& l = c.label(v);
  if (l.empty()) return std::to_string(v);
  if (l.find_first_of(",\"") == std::string::npos) return l;
  std::string q = "\"";
  for (char ch : l) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

nlohmann::json pair_json(const PairRecord& r, const Complex& c) {
  const Rational ratio = r.d == 0 ? Rational(0) : Rational(r.dw, r.d);
  return {{"p", c.label(r.p).empty() ? std::to_string(r.p) : c.label(r.p)},
          {"q", c.label(r.q).empty() ? std::to_string(r.q) : c.label(r.q)},
          {"d", r.d},
          {"dw", r.dw},
          {"ratio", to_string(ratio)},
          {"settled", r.settled},
          {"in_A_count", r.in_A_count}};
}

}  // namespace

std::string separation_csv(const SeparationReport& r, const Complex& c) {
  std::ostringstream out;
  out << "p,q,d,dw,ratio_num,ratio_den,settled,in_A_count\n";
  auto row = [&](const PairRecord& x) {
    const Rational ratio = x.d == 0 ? Rational(0) : Rational(x.dw, x.d);
    out << vertex_name(c, x.p) << ',' << vertex_name(c, x.q) << ',' << x.d << ',' << x.dw << ','
        << ratio.numerator() << ',' << ratio.denominator() << ',' << (x.settled ? 1 : 0) << ',' << x.in_A_count
        << '\n';
  };
  for (const PairRecord& x : r.pairs) row(x);
  return out.str();
}

nlohmann::json separation_json(const SeparationReport& r, const Complex& c) {
  nlohmann::json j;
  j["lambda"] = to_string(r.lambda);
  j["constant"] = to_string(r.constant);
  j["mode"] = r.mode == SeparationMode::Verify ? "verify" : "observe";
  j["min_ratio"] = r.min_ratio ? nlohmann::json(to_string(*r.min_ratio)) : nlohmann::json(nullptr);
  j["mean_ratio"] = r.mean_ratio;
  j["pair_count"] = r.pair_count;
  j["settled_pairs"] = r.settled_pairs;
  j["violations"] = r.violations;
  j["inconclusive"] = r.inconclusive;
  j["dw_exceeds_d"] = r.dw_exceeds_d;
  j["a_exceeds_dw"] = r.a_exceeds_dw;
  j["pass"] = r.mode == SeparationMode::Verify ? nlohmann::json(r.pass) : nlohmann::json(nullptr);
  j["settled_rule"] = to_string(r.rule);
  j["region_size"] = r.region_size;
  j["walls"] = r.walls;
  j["settled_walls"] = r.settled_walls;
  j["margin_settled_walls"] = r.margin_settled_walls;
  nlohmann::json anchors = nlohmann::json::array();
  for (const PairRecord& x : r.anchors) anchors.push_back(pair_json(x, c));
  j["anchors"] = anchors;
  nlohmann::json bad = nlohmann::json::array();
  for (const PairRecord& x : r.violating) bad.push_back(pair_json(x, c));
  j["violating"] = bad;
  return j;
}

nlohmann::json metric_json(const MetricReport& m, const PieceIndex& index) {
  const Presentation& p = index.presentation();
  nlohmann::json j;
  j["lambda"] = to_string(m.lambda);
  j["pass"] = m.pass;
  j["max_ratio"] = to_string(m.max_ratio);
  j["relators"] = nlohmann::json::array();
  for (const RelatorCheck& c : m.relators) {
    nlohmann::json r{{"index", c.relator},
                     {"length", c.length},
                     {"max_piece", c.max_piece},
                     {"ratio", to_string(c.ratio)},
                     {"pass", c.pass}};
    if (c.witness) {
      r["witness"] = {{"piece", p.format(index.word(*c.witness))},
                      {"first", {{"relator", c.witness->first.relator},
                                 {"inverted", c.witness->first.inverted},
                                 {"offset", c.witness->first.offset}}},
                      {"second", {{"relator", c.witness->second.relator},
                                  {"inverted", c.witness->second.inverted},
                                  {"offset", c.witness->second.offset}}}};
    }
    j["relators"].push_back(r);
  }
  j["piece_count"] = index.pieces().size();
  return j;
}

std::string metric_text(const MetricReport& m, const PieceIndex& index) {
  const Presentation& p = index.presentation();
  std::ostringstream out;
  out << "C'(" << to_string(m.lambda) << "): " << (m.pass ? "pass" : "fail") << "  max ratio "
      << to_string(m.max_ratio) << '\n';
  for (const RelatorCheck& c : m.relators) {
    out << "  r" << c.relator + 1 << "  |r|=" << c.length << "  max piece " << c.max_piece << "  ratio "
        << to_string(c.ratio) << "  " << (c.pass ? "ok" : "FAIL");
    if (c.witness) out << "  piece " << p.format(index.word(*c.witness));
    out << '\n';
  }
  return out.str();
}

nlohmann::json b6_json(const B6Report& r) {
  nlohmann::json j;
  j["b6"] = r.b6;
  j["c_prime"] = r.c_prime;
  j["lambda"] = to_string(r.lambda);
  j["max_ratio"] = to_string(r.max_ratio);
  j["implication_holds"] = r.implication_holds;
  j["piece_count"] = r.piece_count;
  if (r.b6_witness) {
    j["b6_witness"] = {{"cell", r.b6_witness->cell},
                       {"start", r.b6_witness->start},
                       {"length", r.b6_witness->length},
                       {"pieces", r.b6_witness->cuts}};
  }
  return j;
}

}  // namespace wallkit
